#pragma once

#include <cstdint>

namespace poc {

// splitmix64. Chosen over <random> engines + distributions because the byte
// stream must be identical for a given seed on every platform;
// std::uniform_int_distribution's mapping is implementation-defined.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : s_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (s_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // uniform in [0, n); n >= 1
    std::uint64_t below(std::uint64_t n) { return next() % n; }

    // uniform in [lo, hi], inclusive
    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

private:
    std::uint64_t s_;
};

}  // namespace poc
