#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "geometry.hpp"

namespace poc {

// 2^e as uint64, or nullopt when it does not fit.
std::optional<std::uint64_t> pow2_checked(unsigned e);

// Minimum input size for extract_monotone_triple: 2^(2^(d-t+1)) + 1.
// Errors when the value does not fit in 64 bits (then no feasible input
// exists either).
std::uint64_t extraction_threshold(int d, int t);

struct ChainResult {
    enum class Kind { chain, antichain };
    Kind kind;
    // ascending indices into the input; a chain under coordinatewise <= or a
    // pairwise-incomparable set, of length >= n + 1
    std::vector<int> indices;
};

// Erdos-Szekeres in (R^2, <=): given at least n^2 + 1 points of dimension 2,
// returns a longest nondecreasing chain if one of length >= n + 1 exists,
// otherwise a longest antichain (then guaranteed length >= n + 1).
// Errors when |pts| <= n^2 or dimensions differ from 2.
ChainResult chain_or_antichain(const std::vector<Point> &pts, int n);

struct ExtractResult {
    // indices into the input; the retained scan order, monotone on every
    // tracked axis (axis 1 and axes t..d)
    std::array<int, 3> triple;
    // the nested index sets after each round j = t..d, ascending input
    // indices; sizes 2^(2^(d-j)) + 1, ending at 3
    std::vector<std::vector<int>> trace;
};

// Iterated Erdos-Szekeres extraction: from |pts| >= 2^(2^(d-t+1)) + 1 points
// of dimension d >= 3 and a start axis 2 <= t <= d, returns three points that
// are monotone (nondecreasing or nonincreasing) on axis 1 and on every axis
// t..d. Round j refines the set, sorted by axis 1 (stable), to a subsequence
// of axis-j values that is nondecreasing or strictly decreasing, of size
// exactly 2^(2^(d-j)) + 1.
ExtractResult extract_monotone_triple(const std::vector<Point> &pts, int t);

// Longest nondecreasing subsequence of vals; returns ascending positions.
// Deterministic: among equally long answers, patience reconstruction with
// leftmost-tail predecessors.
std::vector<int> longest_nondecreasing_positions(const std::vector<Coord> &vals);

// Longest strictly decreasing subsequence of vals; ascending positions.
std::vector<int> longest_strictly_decreasing_positions(const std::vector<Coord> &vals);

}  // namespace poc
