#pragma once

#include <sstream>
#include <stdexcept>
#include <string>

namespace poc {

// Error categories carried across the C boundary as status codes.
enum class Errc {
    invalid_argument = 1,  // malformed input: bad sizes, labels, indices
    precondition = 2,      // well-formed input that violates a stated hypothesis
    budget = 3,            // work limit reached before an answer
    internal = 4,          // postcondition re-verification failed; a bug
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string &msg) : std::runtime_error(msg), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

template <class... Ts>
std::string cat(Ts &&...parts) {
    std::ostringstream os;
    (os << ... << parts);
    return os.str();
}

template <class... Ts>
[[noreturn]] void fail(Errc c, Ts &&...parts) {
    throw Error(c, cat(std::forward<Ts>(parts)...));
}

template <class... Ts>
void require(bool ok, Errc c, Ts &&...parts) {
    if (!ok) fail(c, std::forward<Ts>(parts)...);
}

}  // namespace poc
