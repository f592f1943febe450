#pragma once

#include <stdexcept>
#include <string>

namespace wzw {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// A configured search/size bound was exceeded (Weyl group, alcove, backtracking).
struct BoundExceeded : Error {
    using Error::Error;
};

// Denominator vanishes at the evaluation point.
struct PoleError : Error {
    using Error::Error;
};

// A constructed object fails its own invariants; signals a bug, not bad input.
struct InvariantViolation : Error {
    using Error::Error;
};

// t(g (x) X) - t(g) - t(X) is not a multiple of 1/ord(g).
struct NonQuantizedMonodromy : Error {
    using Error::Error;
};

// Simple-current data requested for an object with no pinned self-braiding.
struct UnsupportedCurrent : Error {
    using Error::Error;
};

// No basis bijection consistent with the required signatures exists.
struct NoConsistentLabeling : Error {
    using Error::Error;
};

struct NotFound : Error {
    using Error::Error;
};

struct UsageError : Error {
    using Error::Error;
};

}  // namespace wzw
