// Error types thrown by the library. The CLI maps these onto exit codes:
// input errors (ParseError, RankMismatch) -> 2, computation errors -> 3.
#pragma once

#include <stdexcept>
#include <string>

namespace lrv {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed partition text; the message names the first offending entry.
struct ParseError : Error {
    using Error::Error;
};

struct RankMismatch : Error {
    using Error::Error;
};

// Level k fails k > spread (level_shift) or condition k > r * sum-of-spreads.
struct LevelTooSmall : Error {
    using Error::Error;
};

struct OrderMismatch : Error {
    using Error::Error;
};

struct DivisionByZero : Error {
    using Error::Error;
};

// two_sin_sq with m = 0 mod N: a repeated summation-vector entry upstream.
struct ZeroAngle : Error {
    using Error::Error;
};

struct NotRational : Error {
    using Error::Error;
};

// The exact Verlinde sum failed the guaranteed-integer division; a bug,
// never a rounding artifact.
struct NonIntegerResult : Error {
    using Error::Error;
};

struct ResidualTooLarge : Error {
    using Error::Error;
};

struct DegeneratePoint : Error {
    using Error::Error;
};

// |lambda| + |mu| != |nu|; the coefficient vanishes without computation.
struct SizeMismatch : Error {
    using Error::Error;
};

struct NegativeContent : Error {
    using Error::Error;
};

}  // namespace lrv
