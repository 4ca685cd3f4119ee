#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace eudoxus {

// Base class for every error raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exact rational division (or reciprocal of a rational) with a zero divisor.
struct DivisionByZero : Error {
    using Error::Error;
};

// A precondition on a numeric operation was violated (negative isqrt operand,
// non-positive floor_div divisor, bad index, empty supremum family, ...).
struct DomainError : Error {
    using Error::Error;
};

// An operation needed the sign of a real but the sign could not be
// established within the evaluation budget. Inverting an exact zero lands
// here as well: zero has no finitely certifiable sign.
struct SignUndecided : Error {
    using Error::Error;
};

// Syntax error in the expression language; `offset` is the byte position.
struct ParseError : Error {
    std::size_t offset;
    ParseError(std::size_t off, const std::string& what)
        : Error("syntax error at offset " + std::to_string(off) + ": " + what),
          offset(off) {}
};

}  // namespace eudoxus
