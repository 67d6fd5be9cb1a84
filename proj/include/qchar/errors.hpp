#pragma once

#include <stdexcept>
#include <string>

namespace qchar {

/// Base class of every error thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Mismatched variable counts or vector lengths.
struct DimensionError : Error {
    using Error::Error;
};

// exact_div: no exact Laurent quotient exists.
struct DivisionFailure : Error {
    using Error::Error;
};

// A monomial whose exponents do not share one fractional part; such a
// monomial lies in no single coset summand.
struct MixedCosetError : Error {
    using Error::Error;
};

// Violated operation precondition (weight not dominant, atypical weight,
// fractional exponents where integers are required, ...).
struct DomainError : Error {
    using Error::Error;
};

// decompose_p: the exact linear system over the candidate weight set is
// inconsistent, so the input is not in the span of the P-basis.
struct NotInSpanError : Error {
    using Error::Error;
};

// coset_split / ring membership preconditions; names the offending coset class.
struct NotInRingError : Error {
    using Error::Error;
};

struct ParseError : Error {
    int line;
    int column;
    ParseError(const std::string& msg, int line_, int column_)
        : Error("parse error at " + std::to_string(line_) + ":" + std::to_string(column_) + ": " + msg),
          line(line_),
          column(column_) {}
};

}  // namespace qchar
