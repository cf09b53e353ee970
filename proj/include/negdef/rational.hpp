#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace negdef {

/// Exact rational scalar. GMP keeps every arithmetic result in lowest terms
/// with a positive denominator; the helpers below canonicalize anything that
/// enters from outside (strings, integer pairs).
using Rat = mpq_class;
using Int = mpz_class;
using RatVector = std::vector<Rat>;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidInput : public Error {
public:
    using Error::Error;
};

class NonSymmetric : public Error {
public:
    using Error::Error;
};

class SingularMatrix : public Error {
public:
    using Error::Error;
};

class HypothesisViolated : public Error {
public:
    using Error::Error;
};

/// Raised when a computed result contradicts a statement that must hold for
/// valid input. Seeing one of these means there is a bug in this library.
class InvariantBroken : public Error {
public:
    using Error::Error;
};

Rat make_rat(long num, long den = 1);

/// Parses "p", "p/q" or "-p/q" with decimal integers. Throws InvalidInput on
/// anything else, including a zero denominator.
Rat parse_rat(std::string_view text);

/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rat& value);

Int floor_of(const Rat& value);
Int ceil_of(const Rat& value);

/// Converts an integer to int64_t, throwing InvalidInput if it does not fit.
std::int64_t to_int64(const Int& value);

int sign(const Rat& value);

Int lcm_of_denominators(const RatVector& values);

}  // namespace negdef
