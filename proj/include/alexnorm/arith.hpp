#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace alexnorm {

using Integer = mpz_class;
using Rational = mpq_class;

/// A point (or covector) with exact rational coordinates.
using Point = std::vector<Rational>;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text or files.
class InputError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its domain (arity mismatch, zero polynomial, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A computation disagreed with itself; indicates a bug or corrupted input.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

/// Prints `p/q`, or `p` when the denominator is one.
std::string to_string(const Rational& q);
std::string to_string(const Point& p, std::string_view sep = ",");

Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

/// Parses a comma- or whitespace-separated list of rationals, e.g. "1,0,-1/2".
Point parse_point(std::string_view text);

Rational dot(const Point& a, const Point& b);

}  // namespace alexnorm
