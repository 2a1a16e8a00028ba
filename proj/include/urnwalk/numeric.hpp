#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/gmp.hpp>

namespace urnwalk {

/// Arbitrary-precision nonnegative integer count (Catalan, Eulerian, factorials).
using BigCount = boost::multiprecision::mpz_int;

/// Exact rational in canonical form, denominator > 0.
using ExactRational = boost::multiprecision::mpq_rational;

inline ExactRational make_rational(std::int64_t num, std::int64_t den) {
  return ExactRational(BigCount(num), BigCount(den));
}

/// Renders as "p/q"; integers keep an explicit "/1" so every value parses the same way.
std::string to_fraction_string(const ExactRational& q);

/// Fixed-point decimal with `digits` digits after the point, rounded half up.
std::string to_decimal_string(const ExactRational& q, int digits);

/// Shortest round-trip rendering of a double ("nan" and "inf" spelled out).
std::string to_decimal_string(double x);

double to_double(const ExactRational& q);

/// Natural log of a positive big integer, accurate to double precision.
double log_of(const BigCount& n);

/// Parses "p/q" or "p" (optionally signed); throws std::invalid_argument.
ExactRational parse_rational(const std::string& text);

}  // namespace urnwalk
