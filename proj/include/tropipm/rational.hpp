#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <string>

namespace tropipm {

using Rat = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                           boost::multiprecision::et_off>;
using BigInt = boost::multiprecision::mpz_int;

/// Parses "p/q", plain integers, and decimal strings such as "2.56".
/// Throws std::invalid_argument on malformed input.
Rat parse_rational(const std::string& text);

/// Canonical "p/q" form; integers print without the "/1" suffix.
std::string format_rational(const Rat& value);

/// base^exp for integer exp (exp < 0 requires base != 0).
Rat rat_pow(const Rat& base, long exp);

/// True iff value has denominator 1.
bool is_integer(const Rat& value);

BigInt rat_floor(const Rat& value);
BigInt rat_ceil(const Rat& value);

/// The smallest-denominator rational in [lo, hi] (Stern-Brocot descent).
Rat simplest_rational_between(const Rat& lo, const Rat& hi);

}  // namespace tropipm
