#pragma once

#include "tropipm/rational.hpp"

#include <boost/multiprecision/mpfr.hpp>

namespace tropipm {

/// Arbitrary-precision binary float. Fresh values pick up the thread's
/// current default precision; set it before building solver state.
using BigFloat =
    boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                  boost::multiprecision::et_off>;

/// Sets the thread default so freshly constructed BigFloats carry at least
/// `bits` of mantissa.
void set_precision_bits(unsigned bits);

/// Mantissa bits a fresh BigFloat would get right now.
unsigned current_precision_bits();

BigFloat to_bigfloat(const Rat& q);

/// Exact conversion (every binary float is rational).
Rat to_rational(const BigFloat& x);

/// base^e for rational e (base > 0), via exp(e·log base).
BigFloat pow_rat(const BigFloat& base, const Rat& e);

/// log_t(x) = log(x) / log(t).
BigFloat log_base(const BigFloat& t, const BigFloat& x);

}  // namespace tropipm
