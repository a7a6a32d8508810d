#include "tropipm/bigfloat.hpp"

#include <cmath>
#include <stdexcept>

namespace tropipm {

void set_precision_bits(unsigned bits) {
  if (bits < 24) bits = 24;
  // The boost backend counts decimal digits; round up so the mantissa holds
  // at least the requested number of bits.
  const unsigned digits10 = static_cast<unsigned>(std::ceil(bits * 0.3010299956639812)) + 2;
  BigFloat::default_precision(digits10);
}

unsigned current_precision_bits() {
  BigFloat probe(0);
  return static_cast<unsigned>(mpfr_get_prec(probe.backend().data()));
}

BigFloat to_bigfloat(const Rat& q) {
  BigFloat num(numerator(q).str());
  BigFloat den(denominator(q).str());
  return num / den;
}

Rat to_rational(const BigFloat& x) {
  if (!mpfr_number_p(x.backend().data()))
    throw std::domain_error("to_rational: non-finite BigFloat");
  Rat out;
  mpfr_get_q(out.backend().data(), x.backend().data());
  return out;
}

BigFloat pow_rat(const BigFloat& base, const Rat& e) {
  if (base <= 0) throw std::domain_error("pow_rat: base must be positive");
  if (e == 0) return BigFloat(1);
  return exp(to_bigfloat(e) * log(base));
}

BigFloat log_base(const BigFloat& t, const BigFloat& x) {
  if (t <= 1 || x <= 0) throw std::domain_error("log_base: need t > 1 and x > 0");
  return log(x) / log(t);
}

}  // namespace tropipm
