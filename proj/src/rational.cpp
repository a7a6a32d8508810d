#include "tropipm/rational.hpp"

#include <stdexcept>

namespace tropipm {

Rat parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  const auto dot = text.find('.');
  if (dot == std::string::npos) {
    try {
      return Rat(text);  // handles "p", "p/q"
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed rational literal: " + text);
    }
  }
  // Decimal form: scale the fractional part by a power of ten.
  const std::string head = text.substr(0, dot);
  const std::string tail = text.substr(dot + 1);
  if (tail.find_first_not_of("0123456789") != std::string::npos) {
    throw std::invalid_argument("malformed decimal literal: " + text);
  }
  const bool negative = !head.empty() && head[0] == '-';
  std::string int_part = negative ? head.substr(1) : head;
  if (int_part.empty()) int_part = "0";
  BigInt scale = 1;
  for (size_t i = 0; i < tail.size(); ++i) scale *= 10;
  BigInt numer = BigInt(int_part) * scale + (tail.empty() ? BigInt(0) : BigInt(tail));
  Rat result(numer, scale);
  return negative ? Rat(-result) : result;
}

std::string format_rational(const Rat& value) {
  if (denominator(value) == 1) return numerator(value).str();
  return numerator(value).str() + "/" + denominator(value).str();
}

Rat rat_pow(const Rat& base, long exp) {
  if (exp == 0) return Rat(1);
  if (base == 0 && exp < 0) throw std::domain_error("rat_pow: 0 to a negative power");
  Rat b = exp > 0 ? base : Rat(1) / base;
  unsigned long e = static_cast<unsigned long>(exp > 0 ? exp : -exp);
  Rat acc(1);
  while (e > 0) {
    if (e & 1) acc *= b;
    b *= b;
    e >>= 1;
  }
  return acc;
}

bool is_integer(const Rat& value) { return denominator(value) == 1; }

BigInt rat_floor(const Rat& value) {
  BigInt q = numerator(value) / denominator(value);
  if (value < 0 && q * denominator(value) != numerator(value)) --q;
  return q;
}

BigInt rat_ceil(const Rat& value) { return -rat_floor(-value); }

namespace {

Rat simplest_positive(const Rat& lo, const Rat& hi) {
  const BigInt c = rat_ceil(lo);
  if (Rat(c) <= hi) return Rat(c);
  const BigInt a = rat_floor(lo);
  return Rat(a) + Rat(1) / simplest_positive(Rat(1) / (hi - Rat(a)), Rat(1) / (lo - Rat(a)));
}

}  // namespace

Rat simplest_rational_between(const Rat& lo, const Rat& hi) {
  if (lo > hi) throw std::invalid_argument("simplest_rational_between: empty interval");
  if (lo <= 0 && hi >= 0) return Rat(0);
  if (hi < 0) return -simplest_positive(-hi, -lo);
  return simplest_positive(lo, hi);
}

}  // namespace tropipm
