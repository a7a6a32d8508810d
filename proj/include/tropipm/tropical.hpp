#pragma once

#include "tropipm/rational.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace tropipm {

struct DimensionError : std::invalid_argument {
  explicit DimensionError(const std::string& what) : std::invalid_argument(what) {}
};

/// Element of the max-plus semifield: a rational or the bottom element -inf.
/// -inf is absorbing for + (the semifield multiplication) and neutral for max.
class TropValue {
 public:
  TropValue() : finite_(false) {}
  TropValue(Rat v) : finite_(true), value_(std::move(v)) {}
  TropValue(long v) : finite_(true), value_(v) {}

  static TropValue neg_inf() { return TropValue(); }

  bool is_finite() const { return finite_; }
  bool is_neg_inf() const { return !finite_; }

  /// Finite payload; throws on -inf.
  const Rat& value() const {
    if (!finite_) throw std::logic_error("TropValue: value() on -inf");
    return value_;
  }

  friend TropValue operator+(const TropValue& a, const TropValue& b) {
    if (!a.finite_ || !b.finite_) return neg_inf();
    return TropValue(a.value_ + b.value_);
  }

  /// a - b for finite b; -inf - b = -inf.
  friend TropValue operator-(const TropValue& a, const Rat& b) {
    if (!a.finite_) return neg_inf();
    return TropValue(a.value_ - b);
  }

  friend bool operator==(const TropValue& a, const TropValue& b) {
    if (a.finite_ != b.finite_) return false;
    return !a.finite_ || a.value_ == b.value_;
  }
  friend bool operator!=(const TropValue& a, const TropValue& b) { return !(a == b); }
  friend bool operator<(const TropValue& a, const TropValue& b) {
    if (!a.finite_) return b.finite_;
    if (!b.finite_) return false;
    return a.value_ < b.value_;
  }
  friend bool operator<=(const TropValue& a, const TropValue& b) { return a < b || a == b; }
  friend bool operator>(const TropValue& a, const TropValue& b) { return b < a; }
  friend bool operator>=(const TropValue& a, const TropValue& b) { return b <= a; }

  friend TropValue max(const TropValue& a, const TropValue& b) { return a < b ? b : a; }

 private:
  bool finite_;
  Rat value_;
};

/// Point of (R ∪ {-inf})^n with exact rational coordinates.
class TropVector {
 public:
  TropVector() = default;
  explicit TropVector(int n) : entries_(static_cast<size_t>(n)) {
    if (n < 1) throw DimensionError("TropVector: dimension must be >= 1");
  }
  explicit TropVector(std::vector<TropValue> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw DimensionError("TropVector: dimension must be >= 1");
  }

  static TropVector zeros(int n) {
    TropVector out(n);
    for (auto& e : out.entries_) e = TropValue(Rat(0));
    return out;
  }
  static TropVector bottom(int n) { return TropVector(n); }

  int dim() const { return static_cast<int>(entries_.size()); }
  const TropValue& operator[](int i) const { return entries_[static_cast<size_t>(i)]; }
  TropValue& operator[](int i) { return entries_[static_cast<size_t>(i)]; }
  const std::vector<TropValue>& entries() const { return entries_; }

  /// Indices of finite coordinates.
  std::vector<int> support() const {
    std::vector<int> out;
    for (int i = 0; i < dim(); ++i)
      if (entries_[static_cast<size_t>(i)].is_finite()) out.push_back(i);
    return out;
  }

  /// Scalar tropical multiplication u + λe (shift every coordinate).
  TropVector shifted(const TropValue& lambda) const {
    TropVector out = *this;
    for (auto& e : out.entries_) e = e + lambda;
    return out;
  }

  friend bool operator==(const TropVector& a, const TropVector& b) {
    return a.entries_ == b.entries_;
  }
  friend bool operator!=(const TropVector& a, const TropVector& b) { return !(a == b); }

 private:
  std::vector<TropValue> entries_;
};

/// Pointwise maximum.
TropVector join(const TropVector& a, const TropVector& b);

/// Pointwise order a <= b.
bool leq(const TropVector& a, const TropVector& b);

/// max_i (c_i + x_i); -inf iff every term is -inf.
TropValue trop_dot(const TropVector& c, const TropVector& x);

/// inf { λ >= 0 : u - λe <= v <= u + λe }. std::nullopt encodes +inf,
/// which happens exactly when the supports differ.
std::optional<Rat> d_inf(const TropVector& u, const TropVector& v);

/// (u + λe) ∨ (v + μe); requires max(λ, μ) = 0.
TropVector trop_segment_point(const TropVector& u, const TropVector& v,
                              const TropValue& lambda, const TropValue& mu);

/// Polygonal decomposition of the tropical segment from u to v. Breakpoints
/// run from u to v; direction k has entries in {0, ±1} and consecutive
/// breakpoints differ by a positive multiple of it (pieces crossing a support
/// change are unbounded rays and reach their endpoint in the limit).
struct TropSegmentDecomposition {
  std::vector<TropVector> breakpoints;
  std::vector<std::vector<int>> directions;
};

TropSegmentDecomposition trop_segment_decompose(const TropVector& u, const TropVector& v);

}  // namespace tropipm
