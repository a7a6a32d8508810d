#pragma once

#include "tropipm/path.hpp"
#include "tropipm/tropical.hpp"

#include <random>
#include <vector>

namespace tropipm::testutil {

inline TropVector tv(std::vector<long> entries) {
  std::vector<TropValue> vals;
  for (long e : entries) vals.emplace_back(Rat(e));
  return TropVector(std::move(vals));
}

inline TropVector tv_rat(std::vector<Rat> entries) {
  std::vector<TropValue> vals;
  for (Rat& e : entries) vals.emplace_back(std::move(e));
  return TropVector(std::move(vals));
}

inline TropValue ninf() { return TropValue::neg_inf(); }

/// Random rational with denominator dividing `denom`, magnitude <= span.
inline Rat random_rat(std::mt19937& rng, long span, long denom = 8) {
  std::uniform_int_distribution<long> dist(-span * denom, span * denom);
  return Rat(dist(rng), denom);
}

/// Membership oracle for tsegm(u, v): a point p lies on the segment iff it
/// equals (u + λe) ∨ (v + μe) for weights found from the coordinates where p
/// exceeds the corresponding endpoint. Independent of the sweep in
/// trop_segment_decompose.
inline bool on_tropical_segment(const TropVector& u, const TropVector& v, const TropVector& p) {
  auto try_half = [&](const TropVector& base, const TropVector& moving) {
    // p =? base ∨ (moving + s e) with s <= 0.
    TropValue s = TropValue::neg_inf();
    for (int i = 0; i < p.dim(); ++i) {
      if (p[i] > base[i]) {
        if (!p[i].is_finite() || !moving[i].is_finite()) return false;
        TropValue cand(p[i].value() - moving[i].value());
        if (s.is_finite() && !(cand == s)) return false;
        s = cand;
      }
    }
    if (s > TropValue(Rat(0))) return false;
    return join(base, moving.shifted(s)) == p;
  };
  return try_half(u, v) || try_half(v, u);
}

/// Closed-form path samples frozen from the value table of the family
/// (integer grid 0..2u_n). The (n=4, λ=19) entry follows the recursion and
/// the 1-Lipschitz property.
inline std::vector<std::vector<long>> table_n2() {
  return {{0, 0}, {0, -1}, {-1, -2}, {-1, -3}, {-2, -4}};
}
inline std::vector<std::vector<long>> table_n3() {
  return {{0, 0, 0},    {0, 0, -1},   {-1, 0, -2},  {-1, 0, -3},
          {-2, 0, -4},  {-3, -1, -5}, {-3, -1, -6}, {-3, -2, -7},
          {-4, -3, -8}, {-4, -4, -9}, {-5, -5, -10}};
}
inline std::vector<std::vector<long>> table_n4() {
  return {{0, 0, 0, 0},        {0, 0, 0, -1},      {-1, 0, 0, -2},     {-1, 0, 0, -3},
          {-2, 0, 0, -4},      {-3, -1, 0, -5},    {-3, -1, 0, -6},    {-3, -2, 0, -7},
          {-4, -3, 0, -8},     {-4, -4, 0, -9},    {-5, -5, 0, -10},   {-6, -6, -1, -11},
          {-6, -6, -1, -12},   {-6, -6, -2, -13},  {-7, -6, -3, -14},  {-7, -6, -4, -15},
          {-8, -6, -5, -16},   {-9, -7, -6, -17},  {-9, -7, -7, -18},  {-9, -8, -8, -19},
          {-10, -9, -9, -20},  {-10, -10, -10, -21}, {-11, -11, -11, -22}};
}

}  // namespace tropipm::testutil
