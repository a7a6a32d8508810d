#include "tropipm/polyhedron.hpp"

#include <algorithm>

namespace tropipm {

bool is_feasible(const TropPolyhedron& P, const TropVector& x) {
  if (x.dim() != P.dimension) throw DimensionError("is_feasible: dimension mismatch");
  return std::all_of(P.inequalities.begin(), P.inequalities.end(),
                     [&](const TropInequality& q) { return q.satisfied(x); });
}

TropPolyhedron add_level_constraint(const TropPolyhedron& P, const TropVector& c,
                                    const Rat& lambda) {
  if (c.dim() != P.dimension) throw DimensionError("add_level_constraint: dimension mismatch");
  TropPolyhedron out = P;
  TropInequality level;
  level.lhs.coeffs = c;
  level.rhs.coeffs = TropVector::bottom(P.dimension);
  level.rhs.constant = TropValue(-lambda);
  out.inequalities.push_back(std::move(level));
  return out;
}

TropSolveResult greatest_point_below(const TropPolyhedron& P, const TropVector& u,
                                     long max_iters) {
  if (u.dim() != P.dimension) throw DimensionError("greatest_point_below: dimension mismatch");
  const int n = P.dimension;
  const long m = static_cast<long>(P.inequalities.size());
  if (max_iters <= 0) max_iters = 64 * n * std::max<long>(m, 1);

  // Collapse floor: 10^6 below the least finite entry of u.
  bool have_floor = false;
  Rat floor_value(0);
  for (int i = 0; i < n; ++i) {
    if (!u[i].is_finite()) continue;
    if (!have_floor || u[i].value() < floor_value) floor_value = u[i].value();
    have_floor = true;
  }
  floor_value -= 1000000;

  TropVector x = u;
  for (long sweep = 0; sweep < max_iters; ++sweep) {
    bool violated = false;
    bool changed = false;
    for (const TropInequality& q : P.inequalities) {
      const TropValue lhs = q.lhs.value(x);
      const TropValue rhs = q.rhs.value(x);
      if (lhs <= rhs) continue;
      violated = true;
      if (q.lhs.constant > rhs) {
        // The constant term cannot be lowered, and rhs only decreases as x
        // decreases, so no feasible point exists below u.
        return {TropSolveStatus::Empty, x};
      }
      for (int i = 0; i < n; ++i) {
        const TropValue term = q.lhs.coeffs[i] + x[i];
        if (!(term > rhs)) continue;
        if (rhs.is_neg_inf()) {
          x[i] = TropValue::neg_inf();
        } else {
          Rat clamped = rhs.value() - q.lhs.coeffs[i].value();
          x[i] = have_floor && clamped < floor_value ? TropValue::neg_inf()
                                                     : TropValue(std::move(clamped));
        }
        changed = true;
      }
    }
    if (!violated) return {TropSolveStatus::Point, x};
    if (!changed) {
      // Violations remain but every clampable term is already at its bound:
      // only left-hand constants exceed the right-hand sides, which rules
      // out any feasible point below u.
      return {TropSolveStatus::Empty, x};
    }
  }
  return {TropSolveStatus::Unconverged, x};
}

TropSolveResult barycenter(const TropPolyhedron& P, long max_iters) {
  const int n = P.dimension;
  std::vector<TropValue> bound(static_cast<size_t>(n), TropValue::neg_inf());
  std::vector<bool> bounded(static_cast<size_t>(n), false);
  for (const TropInequality& q : P.inequalities) {
    // Single-sided rows: right-hand side is a bare finite constant.
    if (!q.rhs.constant.is_finite()) continue;
    if (!q.rhs.coeffs.support().empty()) continue;
    for (int i = 0; i < n; ++i) {
      if (!q.lhs.coeffs[i].is_finite()) continue;
      Rat cap = q.rhs.constant.value() - q.lhs.coeffs[i].value();
      if (!bounded[static_cast<size_t>(i)] || TropValue(cap) < bound[static_cast<size_t>(i)]) {
        bound[static_cast<size_t>(i)] = TropValue(std::move(cap));
      }
      bounded[static_cast<size_t>(i)] = true;
    }
  }
  if (!std::all_of(bounded.begin(), bounded.end(), [](bool b) { return b; })) {
    return {TropSolveStatus::Unbounded, TropVector::bottom(std::max(n, 1))};
  }
  return greatest_point_below(P, TropVector(std::move(bound)), max_iters);
}

std::optional<Rat> d_inf_to_polyhedron(const TropPolyhedron& P, const TropVector& p,
                                       const Rat& tol, const Rat& limit) {
  auto within = [&](const Rat& radius) {
    TropSolveResult probe = greatest_point_below(P, p.shifted(TropValue(radius)));
    if (!probe.ok()) return false;
    return leq(p.shifted(TropValue(-radius)), probe.point);
  };
  if (within(Rat(0))) return Rat(0);
  if (!within(limit)) return std::nullopt;
  Rat lo(0), hi = limit;
  while (hi - lo > tol) {
    Rat mid = (lo + hi) / 2;
    (within(mid) ? hi : lo) = mid;
  }
  return hi;
}

}  // namespace tropipm
