#pragma once

#include "tropipm/tropical.hpp"

#include <vector>

namespace tropipm {

/// max(max_i(coeffs_i + x_i), constant); monotone nondecreasing in every x_i.
struct TropAffineForm {
  TropVector coeffs;
  TropValue constant = TropValue::neg_inf();

  TropValue value(const TropVector& x) const { return max(trop_dot(coeffs, x), constant); }
  friend bool operator==(const TropAffineForm&, const TropAffineForm&) = default;
};

/// Two-sided max-plus inequality lhs(x) <= rhs(x), decidable exactly.
struct TropInequality {
  TropAffineForm lhs;
  TropAffineForm rhs;

  bool satisfied(const TropVector& x) const { return lhs.value(x) <= rhs.value(x); }
  friend bool operator==(const TropInequality&, const TropInequality&) = default;
};

/// Finite system of two-sided max-plus inequalities over T^n.
struct TropPolyhedron {
  int dimension = 0;
  std::vector<TropInequality> inequalities;

  friend bool operator==(const TropPolyhedron&, const TropPolyhedron&) = default;
};

bool is_feasible(const TropPolyhedron& P, const TropVector& x);

/// Appends trop_dot(c, x) <= -λ.
TropPolyhedron add_level_constraint(const TropPolyhedron& P, const TropVector& c, const Rat& lambda);

enum class TropSolveStatus { Point, Empty, Unbounded, Unconverged };

struct TropSolveResult {
  TropSolveStatus status;
  TropVector point;  // valid iff status == Point

  bool ok() const { return status == TropSolveStatus::Point; }
};

/// Greatest feasible point <= u, by monotone clamping of violated
/// inequalities (round-robin in listed order). Every feasible point <= u
/// stays dominated by the working point through each clamp, so the fixpoint,
/// when feasible, is the greatest such point. Emptiness below u is proven
/// when a left-hand constant exceeds everything the right-hand side can
/// still offer; otherwise exhaustion of max_iters reports Unconverged.
/// Coordinates driven more than 10^6 below the least finite entry of u
/// collapse to -inf.
TropSolveResult greatest_point_below(const TropPolyhedron& P, const TropVector& u,
                                     long max_iters = 0);

/// Greatest point of the whole feasible set. The initial upper bound is
/// extracted from single-sided rows (finite-constant right-hand sides);
/// Unbounded if some coordinate has no such bound.
TropSolveResult barycenter(const TropPolyhedron& P, long max_iters = 0);

/// Upper bound on d_inf(p, feasible set of P), via bisection on the radius of
/// the greatest-point probe; exact to within tol. Requires P bounded above in
/// every coordinate reachable from p (true for the systems used here).
/// Returns nullopt when no radius up to `limit` works.
std::optional<Rat> d_inf_to_polyhedron(const TropPolyhedron& P, const TropVector& p,
                                       const Rat& tol, const Rat& limit);

}  // namespace tropipm
