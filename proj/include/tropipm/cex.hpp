#pragma once

#include "tropipm/polyhedron.hpp"

#include <utility>
#include <vector>

namespace tropipm {

/// coeff · t^exponent. A zero coeff makes the exponent irrelevant.
struct Monomial {
  Rat coeff = 0;
  Rat exponent = 0;

  static Monomial zero() { return Monomial{}; }
  bool is_zero() const { return coeff == 0; }
};

/// One inequality row: sum_j coeffs[j]·x_j <= rhs, entries parametric in t.
struct MonomialRow {
  std::vector<Monomial> coeffs;
  Monomial rhs;
};

/// Parametric LP min objective·x s.t. rows. The counterexample family has
/// exactly 2n rows laid out as:
///   rows[0 .. n-2]   coupling rows i = 1..n-1
///   rows[n-1]        simplex row  sum_j x_j <= 1
///   rows[n]          chain head   0 <= x_1       (written -x_1 <= 0)
///   rows[n+i]        chain        x_i <= x_{i+1} for i = 1..n-2
///   rows[2n-1]       chain tail   x_{n-1} <= t^{u_n}·x_n
struct MonomialLP {
  int n = 0;
  std::vector<MonomialRow> rows;
  std::vector<Monomial> objective;
};

/// The n-variable, 2n-row parametric LP with exponents u_k = 3·2^(k-2) - 1.
MonomialLP build_cex(int n);

/// Log-limit of a monomial LP: a positive-coefficient monomial contributes
/// its exponent on its own side, a negative one moves to the opposite side,
/// zero coefficients vanish (-inf).
TropPolyhedron tropicalize(const MonomialLP& lp);

/// The tropical system the counterexample converges to, written directly.
TropPolyhedron build_tcex(int n);

/// Exact instantiation at t = s^2 (s rational > 1), so that half-integer
/// exponents stay rational: every entry equals coeff·s^(2·exponent).
struct RationalPolytope {
  int n = 0;
  std::vector<std::vector<Rat>> A;  // 2n x n
  std::vector<Rat> b;
  Rat t;
  Rat s;
};

RationalPolytope instantiate(const MonomialLP& lp, const Rat& s);

struct FaceLatticeReport {
  std::vector<std::vector<Rat>> vertices;
  std::vector<std::vector<int>> facet_incidence;  // tight row indices per vertex
  bool simple = false;                            // every vertex has exactly n tight rows
  bool is_cube = false;
  std::vector<std::pair<int, int>> facet_pairs;   // opposite facets when is_cube
};

/// All basic feasible solutions by exhaustive exact n x n solves (guarded to
/// n <= 6). is_cube holds when there are 2^n vertices, the polytope is
/// simple, and the 2n facets fall into n disjoint pairs with exactly one of
/// each pair tight at every vertex.
FaceLatticeReport enumerate_vertices(const RationalPolytope& p);

/// Feasibility of { A x <= b } ∪ extra rows, decided exactly by
/// Fourier-Motzkin elimination.
bool fm_feasible(std::vector<std::vector<Rat>> A, std::vector<Rat> b);

/// Whether the faces sum x_j = 1 and x_{n-1} = t^{u_n}·x_n miss each other.
bool check_disjoint_faces(const RationalPolytope& p);

struct FacetPairCheck {
  int row_a;
  int row_b;
  bool disjoint;
};

/// Disjointness of the n opposite-facet candidates, each decided by
/// Fourier-Motzkin: (chain head, coupling 1), (x_i = x_{i+1}, coupling i+1)
/// for i = 1..n-2, and (simplex, chain tail).
std::vector<FacetPairCheck> check_facet_pairing(const RationalPolytope& p);

/// x - eps·(2^(n-1), ..., 2, 1) together with a strict-feasibility verdict.
/// Requires x feasible for the tropical system with full support.
std::pair<TropVector, bool> strict_interior_perturbation(const TropVector& x, const Rat& eps);

}  // namespace tropipm
