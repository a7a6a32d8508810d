#pragma once

#include "tropipm/polyhedron.hpp"

#include <vector>

namespace tropipm {

/// Monotone piecewise linear curve λ -> point in T^n. Breakpoint λ values are
/// strictly increasing, points are coordinatewise nonincreasing in λ, and each
/// piece moves with slope -1 exactly on its support set (direction -e^K).
struct BreakpointPath {
  std::vector<Rat> lambdas;
  std::vector<TropVector> points;
  std::vector<std::vector<int>> supports;  // 0-based moving coordinates per piece

  int dim() const { return points.empty() ? 0 : points.front().dim(); }
  size_t piece_count() const { return supports.size(); }

  /// Piecewise evaluation; λ is clamped to [lambdas.front(), lambdas.back()].
  TropVector eval(const Rat& lambda) const;
};

struct MalformedPathError : std::invalid_argument {
  explicit MalformedPathError(const std::string& what) : std::invalid_argument(what) {}
};

/// Builds a validated path from samples: merges stationary sections, derives
/// piece supports, and rejects non-monotone data or fractional slopes.
BreakpointPath make_breakpoint_path(std::vector<Rat> lambdas, std::vector<TropVector> points);

/// u_k = 3·2^(k-2) - 1 (so u_1 = 1/2, u_2 = 2, u_3 = 5, ...).
Rat cex_u(int k);

/// Closed-form tropical central path of the 2n-row counterexample family.
/// The last coordinate is always min(-λ, 0).
TropVector cex_tropical_path_point(int n, const Rat& lambda);

/// Barycenter of K cut by the level set trop_dot(c, x) <= -λ.
TropSolveResult generic_tropical_path_point(const TropPolyhedron& K, const TropVector& c,
                                            const Rat& lambda);

/// Exact breakpoints of the closed-form path over [lo, hi]; synthetic
/// breakpoints are inserted at interval endpoints that fall inside a piece.
BreakpointPath cex_path_breakpoints(int n, const Rat& lo, const Rat& hi);

/// Minimal number of tropical segments whose concatenation equals the path:
/// greedy left-to-right runs, a run extending while the next support is
/// contained in the previous one. Greedy is optimal since every prefix of a
/// valid run is valid. A path with no pieces has gamma 0.
long gamma(const BreakpointPath& path);

/// gamma of the closed-form path over [lo, hi] (empty interval -> 0).
long gamma_cex(int n, const Rat& lo, const Rat& hi);

/// Breakpoint extraction for a generic bounded-above polyhedron by adaptive
/// λ-bisection down to `resolution`. Pieces that fail to exhibit a clean
/// slope -e^K at the resolution limit are reported in unresolved_pieces.
struct GenericPathResult {
  BreakpointPath path;
  std::vector<size_t> unresolved_pieces;
  bool fully_resolved() const { return unresolved_pieces.empty(); }
};

GenericPathResult generic_path_breakpoints(const TropPolyhedron& K, const TropVector& c,
                                           const Rat& lo, const Rat& hi,
                                           const Rat& resolution = Rat(1, 1 << 20));

/// Tubular neighborhood of radius epsilon around a path section.
struct Tube {
  BreakpointPath path;
  Rat radius;
};

/// Exact d_inf distance from p to the curve {path(λ) : λ in path range};
/// nullopt when p's support never matches the path's.
std::optional<Rat> d_inf_point_to_path(const BreakpointPath& path, const TropVector& p);

/// True iff every curve point lies within d_inf <= radius of some path point.
bool tube_contains(const Tube& tube, const std::vector<TropVector>& curve);

}  // namespace tropipm
