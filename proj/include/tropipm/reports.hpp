#pragma once

#include "tropipm/ipm.hpp"
#include "tropipm/path.hpp"

#include <optional>
#include <vector>

namespace tropipm {

/// Mantissa bits so that t^(2·u_n) stays below 2^(bits/4); never less than
/// the requested amount.
unsigned required_precision_bits(int n, const Rat& t, unsigned requested);

/// Strictly feasible lift of the tropical path origin: x_i = t^(-2^(n-1-i)/8).
FVec cex_start_point(int n, const BigFloat& t);

/// Strictly feasible point from an infeasible guess by damped Newton on
/// progressively less shifted barriers (-sum log(s_i + mu), mu -> 0).
FVec phase_one_start(const LogBarrier& barrier, FVec guess, const IPMConfig& cfg);

struct ConvergenceCell {
  Rat lambda;
  bool solved = false;
  BigFloat deviation;  // d_inf(log_t C_t(t^lambda), closed-form path point)
  std::string error;
};

struct ConvergenceReport {
  int n = 0;
  unsigned precision_bits = 0;
  std::vector<Rat> t_list;
  std::vector<Rat> lambda_grid;
  std::vector<std::vector<ConvergenceCell>> cells;  // [t][lambda]
  std::vector<BigFloat> max_deviation;              // per t
  std::vector<BigFloat> gamma_hat;                  // max deviation · log t
  std::vector<std::optional<BigFloat>> delta_hat;   // instance deviation · log t, when s = sqrt(t) is rational
  bool monotone = false;       // max deviation strictly decreasing along the t ladder
  bool gamma_ratio_ok = false; // max/min of gamma_hat within a factor 2
  bool consistent() const { return monotone; }
};

ConvergenceReport run_convergence(int n, const std::vector<Rat>& t_list,
                                  const std::vector<Rat>& lambda_grid, unsigned precision_bits);

struct IterationReport {
  int n = 0;
  Rat t;
  Rat sigma;
  unsigned precision_bits = 0;
  Rat target_exp;
  BigFloat v_start;
  BigFloat v_target;
  size_t predictor_steps = 0;
  size_t total_segments = 0;
  long gamma_ref = 0;
  size_t audit_failures = 0;
  bool certified = false;      // every iterate passed the neighborhood audit
  bool count_ok = false;       // total_segments >= gamma_ref
  Rat tube_radius;
  bool tube_contained = false;
  BigFloat m_pc;               // functional neighborhood level used by the audit
  BigFloat band_lo, band_hi;   // multiplicative band for m_pc
  DualityGapReport duality;
};

struct IterationRun {
  IterationReport report;
  Trajectory trajectory;
};

/// Full iteration-count experiment: lift start, predictor-corrector to
/// t^target_exp, per-iterate neighborhood audit, gamma reference, tube
/// diagnostic, duality-gap report.
IterationRun run_ipm_experiment(int n, const Rat& t, const Rat& sigma, unsigned precision_bits,
                                const Rat& target_exp, const Rat& tube_radius);

struct FaceRunResult {
  FaceLatticeReport lattice;
  bool disjoint_ok = false;
  std::vector<FacetPairCheck> pairing;
  bool all_pairs_disjoint = false;
  bool fig_vertex_checked = false;   // n = 3 only: nearest-vertex match below
  Rat fig_vertex_distance;           // max-norm distance to (0.451, 0.451, 0.098)
};

FaceRunResult run_faces(int n, const Rat& s);

}  // namespace tropipm
