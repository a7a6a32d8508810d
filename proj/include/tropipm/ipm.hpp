#pragma once

#include "tropipm/bigfloat.hpp"
#include "tropipm/cex.hpp"
#include "tropipm/linalg.hpp"

#include <stdexcept>
#include <vector>

namespace tropipm {

struct NotFeasibleError : std::runtime_error {
  explicit NotFeasibleError(const std::string& what) : std::runtime_error(what) {}
};
struct MaxNewtonItersError : std::runtime_error {
  explicit MaxNewtonItersError(const std::string& what) : std::runtime_error(what) {}
};
struct PrecisionLossError : std::runtime_error {
  explicit PrecisionLossError(const std::string& what) : std::runtime_error(what) {}
};
struct StallDetectedError : std::runtime_error {
  explicit StallDetectedError(const std::string& what) : std::runtime_error(what) {}
};

/// f(x) = -sum_i log(b_i - a_i·x) over { x : A x < b }. The complexity value
/// of this barrier is the row count m; K denotes 4m + 1.
class LogBarrier {
 public:
  LogBarrier(FMat A, FVec b);

  static LogBarrier from_rational(const std::vector<std::vector<Rat>>& A,
                                  const std::vector<Rat>& b);
  static LogBarrier from_rational_polytope(const RationalPolytope& p);
  /// Entries evaluated as coeff·t^exponent at the current working precision.
  static LogBarrier from_monomial_lp(const MonomialLP& lp, const BigFloat& t);

  int dim() const { return n_; }
  int rows() const { return m_; }
  int theta() const { return m_; }
  long k_const() const { return 4L * m_ + 1; }

  const FMat& A() const { return A_; }
  const FVec& b() const { return b_; }

  FVec slack(const FVec& x) const;
  bool strictly_feasible(const FVec& x) const;
  BigFloat value(const FVec& x) const;
  FVec gradient(const FVec& x) const;
  FMat hessian(const FVec& x) const;

 private:
  int n_;
  int m_;
  FMat A_;
  FVec b_;
};

struct IPMConfig {
  unsigned precision_bits = 256;
  Rat newton_tol = Rat(1, 16);     // ||n_eta(x)||_x stopping threshold
  Rat sigma = Rat(1, 2);           // predictor fraction of the supremal step
  Rat rho = Rat(1, 4);             // step-neighborhood radius
  Rat corrector_tol = Rat(1, 13);  // projected Newton norm target
  long max_newton_iters = 500;
  long max_outer_iters = 20000;
};

enum class IterateKind { Predictor, Corrector };

struct TrajectoryPoint {
  FVec x;
  BigFloat eta;  // estimated path parameter (projection multiplier)
  IterateKind kind = IterateKind::Corrector;
  BigFloat objective;
  bool centered = false;  // projected Newton norm <= corrector_tol verified here
  bool flagged = false;   // set when a neighborhood audit fails at this iterate
};

struct Trajectory {
  std::vector<TrajectoryPoint> iterates;
  size_t predictor_steps = 0;

  size_t segment_count() const { return iterates.empty() ? 0 : iterates.size() - 1; }
};

/// Damped Newton minimization of eta·(c·x) + f(x) from x0 until the Newton
/// norm drops to cfg.newton_tol.
FVec newton_center(const LogBarrier& barrier, const FVec& c, const BigFloat& eta,
                   const FVec& x0, const IPMConfig& cfg);

/// Projected Newton decrement of f restricted to { y : c·y = c·x }, and the
/// multiplier nu that estimates the path parameter at x (nu = eta exactly
/// when x is on the path).
struct ProjectedState {
  FVec direction;
  BigFloat decrement;
  BigFloat eta_estimate;
};
ProjectedState projected_newton_state(const LogBarrier& barrier, const FVec& c, const FVec& x);

/// Predictor-corrector path following from the (strictly feasible,
/// approximately centered) start x0: recenter at eta_start, then alternate
/// supremal-step predictors scaled by sigma with projected-Newton correctors
/// until c·x <= value_target. Every Newton iterate is recorded.
Trajectory predictor_corrector(const LogBarrier& barrier, const FVec& c,
                               const BigFloat& eta_start, const BigFloat& value_target,
                               const IPMConfig& cfg, const FVec& x0);

/// ||n_eta(x)||_x <= rho.
bool in_step_neighborhood(const LogBarrier& barrier, const FVec& c, const FVec& x,
                          const BigFloat& eta, const Rat& rho);

/// f_eta(x) - f_eta(C(eta)) <= M, with C(eta) from a tightened Newton solve.
bool in_N_M(const LogBarrier& barrier, const FVec& c, const FVec& x, const BigFloat& eta,
            const BigFloat& M, const IPMConfig& cfg);

/// mlo·C(eta) <= x <= mhi·C(eta) componentwise.
bool in_mult_neighborhood(const LogBarrier& barrier, const FVec& c, const FVec& x,
                          const BigFloat& eta, const BigFloat& mlo, const BigFloat& mhi,
                          const IPMConfig& cfg);

/// The two roots of z - log(z) - 1 = n·M (lower in (0,1), upper in (1,inf)),
/// by bisection to 60 fractional bits.
std::pair<BigFloat, BigFloat> phi_band(const BigFloat& M, int n);

/// H(x) >= (1/n)·Diag(1/x^2) up to a relative eigenvalue slack of
/// 2^-(precision_bits/2)·||H||.
bool hessian_lower_bound_check(const LogBarrier& barrier, const FVec& x,
                               unsigned precision_bits);

enum class CheckOutcome { Holds, Fails, PreconditionUnmet };

/// H(x) <= 4nK^2·Diag(1/x^2) under the displacement conditions
/// x + (K+1)x_i e_i and x - x_i/2 e_i feasible for every i.
CheckOutcome hessian_upper_bound_check(const LogBarrier& barrier, const FVec& x,
                                       unsigned precision_bits);

/// f(y) - f(x) >= <g(x) + 1/(nx), y-x> + (1/n)·sum_i(log x_i - log y_i),
/// within relative tolerance.
bool log_bound_check(const LogBarrier& barrier, const FVec& x, const FVec& y,
                     unsigned precision_bits);

struct DualityGapReport {
  bool upper_ok = false;      // eta·obj <= theta·(1+tol) at every centered iterate
  int centered_count = 0;
  bool has_lower_band = false;
  BigFloat lower_band;        // min of eta·obj over centered iterates with eta >= eta_min
};

/// Checks eta·(c·x) <= theta·(1+tol) at the centered iterates and reports the
/// empirical lower band over those with eta >= eta_min.
DualityGapReport duality_gap_check(const Trajectory& trajectory, int theta,
                                   const BigFloat& eta_min, const Rat& tol = Rat(1, 8));

/// eta such that c·C(eta) matches `value` to ~2^-20 relative, solved by a
/// secant iteration in log space with a bisection fallback. `x_warm` seeds the
/// center solves; on return it holds C(eta).
BigFloat value_matched_eta(const LogBarrier& barrier, const FVec& c, const BigFloat& value,
                           const BigFloat& eta_hint, const IPMConfig& cfg, FVec& x_warm);

}  // namespace tropipm
