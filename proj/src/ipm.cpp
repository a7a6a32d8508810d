#include "tropipm/ipm.hpp"

#include <algorithm>

namespace tropipm {

LogBarrier::LogBarrier(FMat A, FVec b) : A_(std::move(A)), b_(std::move(b)) {
  m_ = static_cast<int>(A_.size());
  n_ = m_ > 0 ? static_cast<int>(A_[0].size()) : 0;
  if (m_ == 0 || n_ == 0) throw std::invalid_argument("LogBarrier: empty system");
  if (b_.size() != A_.size()) throw std::invalid_argument("LogBarrier: row mismatch");
}

LogBarrier LogBarrier::from_rational(const std::vector<std::vector<Rat>>& A,
                                     const std::vector<Rat>& b) {
  FMat Af;
  FVec bf;
  for (const auto& row : A) {
    FVec r;
    r.reserve(row.size());
    for (const Rat& v : row) r.push_back(to_bigfloat(v));
    Af.push_back(std::move(r));
  }
  for (const Rat& v : b) bf.push_back(to_bigfloat(v));
  return LogBarrier(std::move(Af), std::move(bf));
}

LogBarrier LogBarrier::from_rational_polytope(const RationalPolytope& p) {
  return from_rational(p.A, p.b);
}

LogBarrier LogBarrier::from_monomial_lp(const MonomialLP& lp, const BigFloat& t) {
  if (t <= 1) throw std::domain_error("from_monomial_lp: t must exceed 1");
  auto entry = [&](const Monomial& m) {
    if (m.coeff == 0) return BigFloat(0);
    return to_bigfloat(m.coeff) * pow_rat(t, m.exponent);
  };
  FMat A;
  FVec b;
  for (const MonomialRow& row : lp.rows) {
    FVec r;
    r.reserve(row.coeffs.size());
    for (const Monomial& m : row.coeffs) r.push_back(entry(m));
    A.push_back(std::move(r));
    b.push_back(entry(row.rhs));
  }
  return LogBarrier(std::move(A), std::move(b));
}

FVec LogBarrier::slack(const FVec& x) const {
  if (static_cast<int>(x.size()) != n_) throw DimensionError("LogBarrier: dimension mismatch");
  FVec s(static_cast<size_t>(m_));
  for (int i = 0; i < m_; ++i) s[static_cast<size_t>(i)] = b_[static_cast<size_t>(i)] - dot(A_[static_cast<size_t>(i)], x);
  return s;
}

bool LogBarrier::strictly_feasible(const FVec& x) const {
  FVec s = slack(x);
  return std::all_of(s.begin(), s.end(), [](const BigFloat& v) { return v > 0; });
}

BigFloat LogBarrier::value(const FVec& x) const {
  FVec s = slack(x);
  BigFloat acc(0);
  for (const BigFloat& v : s) {
    if (v <= 0) throw NotFeasibleError("LogBarrier::value: point not strictly feasible");
    acc -= log(v);
  }
  return acc;
}

FVec LogBarrier::gradient(const FVec& x) const {
  FVec s = slack(x);
  FVec g(static_cast<size_t>(n_), BigFloat(0));
  for (int i = 0; i < m_; ++i) {
    if (s[static_cast<size_t>(i)] <= 0)
      throw NotFeasibleError("LogBarrier::gradient: point not strictly feasible");
    const BigFloat w = BigFloat(1) / s[static_cast<size_t>(i)];
    for (int j = 0; j < n_; ++j) g[static_cast<size_t>(j)] += A_[static_cast<size_t>(i)][static_cast<size_t>(j)] * w;
  }
  return g;
}

FMat LogBarrier::hessian(const FVec& x) const {
  FVec s = slack(x);
  FMat H(static_cast<size_t>(n_), FVec(static_cast<size_t>(n_), BigFloat(0)));
  for (int i = 0; i < m_; ++i) {
    if (s[static_cast<size_t>(i)] <= 0)
      throw NotFeasibleError("LogBarrier::hessian: point not strictly feasible");
    const BigFloat w = BigFloat(1) / (s[static_cast<size_t>(i)] * s[static_cast<size_t>(i)]);
    for (int j = 0; j < n_; ++j) {
      for (int k = j; k < n_; ++k) {
        H[static_cast<size_t>(j)][static_cast<size_t>(k)] +=
            A_[static_cast<size_t>(i)][static_cast<size_t>(j)] * A_[static_cast<size_t>(i)][static_cast<size_t>(k)] * w;
      }
    }
  }
  for (int j = 0; j < n_; ++j)
    for (int k = 0; k < j; ++k) H[static_cast<size_t>(j)][static_cast<size_t>(k)] = H[static_cast<size_t>(k)][static_cast<size_t>(j)];
  return H;
}

namespace {

// Solves H d = rhs and enforces the residual bound tied to the working
// precision; non-positive-definite Hessians are also treated as precision
// loss since the exact Hessian is positive definite on the domain.
FVec solve_newton_system(const FMat& H, const FVec& rhs) {
  BigFloat residual;
  auto d = solve_spd(H, rhs, &residual);
  if (!d) throw PrecisionLossError("Newton system: Hessian lost positive definiteness");
  BigFloat scale(0);
  for (const BigFloat& v : rhs) scale = std::max(scale, abs(v));
  const BigFloat tol =
      ldexp(BigFloat(1) + scale, -static_cast<int>(current_precision_bits() / 2));
  if (residual > tol) throw PrecisionLossError("Newton system: residual exceeds tolerance");
  return *d;
}

BigFloat newton_norm(const FMat& H, const FVec& d) {
  BigFloat q = dot(d, mat_vec(H, d));
  return q <= 0 ? BigFloat(0) : BigFloat(sqrt(q));
}

FVec add_scaled(const FVec& x, const BigFloat& step, const FVec& d) {
  FVec out = x;
  for (size_t i = 0; i < out.size(); ++i) out[i] += step * d[i];
  return out;
}

// Damped step with a feasibility backstop for rounding at the boundary.
FVec damped_step(const LogBarrier& barrier, const FVec& x, const FVec& d, const BigFloat& delta) {
  BigFloat step = delta > Rat(1, 4) ? BigFloat(1) / (1 + delta) : BigFloat(1);
  for (int tries = 0; tries < 64; ++tries) {
    FVec cand = add_scaled(x, step, d);
    if (barrier.strictly_feasible(cand)) return cand;
    step /= 2;
  }
  throw PrecisionLossError("damped_step: could not keep iterate strictly feasible");
}

}  // namespace

FVec newton_center(const LogBarrier& barrier, const FVec& c, const BigFloat& eta,
                   const FVec& x0, const IPMConfig& cfg) {
  if (!barrier.strictly_feasible(x0))
    throw NotFeasibleError("newton_center: start point not strictly feasible");
  FVec x = x0;
  const BigFloat tol = to_bigfloat(cfg.newton_tol);
  for (long it = 0; it < cfg.max_newton_iters; ++it) {
    FVec g = barrier.gradient(x);
    for (size_t j = 0; j < g.size(); ++j) g[j] = -(g[j] + eta * c[j]);
    FMat H = barrier.hessian(x);
    FVec d = solve_newton_system(H, g);
    BigFloat delta = newton_norm(H, d);
    if (delta <= tol) return x;
    x = damped_step(barrier, x, d, delta);
  }
  throw MaxNewtonItersError("newton_center: no convergence within max_newton_iters");
}

ProjectedState projected_newton_state(const LogBarrier& barrier, const FVec& c, const FVec& x) {
  FMat H = barrier.hessian(x);
  FVec g = barrier.gradient(x);
  FVec hg = solve_newton_system(H, g);
  FVec hc = solve_newton_system(H, c);
  const BigFloat chc = dot(c, hc);
  if (chc <= 0) throw PrecisionLossError("projected_newton_state: c H^-1 c not positive");
  const BigFloat nu = -dot(c, hg) / chc;
  ProjectedState st;
  st.eta_estimate = nu;
  st.direction.assign(x.size(), BigFloat(0));
  for (size_t j = 0; j < x.size(); ++j) st.direction[j] = -(hg[j] + nu * hc[j]);
  st.decrement = newton_norm(H, st.direction);
  return st;
}

namespace {

void append_iterate(Trajectory& traj, const LogBarrier& barrier, const FVec& c, const FVec& x,
                    IterateKind kind) {
  ProjectedState st = projected_newton_state(barrier, c, x);
  TrajectoryPoint pt;
  pt.x = x;
  pt.eta = st.eta_estimate;
  pt.kind = kind;
  pt.objective = dot(c, x);
  traj.iterates.push_back(std::move(pt));
}

// Projected damped Newton within the level set of c·x, until the projected
// norm reaches cfg.corrector_tol. Marks the point where the criterion holds.
FVec corrector_phase(Trajectory& traj, const LogBarrier& barrier, const FVec& c, FVec x,
                     const IPMConfig& cfg) {
  const BigFloat tol = to_bigfloat(cfg.corrector_tol);
  for (long it = 0; it < cfg.max_newton_iters; ++it) {
    ProjectedState st = projected_newton_state(barrier, c, x);
    if (st.decrement <= tol) {
      traj.iterates.back().centered = true;
      traj.iterates.back().eta = st.eta_estimate;
      return x;
    }
    x = damped_step(barrier, x, st.direction, st.decrement);
    append_iterate(traj, barrier, c, x, IterateKind::Corrector);
  }
  throw MaxNewtonItersError("corrector_phase: no convergence within max_newton_iters");
}

}  // namespace

Trajectory predictor_corrector(const LogBarrier& barrier, const FVec& c,
                               const BigFloat& eta_start, const BigFloat& value_target,
                               const IPMConfig& cfg, const FVec& x0) {
  if (cfg.sigma <= 0 || cfg.sigma >= 1)
    throw std::invalid_argument("predictor_corrector: sigma must lie in (0,1)");
  if (cfg.rho > Rat(1, 4) || cfg.rho <= 0)
    throw std::invalid_argument("predictor_corrector: rho must lie in (0, 1/4]");
  if (!barrier.strictly_feasible(x0))
    throw NotFeasibleError("predictor_corrector: start point not strictly feasible");

  Trajectory traj;
  FVec x = newton_center(barrier, c, eta_start, x0, cfg);
  append_iterate(traj, barrier, c, x, IterateKind::Corrector);
  x = corrector_phase(traj, barrier, c, std::move(x), cfg);

  const BigFloat sigma = to_bigfloat(cfg.sigma);
  for (long outer = 0; outer < cfg.max_outer_iters; ++outer) {
    if (dot(c, x) <= value_target) return traj;

    // Predictor: follow -H^-1 c for the fraction sigma of the supremal step.
    FMat H = barrier.hessian(x);
    FVec cx = solve_newton_system(H, c);
    FVec rate = mat_vec(barrier.A(), cx);
    FVec s = barrier.slack(x);
    bool blocked = false;
    BigFloat sbar(0);
    for (size_t i = 0; i < rate.size(); ++i) {
      if (rate[i] >= 0) continue;  // slack grows along the ray
      BigFloat ratio = s[i] / -rate[i];
      if (!blocked || ratio < sbar) sbar = ratio;
      blocked = true;
    }
    if (!blocked) throw StallDetectedError("predictor: objective ray is unbounded");
    FVec next = add_scaled(x, -sigma * sbar, cx);
    if (next == x) throw StallDetectedError("predictor: supremal step underflowed");
    if (!barrier.strictly_feasible(next))
      throw PrecisionLossError("predictor: endpoint left the domain");
    x = std::move(next);
    append_iterate(traj, barrier, c, x, IterateKind::Predictor);
    ++traj.predictor_steps;

    x = corrector_phase(traj, barrier, c, std::move(x), cfg);
  }
  throw MaxNewtonItersError("predictor_corrector: outer iteration cap reached");
}

bool in_step_neighborhood(const LogBarrier& barrier, const FVec& c, const FVec& x,
                          const BigFloat& eta, const Rat& rho) {
  if (!barrier.strictly_feasible(x))
    throw NotFeasibleError("in_step_neighborhood: point not strictly feasible");
  FVec g = barrier.gradient(x);
  for (size_t j = 0; j < g.size(); ++j) g[j] = -(g[j] + eta * c[j]);
  FMat H = barrier.hessian(x);
  FVec d = solve_newton_system(H, g);
  return newton_norm(H, d) <= to_bigfloat(rho);
}

namespace {

IPMConfig tightened(const IPMConfig& cfg) {
  IPMConfig tight = cfg;
  // Quadratic convergence makes the extra digits nearly free, and reference
  // centers need to be well below every tolerance they are compared under.
  tight.newton_tol = Rat(1, 1L << 40);
  return tight;
}

}  // namespace

bool in_N_M(const LogBarrier& barrier, const FVec& c, const FVec& x, const BigFloat& eta,
            const BigFloat& M, const IPMConfig& cfg) {
  if (!barrier.strictly_feasible(x)) throw NotFeasibleError("in_N_M: point not strictly feasible");
  FVec center = newton_center(barrier, c, eta, x, tightened(cfg));
  const BigFloat fx = eta * dot(c, x) + barrier.value(x);
  const BigFloat fc = eta * dot(c, center) + barrier.value(center);
  return fx - fc <= M;
}

bool in_mult_neighborhood(const LogBarrier& barrier, const FVec& c, const FVec& x,
                          const BigFloat& eta, const BigFloat& mlo, const BigFloat& mhi,
                          const IPMConfig& cfg) {
  if (!barrier.strictly_feasible(x))
    throw NotFeasibleError("in_mult_neighborhood: point not strictly feasible");
  FVec center = newton_center(barrier, c, eta, x, tightened(cfg));
  for (size_t i = 0; i < x.size(); ++i) {
    if (x[i] < mlo * center[i] || x[i] > mhi * center[i]) return false;
  }
  return true;
}

std::pair<BigFloat, BigFloat> phi_band(const BigFloat& M, int n) {
  if (M <= 0 || n < 1) throw std::domain_error("phi_band: need M > 0 and n >= 1");
  auto phi = [](const BigFloat& z) { return z - log(z) - 1; };
  const BigFloat target = M * n;
  const BigFloat width = ldexp(BigFloat(1), -60);

  BigFloat lo_a = BigFloat(1) / 2;
  while (phi(lo_a) <= target) lo_a /= 2;
  BigFloat lo_b(1);
  while (lo_b - lo_a > width * lo_b) {
    BigFloat mid = (lo_a + lo_b) / 2;
    (phi(mid) > target ? lo_a : lo_b) = mid;
  }

  BigFloat hi_b(2);
  while (phi(hi_b) <= target) hi_b *= 2;
  BigFloat hi_a(1);
  while (hi_b - hi_a > width * hi_b) {
    BigFloat mid = (hi_a + hi_b) / 2;
    (phi(mid) > target ? hi_b : hi_a) = mid;
  }
  return {(lo_a + lo_b) / 2, (hi_a + hi_b) / 2};
}

bool hessian_lower_bound_check(const LogBarrier& barrier, const FVec& x,
                               unsigned precision_bits) {
  if (!barrier.strictly_feasible(x))
    throw NotFeasibleError("hessian_lower_bound_check: point not strictly feasible");
  const int n = barrier.dim();
  FMat B = barrier.hessian(x);
  const BigFloat norm = inf_norm(B);
  for (int i = 0; i < n; ++i) {
    if (x[static_cast<size_t>(i)] <= 0)
      throw NotFeasibleError("hessian_lower_bound_check: domain must lie in the positive orthant");
    B[static_cast<size_t>(i)][static_cast<size_t>(i)] -=
        BigFloat(1) / (BigFloat(n) * x[static_cast<size_t>(i)] * x[static_cast<size_t>(i)]);
  }
  const BigFloat slack = -ldexp(norm, -static_cast<int>(precision_bits / 2));
  return min_eigenvalue_sym(B) >= slack;
}

CheckOutcome hessian_upper_bound_check(const LogBarrier& barrier, const FVec& x,
                                       unsigned precision_bits) {
  if (!barrier.strictly_feasible(x))
    throw NotFeasibleError("hessian_upper_bound_check: point not strictly feasible");
  const int n = barrier.dim();
  const BigFloat K(barrier.k_const());
  for (int i = 0; i < n; ++i) {
    FVec up = x, down = x;
    up[static_cast<size_t>(i)] += (K + 1) * x[static_cast<size_t>(i)];
    down[static_cast<size_t>(i)] -= x[static_cast<size_t>(i)] / 2;
    if (!barrier.strictly_feasible(up) || !barrier.strictly_feasible(down))
      return CheckOutcome::PreconditionUnmet;
  }
  FMat H = barrier.hessian(x);
  const BigFloat norm = inf_norm(H);
  FMat B(static_cast<size_t>(n), FVec(static_cast<size_t>(n), BigFloat(0)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) B[static_cast<size_t>(i)][static_cast<size_t>(j)] = -H[static_cast<size_t>(i)][static_cast<size_t>(j)];
    B[static_cast<size_t>(i)][static_cast<size_t>(i)] +=
        BigFloat(4 * n) * K * K / (x[static_cast<size_t>(i)] * x[static_cast<size_t>(i)]);
  }
  const BigFloat slack = -ldexp(norm, -static_cast<int>(precision_bits / 2));
  return min_eigenvalue_sym(B) >= slack ? CheckOutcome::Holds : CheckOutcome::Fails;
}

bool log_bound_check(const LogBarrier& barrier, const FVec& x, const FVec& y,
                     unsigned precision_bits) {
  const int n = barrier.dim();
  for (int i = 0; i < n; ++i)
    if (x[static_cast<size_t>(i)] <= 0 || y[static_cast<size_t>(i)] <= 0)
      throw NotFeasibleError("log_bound_check: points must lie in the positive orthant");
  const BigFloat fx = barrier.value(x);
  const BigFloat fy = barrier.value(y);
  FVec g = barrier.gradient(x);
  BigFloat rhs(0);
  for (int i = 0; i < n; ++i) {
    const size_t ii = static_cast<size_t>(i);
    rhs += (g[ii] + BigFloat(1) / (BigFloat(n) * x[ii])) * (y[ii] - x[ii]);
    rhs += (log(x[ii]) - log(y[ii])) / n;
  }
  const BigFloat scale = 1 + abs(fx) + abs(fy);
  return fy - fx >= rhs - ldexp(scale, -static_cast<int>(precision_bits / 2));
}

DualityGapReport duality_gap_check(const Trajectory& trajectory, int theta,
                                   const BigFloat& eta_min, const Rat& tol) {
  DualityGapReport report;
  report.upper_ok = true;
  const BigFloat cap = BigFloat(theta) * (1 + to_bigfloat(tol));
  for (const TrajectoryPoint& pt : trajectory.iterates) {
    if (!pt.centered) continue;
    ++report.centered_count;
    const BigFloat product = pt.eta * pt.objective;
    if (product > cap) report.upper_ok = false;
    if (pt.eta >= eta_min) {
      if (!report.has_lower_band || product < report.lower_band) report.lower_band = product;
      report.has_lower_band = true;
    }
  }
  return report;
}

BigFloat value_matched_eta(const LogBarrier& barrier, const FVec& c, const BigFloat& value,
                           const BigFloat& eta_hint, const IPMConfig& cfg, FVec& x_warm) {
  if (value <= 0) throw std::domain_error("value_matched_eta: value must be positive");
  const IPMConfig tight = tightened(cfg);
  auto value_at = [&](const BigFloat& eta) {
    x_warm = newton_center(barrier, c, eta, x_warm, tight);
    return dot(c, x_warm);
  };

  // Bracket the target: c·C(eta) decreases in eta.
  BigFloat eta_lo = eta_hint, eta_hi = eta_hint;
  BigFloat v_lo = value_at(eta_lo), v_hi = v_lo;
  for (int tries = 0; v_lo <= value && tries < 200; ++tries) {
    eta_lo /= 4;
    v_lo = value_at(eta_lo);
  }
  for (int tries = 0; v_hi >= value && tries < 200; ++tries) {
    eta_hi *= 4;
    v_hi = value_at(eta_hi);
  }
  if (v_lo <= value || v_hi >= value)
    throw PrecisionLossError("value_matched_eta: could not bracket the target value");

  const BigFloat rel = ldexp(BigFloat(1), -20);
  BigFloat eta = eta_hint;
  for (int it = 0; it < 200; ++it) {
    if (eta <= eta_lo || eta >= eta_hi) eta = sqrt(eta_lo * eta_hi);
    BigFloat v = value_at(eta);
    if (abs(log(v / value)) <= rel) return eta;
    if (v > value) {
      eta_lo = eta;
      v_lo = v;
    } else {
      eta_hi = eta;
      v_hi = v;
    }
    // Secant step in log-log coordinates; the curve is nearly hyperbolic.
    const BigFloat la = log(eta_lo), lb = log(eta_hi);
    const BigFloat fa = log(v_lo / value), fb = log(v_hi / value);
    eta = exp(la - fa * (lb - la) / (fb - fa));
  }
  throw MaxNewtonItersError("value_matched_eta: no convergence");
}

}  // namespace tropipm
