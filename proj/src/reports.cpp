#include "tropipm/reports.hpp"

#include <algorithm>
#include <cmath>

namespace tropipm {

unsigned required_precision_bits(int n, const Rat& t, unsigned requested) {
  const double td = t.convert_to<double>();
  const double un = 3.0 * std::ldexp(1.0, n - 2) - 1.0;
  const double needed = 8.0 * un * std::log2(td);
  unsigned bits = requested;
  if (needed >= static_cast<double>(bits)) {
    bits = static_cast<unsigned>(((static_cast<unsigned>(needed) / 64) + 1) * 64);
  }
  return bits;
}

FVec cex_start_point(int n, const BigFloat& t) {
  FVec x(static_cast<size_t>(n));
  Rat e(1, 8);
  for (int i = n - 1; i >= 0; --i) {
    x[static_cast<size_t>(i)] = pow_rat(t, -e);
    e *= 2;
  }
  return x;
}

FVec phase_one_start(const LogBarrier& barrier, FVec guess, const IPMConfig& cfg) {
  if (barrier.strictly_feasible(guess)) return guess;
  FVec s = barrier.slack(guess);
  BigFloat worst(0);
  for (const BigFloat& v : s) worst = std::min(worst, v);
  BigFloat mu = 1 - 2 * worst;
  for (int round = 0; round < 256; ++round) {
    // Center the shifted barrier -sum log(s_i + mu) a few damped steps.
    LogBarrier shifted = [&] {
      FVec b = barrier.b();
      for (BigFloat& v : b) v += mu;
      return LogBarrier(barrier.A(), std::move(b));
    }();
    IPMConfig relaxed = cfg;
    relaxed.newton_tol = Rat(1, 4);
    guess = newton_center(shifted, FVec(guess.size(), BigFloat(0)), BigFloat(0), guess, relaxed);
    if (barrier.strictly_feasible(guess)) return guess;
    mu /= 4;
  }
  throw NotFeasibleError("phase_one_start: no strictly feasible point found");
}

ConvergenceReport run_convergence(int n, const std::vector<Rat>& t_list,
                                  const std::vector<Rat>& lambda_grid, unsigned precision_bits) {
  ConvergenceReport report;
  report.n = n;
  report.t_list = t_list;
  report.lambda_grid = lambda_grid;

  unsigned bits = precision_bits;
  for (const Rat& t : t_list) bits = std::max(bits, required_precision_bits(n, t, precision_bits));
  report.precision_bits = bits;
  set_precision_bits(bits);

  const MonomialLP lp = build_cex(n);
  IPMConfig cfg;
  cfg.precision_bits = bits;
  cfg.newton_tol = Rat(1, 1024);

  for (const Rat& t_rat : t_list) {
    if (t_rat <= 1) throw std::domain_error("run_convergence: every t must exceed 1");
    const BigFloat t = to_bigfloat(t_rat);
    const LogBarrier barrier = LogBarrier::from_monomial_lp(lp, t);
    FVec c(static_cast<size_t>(n), BigFloat(0));
    c[static_cast<size_t>(n - 1)] = 1;

    std::vector<ConvergenceCell> row;
    FVec warm = cex_start_point(n, t);
    BigFloat worst(0);
    bool any = false;
    for (const Rat& lambda : lambda_grid) {
      ConvergenceCell cell;
      cell.lambda = lambda;
      try {
        const BigFloat eta = pow_rat(t, lambda);
        warm = newton_center(barrier, c, eta, warm, cfg);
        const TropVector target = cex_tropical_path_point(n, lambda);
        BigFloat dev(0);
        for (int i = 0; i < n; ++i) {
          BigFloat gap = abs(log_base(t, warm[static_cast<size_t>(i)]) -
                             to_bigfloat(target[i].value()));
          dev = std::max(dev, gap);
        }
        cell.solved = true;
        cell.deviation = dev;
        worst = std::max(worst, dev);
        any = true;
      } catch (const std::exception& e) {
        cell.error = e.what();
      }
      row.push_back(std::move(cell));
    }
    report.cells.push_back(std::move(row));
    report.max_deviation.push_back(any ? worst : BigFloat(0));
    report.gamma_hat.push_back(worst * log(t));

    // Instance deviation: vertices of the exact polytope against the
    // tropical system, available when sqrt(t) is rational.
    std::optional<BigFloat> delta;
    const Rat num = numerator(t_rat), den = denominator(t_rat);
    BigInt sn = sqrt(numerator(t_rat)), sd = sqrt(denominator(t_rat));
    if (sn * sn == num && sd * sd == den && n <= 4) {
      const Rat s(sn, sd);
      const RationalPolytope poly = instantiate(lp, s);
      const TropPolyhedron tk = build_tcex(n);
      const FaceLatticeReport lattice = enumerate_vertices(poly);
      BigFloat worst_v(0);
      for (const auto& vertex : lattice.vertices) {
        std::vector<TropValue> lg;
        for (const Rat& coord : vertex) {
          lg.push_back(coord == 0 ? TropValue::neg_inf()
                                  : TropValue(to_rational(log_base(t, to_bigfloat(coord)))));
        }
        auto d = d_inf_to_polyhedron(tk, TropVector(std::move(lg)), Rat(1, 4096), Rat(64));
        if (d) worst_v = std::max(worst_v, to_bigfloat(*d));
      }
      delta = worst_v * log(t);
    }
    report.delta_hat.push_back(std::move(delta));
  }

  report.monotone = true;
  for (size_t k = 1; k < report.max_deviation.size(); ++k)
    if (!(report.max_deviation[k] < report.max_deviation[k - 1])) report.monotone = false;
  if (!report.gamma_hat.empty()) {
    BigFloat lo = report.gamma_hat.front(), hi = lo;
    for (const BigFloat& g : report.gamma_hat) {
      lo = std::min(lo, g);
      hi = std::max(hi, g);
    }
    report.gamma_ratio_ok = lo > 0 && hi <= 2 * lo;
  }
  return report;
}

IterationRun run_ipm_experiment(int n, const Rat& t_rat, const Rat& sigma,
                                unsigned precision_bits, const Rat& target_exp,
                                const Rat& tube_radius) {
  IterationRun run;
  IterationReport& rep = run.report;
  rep.n = n;
  rep.t = t_rat;
  rep.sigma = sigma;
  rep.target_exp = target_exp;
  rep.tube_radius = tube_radius;

  const unsigned bits = required_precision_bits(n, t_rat, precision_bits);
  rep.precision_bits = bits;
  set_precision_bits(bits);

  IPMConfig cfg;
  cfg.precision_bits = bits;
  cfg.sigma = sigma;

  const MonomialLP lp = build_cex(n);
  const BigFloat t = to_bigfloat(t_rat);
  const LogBarrier barrier = LogBarrier::from_monomial_lp(lp, t);
  FVec c(static_cast<size_t>(n), BigFloat(0));
  c[static_cast<size_t>(n - 1)] = 1;

  FVec x0 = phase_one_start(barrier, cex_start_point(n, t), cfg);
  rep.v_target = pow_rat(t, target_exp);
  run.trajectory = predictor_corrector(barrier, c, BigFloat(1), rep.v_target, cfg, x0);
  Trajectory& traj = run.trajectory;
  rep.predictor_steps = traj.predictor_steps;
  rep.total_segments = traj.segment_count();
  rep.v_start = traj.iterates.front().objective;

  // Audit every iterate against the functional and multiplicative
  // neighborhoods at its value-matched path parameter.
  rep.m_pc = BigFloat(barrier.theta()) * log(BigFloat(1) / (1 - to_bigfloat(sigma))) +
             BigFloat(1) / 154;
  auto [mlo, mhi] = phi_band(rep.m_pc, n);
  rep.band_lo = mlo;
  rep.band_hi = mhi;
  FVec warm = traj.iterates.front().x;
  BigFloat eta_hint(1);
  for (TrajectoryPoint& pt : traj.iterates) {
    bool ok = true;
    try {
      const BigFloat eta2 = value_matched_eta(barrier, c, pt.objective, eta_hint, cfg, warm);
      eta_hint = eta2;
      const BigFloat f_pt = eta2 * pt.objective + barrier.value(pt.x);
      const BigFloat f_cn = eta2 * dot(c, warm) + barrier.value(warm);
      if (f_pt - f_cn > rep.m_pc) ok = false;
      for (size_t i = 0; ok && i < pt.x.size(); ++i) {
        if (pt.x[i] < mlo * warm[i] || pt.x[i] > mhi * warm[i]) ok = false;
      }
    } catch (const std::exception&) {
      ok = false;
    }
    if (!ok) {
      pt.flagged = true;
      ++rep.audit_failures;
    }
  }
  rep.certified = rep.audit_failures == 0;

  // Reference segment count over the value range actually covered.
  const BigFloat lam_start = -log_base(t, rep.v_start);
  Rat lam_lo(0);
  if (lam_start >= 1) {
    lam_lo = to_rational(lam_start);
    // Round up to the 1/64 grid: shrinking the interval keeps the
    // reference a valid lower bound for the run.
    lam_lo = Rat(static_cast<long>((lam_lo * 64).convert_to<long>()) + 1, 64);
  }
  const Rat lam_hi = -target_exp;
  rep.gamma_ref = gamma_cex(n, lam_lo, lam_hi);
  rep.count_ok = rep.total_segments >= static_cast<size_t>(rep.gamma_ref);

  // Tube diagnostic on the log image of the trajectory.
  Tube tube{cex_path_breakpoints(n, lam_lo, lam_hi), tube_radius};
  std::vector<TropVector> curve;
  for (const TrajectoryPoint& pt : traj.iterates) {
    TropVector q(n);
    for (int i = 0; i < n; ++i)
      q[i] = TropValue(to_rational(log_base(t, pt.x[static_cast<size_t>(i)])));
    curve.push_back(std::move(q));
  }
  rep.tube_contained = tube_contains(tube, curve);

  rep.duality = duality_gap_check(traj, barrier.theta(), BigFloat(1));
  return run;
}

FaceRunResult run_faces(int n, const Rat& s) {
  FaceRunResult out;
  const RationalPolytope poly = instantiate(build_cex(n), s);
  out.lattice = enumerate_vertices(poly);
  out.disjoint_ok = check_disjoint_faces(poly);
  out.pairing = check_facet_pairing(poly);
  out.all_pairs_disjoint = std::all_of(out.pairing.begin(), out.pairing.end(),
                                       [](const FacetPairCheck& c) { return c.disjoint; });
  if (n == 3) {
    const std::vector<Rat> target{Rat(451, 1000), Rat(451, 1000), Rat(98, 1000)};
    bool first = true;
    for (const auto& vertex : out.lattice.vertices) {
      Rat dist(0);
      for (int i = 0; i < 3; ++i) {
        Rat gap = vertex[static_cast<size_t>(i)] - target[static_cast<size_t>(i)];
        if (gap < 0) gap = -gap;
        dist = std::max(dist, gap);
      }
      if (first || dist < out.fig_vertex_distance) out.fig_vertex_distance = dist;
      first = false;
    }
    out.fig_vertex_checked = !first;
  }
  return out;
}

}  // namespace tropipm
