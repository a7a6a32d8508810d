// Acceptance suite: one test case per criterion, each printing a PASS/FAIL
// line with its runtime. Run via ctest or directly for the summary.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ipm_testutil.hpp"
#include "testutil.hpp"
#include "tropipm/io.hpp"
#include "tropipm/svg.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <random>

using namespace tropipm;
using namespace tropipm::testutil;

namespace {

struct Stopwatch {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
};

void report(int criterion, bool pass, double seconds, const char* what) {
  std::printf("[%s] criterion %2d: %s (%.2f s)\n", pass ? "PASS" : "FAIL", criterion, what,
              seconds);
  std::fflush(stdout);
}

std::string run_cli(const std::string& args) {
  const std::string cmd = std::string(TROPIPM_CLI_PATH) + " " + args + " > /dev/null 2>&1";
  const int rc = std::system(cmd.c_str());
  REQUIRE(rc == 0);
  return cmd;
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / name;
}

FVec unit_cost_f(int n) {
  FVec c(static_cast<size_t>(n), BigFloat(0));
  c[static_cast<size_t>(n - 1)] = 1;
  return c;
}

std::string expected_table_csv(int n, const std::vector<std::vector<long>>& table) {
  std::string out = "lambda";
  for (int i = 1; i <= n; ++i) out += ",x" + std::to_string(i);
  out += "\n";
  for (size_t lam = 0; lam < table.size(); ++lam) {
    out += std::to_string(lam);
    for (long v : table[lam]) out += "," + std::to_string(v);
    out += "\n";
  }
  return out;
}

}  // namespace

TEST_CASE("criterion 1: value-table exactness through the CLI") {
  Stopwatch watch;
  bool pass = true;
  const struct {
    int n;
    long lambda_max;
    std::vector<std::vector<long>> table;
  } jobs[] = {{2, 4, table_n2()}, {3, 10, table_n3()}, {4, 22, table_n4()}};
  for (const auto& job : jobs) {
    const auto out = temp_file("accept_troppath_n" + std::to_string(job.n) + ".csv");
    run_cli("troppath --n " + std::to_string(job.n) + " --lambda-max " +
            std::to_string(job.lambda_max) + " --step 1 --out " + out.string());
    const std::string got = read_file(out.string());
    const std::string want = expected_table_csv(job.n, job.table);
    if (got != want) pass = false;
    CHECK(got == want);
  }
  const double sec = watch.seconds();
  report(1, pass && sec < 1.0, sec, "troppath matches all 5 + 11 + 23 table cells exactly");
  CHECK(sec < 1.0);
  CHECK(pass);
}

TEST_CASE("criterion 2: closed form equals the greatest-point solver") {
  Stopwatch watch;
  bool pass = true;
  for (int n = 2; n <= 4; ++n) {
    const TropPolyhedron K = build_tcex(n);
    TropVector cost = TropVector::bottom(n);
    cost[n - 1] = TropValue(Rat(0));
    for (Rat lambda(0); lambda <= 2 * cex_u(n); lambda += Rat(1, 2)) {
      const TropSolveResult got = generic_tropical_path_point(K, cost, lambda);
      REQUIRE(got.ok());
      if (!(got.point == cex_tropical_path_point(n, lambda))) pass = false;
      CHECK(got.point == cex_tropical_path_point(n, lambda));
    }
  }
  const double sec = watch.seconds();
  report(2, pass && sec < 10.0, sec,
         "closed form = barycenter solver on the half-integer grid, n = 2..4");
  CHECK(sec < 10.0);
  CHECK(pass);
}

TEST_CASE("criterion 3: segment-count closed forms for n = 1..8") {
  Stopwatch watch;
  bool pass = true;
  for (int n = 1; n <= 8; ++n) {
    const Rat un = cex_u(n);
    pass = pass && gamma_cex(n, Rat(0), un - 1) == (1L << (n - 1)) - 1;
    pass = pass && gamma_cex(n, Rat(0), 2 * un - 1) == (1L << n) - 2;
    pass = pass && gamma_cex(n, Rat(0), 2 * un) == (1L << n) - 1;
    CHECK(gamma_cex(n, Rat(0), un - 1) == (1L << (n - 1)) - 1);
    CHECK(gamma_cex(n, Rat(0), 2 * un - 1) == (1L << n) - 2);
    CHECK(gamma_cex(n, Rat(0), 2 * un) == (1L << n) - 1);
  }
  const double sec = watch.seconds();
  report(3, pass && sec < 1.0, sec, "gamma(0..u_n-1 / 2u_n-1 / 2u_n) = 2^(n-1)-1 / 2^n-2 / 2^n-1");
  CHECK(sec < 1.0);
  CHECK(pass);
}

TEST_CASE("criterion 4: certified iteration lower bound at t = 10^3") {
  Stopwatch watch;
  bool pass = true;
  for (const int n : {2, 3}) {
    const long want = (1L << n) - 1;
    const IterationRun run =
        run_ipm_experiment(n, Rat(1000), Rat(1, 2), 256, Rat(-2 * cex_u(n)), Rat(1, 2));
    pass = pass && run.report.certified && run.report.count_ok && run.report.gamma_ref >= want;
    CHECK(run.report.certified);
    CHECK(run.report.gamma_ref >= want);
    CHECK(run.report.total_segments >= static_cast<size_t>(want));
    CHECK(run.report.count_ok);
  }
  const double sec = watch.seconds();
  report(4, pass && sec < 300.0, sec,
         "predictor-corrector takes >= 3 (n=2) and >= 7 (n=3) certified segments");
  CHECK(sec < 300.0);
  CHECK(pass);
}

TEST_CASE("criterion 5: uniform convergence trend along the t ladder") {
  Stopwatch watch;
  std::vector<Rat> grid;
  for (Rat l(0); l <= 4; l += Rat(1, 2)) grid.push_back(l);
  const ConvergenceReport rep =
      run_convergence(2, {Rat(100), Rat(1000), Rat(10000)}, grid, 256);
  const bool pass = rep.monotone && rep.gamma_ratio_ok;
  CHECK(rep.monotone);
  CHECK(rep.gamma_ratio_ok);
  const double sec = watch.seconds();
  report(5, pass && sec < 300.0, sec,
         "max deviation strictly decreases and the fitted constant holds within factor 2");
  CHECK(sec < 300.0);
}

TEST_CASE("criterion 6: barrier inequality suite") {
  Stopwatch watch;
  const int n = 3;
  set_precision_bits(256);
  const LogBarrier bar = LogBarrier::from_monomial_lp(build_cex(n), BigFloat(100));
  std::mt19937 rng(600);
  bool pass = true;

  std::vector<FVec> points;
  for (int k = 0; k < 100; ++k) points.push_back(random_interior_point(rng, n, bar, BigFloat(100)));

  // Hessian lower bound with eigenvalue slack 2^-64 relative.
  for (const FVec& x : points) {
    const bool ok = hessian_lower_bound_check(bar, x, 128);
    pass = pass && ok;
    CHECK(ok);
  }

  // Gradient-log lower bound on 50 random pairs.
  for (int k = 0; k < 50; ++k) {
    const bool ok = log_bound_check(bar, points[static_cast<size_t>(2 * k)],
                                    points[static_cast<size_t>(2 * k + 1)], 256);
    pass = pass && ok;
    CHECK(ok);
  }

  // Hessian upper bound wherever the displacement precondition holds; the
  // scaled copies push points deep enough that it holds somewhere.
  int holds = 0;
  for (const FVec& x : points) {
    for (int k = 0; k <= 8; k += 4) {
      FVec scaled = x;
      for (BigFloat& v : scaled) v = ldexp(v, -k);
      if (!bar.strictly_feasible(scaled)) continue;
      const CheckOutcome outcome = hessian_upper_bound_check(bar, scaled, 256);
      if (outcome == CheckOutcome::Fails) {
        pass = false;
        CHECK(outcome != CheckOutcome::Fails);
      }
      if (outcome == CheckOutcome::Holds) ++holds;
    }
  }
  CHECK(holds > 0);
  pass = pass && holds > 0;

  const double sec = watch.seconds();
  report(6, pass && sec < 60.0, sec,
         "Hessian lower bound, log bound, and conditional upper bound on random points");
  CHECK(sec < 60.0);
  CHECK(pass);
}

TEST_CASE("criterion 7: neighborhood containment chain") {
  Stopwatch watch;
  const int n = 2;
  set_precision_bits(256);
  const LogBarrier bar = LogBarrier::from_monomial_lp(build_cex(n), BigFloat(100));
  const FVec c = unit_cost_f(n);
  IPMConfig cfg;
  IPMConfig tight = cfg;
  tight.newton_tol = Rat(1, 1L << 30);
  std::mt19937 rng(700);
  bool pass = true;

  auto [mlo, mhi] = phi_band(BigFloat(3) / 16, n);

  FVec warm = cex_start_point(n, BigFloat(100));
  for (const Rat exp_eta : {Rat(0), Rat(1), Rat(5)}) {
    const BigFloat eta = pow_rat(BigFloat(100), exp_eta);
    const FVec center = newton_center(bar, c, eta, warm, tight);
    warm = center;

    // Step-neighborhood samples land in the functional neighborhood.
    int accepted = 0;
    for (int tries = 0; tries < 2000 && accepted < 50; ++tries) {
      const FVec x = ellipsoid_sample(rng, bar, center, 0.01 + 0.001 * (tries % 180));
      if (!bar.strictly_feasible(x)) continue;
      if (!in_step_neighborhood(bar, c, x, eta, Rat(1, 4))) continue;
      ++accepted;
      const bool ok = in_N_M(bar, c, x, eta, BigFloat(3) / 16, cfg);
      pass = pass && ok;
      CHECK(ok);
    }
    REQUIRE(accepted == 50);

    // Functional-neighborhood samples land in the multiplicative band.
    accepted = 0;
    for (int tries = 0; tries < 2000 && accepted < 50; ++tries) {
      const FVec x = ellipsoid_sample(rng, bar, center, 0.01 + 0.002 * (tries % 250));
      if (!bar.strictly_feasible(x)) continue;
      if (!in_N_M(bar, c, x, eta, BigFloat(3) / 16, cfg)) continue;
      ++accepted;
      const bool ok = in_mult_neighborhood(bar, c, x, eta, mlo, mhi, cfg);
      pass = pass && ok;
      CHECK(ok);
    }
    REQUIRE(accepted == 50);
  }
  const double sec = watch.seconds();
  report(7, pass && sec < 120.0, sec,
         "sampled step neighborhoods sit in N_3/16, sampled N_M in the phi band");
  CHECK(sec < 120.0);
  CHECK(pass);
}

TEST_CASE("criterion 8: duality-gap band along an eta sweep") {
  Stopwatch watch;
  const int n = 2;
  set_precision_bits(256);
  const LogBarrier bar = LogBarrier::from_monomial_lp(build_cex(n), BigFloat(100));
  const FVec c = unit_cost_f(n);
  IPMConfig tight;
  tight.newton_tol = Rat(1, 1L << 30);

  Trajectory sweep;
  FVec x = cex_start_point(n, BigFloat(100));
  for (const double eta : {1.0, 10.0, 100.0, 1000.0, 10000.0}) {
    x = newton_center(bar, c, BigFloat(eta), x, tight);
    TrajectoryPoint pt;
    pt.x = x;
    pt.eta = BigFloat(eta);
    pt.objective = dot(c, x);
    pt.centered = true;
    sweep.iterates.push_back(std::move(pt));
  }
  const DualityGapReport rep = duality_gap_check(sweep, bar.theta(), BigFloat(1), Rat(1, 64));
  const bool pass = rep.upper_ok && rep.has_lower_band && rep.lower_band > 0;
  CHECK(rep.upper_ok);
  REQUIRE(rep.has_lower_band);
  CHECK(rep.lower_band > 0);
  std::printf("    eta * value lower band over the sweep: %s\n",
              rep.lower_band.str(8, std::ios_base::scientific).c_str());
  const double sec = watch.seconds();
  report(8, pass && sec < 60.0, sec,
         "eta * value <= theta at every centered point; positive lower band reported");
  CHECK(sec < 60.0);
  CHECK(pass);
}

TEST_CASE("criterion 9: cube combinatorics and figure vertex") {
  Stopwatch watch;
  bool pass = true;
  for (int n = 1; n <= 4; ++n) {
    const FaceRunResult run = run_faces(n, Rat(10));  // t = 100
    const bool cube = run.lattice.vertices.size() == (size_t{1} << n) && run.lattice.simple &&
                      run.lattice.is_cube && run.disjoint_ok && run.all_pairs_disjoint;
    pass = pass && cube;
    CHECK(cube);
  }
  const FaceRunResult fig = run_faces(3, Rat(8, 5));  // t = 2.56 standing in for 2.5
  REQUIRE(fig.fig_vertex_checked);
  pass = pass && fig.fig_vertex_distance <= Rat(5, 1000);
  CHECK(fig.fig_vertex_distance <= Rat(5, 1000));
  const double sec = watch.seconds();
  report(9, pass && sec < 60.0, sec,
         "2^n vertices, simple, paired facets disjoint (n <= 4, t = 100); figure vertex matches");
  CHECK(sec < 60.0);
  CHECK(pass);
}

TEST_CASE("criterion 10: tropical convexity and log-limit inequality") {
  Stopwatch watch;
  std::mt19937 rng(1000);
  bool pass = true;

  for (int pair = 0; pair < 50; ++pair) {
    const int n = 2 + static_cast<int>(rng() % 4);
    const TropPolyhedron P = build_tcex(n);
    auto feasible_point = [&] {
      const Rat lambda = abs(random_rat(rng, 24, 2));
      const Rat shift = abs(random_rat(rng, 3, 4));
      return cex_tropical_path_point(n, lambda).shifted(TropValue(-shift));
    };
    const TropVector u = feasible_point();
    const TropVector v = feasible_point();
    for (int k = 0; k < 50; ++k) {
      const Rat w = -abs(random_rat(rng, 6, 8));
      const bool on_u = rng() % 2 == 0;
      const TropVector p = trop_segment_point(u, v, on_u ? TropValue(Rat(0)) : TropValue(w),
                                              on_u ? TropValue(w) : TropValue(Rat(0)));
      const bool ok = is_feasible(P, p);
      pass = pass && ok;
      CHECK(ok);
    }
  }

  set_precision_bits(128);
  std::uniform_int_distribution<long> num(1, 5000);
  const BigFloat eps = ldexp(BigFloat(1), -100);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 5);
    const BigFloat t(2 + static_cast<double>(rng() % 999));
    BigFloat trop;
    bool first = true;
    Rat inner(0);
    for (int i = 0; i < n; ++i) {
      const Rat xi(num(rng), num(rng));
      const Rat yi(num(rng), num(rng));
      const BigFloat term = log_base(t, to_bigfloat(xi)) + log_base(t, to_bigfloat(yi));
      if (first || term > trop) trop = term;
      first = false;
      inner += xi * yi;
    }
    const BigFloat mid = log_base(t, to_bigfloat(inner));
    const bool ok = trop <= mid + eps && mid <= trop + log_base(t, BigFloat(n)) + eps;
    pass = pass && ok;
    CHECK(ok);
  }

  const double sec = watch.seconds();
  report(10, pass && sec < 10.0, sec,
         "segment samples of feasible pairs stay feasible; log-limit inequality on 1000 pairs");
  CHECK(sec < 10.0);
  CHECK(pass);
}
