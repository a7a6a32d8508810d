#include "tropipm/io.hpp"
#include "tropipm/svg.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

using namespace tropipm;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

std::vector<Rat> parse_rational_list(const std::string& text) {
  std::vector<Rat> out;
  std::string cur;
  for (char ch : text + ",") {
    if (ch == ',') {
      if (!cur.empty()) out.push_back(parse_rational(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  return out;
}

int cmd_troppath(int n, const Rat& lambda_max, const Rat& step, const std::string& out_path) {
  std::ostringstream csv;
  csv << "lambda";
  for (int i = 1; i <= n; ++i) csv << ",x" << i;
  csv << "\n";
  for (Rat lambda(0); lambda <= lambda_max; lambda += step) {
    csv << format_rational(lambda);
    const TropVector p = cex_tropical_path_point(n, lambda);
    for (int i = 0; i < n; ++i) csv << "," << format_rational(p[i].value());
    csv << "\n";
  }
  write_file(out_path, csv.str());
  std::cout << "wrote " << out_path << "\n";
  return kExitOk;
}

int cmd_gamma(int n, const Rat& lo, const Rat& hi) {
  const Rat un = cex_u(n);
  std::cout << "gamma([" << format_rational(lo) << ", " << format_rational(hi)
            << "]) = " << gamma_cex(n, lo, hi) << "\n";
  std::cout << "gamma([0, u_n - 1])  = " << gamma_cex(n, Rat(0), un - 1) << "\n";
  std::cout << "gamma([0, 2u_n - 1]) = " << gamma_cex(n, Rat(0), 2 * un - 1) << "\n";
  std::cout << "gamma([0, 2u_n])     = " << gamma_cex(n, Rat(0), 2 * un) << "\n";
  return kExitOk;
}

int cmd_converge(int n, const std::string& t_list_str, const Rat& lambda_max, const Rat& step,
                 unsigned prec, const std::string& out_base) {
  std::vector<Rat> t_list = parse_rational_list(t_list_str);
  std::vector<Rat> grid;
  for (Rat l(0); l <= lambda_max; l += step) grid.push_back(l);
  const ConvergenceReport report = run_convergence(n, t_list, grid, prec);
  write_file(out_base + ".json", convergence_report_to_json(report).dump(2) + "\n");
  write_file(out_base + ".csv", convergence_report_to_csv(report));
  for (size_t ti = 0; ti < report.t_list.size(); ++ti) {
    std::cout << "t = " << format_rational(report.t_list[ti])
              << "  max deviation = " << report.max_deviation[ti].str(8, std::ios_base::scientific)
              << "  Gamma_hat = " << report.gamma_hat[ti].str(8, std::ios_base::scientific) << "\n";
  }
  std::cout << "verdict: " << (report.consistent() ? "consistent" : "inconsistent") << "\n";
  return report.consistent() ? kExitOk : kExitVerificationFailure;
}

int cmd_ipm(int n, const Rat& t, const Rat& sigma, unsigned prec, const Rat& target_exp,
            const Rat& tube_eps, const std::string& out_base) {
  const IterationRun run = run_ipm_experiment(n, t, sigma, prec, target_exp, tube_eps);
  write_file(out_base + ".json", iteration_report_to_json(run.report).dump(2) + "\n");
  write_file(out_base + ".csv", trajectory_to_csv(run.trajectory));
  const IterationReport& r = run.report;
  std::cout << "segments = " << r.total_segments << " (predictor steps = " << r.predictor_steps
            << "), gamma reference = " << r.gamma_ref << "\n";
  std::cout << "certified = " << (r.certified ? "yes" : "no (" + std::to_string(r.audit_failures) + " audit failures)")
            << ", count >= gamma: " << (r.count_ok ? "yes" : "no") << "\n";
  std::cout << "tube(eps = " << format_rational(r.tube_radius)
            << ") contains log_t trajectory: " << (r.tube_contained ? "yes" : "no") << "\n";
  return r.certified && r.count_ok ? kExitOk : kExitVerificationFailure;
}

int cmd_faces(int n, const Rat& s, const std::string& out_path) {
  const FaceRunResult result = run_faces(n, s);
  write_file(out_path, face_run_to_json(result, n, s).dump(2) + "\n");
  std::cout << result.lattice.vertices.size() << " vertices, simple = "
            << (result.lattice.simple ? "yes" : "no")
            << ", cube = " << (result.lattice.is_cube ? "yes" : "no") << "\n";
  std::cout << "opposite faces disjoint = " << (result.disjoint_ok ? "yes" : "no")
            << ", all facet pairs disjoint = " << (result.all_pairs_disjoint ? "yes" : "no")
            << "\n";
  const bool ok = result.lattice.is_cube && result.disjoint_ok && result.all_pairs_disjoint;
  return ok ? kExitOk : kExitVerificationFailure;
}

int cmd_plot(const std::string& input, const std::string& kind, const std::string& out_path) {
  write_file(out_path, render_svg(read_file(input), kind));
  std::cout << "wrote " << out_path << "\n";
  return kExitOk;
}

int cmd_cex(int n, const std::optional<Rat>& s, bool tropical, const std::string& out_path,
            const std::string& ab_path) {
  const MonomialLP lp = build_cex(n);
  if (tropical) {
    write_file(out_path, polyhedron_to_json(build_tcex(n)).dump(2) + "\n");
  } else {
    write_file(out_path, monomial_lp_to_json(lp).dump(2) + "\n");
  }
  if (s) {
    if (ab_path.empty()) throw CLI::ValidationError("--s requires --ab <path>");
    write_file(ab_path, polytope_to_text(instantiate(lp, *s)));
  }
  std::cout << "wrote " << out_path << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tropical central path toolkit: closed-form paths, segment counts,\n"
               "exact counterexample combinatorics, and a high-precision log-barrier\n"
               "path follower."};
  app.require_subcommand(1);

  int n = 2;
  std::string out = "out";
  std::string t_str = "100";
  std::string sigma_str = "1/2";
  unsigned prec = 256;

  auto* troppath = app.add_subcommand("troppath", "closed-form path value table as CSV");
  std::string lambda_max_str = "4", step_str = "1";
  troppath->add_option("--n", n, "dimension")->required();
  troppath->add_option("--lambda-max", lambda_max_str, "last lambda of the grid");
  troppath->add_option("--step", step_str, "grid step (rational)");
  troppath->add_option("--out", out, "output CSV path")->required();

  auto* gamma_cmd = app.add_subcommand("gamma", "tropical segment counts of path sections");
  std::string lo_str = "0", hi_str = "inf";
  gamma_cmd->add_option("--n", n, "dimension")->required();
  gamma_cmd->add_option("--lmin", lo_str, "interval start");
  gamma_cmd->add_option("--lmax", hi_str, "interval end (or 'inf')");

  auto* converge = app.add_subcommand("converge", "log-limit convergence sweep of the central path");
  std::string tlist_str = "100,1000,10000";
  converge->add_option("--n", n, "dimension")->required();
  converge->add_option("--t-list", tlist_str, "comma-separated t ladder");
  converge->add_option("--lambda-max", lambda_max_str, "last lambda of the grid");
  converge->add_option("--step", step_str, "lambda grid step");
  converge->add_option("--prec", prec, "mantissa bits");
  converge->add_option("--out", out, "output basename (.json/.csv)")->required();

  auto* ipm = app.add_subcommand("ipm", "predictor-corrector run with iteration-count audit");
  std::string target_str = "", tube_str = "1/2";
  ipm->add_option("--n", n, "dimension")->required();
  ipm->add_option("--t", t_str, "parameter t (rational)");
  ipm->add_option("--sigma", sigma_str, "predictor fraction in (0,1)");
  ipm->add_option("--prec", prec, "mantissa bits");
  ipm->add_option("--target-exp", target_str, "stop when value <= t^target_exp (default -2u_n)");
  ipm->add_option("--tube-eps", tube_str, "tube radius for the log-image diagnostic");
  ipm->add_option("--out", out, "output basename (.json/.csv)")->required();

  auto* faces = app.add_subcommand("faces", "exact vertex/face-lattice computation");
  std::string s_str = "2";
  faces->add_option("--n", n, "dimension (<= 5)")->required();
  faces->add_option("--s", s_str, "base with t = s^2 (rational > 1)");
  faces->add_option("--out", out, "output JSON path")->required();

  auto* plot = app.add_subcommand("plot", "deterministic SVG from an experiment CSV");
  std::string input, kind = "path2d";
  plot->add_option("--input", input, "input CSV")->required();
  plot->add_option("--kind", kind, "path2d | path3d-projection | convergence");
  plot->add_option("--out", out, "output SVG path")->required();

  auto* cex_cmd = app.add_subcommand("cex", "instance dump (JSON; optionally exact A b text)");
  std::string ab_path;
  bool tropical = false;
  std::string s_opt;
  cex_cmd->add_option("--n", n, "dimension")->required();
  cex_cmd->add_option("--s", s_opt, "instantiate exactly at t = s^2");
  cex_cmd->add_option("--ab", ab_path, "output path for the A b text dump");
  cex_cmd->add_flag("--tropical", tropical, "dump the tropical system instead of the LP");
  cex_cmd->add_option("--out", out, "output JSON path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (troppath->parsed())
      return cmd_troppath(n, parse_rational(lambda_max_str), parse_rational(step_str), out);
    if (gamma_cmd->parsed()) {
      const Rat lo = parse_rational(lo_str);
      const Rat hi = hi_str == "inf" ? 2 * cex_u(n) : parse_rational(hi_str);
      return cmd_gamma(n, lo, hi);
    }
    if (converge->parsed())
      return cmd_converge(n, tlist_str, parse_rational(lambda_max_str), parse_rational(step_str),
                          prec, out);
    if (ipm->parsed()) {
      const Rat target =
          target_str.empty() ? Rat(-2 * cex_u(n)) : parse_rational(target_str);
      return cmd_ipm(n, parse_rational(t_str), parse_rational(sigma_str), prec, target,
                     parse_rational(tube_str), out);
    }
    if (faces->parsed()) {
      if (n > 5) {
        std::cerr << "faces: n must be at most 5\n";
        return kExitUsage;
      }
      return cmd_faces(n, parse_rational(s_str), out);
    }
    if (plot->parsed()) return cmd_plot(input, kind, out);
    if (cex_cmd->parsed()) {
      std::optional<Rat> s;
      if (!s_opt.empty()) s = parse_rational(s_opt);
      return cmd_cex(n, s, tropical, out, ab_path);
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
