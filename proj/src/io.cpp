#include "tropipm/io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace tropipm {

using nlohmann::json;

json rational_to_json(const Rat& value) {
  if (is_integer(value)) {
    const BigInt num = numerator(value);
    if (num >= std::numeric_limits<int64_t>::min() && num <= std::numeric_limits<int64_t>::max())
      return num.convert_to<int64_t>();
  }
  return format_rational(value);
}

Rat rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rat(j.get<int64_t>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw std::invalid_argument("rational_from_json: expected integer or \"p/q\" string");
}

json trop_value_to_json(const TropValue& v) {
  if (v.is_neg_inf()) return "-inf";
  return rational_to_json(v.value());
}

TropValue trop_value_from_json(const json& j) {
  if (j.is_string() && j.get<std::string>() == "-inf") return TropValue::neg_inf();
  return TropValue(rational_from_json(j));
}

json trop_vector_to_json(const TropVector& v) {
  json out = json::array();
  for (int i = 0; i < v.dim(); ++i) out.push_back(trop_value_to_json(v[i]));
  return out;
}

TropVector trop_vector_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("trop_vector_from_json: bad array");
  std::vector<TropValue> entries;
  for (const auto& e : j) entries.push_back(trop_value_from_json(e));
  return TropVector(std::move(entries));
}

namespace {

json form_to_json(const TropAffineForm& f) {
  return json{{"coeffs", trop_vector_to_json(f.coeffs)}, {"const", trop_value_to_json(f.constant)}};
}

TropAffineForm form_from_json(const json& j) {
  TropAffineForm f;
  f.coeffs = trop_vector_from_json(j.at("coeffs"));
  f.constant = trop_value_from_json(j.at("const"));
  return f;
}

}  // namespace

json polyhedron_to_json(const TropPolyhedron& P) {
  json ineqs = json::array();
  for (const TropInequality& q : P.inequalities)
    ineqs.push_back(json{{"lhs", form_to_json(q.lhs)}, {"rhs", form_to_json(q.rhs)}});
  return json{{"n", P.dimension}, {"ineqs", std::move(ineqs)}};
}

TropPolyhedron polyhedron_from_json(const json& j) {
  TropPolyhedron P;
  P.dimension = j.at("n").get<int>();
  for (const auto& q : j.at("ineqs"))
    P.inequalities.push_back({form_from_json(q.at("lhs")), form_from_json(q.at("rhs"))});
  return P;
}

namespace {

json monomial_to_json(const Monomial& m) {
  return json{{"c", format_rational(m.coeff)}, {"e", format_rational(m.exponent)}};
}

Monomial monomial_from_json(const json& j) {
  return {parse_rational(j.at("c").get<std::string>()),
          parse_rational(j.at("e").get<std::string>())};
}

}  // namespace

json monomial_lp_to_json(const MonomialLP& lp) {
  json rows = json::array();
  for (const MonomialRow& row : lp.rows) {
    json coeffs = json::array();
    for (const Monomial& m : row.coeffs) coeffs.push_back(monomial_to_json(m));
    rows.push_back(json{{"coeffs", std::move(coeffs)}, {"rhs", monomial_to_json(row.rhs)}});
  }
  json objective = json::array();
  for (const Monomial& m : lp.objective) objective.push_back(monomial_to_json(m));
  return json{{"n", lp.n}, {"rows", std::move(rows)}, {"objective", std::move(objective)}};
}

MonomialLP monomial_lp_from_json(const json& j) {
  MonomialLP lp;
  lp.n = j.at("n").get<int>();
  for (const auto& row : j.at("rows")) {
    MonomialRow r;
    for (const auto& m : row.at("coeffs")) r.coeffs.push_back(monomial_from_json(m));
    r.rhs = monomial_from_json(row.at("rhs"));
    lp.rows.push_back(std::move(r));
  }
  for (const auto& m : j.at("objective")) lp.objective.push_back(monomial_from_json(m));
  return lp;
}

namespace {

std::string trop_value_to_csv(const TropValue& v) {
  return v.is_neg_inf() ? "-inf" : format_rational(v.value());
}

}  // namespace

std::string path_to_csv(const BreakpointPath& path) {
  std::ostringstream out;
  out << "lambda";
  for (int i = 1; i <= path.dim(); ++i) out << ",x" << i;
  out << "\n";
  for (size_t k = 0; k < path.points.size(); ++k) {
    out << format_rational(path.lambdas[k]);
    for (int i = 0; i < path.dim(); ++i) out << "," << trop_value_to_csv(path.points[k][i]);
    out << "\n";
  }
  return out.str();
}

json path_to_json(const BreakpointPath& path) {
  json breakpoints = json::array();
  for (size_t k = 0; k < path.points.size(); ++k) {
    breakpoints.push_back(json{{"lambda", rational_to_json(path.lambdas[k])},
                               {"point", trop_vector_to_json(path.points[k])}});
  }
  json supports = json::array();
  for (const auto& sup : path.supports) {
    json s = json::array();
    for (int i : sup) s.push_back(i + 1);
    supports.push_back(std::move(s));
  }
  return json{{"schema_version", 1},
              {"n", path.dim()},
              {"breakpoints", std::move(breakpoints)},
              {"supports", std::move(supports)}};
}

std::string polytope_to_text(const RationalPolytope& p) {
  std::ostringstream out;
  for (size_t r = 0; r < p.A.size(); ++r) {
    for (const Rat& v : p.A[r]) out << format_rational(v) << " ";
    out << format_rational(p.b[r]) << "\n";
  }
  return out.str();
}

std::string trajectory_to_csv(const Trajectory& traj) {
  std::ostringstream out;
  out << "iter,kind,eta,obj";
  const int n = traj.iterates.empty() ? 0 : static_cast<int>(traj.iterates.front().x.size());
  for (int i = 1; i <= n; ++i) out << ",x" << i;
  out << "\n";
  for (size_t k = 0; k < traj.iterates.size(); ++k) {
    const TrajectoryPoint& pt = traj.iterates[k];
    const char* kind = pt.centered ? "center"
                       : pt.kind == IterateKind::Predictor ? "predictor"
                                                           : "corrector";
    out << k << "," << kind << "," << pt.eta.str() << "," << pt.objective.str();
    for (const BigFloat& v : pt.x) out << "," << v.str();
    out << "\n";
  }
  return out.str();
}

json face_report_to_json(const FaceLatticeReport& report) {
  json vertices = json::array();
  for (const auto& v : report.vertices) {
    json point = json::array();
    for (const Rat& c : v) point.push_back(format_rational(c));
    vertices.push_back(std::move(point));
  }
  json incidence = json::array();
  for (const auto& tight : report.facet_incidence) incidence.push_back(tight);
  json pairs = json::array();
  for (const auto& [a, b] : report.facet_pairs) pairs.push_back(json::array({a, b}));
  return json{{"vertex_count", report.vertices.size()},
              {"vertices", std::move(vertices)},
              {"facet_incidence", std::move(incidence)},
              {"simple", report.simple},
              {"is_cube", report.is_cube},
              {"facet_pairs", std::move(pairs)}};
}

json convergence_report_to_json(const ConvergenceReport& report) {
  json ts = json::array();
  for (const Rat& t : report.t_list) ts.push_back(rational_to_json(t));
  json grid = json::array();
  for (const Rat& l : report.lambda_grid) grid.push_back(rational_to_json(l));
  json cells = json::array();
  for (size_t ti = 0; ti < report.cells.size(); ++ti) {
    json row = json::array();
    for (const ConvergenceCell& cell : report.cells[ti]) {
      json c{{"lambda", rational_to_json(cell.lambda)}, {"solved", cell.solved}};
      if (cell.solved) c["deviation"] = cell.deviation.str(20, std::ios_base::scientific);
      else c["error"] = cell.error;
      row.push_back(std::move(c));
    }
    cells.push_back(std::move(row));
  }
  json max_dev = json::array(), gamma_hat = json::array(), delta_hat = json::array();
  for (const BigFloat& v : report.max_deviation)
    max_dev.push_back(v.str(20, std::ios_base::scientific));
  for (const BigFloat& v : report.gamma_hat)
    gamma_hat.push_back(v.str(20, std::ios_base::scientific));
  for (const auto& v : report.delta_hat) {
    if (v) delta_hat.push_back(v->str(20, std::ios_base::scientific));
    else delta_hat.push_back(nullptr);
  }
  return json{{"schema_version", 1},
              {"n", report.n},
              {"precision_bits", report.precision_bits},
              {"t_list", std::move(ts)},
              {"lambda_grid", std::move(grid)},
              {"cells", std::move(cells)},
              {"max_deviation", std::move(max_dev)},
              {"gamma_hat", std::move(gamma_hat)},
              {"delta_hat", std::move(delta_hat)},
              {"monotone", report.monotone},
              {"gamma_ratio_ok", report.gamma_ratio_ok},
              {"verdict", report.consistent() ? "consistent" : "inconsistent"}};
}

std::string convergence_report_to_csv(const ConvergenceReport& report) {
  std::ostringstream out;
  out << "t,lambda,deviation\n";
  for (size_t ti = 0; ti < report.cells.size(); ++ti) {
    for (const ConvergenceCell& cell : report.cells[ti]) {
      if (!cell.solved) continue;
      out << format_rational(report.t_list[ti]) << "," << format_rational(cell.lambda) << ","
          << cell.deviation.str(20, std::ios_base::scientific) << "\n";
    }
  }
  return out.str();
}

json iteration_report_to_json(const IterationReport& report) {
  json duality{{"upper_ok", report.duality.upper_ok},
               {"centered_count", report.duality.centered_count},
               {"has_lower_band", report.duality.has_lower_band}};
  if (report.duality.has_lower_band)
    duality["lower_band"] = report.duality.lower_band.str(20, std::ios_base::scientific);
  return json{{"schema_version", 1},
              {"n", report.n},
              {"t", rational_to_json(report.t)},
              {"sigma", rational_to_json(report.sigma)},
              {"precision_bits", report.precision_bits},
              {"target_exp", rational_to_json(report.target_exp)},
              {"v_start", report.v_start.str(20, std::ios_base::scientific)},
              {"v_target", report.v_target.str(20, std::ios_base::scientific)},
              {"predictor_steps", report.predictor_steps},
              {"total_segments", report.total_segments},
              {"gamma_ref", report.gamma_ref},
              {"audit_failures", report.audit_failures},
              {"certified", report.certified},
              {"count_ok", report.count_ok},
              {"m_pc", report.m_pc.str(20, std::ios_base::scientific)},
              {"band_lo", report.band_lo.str(20, std::ios_base::scientific)},
              {"band_hi", report.band_hi.str(20, std::ios_base::scientific)},
              {"tube_radius", rational_to_json(report.tube_radius)},
              {"tube_contained", report.tube_contained},
              {"duality", std::move(duality)}};
}

json face_run_to_json(const FaceRunResult& result, int n, const Rat& s) {
  json pairing = json::array();
  for (const FacetPairCheck& c : result.pairing)
    pairing.push_back(json{{"row_a", c.row_a}, {"row_b", c.row_b}, {"disjoint", c.disjoint}});
  json out{{"schema_version", 1},
           {"n", n},
           {"s", rational_to_json(s)},
           {"t", rational_to_json(s * s)},
           {"lattice", face_report_to_json(result.lattice)},
           {"opposite_faces_disjoint", result.disjoint_ok},
           {"facet_pairing", std::move(pairing)},
           {"all_pairs_disjoint", result.all_pairs_disjoint}};
  if (result.fig_vertex_checked)
    out["nearest_vertex_distance_to_reference"] = format_rational(result.fig_vertex_distance);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
  if (!out) throw std::runtime_error("write failed for " + path);
}

}  // namespace tropipm
