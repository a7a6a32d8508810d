#pragma once

#include "tropipm/cex.hpp"
#include "tropipm/ipm.hpp"
#include "tropipm/path.hpp"
#include "tropipm/reports.hpp"

#include <json.hpp>

#include <string>

namespace tropipm {

/// Rational JSON convention: integers that fit in 64 bits appear as JSON
/// numbers, everything else as "p/q" strings; -inf is the string "-inf".
nlohmann::json rational_to_json(const Rat& value);
Rat rational_from_json(const nlohmann::json& j);

nlohmann::json trop_value_to_json(const TropValue& v);
TropValue trop_value_from_json(const nlohmann::json& j);

nlohmann::json trop_vector_to_json(const TropVector& v);
TropVector trop_vector_from_json(const nlohmann::json& j);

/// {"n": int, "ineqs": [{"lhs": {"coeffs": [...], "const": ...}, "rhs": {...}}]}
nlohmann::json polyhedron_to_json(const TropPolyhedron& P);
TropPolyhedron polyhedron_from_json(const nlohmann::json& j);

/// {"n": int, "rows": [{"coeffs": [{"c": "p/q", "e": "p/q"}], "rhs": {...}}],
///  "objective": [...]}
nlohmann::json monomial_lp_to_json(const MonomialLP& lp);
MonomialLP monomial_lp_from_json(const nlohmann::json& j);

/// Header lambda,x1,...,xn; one row per breakpoint; "-inf" allowed.
std::string path_to_csv(const BreakpointPath& path);
nlohmann::json path_to_json(const BreakpointPath& path);  // supports are 1-based

/// Plain "A b" rows, fractions as p/q.
std::string polytope_to_text(const RationalPolytope& p);

/// Header iter,kind,eta,obj,x1,...,xn at full working precision.
std::string trajectory_to_csv(const Trajectory& traj);

nlohmann::json face_report_to_json(const FaceLatticeReport& report);

nlohmann::json convergence_report_to_json(const ConvergenceReport& report);
std::string convergence_report_to_csv(const ConvergenceReport& report);  // t,lambda,deviation
nlohmann::json iteration_report_to_json(const IterationReport& report);
nlohmann::json face_run_to_json(const FaceRunResult& result, int n, const Rat& s);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace tropipm
