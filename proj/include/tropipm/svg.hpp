#pragma once

#include <string>

namespace tropipm {

/// Deterministic SVG renderings of the experiment CSVs (fixed viewport, no
/// timestamps). Kinds:
///   path2d            lambda,x1,x2 staircase in the (x1,x2) plane
///   path3d-projection lambda,x1,x2,x3 under a fixed oblique projection
///   convergence       t,lambda,deviation, one polyline per t
/// Throws std::invalid_argument when the CSV schema does not match the kind.
std::string render_svg(const std::string& csv, const std::string& kind);

}  // namespace tropipm
