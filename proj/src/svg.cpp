#include "tropipm/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace tropipm {

namespace {

constexpr double kWidth = 640;
constexpr double kHeight = 480;
constexpr double kMargin = 60;

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : line) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

// Accepts integers, decimals, and "p/q"; nullopt for "-inf".
std::optional<double> parse_cell(const std::string& cell) {
  if (cell == "-inf") return std::nullopt;
  const auto slash = cell.find('/');
  if (slash != std::string::npos) {
    const double num = std::stod(cell.substr(0, slash));
    const double den = std::stod(cell.substr(slash + 1));
    return num / den;
  }
  return std::stod(cell);
}

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::optional<double>>> rows;
};

Table parse_csv(const std::string& csv) {
  Table t;
  std::istringstream in(csv);
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (first) {
      t.header = split(line, ',');
      first = false;
      continue;
    }
    std::vector<std::optional<double>> row;
    for (const std::string& cell : split(line, ',')) row.push_back(parse_cell(cell));
    if (row.size() != t.header.size())
      throw std::invalid_argument("csv: ragged row");
    t.rows.push_back(std::move(row));
  }
  return t;
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

struct Canvas {
  std::ostringstream body;
  double xmin = 0, xmax = 1, ymin = 0, ymax = 1;

  void fit(const std::vector<std::pair<double, double>>& pts) {
    if (pts.empty()) return;
    xmin = xmax = pts[0].first;
    ymin = ymax = pts[0].second;
    for (const auto& [x, y] : pts) {
      xmin = std::min(xmin, x);
      xmax = std::max(xmax, x);
      ymin = std::min(ymin, y);
      ymax = std::max(ymax, y);
    }
    if (xmax - xmin < 1e-9) xmax = xmin + 1;
    if (ymax - ymin < 1e-9) ymax = ymin + 1;
  }
  double px(double x) const { return kMargin + (x - xmin) / (xmax - xmin) * (kWidth - 2 * kMargin); }
  double py(double y) const { return kHeight - kMargin - (y - ymin) / (ymax - ymin) * (kHeight - 2 * kMargin); }

  void polyline(const std::vector<std::pair<double, double>>& pts, const std::string& color) {
    if (pts.empty()) return;
    body << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\" points=\"";
    for (const auto& [x, y] : pts) body << num(px(x)) << "," << num(py(y)) << " ";
    body << "\"/>\n";
    for (const auto& [x, y] : pts)
      body << "<circle cx=\"" << num(px(x)) << "\" cy=\"" << num(py(y))
           << "\" r=\"3\" fill=\"" << color << "\"/>\n";
  }

  std::string finish() const {
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
        << kHeight << "\" viewBox=\"0 0 " << kWidth << " " << kHeight << "\">\n"
        << "<rect width=\"" << kWidth << "\" height=\"" << kHeight << "\" fill=\"white\"/>\n"
        << "<rect x=\"" << num(kMargin) << "\" y=\"" << num(kMargin) << "\" width=\""
        << num(kWidth - 2 * kMargin) << "\" height=\"" << num(kHeight - 2 * kMargin)
        << "\" fill=\"none\" stroke=\"#cccccc\"/>\n"
        << body.str() << "</svg>\n";
    return out.str();
  }
};

const char* kPalette[] = {"#1f5fd0", "#d04a1f", "#1fa05a", "#8a1fd0", "#d0a01f", "#13808a"};

std::string render_path2d(const Table& t) {
  if (t.header.size() != 3 || t.header[0] != "lambda")
    throw std::invalid_argument("path2d expects header lambda,x1,x2");
  std::vector<std::pair<double, double>> pts;
  for (const auto& row : t.rows)
    if (row[1] && row[2]) pts.emplace_back(*row[1], *row[2]);
  Canvas canvas;
  canvas.fit(pts);
  canvas.polyline(pts, kPalette[0]);
  return canvas.finish();
}

std::string render_path3d(const Table& t) {
  if (t.header.size() != 4 || t.header[0] != "lambda")
    throw std::invalid_argument("path3d-projection expects header lambda,x1,x2,x3");
  std::vector<std::pair<double, double>> pts;
  for (const auto& row : t.rows) {
    if (!(row[1] && row[2] && row[3])) continue;
    const double a = *row[1], b = *row[2], c = *row[3];
    // Fixed oblique projection.
    pts.emplace_back(0.9 * a - 0.06 * b - 0.44 * c, -0.076 * a + 0.95 * b - 0.29 * c);
  }
  Canvas canvas;
  canvas.fit(pts);
  canvas.polyline(pts, kPalette[0]);
  return canvas.finish();
}

std::string render_convergence(const Table& t) {
  if (t.header.size() != 3 || t.header[0] != "t" || t.header[1] != "lambda" ||
      t.header[2] != "deviation")
    throw std::invalid_argument("convergence expects header t,lambda,deviation");
  std::map<double, std::vector<std::pair<double, double>>> series;
  std::vector<std::pair<double, double>> all;
  for (const auto& row : t.rows) {
    if (!(row[0] && row[1] && row[2])) continue;
    series[*row[0]].emplace_back(*row[1], *row[2]);
    all.emplace_back(*row[1], *row[2]);
  }
  Canvas canvas;
  canvas.fit(all);
  size_t idx = 0;
  for (auto& [tval, pts] : series) {
    std::sort(pts.begin(), pts.end());
    canvas.polyline(pts, kPalette[idx % 6]);
    ++idx;
  }
  return canvas.finish();
}

}  // namespace

std::string render_svg(const std::string& csv, const std::string& kind) {
  const Table t = parse_csv(csv);
  if (t.rows.empty()) {
    // Nothing to draw; still emit a valid frame.
    return Canvas{}.finish();
  }
  if (kind == "path2d") return render_path2d(t);
  if (kind == "path3d-projection") return render_path3d(t);
  if (kind == "convergence") return render_convergence(t);
  throw std::invalid_argument("unknown plot kind: " + kind);
}

}  // namespace tropipm
