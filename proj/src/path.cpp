#include "tropipm/path.hpp"

#include <algorithm>
#include <set>

namespace tropipm {

namespace {

TropVector shift_on_support(const TropVector& base, const std::vector<int>& support,
                            const Rat& amount) {
  TropVector out = base;
  for (int i : support) out[i] = out[i] - amount;
  return out;
}

bool subset_of(const std::vector<int>& a, const std::vector<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

TropVector BreakpointPath::eval(const Rat& lambda) const {
  if (points.empty()) throw MalformedPathError("eval: empty path");
  if (points.size() == 1 || lambda <= lambdas.front()) return points.front();
  if (lambda >= lambdas.back()) return points.back();
  size_t k = static_cast<size_t>(
      std::upper_bound(lambdas.begin(), lambdas.end(), lambda) - lambdas.begin() - 1);
  return shift_on_support(points[k], supports[k], lambda - lambdas[k]);
}

BreakpointPath make_breakpoint_path(std::vector<Rat> lambdas, std::vector<TropVector> points) {
  if (lambdas.size() != points.size() || points.empty())
    throw MalformedPathError("make_breakpoint_path: empty or inconsistent samples");
  for (size_t k = 1; k < lambdas.size(); ++k) {
    if (!(lambdas[k - 1] < lambdas[k]))
      throw MalformedPathError("make_breakpoint_path: lambdas must strictly increase");
    if (points[k].dim() != points[0].dim())
      throw MalformedPathError("make_breakpoint_path: dimension mismatch");
  }

  // Trim stationary sections: of a leading run of equal points keep the last
  // sample, of a trailing run the first. Interior stalls are rejected (the
  // curve would need a parameter jump, which this representation cannot hold).
  size_t first = 0;
  while (first + 1 < points.size() && points[first + 1] == points[first]) ++first;
  size_t last = points.size() - 1;
  while (last > first && points[last - 1] == points[last]) --last;

  BreakpointPath path;
  for (size_t k = first; k <= last; ++k) {
    path.lambdas.push_back(lambdas[k]);
    path.points.push_back(points[k]);
  }

  const int n = path.points.front().dim();
  for (size_t k = 0; k + 1 < path.points.size(); ++k) {
    const Rat step = path.lambdas[k + 1] - path.lambdas[k];
    const TropVector& a = path.points[k];
    const TropVector& b = path.points[k + 1];
    std::vector<int> moving;
    for (int i = 0; i < n; ++i) {
      if (a[i] == b[i]) continue;
      if (!a[i].is_finite() || !b[i].is_finite())
        throw MalformedPathError("make_breakpoint_path: support change along a piece");
      if (a[i].value() - b[i].value() != step)
        throw MalformedPathError("make_breakpoint_path: piece slope is not -1");
      moving.push_back(i);
    }
    if (moving.empty())
      throw MalformedPathError("make_breakpoint_path: interior stationary section");
    path.supports.push_back(std::move(moving));
  }
  return path;
}

Rat cex_u(int k) {
  if (k < 1) throw std::invalid_argument("cex_u: k must be >= 1");
  // 3·2^(k-2) - 1; the k = 1 instance is the half-integer 1/2.
  return Rat(3) * rat_pow(Rat(2), k - 2) - 1;
}

namespace {

std::vector<Rat> cex_path_coords(int n, const Rat& lambda) {
  if (n == 1) return {std::min(Rat(0), Rat(-lambda))};
  if (lambda <= 0) return std::vector<Rat>(static_cast<size_t>(n), Rat(0));
  const Rat un = cex_u(n);
  const Rat un1 = cex_u(n - 1);
  std::vector<Rat> out(static_cast<size_t>(n));
  if (lambda <= un - 1) {
    std::vector<Rat> inner = cex_path_coords(n - 1, lambda);
    for (int i = 0; i + 2 < n; ++i) out[static_cast<size_t>(i)] = inner[static_cast<size_t>(i)];
    out[static_cast<size_t>(n - 2)] = 0;
  } else if (lambda <= un + 1) {
    const Rat bump = std::max(un - 1 - lambda, Rat(-1));
    for (int i = 0; i + 2 < n; ++i) out[static_cast<size_t>(i)] = -un1 + bump;
    out[static_cast<size_t>(n - 2)] = bump;
  } else {
    std::vector<Rat> inner = cex_path_coords(n - 1, lambda - (un + 1));
    for (int i = 0; i + 2 < n; ++i)
      out[static_cast<size_t>(i)] = -(un1 + 1) + inner[static_cast<size_t>(i)];
    out[static_cast<size_t>(n - 2)] = -1 + inner[static_cast<size_t>(n - 2)];
  }
  out[static_cast<size_t>(n - 1)] = -lambda;
  return out;
}

void collect_cex_kinks(int n, std::vector<Rat>& out) {
  out.push_back(Rat(0));
  if (n == 1) return;
  const Rat un = cex_u(n);
  std::vector<Rat> inner;
  collect_cex_kinks(n - 1, inner);
  for (const Rat& k : inner)
    if (k <= un - 1) out.push_back(k);
  out.push_back(un - 1);
  out.push_back(un);
  out.push_back(un + 1);
  for (const Rat& k : inner) out.push_back(un + 1 + k);
}

}  // namespace

TropVector cex_tropical_path_point(int n, const Rat& lambda) {
  if (n < 1) throw std::invalid_argument("cex_tropical_path_point: n must be >= 1");
  std::vector<Rat> coords = cex_path_coords(n, lambda);
  TropVector out(n);
  for (int i = 0; i < n; ++i) out[i] = TropValue(std::move(coords[static_cast<size_t>(i)]));
  return out;
}

TropSolveResult generic_tropical_path_point(const TropPolyhedron& K, const TropVector& c,
                                            const Rat& lambda) {
  return barycenter(add_level_constraint(K, c, lambda));
}

BreakpointPath cex_path_breakpoints(int n, const Rat& lo, const Rat& hi) {
  if (lo > hi) throw std::invalid_argument("cex_path_breakpoints: empty interval");
  std::vector<Rat> kinks;
  collect_cex_kinks(n, kinks);
  std::set<Rat> grid;
  grid.insert(lo);
  grid.insert(hi);
  for (const Rat& k : kinks)
    if (lo < k && k < hi) grid.insert(k);
  std::vector<Rat> lambdas(grid.begin(), grid.end());
  std::vector<TropVector> points;
  points.reserve(lambdas.size());
  for (const Rat& l : lambdas) points.push_back(cex_tropical_path_point(n, l));
  return make_breakpoint_path(std::move(lambdas), std::move(points));
}

long gamma(const BreakpointPath& path) {
  if (path.supports.empty()) return 0;
  long runs = 1;
  for (size_t k = 1; k < path.supports.size(); ++k) {
    if (!subset_of(path.supports[k], path.supports[k - 1])) ++runs;
  }
  return runs;
}

long gamma_cex(int n, const Rat& lo, const Rat& hi) {
  if (lo >= hi) return 0;
  return gamma(cex_path_breakpoints(n, lo, hi));
}

namespace {

struct GenericSampler {
  const TropPolyhedron& level_base;
  const TropVector& cost;

  TropVector operator()(const Rat& lambda) const {
    TropSolveResult r = generic_tropical_path_point(level_base, cost, lambda);
    if (!r.ok()) throw MalformedPathError("generic_path_breakpoints: barycenter failed");
    return r.point;
  }
};

// True when b - a equals -(step)·e^K for the change set K of the pair.
bool unit_slope(const TropVector& a, const TropVector& b, const Rat& step) {
  for (int i = 0; i < a.dim(); ++i) {
    if (a[i] == b[i]) continue;
    if (!a[i].is_finite() || !b[i].is_finite()) return false;
    if (a[i].value() - b[i].value() != step) return false;
  }
  return true;
}

}  // namespace

GenericPathResult generic_path_breakpoints(const TropPolyhedron& K, const TropVector& c,
                                           const Rat& lo, const Rat& hi, const Rat& resolution) {
  if (lo > hi) throw std::invalid_argument("generic_path_breakpoints: empty interval");
  GenericSampler sample{K, c};

  std::vector<Rat> lambdas{lo};
  std::vector<TropVector> points{sample(lo)};
  std::vector<bool> clean;  // per piece

  // Depth-first subdivision; a piece is accepted once both the endpoint
  // difference and the midpoint agree with a -e^K motion.
  struct Span {
    Rat a, b;
    TropVector pa, pb;
  };
  std::vector<Span> stack;
  if (lo < hi) stack.push_back({lo, hi, points[0], sample(hi)});
  while (!stack.empty()) {
    Span s = stack.back();
    stack.pop_back();
    const Rat width = s.b - s.a;
    bool accept = false;
    if (s.pa == s.pb) {
      accept = true;
    } else if (unit_slope(s.pa, s.pb, width)) {
      const Rat mid = (s.a + s.b) / 2;
      TropVector pm = sample(mid);
      if (unit_slope(s.pa, pm, mid - s.a) && unit_slope(pm, s.pb, s.b - mid)) accept = true;
    }
    if (accept || width <= resolution) {
      lambdas.push_back(s.b);
      points.push_back(s.pb);
      clean.push_back(accept);
      continue;
    }
    // Split at the simplest rational in the middle third, so breakpoints at
    // low-denominator parameters are hit exactly instead of being straddled.
    const Rat mid = simplest_rational_between(s.a + width / 3, s.b - width / 3);
    TropVector pm = sample(mid);
    // Right half is pushed first so the left half is processed next.
    stack.push_back({mid, s.b, pm, s.pb});
    stack.push_back({s.a, mid, s.pa, pm});
  }

  GenericPathResult out;
  out.path.lambdas = std::move(lambdas);
  out.path.points = std::move(points);
  for (size_t k = 0; k + 1 < out.path.points.size(); ++k) {
    std::vector<int> moving;
    const TropVector& a = out.path.points[k];
    const TropVector& b = out.path.points[k + 1];
    for (int i = 0; i < a.dim(); ++i)
      if (a[i] != b[i]) moving.push_back(i);
    out.path.supports.push_back(std::move(moving));
    if (!clean[k]) out.unresolved_pieces.push_back(k);
  }
  return out;
}

std::optional<Rat> d_inf_point_to_path(const BreakpointPath& path, const TropVector& p) {
  if (path.points.empty()) throw MalformedPathError("d_inf_point_to_path: empty path");
  if (p.dim() != path.dim()) throw DimensionError("d_inf_point_to_path: dimension mismatch");

  std::optional<Rat> best = d_inf(p, path.points.front());
  auto consider = [&](const Rat& candidate) {
    if (!best || candidate < *best) best = candidate;
  };

  for (size_t k = 0; k < path.piece_count(); ++k) {
    const TropVector& b = path.points[k];
    const Rat span = path.lambdas[k + 1] - path.lambdas[k];
    const std::vector<int>& moving = path.supports[k];

    // Static coordinates pin a floor on the distance; support mismatch
    // anywhere makes the whole piece unreachable.
    bool reachable = true;
    Rat floor(0);
    std::vector<char> is_moving(static_cast<size_t>(p.dim()), 0);
    for (int i : moving) is_moving[static_cast<size_t>(i)] = 1;
    for (int i = 0; i < p.dim() && reachable; ++i) {
      if (is_moving[static_cast<size_t>(i)]) continue;
      if (p[i].is_finite() != b[i].is_finite()) reachable = false;
      else if (p[i].is_finite()) {
        Rat gap = p[i].value() - b[i].value();
        if (gap < 0) gap = -gap;
        floor = std::max(floor, gap);
      }
    }
    if (!reachable) continue;

    // Moving coordinates: minimize max_i |d_i + s| over s in [0, span].
    Rat lo_d(0), hi_d(0);
    bool have = false;
    bool ok = true;
    for (int i : moving) {
      if (!p[i].is_finite() || !b[i].is_finite()) {
        ok = false;
        break;
      }
      Rat d = p[i].value() - b[i].value();
      if (!have) {
        lo_d = hi_d = d;
        have = true;
      } else {
        lo_d = std::min(lo_d, d);
        hi_d = std::max(hi_d, d);
      }
    }
    if (!ok) continue;
    Rat piece_dist = floor;
    if (have) {
      Rat s = -(lo_d + hi_d) / 2;
      s = std::max(Rat(0), std::min(span, s));
      Rat g = std::max(abs(lo_d + s), abs(hi_d + s));
      piece_dist = std::max(piece_dist, g);
    }
    consider(piece_dist);
  }
  return best;
}

bool tube_contains(const Tube& tube, const std::vector<TropVector>& curve) {
  for (const TropVector& p : curve) {
    std::optional<Rat> d = d_inf_point_to_path(tube.path, p);
    if (!d || *d > tube.radius) return false;
  }
  return true;
}

}  // namespace tropipm
