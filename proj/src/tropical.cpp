#include "tropipm/tropical.hpp"

#include <algorithm>
#include <set>

namespace tropipm {

namespace {

void require_same_dim(const TropVector& a, const TropVector& b, const char* who) {
  if (a.dim() != b.dim()) throw DimensionError(std::string(who) + ": dimension mismatch");
}

}  // namespace

TropVector join(const TropVector& a, const TropVector& b) {
  require_same_dim(a, b, "join");
  TropVector out(a.dim());
  for (int i = 0; i < a.dim(); ++i) out[i] = max(a[i], b[i]);
  return out;
}

bool leq(const TropVector& a, const TropVector& b) {
  require_same_dim(a, b, "leq");
  for (int i = 0; i < a.dim(); ++i)
    if (!(a[i] <= b[i])) return false;
  return true;
}

TropValue trop_dot(const TropVector& c, const TropVector& x) {
  require_same_dim(c, x, "trop_dot");
  TropValue acc = TropValue::neg_inf();
  for (int i = 0; i < c.dim(); ++i) acc = max(acc, c[i] + x[i]);
  return acc;
}

std::optional<Rat> d_inf(const TropVector& u, const TropVector& v) {
  require_same_dim(u, v, "d_inf");
  Rat best(0);
  for (int i = 0; i < u.dim(); ++i) {
    if (u[i].is_finite() != v[i].is_finite()) return std::nullopt;
    if (!u[i].is_finite()) continue;
    Rat gap = u[i].value() - v[i].value();
    if (gap < 0) gap = -gap;
    if (gap > best) best = gap;
  }
  return best;
}

TropVector trop_segment_point(const TropVector& u, const TropVector& v,
                              const TropValue& lambda, const TropValue& mu) {
  require_same_dim(u, v, "trop_segment_point");
  if (!(max(lambda, mu) == TropValue(Rat(0))))
    throw std::invalid_argument("trop_segment_point: weights must satisfy max(λ, μ) = 0");
  return join(u.shifted(lambda), v.shifted(mu));
}

TropSegmentDecomposition trop_segment_decompose(const TropVector& u, const TropVector& v) {
  require_same_dim(u, v, "trop_segment_decompose");
  const int n = u.dim();

  TropSegmentDecomposition out;
  auto push_point = [&](const TropVector& p) {
    if (!out.breakpoints.empty() && out.breakpoints.back() == p) return;
    if (!out.breakpoints.empty()) {
      std::vector<int> dir(static_cast<size_t>(n), 0);
      const TropVector& prev = out.breakpoints.back();
      for (int i = 0; i < n; ++i) {
        if (prev[i] == p[i]) continue;
        dir[static_cast<size_t>(i)] = prev[i] < p[i] ? 1 : -1;
      }
      out.directions.push_back(std::move(dir));
    }
    out.breakpoints.push_back(p);
  };

  push_point(u);

  // Ascending half: u ∨ (v + s e) for s rising to 0. Coordinate i starts
  // moving once s exceeds u_i - v_i.
  std::set<Rat> up;
  for (int i = 0; i < n; ++i) {
    if (!v[i].is_finite() || !u[i].is_finite()) continue;
    Rat threshold = u[i].value() - v[i].value();
    if (threshold < 0) up.insert(threshold);
  }
  for (const Rat& s : up) push_point(join(u, v.shifted(TropValue(s))));
  push_point(join(u, v));

  // Descending half: (u + s e) ∨ v for s falling from 0. Coordinate i
  // freezes once s drops below v_i - u_i.
  std::set<Rat, std::greater<Rat>> down;
  for (int i = 0; i < n; ++i) {
    if (!v[i].is_finite() || !u[i].is_finite()) continue;
    Rat threshold = v[i].value() - u[i].value();
    if (threshold < 0) down.insert(threshold);
  }
  for (const Rat& s : down) push_point(join(u.shifted(TropValue(s)), v));
  push_point(v);

  return out;
}

}  // namespace tropipm
