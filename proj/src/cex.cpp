#include "tropipm/cex.hpp"

#include "tropipm/linalg.hpp"
#include "tropipm/path.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace tropipm {

MonomialLP build_cex(int n) {
  if (n < 1) throw std::invalid_argument("build_cex: n must be >= 1");
  MonomialLP lp;
  lp.n = n;
  lp.objective.assign(static_cast<size_t>(n), Monomial::zero());
  lp.objective[static_cast<size_t>(n - 1)] = Monomial{Rat(1), Rat(0)};

  auto blank_row = [n]() {
    MonomialRow row;
    row.coeffs.assign(static_cast<size_t>(n), Monomial::zero());
    return row;
  };

  // Coupling rows i = 1..n-1.
  for (int i = 1; i <= n - 1; ++i) {
    MonomialRow row = blank_row();
    for (int j = 1; j < i; ++j) row.coeffs[static_cast<size_t>(j - 1)] = {Rat(1), -cex_u(i)};
    row.coeffs[static_cast<size_t>(i - 1)] = {Rat(1), -cex_u(i + 1) + 1};
    for (int j = i + 1; j <= n - 1; ++j) row.coeffs[static_cast<size_t>(j - 1)] = {Rat(-1), -cex_u(j)};
    row.coeffs[static_cast<size_t>(n - 1)] = {Rat(-1), Rat(0)};
    row.rhs = {Rat(1), -cex_u(n)};
    lp.rows.push_back(std::move(row));
  }

  // Simplex row.
  {
    MonomialRow row = blank_row();
    for (int j = 0; j < n; ++j) row.coeffs[static_cast<size_t>(j)] = {Rat(1), Rat(0)};
    row.rhs = {Rat(1), Rat(0)};
    lp.rows.push_back(std::move(row));
  }

  // Chain head 0 <= x_1; for n = 1 the chain degenerates to 0 <= t^{u_1} x_1.
  {
    MonomialRow row = blank_row();
    row.coeffs[0] = n == 1 ? Monomial{Rat(-1), cex_u(1)} : Monomial{Rat(-1), Rat(0)};
    lp.rows.push_back(std::move(row));
  }

  // Chain x_i <= x_{i+1} for i = 1..n-2, then x_{n-1} <= t^{u_n} x_n.
  for (int i = 1; i <= n - 2; ++i) {
    MonomialRow row = blank_row();
    row.coeffs[static_cast<size_t>(i - 1)] = {Rat(1), Rat(0)};
    row.coeffs[static_cast<size_t>(i)] = {Rat(-1), Rat(0)};
    lp.rows.push_back(std::move(row));
  }
  if (n >= 2) {
    MonomialRow row = blank_row();
    row.coeffs[static_cast<size_t>(n - 2)] = {Rat(1), Rat(0)};
    row.coeffs[static_cast<size_t>(n - 1)] = {Rat(-1), cex_u(n)};
    lp.rows.push_back(std::move(row));
  }
  return lp;
}

TropPolyhedron tropicalize(const MonomialLP& lp) {
  TropPolyhedron P;
  P.dimension = lp.n;
  for (const MonomialRow& row : lp.rows) {
    TropInequality q;
    q.lhs.coeffs = TropVector::bottom(lp.n);
    q.rhs.coeffs = TropVector::bottom(lp.n);
    for (int j = 0; j < lp.n; ++j) {
      const Monomial& m = row.coeffs[static_cast<size_t>(j)];
      if (m.coeff == 0) continue;
      (m.coeff > 0 ? q.lhs : q.rhs).coeffs[j] = TropValue(m.exponent);
    }
    if (row.rhs.coeff > 0) q.rhs.constant = TropValue(row.rhs.exponent);
    else if (row.rhs.coeff < 0) q.lhs.constant = TropValue(row.rhs.exponent);
    P.inequalities.push_back(std::move(q));
  }
  return P;
}

TropPolyhedron build_tcex(int n) {
  if (n < 1) throw std::invalid_argument("build_tcex: n must be >= 1");
  TropPolyhedron P;
  P.dimension = n;
  auto blank = [n]() {
    TropInequality q;
    q.lhs.coeffs = TropVector::bottom(n);
    q.rhs.coeffs = TropVector::bottom(n);
    return q;
  };

  // Coupling rows:
  //   max_{j<i}(-u_i + x_j) ∨ (-u_{i+1} + 1 + x_i)
  //     <= max_{i<j<=n-1}(-u_j + x_j) ∨ x_n ∨ (-u_n).
  for (int i = 1; i <= n - 1; ++i) {
    TropInequality q = blank();
    for (int j = 1; j < i; ++j) q.lhs.coeffs[j - 1] = TropValue(-cex_u(i));
    q.lhs.coeffs[i - 1] = TropValue(-cex_u(i + 1) + 1);
    for (int j = i + 1; j <= n - 1; ++j) q.rhs.coeffs[j - 1] = TropValue(-cex_u(j));
    q.rhs.coeffs[n - 1] = TropValue(Rat(0));
    q.rhs.constant = TropValue(-cex_u(n));
    P.inequalities.push_back(std::move(q));
  }

  // max_j x_j <= 0.
  {
    TropInequality q = blank();
    for (int j = 0; j < n; ++j) q.lhs.coeffs[j] = TropValue(Rat(0));
    q.rhs.constant = TropValue(Rat(0));
    P.inequalities.push_back(std::move(q));
  }

  // Chain: -inf <= x_1 (vacuous; u_1 + x_1 when n = 1), x_i <= x_{i+1},
  // x_{n-1} <= u_n + x_n.
  {
    TropInequality q = blank();
    q.rhs.coeffs[0] = n == 1 ? TropValue(cex_u(1)) : TropValue(Rat(0));
    P.inequalities.push_back(std::move(q));
  }
  for (int i = 1; i <= n - 2; ++i) {
    TropInequality q = blank();
    q.lhs.coeffs[i - 1] = TropValue(Rat(0));
    q.rhs.coeffs[i] = TropValue(Rat(0));
    P.inequalities.push_back(std::move(q));
  }
  if (n >= 2) {
    TropInequality q = blank();
    q.lhs.coeffs[n - 2] = TropValue(Rat(0));
    q.rhs.coeffs[n - 1] = TropValue(cex_u(n));
    P.inequalities.push_back(std::move(q));
  }
  return P;
}

RationalPolytope instantiate(const MonomialLP& lp, const Rat& s) {
  if (s <= 1) throw std::domain_error("instantiate: s must exceed 1");
  auto entry = [&](const Monomial& m) {
    if (m.coeff == 0) return Rat(0);
    const Rat doubled = 2 * m.exponent;
    if (!is_integer(doubled))
      throw std::domain_error("instantiate: exponent is not a half-integer");
    return m.coeff * rat_pow(s, doubled.convert_to<long>());
  };
  RationalPolytope out;
  out.n = lp.n;
  out.s = s;
  out.t = s * s;
  for (const MonomialRow& row : lp.rows) {
    std::vector<Rat> a;
    a.reserve(row.coeffs.size());
    for (const Monomial& m : row.coeffs) a.push_back(entry(m));
    out.A.push_back(std::move(a));
    out.b.push_back(entry(row.rhs));
  }
  return out;
}

namespace {

std::vector<Rat> residuals(const RationalPolytope& p, const std::vector<Rat>& x) {
  std::vector<Rat> out;
  out.reserve(p.A.size());
  for (size_t r = 0; r < p.A.size(); ++r) {
    Rat acc = -p.b[r];
    for (int j = 0; j < p.n; ++j) acc += p.A[r][static_cast<size_t>(j)] * x[static_cast<size_t>(j)];
    out.push_back(std::move(acc));  // <= 0 iff satisfied
  }
  return out;
}

}  // namespace

FaceLatticeReport enumerate_vertices(const RationalPolytope& p) {
  const int n = p.n;
  const int m = static_cast<int>(p.A.size());
  if (n > 6) throw std::domain_error("enumerate_vertices: guarded to n <= 6");

  std::map<std::vector<Rat>, std::vector<int>> found;  // vertex -> tight rows
  std::vector<int> basis(static_cast<size_t>(n));
  auto visit = [&](const std::vector<int>& rows_idx) {
    std::vector<std::vector<Rat>> M;
    std::vector<Rat> rhs;
    for (int r : rows_idx) {
      M.push_back(p.A[static_cast<size_t>(r)]);
      rhs.push_back(p.b[static_cast<size_t>(r)]);
    }
    auto x = solve_linear_rational(std::move(M), std::move(rhs));
    if (!x) return;  // degenerate subsystem
    std::vector<Rat> res = residuals(p, *x);
    for (const Rat& r : res)
      if (r > 0) return;  // infeasible basis
    std::vector<int> tight;
    for (int r = 0; r < m; ++r)
      if (res[static_cast<size_t>(r)] == 0) tight.push_back(r);
    found.emplace(std::move(*x), std::move(tight));
  };

  // All n-subsets of the m rows.
  std::vector<int> idx(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) idx[static_cast<size_t>(i)] = i;
  while (true) {
    visit(idx);
    int k = n - 1;
    while (k >= 0 && idx[static_cast<size_t>(k)] == m - n + k) --k;
    if (k < 0) break;
    ++idx[static_cast<size_t>(k)];
    for (int j = k + 1; j < n; ++j) idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
  }

  FaceLatticeReport report;
  for (auto& [vertex, tight] : found) {
    report.vertices.push_back(vertex);
    report.facet_incidence.push_back(tight);
  }
  report.simple = std::all_of(report.facet_incidence.begin(), report.facet_incidence.end(),
                              [n](const std::vector<int>& t) {
                                return static_cast<int>(t.size()) == n;
                              });

  // Opposite facets share no vertex; a cube pairs all 2n facets perfectly.
  const size_t vcount = report.vertices.size();
  bool counts_ok = vcount == (size_t{1} << n);
  if (counts_ok && report.simple) {
    std::vector<std::set<int>> facet_vertices(static_cast<size_t>(m));
    for (size_t v = 0; v < vcount; ++v)
      for (int r : report.facet_incidence[v]) facet_vertices[static_cast<size_t>(r)].insert(static_cast<int>(v));
    std::vector<int> partner(static_cast<size_t>(m), -1);
    bool pairing_ok = true;
    for (int a = 0; a < m && pairing_ok; ++a) {
      int partners = 0;
      for (int bidx = 0; bidx < m; ++bidx) {
        if (a == bidx) continue;
        const auto& va = facet_vertices[static_cast<size_t>(a)];
        const auto& vb = facet_vertices[static_cast<size_t>(bidx)];
        bool disjoint = std::none_of(va.begin(), va.end(),
                                     [&](int v) { return vb.count(v) > 0; });
        if (disjoint) {
          ++partners;
          partner[static_cast<size_t>(a)] = bidx;
        }
      }
      if (partners != 1 || facet_vertices[static_cast<size_t>(a)].empty()) pairing_ok = false;
    }
    if (pairing_ok) {
      for (int a = 0; a < m; ++a) {
        if (partner[static_cast<size_t>(partner[static_cast<size_t>(a)])] != a) pairing_ok = false;
      }
    }
    if (pairing_ok) {
      report.is_cube = true;
      for (int a = 0; a < m; ++a)
        if (a < partner[static_cast<size_t>(a)])
          report.facet_pairs.emplace_back(a, partner[static_cast<size_t>(a)]);
    }
  }
  return report;
}

bool fm_feasible(std::vector<std::vector<Rat>> A, std::vector<Rat> b) {
  if (A.size() != b.size()) throw std::invalid_argument("fm_feasible: row mismatch");
  const size_t n = A.empty() ? 0 : A[0].size();

  auto normalize_insert = [](std::map<std::vector<Rat>, Rat>& rows, std::vector<Rat> a, Rat rhs) {
    Rat scale(0);
    for (const Rat& v : a)
      if (v != 0) {
        scale = abs(v);
        break;
      }
    if (scale != 0) {
      for (Rat& v : a) v /= scale;
      rhs /= scale;
    }
    auto it = rows.find(a);
    if (it == rows.end()) rows.emplace(std::move(a), std::move(rhs));
    else it->second = std::min(it->second, rhs);
  };

  for (size_t var = 0; var < n; ++var) {
    std::vector<size_t> pos, neg;
    std::map<std::vector<Rat>, Rat> next;
    for (size_t r = 0; r < A.size(); ++r) {
      const Rat& c = A[r][var];
      if (c > 0) pos.push_back(r);
      else if (c < 0) neg.push_back(r);
      else normalize_insert(next, A[r], b[r]);
    }
    for (size_t pi : pos) {
      for (size_t ni : neg) {
        const Rat wp = -A[ni][var];  // > 0
        const Rat wn = A[pi][var];   // > 0
        std::vector<Rat> row(n, Rat(0));
        for (size_t j = 0; j < n; ++j) row[j] = wp * A[pi][j] + wn * A[ni][j];
        normalize_insert(next, std::move(row), wp * b[pi] + wn * b[ni]);
      }
    }
    A.clear();
    b.clear();
    for (auto& [a, rhs] : next) {
      bool all_zero = std::all_of(a.begin(), a.end(), [](const Rat& v) { return v == 0; });
      if (all_zero) {
        if (rhs < 0) return false;
        continue;
      }
      A.push_back(a);
      b.push_back(rhs);
    }
    if (A.size() > 200000)
      throw std::runtime_error("fm_feasible: row explosion, system too large");
  }
  for (const Rat& rhs : b)
    if (rhs < 0) return false;
  return true;
}

namespace {

bool faces_disjoint(const RationalPolytope& p, int row_a, int row_b) {
  // Tightness of row r is encoded by appending its negation.
  std::vector<std::vector<Rat>> A = p.A;
  std::vector<Rat> b = p.b;
  for (int r : {row_a, row_b}) {
    std::vector<Rat> neg = p.A[static_cast<size_t>(r)];
    for (Rat& v : neg) v = -v;
    A.push_back(std::move(neg));
    b.push_back(-p.b[static_cast<size_t>(r)]);
  }
  return !fm_feasible(std::move(A), std::move(b));
}

}  // namespace

bool check_disjoint_faces(const RationalPolytope& p) {
  const int n = p.n;
  return faces_disjoint(p, n - 1, 2 * n - 1);  // simplex row, chain tail
}

std::vector<FacetPairCheck> check_facet_pairing(const RationalPolytope& p) {
  const int n = p.n;
  std::vector<FacetPairCheck> out;
  if (n >= 2) out.push_back({n, 0, faces_disjoint(p, n, 0)});  // chain head vs coupling 1
  for (int i = 1; i <= n - 2; ++i)
    out.push_back({n + i, i, faces_disjoint(p, n + i, i)});    // x_i = x_{i+1} vs coupling i+1
  out.push_back({n - 1, 2 * n - 1, check_disjoint_faces(p)});  // simplex vs chain tail
  return out;
}

std::pair<TropVector, bool> strict_interior_perturbation(const TropVector& x, const Rat& eps) {
  if (eps < 0) throw std::domain_error("strict_interior_perturbation: eps must be >= 0");
  const int n = x.dim();
  for (int i = 0; i < n; ++i)
    if (!x[i].is_finite())
      throw std::invalid_argument("strict_interior_perturbation: input must have full support");
  const TropPolyhedron P = build_tcex(n);
  if (!is_feasible(P, x))
    throw std::invalid_argument("strict_interior_perturbation: input is infeasible");

  TropVector y = x;
  Rat weight = rat_pow(Rat(2), n - 1);
  for (int i = 0; i < n; ++i) {
    y[i] = y[i] - eps * weight;
    weight /= 2;
  }
  bool strict = std::all_of(P.inequalities.begin(), P.inequalities.end(),
                            [&](const TropInequality& q) { return q.lhs.value(y) < q.rhs.value(y); });
  return {y, strict};
}

}  // namespace tropipm
