#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "testutil.hpp"
#include "tropipm/bigfloat.hpp"
#include "tropipm/cex.hpp"
#include "tropipm/io.hpp"
#include "tropipm/path.hpp"
#include "tropipm/reports.hpp"

#include <algorithm>

using namespace tropipm;
using namespace tropipm::testutil;

namespace {

bool polytope_feasible(const RationalPolytope& p, const std::vector<Rat>& x) {
  for (size_t r = 0; r < p.A.size(); ++r) {
    Rat acc(0);
    for (int j = 0; j < p.n; ++j) acc += p.A[r][static_cast<size_t>(j)] * x[static_cast<size_t>(j)];
    if (acc > p.b[r]) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("build_cex structure") {
  for (int n = 1; n <= 6; ++n) {
    const MonomialLP lp = build_cex(n);
    CHECK(lp.n == n);
    CHECK(lp.rows.size() == static_cast<size_t>(2 * n));
    CHECK(lp.objective[static_cast<size_t>(n - 1)].coeff == 1);
    for (int j = 0; j + 1 < n; ++j) CHECK(lp.objective[static_cast<size_t>(j)].is_zero());
  }

  // Exponent multiset of the n = 3 instance: u_1 = 1/2, u_2 = 2, u_3 = 5.
  const MonomialLP lp3 = build_cex(3);
  CHECK(lp3.rows[0].coeffs[0].exponent == -cex_u(2) + 1);  // coupling 1: t^{-u_2+1} x_1
  CHECK(lp3.rows[0].coeffs[1].exponent == -cex_u(2));      // -t^{-u_2} x_2 moves right
  CHECK(lp3.rows[0].coeffs[1].coeff == -1);
  CHECK(lp3.rows[0].rhs.exponent == -cex_u(3));
  CHECK(lp3.rows[1].coeffs[0].exponent == -cex_u(2));      // coupling 2: t^{-u_2} x_1
  CHECK(lp3.rows[1].coeffs[1].exponent == -cex_u(3) + 1);
  CHECK(lp3.rows[5].coeffs[2].exponent == cex_u(3));       // chain tail t^{u_3} x_3

  // n = 1: x_1 <= 1 and the degenerate chain 0 <= t^{1/2} x_1.
  const MonomialLP lp1 = build_cex(1);
  REQUIRE(lp1.rows.size() == 2);
  CHECK(lp1.rows[0].coeffs[0].coeff == 1);
  CHECK(lp1.rows[0].rhs.coeff == 1);
  CHECK(lp1.rows[1].coeffs[0].coeff == -1);
  CHECK(lp1.rows[1].coeffs[0].exponent == Rat(1, 2));

  CHECK(cex_u(4) == 11);  // target exponent -2u_4 = -22
}

TEST_CASE("tropicalize agrees with the direct tropical construction") {
  for (int n = 1; n <= 6; ++n) {
    CHECK(tropicalize(build_cex(n)) == build_tcex(n));
  }
}

TEST_CASE("tcex_2 rows written out") {
  const TropPolyhedron P = build_tcex(2);
  REQUIRE(P.inequalities.size() == 4);

  // -1 + x_1 <= x_2 ∨ (-2)
  const TropInequality& coupling = P.inequalities[0];
  CHECK(coupling.lhs.coeffs[0] == TropValue(Rat(-1)));
  CHECK(coupling.lhs.coeffs[1].is_neg_inf());
  CHECK(coupling.lhs.constant.is_neg_inf());
  CHECK(coupling.rhs.coeffs[1] == TropValue(Rat(0)));
  CHECK(coupling.rhs.constant == TropValue(Rat(-2)));

  // x_1 ∨ x_2 <= 0
  const TropInequality& simplex = P.inequalities[1];
  CHECK(simplex.lhs.coeffs[0] == TropValue(Rat(0)));
  CHECK(simplex.lhs.coeffs[1] == TropValue(Rat(0)));
  CHECK(simplex.rhs.constant == TropValue(Rat(0)));

  // -inf <= x_1 (vacuous head)
  const TropInequality& head = P.inequalities[2];
  CHECK(head.lhs.coeffs.support().empty());
  CHECK(head.lhs.constant.is_neg_inf());
  CHECK(head.rhs.coeffs[0] == TropValue(Rat(0)));

  // x_1 <= 2 + x_2
  const TropInequality& tail = P.inequalities[3];
  CHECK(tail.lhs.coeffs[0] == TropValue(Rat(0)));
  CHECK(tail.rhs.coeffs[1] == TropValue(Rat(2)));
}

TEST_CASE("tcex feasibility spot checks") {
  for (int n = 1; n <= 5; ++n) {
    const TropPolyhedron P = build_tcex(n);
    CHECK(is_feasible(P, TropVector::zeros(n)));
    for (const Rat lambda : {Rat(0), Rat(3), Rat(17, 2)}) {
      TropVector spike(n);
      spike[n - 1] = TropValue(std::min(Rat(0), Rat(-lambda)));
      CHECK(is_feasible(P, spike));
    }
  }
}

TEST_CASE("instantiate computes exact entries") {
  CHECK_THROWS_AS(instantiate(build_cex(2), Rat(1)), std::domain_error);
  CHECK_THROWS_AS(instantiate(build_cex(2), Rat(1, 2)), std::domain_error);

  // n = 1, s = 3: the chain row carries t^{1/2} = s.
  const RationalPolytope p1 = instantiate(build_cex(1), Rat(3));
  CHECK(p1.t == 9);
  CHECK(p1.A[1][0] == -3);

  // n = 3, s = 2 (t = 4): the origin is feasible, so is the Fig-style
  // vertex (0, 0, 1).
  const RationalPolytope p3 = instantiate(build_cex(3), Rat(2));
  CHECK(polytope_feasible(p3, {Rat(0), Rat(0), Rat(0)}));
  CHECK(polytope_feasible(p3, {Rat(0), Rat(0), Rat(1)}));
  CHECK(p3.A[0][0] == Rat(1, 4));     // t^{-u_2+1} = 4^{-1}
  CHECK(p3.A[1][2] == -1);            // -x_3 in coupling 2
  CHECK(p3.b[0] == rat_pow(Rat(4), -5));

  // n = 2, s = 10 (t = 100): (t^{-1}, t^{-1}) is feasible.
  const RationalPolytope p2 = instantiate(build_cex(2), Rat(10));
  CHECK(polytope_feasible(p2, {Rat(1, 100), Rat(1, 100)}));
}

TEST_CASE("vertex enumeration finds the cube structure") {
  const RationalPolytope p3 = instantiate(build_cex(3), Rat(2));  // t = 4
  const FaceLatticeReport rep = enumerate_vertices(p3);
  CHECK(rep.vertices.size() == 8);
  CHECK(rep.simple);
  CHECK(rep.is_cube);
  CHECK(rep.facet_pairs.size() == 3);

  const std::vector<Rat> origin{Rat(0), Rat(0), Rat(0)};
  const std::vector<Rat> apex{Rat(0), Rat(0), Rat(1)};
  CHECK(std::find(rep.vertices.begin(), rep.vertices.end(), origin) != rep.vertices.end());
  CHECK(std::find(rep.vertices.begin(), rep.vertices.end(), apex) != rep.vertices.end());

  const RationalPolytope p2 = instantiate(build_cex(2), Rat(10));
  const FaceLatticeReport rep2 = enumerate_vertices(p2);
  CHECK(rep2.vertices.size() == 4);
  CHECK(rep2.is_cube);

  const RationalPolytope p1 = instantiate(build_cex(1), Rat(10));
  const FaceLatticeReport rep1 = enumerate_vertices(p1);
  CHECK(rep1.vertices.size() == 2);
  CHECK(rep1.is_cube);
}

TEST_CASE("every enumerated vertex is feasible with enough tight rows") {
  for (const Rat s : {Rat(2), Rat(10)}) {
    const RationalPolytope p = instantiate(build_cex(4), s);
    const FaceLatticeReport rep = enumerate_vertices(p);
    CHECK(rep.vertices.size() == 16);
    for (size_t v = 0; v < rep.vertices.size(); ++v) {
      CHECK(polytope_feasible(p, rep.vertices[v]));
      CHECK(rep.facet_incidence[v].size() >= 4);
    }
  }
}

TEST_CASE("figure vertex at s = 8/5") {
  const FaceRunResult run = run_faces(3, Rat(8, 5));  // t = 2.56
  CHECK(run.lattice.vertices.size() == 8);
  REQUIRE(run.fig_vertex_checked);
  CHECK(run.fig_vertex_distance <= Rat(5, 1000));
}

TEST_CASE("fm_feasible on tiny systems") {
  // x >= 0, x <= 2, -x <= -1 is feasible; adding x <= 1/2 kills it.
  std::vector<std::vector<Rat>> A{{Rat(-1)}, {Rat(1)}, {Rat(-1)}};
  std::vector<Rat> b{Rat(0), Rat(2), Rat(-1)};
  CHECK(fm_feasible(A, b));
  A.push_back({Rat(1)});
  b.push_back(Rat(1, 2));
  CHECK_FALSE(fm_feasible(A, b));

  // Unconstrained variable eliminates to nothing.
  CHECK(fm_feasible({{Rat(1), Rat(1)}}, {Rat(0)}));
}

TEST_CASE("disjoint faces at large t") {
  CHECK(check_disjoint_faces(instantiate(build_cex(2), Rat(10))));
  CHECK(check_disjoint_faces(instantiate(build_cex(3), Rat(10))));
}

TEST_CASE("facet pairing at large t, threshold sweep at small t") {
  const auto pairing3 = check_facet_pairing(instantiate(build_cex(3), Rat(10)));
  REQUIRE(pairing3.size() == 3);
  for (const FacetPairCheck& c : pairing3) CHECK(c.disjoint);

  // n = 4 at the nearest exactly representable stand-in for t = 1000.
  const auto pairing4 = check_facet_pairing(instantiate(build_cex(4), Rat(32)));  // t = 1024
  REQUIRE(pairing4.size() == 4);
  for (const FacetPairCheck& c : pairing4) CHECK(c.disjoint);

  // Smallest tested s with every pair disjoint; exactness restricts the
  // sweep to t = s^2.
  Rat first_pass(0);
  for (long s = 2; s <= 10; ++s) {
    const auto checks = check_facet_pairing(instantiate(build_cex(3), Rat(s)));
    if (std::all_of(checks.begin(), checks.end(),
                    [](const FacetPairCheck& c) { return c.disjoint; })) {
      first_pass = Rat(s);
      break;
    }
  }
  CHECK(first_pass > 0);
  CHECK(first_pass <= 10);
  MESSAGE("smallest tested s with all pairs disjoint (n=3): ", format_rational(first_pass));
}

TEST_CASE("facet pairing cross-checked against vertex incidence") {
  // Two faces of a polytope are disjoint iff no vertex is tight on both.
  for (int n = 2; n <= 4; ++n) {
    const RationalPolytope p = instantiate(build_cex(n), Rat(10));
    const FaceLatticeReport rep = enumerate_vertices(p);
    for (const FacetPairCheck& c : check_facet_pairing(p)) {
      bool shared = false;
      for (const auto& tight : rep.facet_incidence) {
        const bool has_a = std::find(tight.begin(), tight.end(), c.row_a) != tight.end();
        const bool has_b = std::find(tight.begin(), tight.end(), c.row_b) != tight.end();
        if (has_a && has_b) shared = true;
      }
      CHECK(c.disjoint == !shared);
    }
  }
}

TEST_CASE("strict interior perturbation") {
  auto [y, strict] = strict_interior_perturbation(TropVector::zeros(3), Rat(1, 10));
  CHECK(y == tv_rat({Rat(-2, 5), Rat(-1, 5), Rat(-1, 10)}));
  CHECK(strict);

  auto [same, strict0] = strict_interior_perturbation(TropVector::zeros(3), Rat(0));
  CHECK(same == TropVector::zeros(3));
  CHECK_FALSE(strict0);

  auto [z, strict2] = strict_interior_perturbation(cex_tropical_path_point(3, Rat(5)), Rat(1, 100));
  CHECK(strict2);

  CHECK_THROWS_AS(strict_interior_perturbation(tv({1, 0, 0}), Rat(1, 10)),
                  std::invalid_argument);
}

TEST_CASE("log image of vertices approaches the tropical system") {
  set_precision_bits(192);
  const TropPolyhedron tk = build_tcex(3);
  std::vector<Rat> worst;
  for (const Rat s : {Rat(10), Rat(100)}) {  // t = 100, 10000
    const BigFloat t = to_bigfloat(s * s);
    const FaceLatticeReport rep = enumerate_vertices(instantiate(build_cex(3), s));
    Rat w(0);
    for (const auto& vertex : rep.vertices) {
      std::vector<TropValue> lg;
      for (const Rat& c : vertex)
        lg.push_back(c == 0 ? TropValue::neg_inf()
                            : TropValue(to_rational(log_base(t, to_bigfloat(c)))));
      auto d = d_inf_to_polyhedron(tk, TropVector(std::move(lg)), Rat(1, 1024), Rat(64));
      REQUIRE(d.has_value());
      w = std::max(w, *d);
    }
    worst.push_back(w);
  }
  // Deviation shrinks along the ladder and the fitted constant stays in a
  // narrow band: d(t) · log t within a factor 3 across the two instances.
  CHECK(worst[1] < worst[0]);
  const double c0 = worst[0].convert_to<double>() * std::log(100.0);
  const double c1 = worst[1].convert_to<double>() * std::log(10000.0);
  CHECK(c1 <= 3 * c0 + 1e-9);
  CHECK(c0 <= 3 * c1 + 1e-9);
}

TEST_CASE("monomial LP serialization round trip") {
  const MonomialLP lp = build_cex(3);
  const MonomialLP back = monomial_lp_from_json(monomial_lp_to_json(lp));
  CHECK(back.n == lp.n);
  REQUIRE(back.rows.size() == lp.rows.size());
  for (size_t r = 0; r < lp.rows.size(); ++r) {
    for (size_t j = 0; j < lp.rows[r].coeffs.size(); ++j) {
      CHECK(back.rows[r].coeffs[j].coeff == lp.rows[r].coeffs[j].coeff);
      CHECK(back.rows[r].coeffs[j].exponent == lp.rows[r].coeffs[j].exponent);
    }
    CHECK(back.rows[r].rhs.coeff == lp.rows[r].rhs.coeff);
  }
  CHECK(tropicalize(back) == build_tcex(3));
}

TEST_CASE("polytope text dump") {
  const RationalPolytope p = instantiate(build_cex(1), Rat(2));
  CHECK(polytope_to_text(p) == "1 1\n-2 0\n");
}

TEST_CASE("tropical polyhedron serialization round trip") {
  const TropPolyhedron P = build_tcex(3);
  CHECK(polyhedron_from_json(polyhedron_to_json(P)) == P);
}
