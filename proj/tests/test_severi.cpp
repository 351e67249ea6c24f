#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nodalq/kummer.hpp"
#include "nodalq/severi.hpp"
#include "support/oracles.hpp"

using namespace nodalq;

namespace {

ProjPointQ pt(long a, long b, long c, long d) { return ProjPointQ({a, b, c, d}); }

}  // namespace

TEST_CASE("evaluation matrix layout") {
  const MatrixXq m = evaluation_matrix(NodeSet({pt(0, 0, 0, 1)}));
  REQUIRE(m.rows() == 1);
  REQUIRE(m.cols() == 35);
  CHECK(m(0, 0) == 1);  // w^4 comes first in graded-lex order
  for (Index k = 1; k < 35; ++k) CHECK(m(0, k) == 0);

  const MatrixXq two = evaluation_matrix(NodeSet({pt(1, 0, 0, 0), pt(0, 1, 0, 0)}));
  CHECK(rank(two) == 2);

  const MatrixXq general = evaluation_matrix(NodeSet({pt(1, 2, -1, 3)}));
  const auto basis = monomial_basis(4);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    Rational expected = 1;
    const std::array<int, 4> c{1, 2, -1, 3};
    for (std::size_t i = 0; i < 4; ++i)
      for (int e = 0; e < basis[k][i]; ++e) expected *= c[i];
    CHECK(general(0, static_cast<Index>(k)) == expected);
  }
}

TEST_CASE("duplicate nodes are rejected") {
  CHECK_THROWS_AS(NodeSet({pt(1, 2, 3, 4), pt(-2, -4, -6, -8)}), DuplicateNode);
}

TEST_CASE("independence_test: one node") {
  const auto [f, p] = one_node_example();
  const auto r = independence_test(f, NodeSet({p}));
  CHECK(r.delta == 1);
  CHECK(r.eval_rank == 1);
  CHECK(r.independent);
  CHECK(r.ideal_dim == 34);
  CHECK(r.severi_tangent_dim == 33);
  CHECK(r.bound_ok);
  CHECK_FALSE(r.violation());
}

TEST_CASE("independence_test: empty node set") {
  const auto r = independence_test(fermat_quartic(), NodeSet{});
  CHECK(r.delta == 0);
  CHECK(r.eval_rank == 0);
  CHECK(r.ideal_dim == 35);
  CHECK(r.severi_tangent_dim == 34);
  CHECK(r.independent);
}

TEST_CASE("independence_test: Kummer surface with sixteen nodes") {
  const auto k = kummer_from_sextic(SexticCurve::from_roots({0, 1, 2, 3, 4, 5}));
  const auto r = independence_test(k.quartic, NodeSet(k.node_candidates));
  CHECK(r.delta == 16);
  CHECK(r.eval_rank == 16);
  CHECK(r.independent);
  CHECK(r.ideal_dim == 19);
  CHECK(r.severi_tangent_dim == 18);
  CHECK(r.bound_ok);
}

TEST_CASE("independence_test re-certifies its input") {
  const auto [f, p] = one_node_example();
  CHECK_THROWS_AS(independence_test(f, NodeSet({p, pt(1, 1, 1, 1)})), NotANode);
  CHECK_THROWS_AS(independence_test(fermat_quartic(), NodeSet({pt(0, 0, 0, 1)})), NotANode);
}

TEST_CASE("more than sixteen points trips the bound guard") {
  std::vector<ProjPointQ> pts;
  for (int i = 0; i < 17; ++i) pts.push_back(pt(i + 1, i * i + 2, 3 * i + 5, i * i * i + 7));
  const auto r = independence_report(NodeSet(pts));
  CHECK(r.delta == 17);
  CHECK_FALSE(r.bound_ok);
  CHECK(r.violation());
  CHECK(r.ideal_dim == 35 - r.eval_rank);
}

TEST_CASE("points on a twisted cubic impose dependent conditions") {
  // Quartics restrict to binary forms of degree 12 on the twisted cubic,
  // so at most 13 independent conditions.
  std::vector<ProjPointQ> pts;
  for (long t = 0; t < 15; ++t) pts.push_back(pt(1, t, t * t, t * t * t));
  const auto r = independence_report(NodeSet(pts));
  CHECK(r.eval_rank == 13);
  CHECK_FALSE(r.independent);
  CHECK(r.violation());
}

TEST_CASE("rank bounds and monotonicity") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<ProjPointQ> pts;
    int previous = 0;
    for (int k = 0; k < 40; ++k) {
      const auto p = ProjPointQ::from_rational(nodalq::testing::random_point(rng, 4));
      if (std::find(pts.begin(), pts.end(), p) != pts.end()) continue;
      pts.push_back(p);
      const auto r = independence_report(NodeSet(pts));
      CHECK(r.eval_rank >= previous);
      CHECK(r.eval_rank <= std::min(r.delta, 35));
      previous = r.eval_rank;
    }
  }
}

TEST_CASE("eval rank is PGL4 invariant") {
  std::mt19937_64 rng(13);
  const auto k = kummer_from_sextic(SexticCurve::from_roots({0, 1, 2, 3, 4, 5}));
  for (int trial = 0; trial < 5; ++trial) {
    const Matrix4<Rational> m = nodalq::testing::random_invertible(rng);
    const Matrix4<Rational> inv = m.inverse();
    std::vector<ProjPointQ> moved;
    for (const auto& p : k.node_candidates) moved.push_back(ProjPointQ::from_rational(inv * p.as_rational()));
    const auto r = independence_test(compose_linear(k.quartic, m), NodeSet(moved));
    CHECK(r.eval_rank == 16);
    CHECK(r.ideal_dim == 19);
  }
}
