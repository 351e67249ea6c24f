#include "nodalq/severi.hpp"

#include "nodalq/linalg.hpp"

#include <algorithm>

namespace nodalq {

NodeSet::NodeSet(std::vector<ProjPointQ> nodes) : nodes_(std::move(nodes)) {
  std::vector<ProjPointQ> sorted = nodes_;
  std::sort(sorted.begin(), sorted.end());
  const auto dup = std::adjacent_find(sorted.begin(), sorted.end());
  if (dup != sorted.end()) throw DuplicateNode("point " + to_string(*dup) + " listed twice");
}

MatrixXq evaluation_matrix(const NodeSet& nodes) {
  const auto basis = monomial_basis(4);
  MatrixXq m(nodes.delta(), static_cast<Index>(basis.size()));
  for (int r = 0; r < nodes.delta(); ++r) {
    const auto& c = nodes.nodes()[static_cast<std::size_t>(r)].coords();
    for (std::size_t k = 0; k < basis.size(); ++k) {
      Integer v = 1;
      for (std::size_t i = 0; i < 4; ++i) v *= boost::multiprecision::pow(c[i], static_cast<unsigned>(basis[k][i]));
      m(r, static_cast<Index>(k)) = Rational(v);
    }
  }
  return m;
}

SeveriReport independence_report(const NodeSet& nodes) {
  SeveriReport r;
  r.delta = nodes.delta();
  r.eval_rank = static_cast<int>(rank(evaluation_matrix(nodes)));
  r.independent = r.eval_rank == r.delta;
  r.ideal_dim = kQuarticMonomials - r.eval_rank;
  r.severi_tangent_dim = kQuarticMonomials - 1 - r.eval_rank;
  r.bound_ok = r.delta <= kMaxQuarticNodes;
  return r;
}

SeveriReport independence_test(const HomogPoly& f, const NodeSet& nodes) {
  if (f.degree() != 4) throw InvalidArgument("independence_test expects a quartic");
  for (const auto& p : nodes.nodes()) {
    const auto report = certify_point(f, p);
    if (report.classification != Classification::Node)
      throw NotANode(to_string(p) + " classifies as " + to_string(report.classification));
  }
  return independence_report(nodes);
}

}  // namespace nodalq
