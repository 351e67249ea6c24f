#pragma once

// Independence of node conditions on the linear system of quartics.

#include "nodalq/nodal.hpp"

#include <vector>

namespace nodalq {

inline constexpr int kQuarticMonomials = 35;  // dim H^0(O_P3(4))
inline constexpr int kMaxQuarticNodes = 16;

/// Ordered list of pairwise distinct points of P^3. Construction throws
/// DuplicateNode when two canonical representatives coincide. Node status is
/// not part of the type; independence_test re-certifies against a surface.
class NodeSet {
 public:
  NodeSet() = default;
  explicit NodeSet(std::vector<ProjPointQ> nodes);

  const std::vector<ProjPointQ>& nodes() const { return nodes_; }
  int delta() const { return static_cast<int>(nodes_.size()); }

 private:
  std::vector<ProjPointQ> nodes_;
};

struct SeveriReport {
  int delta = 0;
  int eval_rank = 0;
  bool independent = true;
  int ideal_dim = kQuarticMonomials;           // dim H^0(I_Delta(4))
  int severi_tangent_dim = kQuarticMonomials - 1;
  bool bound_ok = true;

  /// True when the report contradicts the expected geometry of a nodal
  /// quartic (dependent conditions or more than 16 nodes).
  bool violation() const { return !independent || !bound_ok; }

  friend bool operator==(const SeveriReport&, const SeveriReport&) = default;
};

/// delta x 35 matrix whose row r holds the degree-4 monomials (graded-lex
/// order) evaluated at the canonical integer representative of node r.
MatrixXq evaluation_matrix(const NodeSet& nodes);

/// Rank bookkeeping only; no certification of the points.
SeveriReport independence_report(const NodeSet& nodes);

/// Re-certifies every point as a node of f (NotANode otherwise), then
/// reports the rank of the node conditions.
SeveriReport independence_test(const HomogPoly& f, const NodeSet& nodes);

}  // namespace nodalq
