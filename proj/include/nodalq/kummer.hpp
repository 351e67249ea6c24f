#pragma once

// Fixture surfaces: Kummer quartics of genus-2 Jacobians with all sixteen
// nodes rational, and small nodal/smooth companions.

#include "nodalq/nodal.hpp"

#include <array>
#include <optional>
#include <utility>
#include <vector>

namespace nodalq {

/// The curve y^2 = f0 + f1 x + ... + f6 x^6.
struct SexticCurve {
  std::array<Rational, 7> f;
  std::optional<std::vector<Rational>> roots;

  /// f = leading * prod (x - r). Throws RepeatedRoot for a repeated root and
  /// InvalidArgument unless there are 5 or 6 roots and leading != 0.
  static SexticCurve from_roots(const std::vector<Rational>& roots, const Rational& leading = 1);
};

struct KummerOutput {
  HomogPoly quartic;
  std::vector<ProjPointQ> node_candidates;
  std::vector<SingularPointReport> reports;
};

/// Quartic model K2 k4^2 + K1 k4 + K0 of the Kummer surface in the
/// coordinates (k1 : k2 : k3 : k4), mapped to (x : y : z : w).
HomogPoly kummer_quartic(const SexticCurve& curve);

/// Quartic plus its sixteen nodes: (0:0:0:1) and, for every pair of roots
/// {a, b}, (1 : a + b : ab : -K1 / (2 K2)). Every candidate is certified
/// exactly; the first failure raises CertificationFailure. Requires six
/// distinct rational roots (NotSplit / RepeatedRoot otherwise).
KummerOutput kummer_from_sextic(const SexticCurve& curve);

/// x^4 + y^4 + z^4 - w^2 (x^2 + y^2 + z^2), whose only singular point is the
/// node (0:0:0:1).
std::pair<HomogPoly, ProjPointQ> one_node_example();

/// The smooth Fermat quartic x^4 + y^4 + z^4 + w^4.
HomogPoly fermat_quartic();

}  // namespace nodalq
