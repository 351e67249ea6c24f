#include "nodalq/kummer.hpp"

#include <algorithm>

namespace nodalq {

namespace {

HomogPoly term(const Rational& c, int e1, int e2, int e3, int e4) {
  return HomogPoly(e1 + e2 + e3 + e4, {{Monomial{e1, e2, e3, e4}, c}});
}

struct KummerForms {
  HomogPoly k2, k1, k0;  // coefficients of k4^2, k4^1, k4^0 (in k1, k2, k3)
};

KummerForms kummer_forms(const std::array<Rational, 7>& f) {
  const auto& [f0, f1, f2, f3, f4, f5, f6] = f;
  KummerForms out{term(1, 0, 2, 0, 0) + term(-4, 1, 0, 1, 0), HomogPoly(3), HomogPoly(4)};

  out.k1 = term(2 * f0, 3, 0, 0, 0) + term(f1, 2, 1, 0, 0) + term(2 * f2, 2, 0, 1, 0) + term(f3, 1, 1, 1, 0) +
           term(2 * f4, 1, 0, 2, 0) + term(f5, 0, 1, 2, 0) + term(2 * f6, 0, 0, 3, 0);
  out.k1 *= -2;

  out.k0 = term(f1 * f1 - 4 * f0 * f2, 4, 0, 0, 0) + term(-4 * f0 * f3, 3, 1, 0, 0) +
           term(-2 * f1 * f3, 3, 0, 1, 0) + term(-4 * f0 * f4, 2, 2, 0, 0) +
           term(4 * (f0 * f5 - f1 * f4), 2, 1, 1, 0) +
           term(f3 * f3 + 2 * f1 * f5 - 4 * f2 * f4 - 4 * f0 * f6, 2, 0, 2, 0) + term(-4 * f0 * f5, 1, 3, 0, 0) +
           term(4 * (2 * f0 * f6 - f1 * f5), 1, 2, 1, 0) + term(4 * (f1 * f6 - f2 * f5), 1, 1, 2, 0) +
           term(-2 * f3 * f5, 1, 0, 3, 0) + term(-4 * f0 * f6, 0, 4, 0, 0) + term(-4 * f1 * f6, 0, 3, 1, 0) +
           term(-4 * f2 * f6, 0, 2, 2, 0) + term(-4 * f3 * f6, 0, 1, 3, 0) + term(f5 * f5 - 4 * f4 * f6, 0, 0, 4, 0);
  return out;
}

}  // namespace

SexticCurve SexticCurve::from_roots(const std::vector<Rational>& roots, const Rational& leading) {
  if (roots.size() != 5 && roots.size() != 6) throw InvalidArgument("a genus-2 sextic needs 5 or 6 roots");
  if (leading == 0) throw InvalidArgument("leading coefficient must be nonzero");
  std::vector<Rational> sorted = roots;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw RepeatedRoot("roots must be distinct");
  std::vector<Rational> poly{leading};  // ascending coefficients
  for (const auto& r : roots) {
    std::vector<Rational> next(poly.size() + 1, Rational(0));
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] += poly[i];
      next[i] -= r * poly[i];
    }
    poly = std::move(next);
  }
  SexticCurve c;
  for (std::size_t i = 0; i < 7; ++i) c.f[i] = i < poly.size() ? poly[i] : Rational(0);
  c.roots = roots;
  return c;
}

HomogPoly kummer_quartic(const SexticCurve& curve) {
  if (std::all_of(curve.f.begin(), curve.f.end(), [](const Rational& c) { return c == 0; }))
    throw InvalidArgument("sextic is identically zero");
  const KummerForms k = kummer_forms(curve.f);
  const HomogPoly w = HomogPoly::variable(3);
  return k.k2 * w * w + k.k1 * w + k.k0;
}

KummerOutput kummer_from_sextic(const SexticCurve& curve) {
  if (!curve.roots || curve.roots->size() != 6)
    throw NotSplit("kummer_from_sextic needs six rational roots");
  const auto& roots = *curve.roots;
  {
    std::vector<Rational> sorted = roots;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw RepeatedRoot("roots must be distinct");
  }
  if (curve.f != SexticCurve::from_roots(roots, curve.f[6]).f)
    throw InvalidArgument("listed roots do not reproduce the sextic");

  const KummerForms k = kummer_forms(curve.f);
  KummerOutput out{kummer_quartic(curve), {}, {}};
  out.node_candidates.emplace_back(std::array<Integer, 4>{0, 0, 0, 1});
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = i + 1; j < roots.size(); ++j) {
      const Rational& a = roots[i];
      const Rational& b = roots[j];
      const Vector4<Rational> base(Rational(1), a + b, a * b, Rational(0));
      const Rational k4 = -evaluate(k.k1, base) / (2 * evaluate(k.k2, base));
      out.node_candidates.push_back(ProjPointQ::from_rational(Vector4<Rational>(Rational(1), a + b, a * b, k4)));
    }
  for (const auto& p : out.node_candidates) {
    auto report = certify_point(out.quartic, p);
    if (report.classification != Classification::Node)
      throw CertificationFailure(to_string(p) + " classifies as " + to_string(report.classification));
    out.reports.push_back(std::move(report));
  }
  return out;
}

std::pair<HomogPoly, ProjPointQ> one_node_example() {
  HomogPoly f = term(1, 4, 0, 0, 0) + term(1, 0, 4, 0, 0) + term(1, 0, 0, 4, 0) + term(-1, 2, 0, 0, 2) +
                term(-1, 0, 2, 0, 2) + term(-1, 0, 0, 2, 2);
  return {std::move(f), ProjPointQ({0, 0, 0, 1})};
}

HomogPoly fermat_quartic() {
  return term(1, 4, 0, 0, 0) + term(1, 0, 4, 0, 0) + term(1, 0, 0, 4, 0) + term(1, 0, 0, 0, 4);
}

}  // namespace nodalq
