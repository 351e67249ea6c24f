#include "nodalq/nodal.hpp"

#include "nodalq/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace nodalq {

ProjPointQ::ProjPointQ(const std::array<Integer, 4>& coords) : coords_(coords) {
  Integer g = 0;
  for (const auto& c : coords_) g = boost::multiprecision::gcd(g, c);
  if (g == 0) throw InvalidArgument("ProjPointQ: all coordinates are zero");
  const auto first = std::find_if(coords_.begin(), coords_.end(), [](const Integer& c) { return c != 0; });
  if (*first < 0) g = -g;
  for (auto& c : coords_) c /= g;
}

ProjPointQ ProjPointQ::from_rational(const Vector4<Rational>& coords) {
  Integer l = 1;
  for (int i = 0; i < 4; ++i) l = boost::multiprecision::lcm(l, denominator(coords(i)));
  std::array<Integer, 4> ints;
  for (int i = 0; i < 4; ++i)
    ints[static_cast<std::size_t>(i)] = numerator(coords(i)) * (l / denominator(coords(i)));
  return ProjPointQ(ints);
}

Vector4<Rational> ProjPointQ::as_rational() const {
  Vector4<Rational> v;
  for (int i = 0; i < 4; ++i) v(i) = Rational(coords_[static_cast<std::size_t>(i)]);
  return v;
}

Vector4<double> ProjPointQ::as_double() const {
  Vector4<double> v;
  for (int i = 0; i < 4; ++i) v(i) = coords_[static_cast<std::size_t>(i)].convert_to<double>();
  return v;
}

std::string to_string(const ProjPointQ& p) {
  const auto& c = p.coords();
  return "(" + c[0].str() + ":" + c[1].str() + ":" + c[2].str() + ":" + c[3].str() + ")";
}

std::string to_string(Classification c) {
  switch (c) {
    case Classification::Smooth: return "Smooth";
    case Classification::Node: return "Node";
    case Classification::NonNodeSingular: return "NonNodeSingular";
    case Classification::NotOnSurface: return "NotOnSurface";
  }
  return "?";
}

std::string to_string(CertificationMode m) { return m == CertificationMode::Exact ? "Exact" : "Numerical"; }

Classification parse_classification(const std::string& s) {
  for (auto c : {Classification::Smooth, Classification::Node, Classification::NonNodeSingular,
                 Classification::NotOnSurface})
    if (to_string(c) == s) return c;
  throw ParseError("unknown classification '" + s + "'");
}

Classification classify(bool on_surface, bool gradient_vanishes, int hessian_rank) {
  if (!on_surface) return Classification::NotOnSurface;
  if (!gradient_vanishes) return Classification::Smooth;
  return hessian_rank == 3 ? Classification::Node : Classification::NonNodeSingular;
}

SingularPointReport certify_point(const HomogPoly& f, const ProjPointQ& p) {
  if (f.is_zero()) throw ZeroPolynomial("certify_point on the zero polynomial");
  if (f.degree() < 2) throw InvalidArgument("certify_point needs degree >= 2");
  const Vector4<Rational> x = p.as_rational();
  SingularPointReport r{p};
  r.on_surface = evaluate(f, x) == 0;
  r.gradient_vanishes = is_zero(evaluate(gradient(f), x));
  const Matrix4<Rational> h = evaluate(hessian(f), x);
  r.hessian_rank = static_cast<int>(rank(h));
  // Euler: H(p) p = (d - 1) grad F(p), so a singular point lies in ker H(p).
  if (r.gradient_vanishes && r.hessian_rank > 3)
    throw InternalError("Hessian of full rank at a singular point " + to_string(p));
  r.classification = classify(r.on_surface, r.gradient_vanishes, r.hessian_rank);
  r.mode = CertificationMode::Exact;
  return r;
}

Rational rationalize(double x, std::int64_t max_denominator) {
  if (!std::isfinite(x)) throw InvalidArgument("rationalize: non-finite input");
  if (max_denominator < 1) throw InvalidArgument("rationalize: max_denominator must be positive");
  // Continued-fraction convergents h/k of x.
  Integer h_prev = 1, h = static_cast<long long>(std::floor(x));
  Integer k_prev = 0, k = 1;
  long double frac = static_cast<long double>(x) - std::floor(static_cast<long double>(x));
  while (frac > 1e-18L) {
    const long double inv = 1.0L / frac;
    const long double a_ld = std::floor(inv);
    if (a_ld > 1e18L) break;
    const Integer a = static_cast<long long>(a_ld);
    const Integer k_next = a * k + k_prev;
    if (k_next > max_denominator) break;
    const Integer h_next = a * h + h_prev;
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
    frac = inv - a_ld;
    if (std::fabs(static_cast<double>(x) - h.convert_to<double>() / k.convert_to<double>()) <=
        4 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::fabs(x)))
      break;
  }
  return Rational(h) / Rational(k);
}

namespace {

// Floating copy of a polynomial with precomputed exponent lists.
struct FloatPoly {
  std::vector<std::pair<Monomial, double>> terms;

  explicit FloatPoly(const HomogPoly& f) {
    for (const auto& [m, c] : f.terms()) terms.emplace_back(m, c.convert_to<double>());
  }

  double operator()(const std::array<std::array<double, 8>, 4>& powers) const {
    double s = 0;
    for (const auto& [m, c] : terms)
      s += c * powers[0][static_cast<std::size_t>(m[0])] * powers[1][static_cast<std::size_t>(m[1])] *
           powers[2][static_cast<std::size_t>(m[2])] * powers[3][static_cast<std::size_t>(m[3])];
    return s;
  }
};

class FloatSurface {
 public:
  explicit FloatSurface(const HomogPoly& f) : value_(f) {
    if (f.degree() > 7) throw InvalidArgument("numerical search supports degree <= 7");
    const auto g = gradient(f);
    const auto h = hessian(f);
    for (std::size_t i = 0; i < 4; ++i) {
      gradient_.emplace_back(g[i]);
      for (std::size_t j = 0; j < 4; ++j) hessian_.emplace_back(h[i][j]);
    }
    for (const auto& [m, c] : f.terms()) scale_ = std::max(scale_, std::fabs(c.convert_to<double>()));
  }

  double scale() const { return scale_; }

  double value(const Vector4<double>& x) const { return value_(powers(x)); }

  Vector4<double> gradient_at(const Vector4<double>& x) const {
    const auto pw = powers(x);
    Vector4<double> g;
    for (int i = 0; i < 4; ++i) g(i) = gradient_[static_cast<std::size_t>(i)](pw);
    return g;
  }

  Matrix4<double> hessian_at(const Vector4<double>& x) const {
    const auto pw = powers(x);
    Matrix4<double> h;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) h(i, j) = hessian_[static_cast<std::size_t>(4 * i + j)](pw);
    return h;
  }

 private:
  static std::array<std::array<double, 8>, 4> powers(const Vector4<double>& x) {
    std::array<std::array<double, 8>, 4> pw;
    for (std::size_t i = 0; i < 4; ++i) {
      pw[i][0] = 1;
      for (std::size_t e = 1; e < 8; ++e) pw[i][e] = pw[i][e - 1] * x(static_cast<Index>(i));
    }
    return pw;
  }

  FloatPoly value_;
  std::vector<FloatPoly> gradient_;
  std::vector<FloatPoly> hessian_;
  double scale_ = 0;
};

// Gauss-Newton on grad F = 0 in the chart x_chart = 1.
std::optional<Vector4<double>> newton_in_chart(const FloatSurface& s, int chart, Vector4<double> x,
                                               const SearchConfig& cfg) {
  for (int step = 0; step < cfg.max_newton_steps; ++step) {
    const Vector4<double> r = s.gradient_at(x);
    const Matrix4<double> h = s.hessian_at(x);
    Eigen::Matrix<double, 4, 3> jac;
    for (int c = 0, k = 0; c < 4; ++c)
      if (c != chart) jac.col(k++) = h.col(c);
    const Eigen::Vector3d delta = jac.completeOrthogonalDecomposition().solve(-r);
    if (!delta.allFinite()) return std::nullopt;
    for (int c = 0, k = 0; c < 4; ++c)
      if (c != chart) x(c) += delta(k++);
    if (x.cwiseAbs().maxCoeff() > 1e8) return std::nullopt;
    if (delta.cwiseAbs().maxCoeff() <= cfg.tolerance * (1 + x.cwiseAbs().maxCoeff())) break;
  }
  return x;
}

double projective_distance(const Vector4<double>& a, const Vector4<double>& b) {
  return std::min((a - b).norm(), (a + b).norm());
}

int numerical_rank(const Matrix4<double>& h) {
  const Eigen::JacobiSVD<Matrix4<double>> svd(h);
  const auto& sv = svd.singularValues();
  if (sv(0) == 0) return 0;
  int r = 0;
  for (int i = 0; i < 4; ++i)
    if (sv(i) > 1e-6 * sv(0)) ++r;
  return r;
}

}  // namespace

std::vector<SingularCandidate> find_singular_numeric(const HomogPoly& f, const SearchConfig& config,
                                                     std::mt19937_64& rng) {
  if (f.degree() != 4) throw InvalidArgument("find_singular_numeric expects a quartic");
  if (f.is_zero()) throw ZeroPolynomial("find_singular_numeric on the zero polynomial");
  const FloatSurface surface(f);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);

  std::vector<Vector4<double>> clusters;
  for (int chart = 0; chart < 4; ++chart) {
    for (int seed = 0; seed < config.seed_count; ++seed) {
      Vector4<double> x;
      for (int i = 0; i < 4; ++i) x(i) = unit(rng);
      x(chart) = 1;
      const auto solved = newton_in_chart(surface, chart, x, config);
      if (!solved) continue;
      const Vector4<double> y = solved->normalized();
      const double residual = surface.gradient_at(y).cwiseAbs().maxCoeff() / surface.scale();
      if (!(residual <= 100 * config.tolerance)) continue;
      const bool seen = std::any_of(clusters.begin(), clusters.end(), [&](const Vector4<double>& c) {
        return projective_distance(c, y) < config.cluster_radius;
      });
      if (!seen) clusters.push_back(y);
    }
  }

  std::vector<SingularCandidate> exact;
  std::vector<SingularCandidate> numerical;
  for (const auto& y : clusters) {
    Index lead = 0;
    y.cwiseAbs().maxCoeff(&lead);
    Vector4<Rational> q;
    for (int i = 0; i < 4; ++i) q(i) = rationalize(y(i) / y(lead), config.max_height);
    SingularCandidate cand{certify_point(f, ProjPointQ::from_rational(q)), y,
                           surface.gradient_at(y).cwiseAbs().maxCoeff(), std::fabs(surface.value(y))};
    if (cand.report.on_surface && cand.report.gradient_vanishes) {
      const bool duplicate = std::any_of(exact.begin(), exact.end(), [&](const SingularCandidate& e) {
        return e.report.point == cand.report.point;
      });
      if (!duplicate) exact.push_back(std::move(cand));
    } else {
      auto& r = cand.report;
      r.on_surface = true;
      r.gradient_vanishes = true;
      r.hessian_rank = numerical_rank(surface.hessian_at(y));
      r.classification = classify(true, true, r.hessian_rank);
      r.mode = CertificationMode::Numerical;
      numerical.push_back(std::move(cand));
    }
  }
  std::sort(exact.begin(), exact.end(),
            [](const SingularCandidate& a, const SingularCandidate& b) { return a.report.point < b.report.point; });
  std::sort(numerical.begin(), numerical.end(), [](const SingularCandidate& a, const SingularCandidate& b) {
    return std::lexicographical_compare(a.approximation.begin(), a.approximation.end(), b.approximation.begin(),
                                        b.approximation.end());
  });
  exact.insert(exact.end(), std::make_move_iterator(numerical.begin()), std::make_move_iterator(numerical.end()));
  return exact;
}

}  // namespace nodalq
