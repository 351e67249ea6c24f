#pragma once

// Homogeneous polynomials in the four variables x, y, z, w of P^3, with
// exact rational coefficients.

#include "nodalq/errors.hpp"
#include "nodalq/rational.hpp"

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace nodalq {

inline constexpr int kVariables = 4;

/// Exponent quadruple (e0, e1, e2, e3) of x^e0 y^e1 z^e2 w^e3.
using Monomial = std::array<int, kVariables>;

int total_degree(const Monomial& m);

/// Strict graded-lex comparison: by total degree, then lexicographically on
/// the exponent quadruple.
bool graded_lex_less(const Monomial& a, const Monomial& b);

struct GradedLexLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return graded_lex_less(a, b); }
};

/// All monomials of total degree d, strictly increasing in graded-lex order.
/// The result has C(d+3, 3) entries; for d = 4 these index the 35
/// homogeneous coordinates of the space of quartics.
std::vector<Monomial> monomial_basis(int degree);

/// Position of `m` in monomial_basis(total_degree(m)).
std::size_t monomial_index(const Monomial& m);

class HomogPoly {
 public:
  using TermMap = std::map<Monomial, Rational, GradedLexLess>;

  /// The zero polynomial of the given degree.
  explicit HomogPoly(int degree = 0);

  /// Builds from a term list; zero coefficients are dropped and repeated
  /// monomials are summed. Throws InvalidArgument if a monomial has a
  /// negative exponent or the wrong total degree.
  HomogPoly(int degree, const std::vector<std::pair<Monomial, Rational>>& terms);

  static HomogPoly constant(const Rational& c);
  static HomogPoly variable(int i);

  int degree() const { return degree_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const Monomial& m) const;

  /// Coefficients against monomial_basis(degree()).
  VectorXq coefficient_vector() const;

  HomogPoly& operator+=(const HomogPoly& other);
  HomogPoly& operator-=(const HomogPoly& other);
  HomogPoly& operator*=(const Rational& c);

  friend HomogPoly operator+(HomogPoly a, const HomogPoly& b) { return a += b; }
  friend HomogPoly operator-(HomogPoly a, const HomogPoly& b) { return a -= b; }
  friend HomogPoly operator-(HomogPoly a) { return a *= Rational(-1); }
  friend HomogPoly operator*(HomogPoly a, const Rational& c) { return a *= c; }
  friend HomogPoly operator*(const Rational& c, HomogPoly a) { return a *= c; }
  friend HomogPoly operator*(const HomogPoly& a, const HomogPoly& b);

  friend bool operator==(const HomogPoly& a, const HomogPoly& b) {
    return a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

 private:
  void add_term(const Monomial& m, const Rational& c);

  int degree_;
  TermMap terms_;
};

HomogPoly pow(const HomogPoly& f, int exponent);

/// Human-readable form such as "x^4 + y^4 - 2*z^2*w^2".
std::string to_string(const HomogPoly& f);

/// Exact value for Rational points, IEEE value for floating points.
template <typename Scalar>
Scalar evaluate(const HomogPoly& f, const Vector4<Scalar>& p) {
  Scalar sum(0);
  for (const auto& [m, c] : f.terms()) {
    Scalar term = scalar_cast<Scalar>(c);
    for (int i = 0; i < kVariables; ++i)
      for (int e = 0; e < m[static_cast<std::size_t>(i)]; ++e) term *= p(i);
    sum += term;
  }
  return sum;
}

HomogPoly partial_derivative(const HomogPoly& f, int variable);

/// The four partial derivatives, each of degree degree(f) - 1.
/// Requires degree(f) >= 1.
std::array<HomogPoly, kVariables> gradient(const HomogPoly& f);

using PolyMatrix4 = std::array<std::array<HomogPoly, kVariables>, kVariables>;

/// Symmetric matrix of second partials; requires degree(f) >= 2.
PolyMatrix4 hessian(const HomogPoly& f);

template <typename Scalar>
Vector4<Scalar> evaluate(const std::array<HomogPoly, kVariables>& g, const Vector4<Scalar>& p) {
  Vector4<Scalar> out;
  for (int i = 0; i < kVariables; ++i) out(i) = evaluate(g[static_cast<std::size_t>(i)], p);
  return out;
}

template <typename Scalar>
Matrix4<Scalar> evaluate(const PolyMatrix4& h, const Vector4<Scalar>& p) {
  Matrix4<Scalar> out;
  for (int i = 0; i < kVariables; ++i)
    for (int j = 0; j < kVariables; ++j)
      out(i, j) = evaluate(h[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)], p);
  return out;
}

/// The pulled-back form x -> f(M x).
HomogPoly compose_linear(const HomogPoly& f, const Matrix4<Rational>& m);

}  // namespace nodalq
