#include "nodalq/qpoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace nodalq {

namespace {

bool is_decimal_integer(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

}  // namespace

Integer parse_integer(std::string_view text) {
  if (!is_decimal_integer(text)) throw ParseError("not a decimal integer: '" + std::string(text) + "'");
  if (text.front() == '+') text.remove_prefix(1);
  return Integer(std::string(text));
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  const Integer num = parse_integer(text.substr(0, slash));
  const Integer den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Rational(num) / Rational(den);
}

std::string to_string(const Integer& z) { return z.str(); }

std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

int total_degree(const Monomial& m) { return m[0] + m[1] + m[2] + m[3]; }

bool graded_lex_less(const Monomial& a, const Monomial& b) {
  const int da = total_degree(a);
  const int db = total_degree(b);
  if (da != db) return da < db;
  return a < b;
}

std::vector<Monomial> monomial_basis(int degree) {
  if (degree < 0) throw InvalidArgument("monomial_basis: negative degree");
  std::vector<Monomial> out;
  for (int a = 0; a <= degree; ++a)
    for (int b = 0; a + b <= degree; ++b)
      for (int c = 0; a + b + c <= degree; ++c) out.push_back({a, b, c, degree - a - b - c});
  std::sort(out.begin(), out.end(), graded_lex_less);
  return out;
}

std::size_t monomial_index(const Monomial& m) {
  const auto basis = monomial_basis(total_degree(m));
  const auto it = std::lower_bound(basis.begin(), basis.end(), m, graded_lex_less);
  if (it == basis.end() || *it != m) throw InvalidArgument("monomial_index: invalid monomial");
  return static_cast<std::size_t>(it - basis.begin());
}

HomogPoly::HomogPoly(int degree) : degree_(degree) {
  if (degree < 0) throw InvalidArgument("HomogPoly: negative degree");
}

HomogPoly::HomogPoly(int degree, const std::vector<std::pair<Monomial, Rational>>& terms) : HomogPoly(degree) {
  for (const auto& [m, c] : terms) add_term(m, c);
}

HomogPoly HomogPoly::constant(const Rational& c) { return HomogPoly(0, {{Monomial{0, 0, 0, 0}, c}}); }

HomogPoly HomogPoly::variable(int i) {
  if (i < 0 || i >= kVariables) throw InvalidArgument("HomogPoly::variable: index out of range");
  Monomial m{0, 0, 0, 0};
  m[static_cast<std::size_t>(i)] = 1;
  return HomogPoly(1, {{m, Rational(1)}});
}

void HomogPoly::add_term(const Monomial& m, const Rational& c) {
  if (std::any_of(m.begin(), m.end(), [](int e) { return e < 0; }))
    throw InvalidArgument("HomogPoly: negative exponent");
  if (total_degree(m) != degree_)
    throw InvalidArgument("HomogPoly: monomial of degree " + std::to_string(total_degree(m)) +
                          " in a polynomial of degree " + std::to_string(degree_));
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational HomogPoly::coefficient(const Monomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

VectorXq HomogPoly::coefficient_vector() const {
  const auto basis = monomial_basis(degree_);
  VectorXq v = VectorXq::Zero(static_cast<Index>(basis.size()));
  for (std::size_t k = 0; k < basis.size(); ++k) v(static_cast<Index>(k)) = coefficient(basis[k]);
  return v;
}

HomogPoly& HomogPoly::operator+=(const HomogPoly& other) {
  if (other.is_zero()) return *this;
  if (degree_ != other.degree_) throw InvalidArgument("HomogPoly: adding polynomials of different degrees");
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

HomogPoly& HomogPoly::operator-=(const HomogPoly& other) { return *this += -other; }

HomogPoly& HomogPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

HomogPoly operator*(const HomogPoly& a, const HomogPoly& b) {
  HomogPoly out(a.degree() + b.degree());
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      Monomial m;
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      out.add_term(m, ca * cb);
    }
  return out;
}

HomogPoly pow(const HomogPoly& f, int exponent) {
  if (exponent < 0) throw InvalidArgument("pow: negative exponent");
  HomogPoly result = HomogPoly::constant(1);
  HomogPoly base = f;
  while (exponent > 0) {
    if (exponent & 1) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

std::string to_string(const HomogPoly& f) {
  if (f.is_zero()) return "0";
  static constexpr const char* names[] = {"x", "y", "z", "w"};
  std::ostringstream os;
  bool first = true;
  // Highest monomial first reads naturally (x^4 before w^4).
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    bool wrote = false;
    if (mag != 1 || total_degree(m) == 0) {
      os << to_string(mag);
      wrote = true;
    }
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (wrote) os << '*';
      os << names[i];
      if (m[i] > 1) os << '^' << m[i];
      wrote = true;
    }
  }
  return os.str();
}

HomogPoly partial_derivative(const HomogPoly& f, int variable) {
  if (variable < 0 || variable >= kVariables) throw InvalidArgument("partial_derivative: bad variable");
  if (f.degree() == 0) throw InvalidArgument("partial_derivative: degree-0 polynomial");
  const auto v = static_cast<std::size_t>(variable);
  std::vector<std::pair<Monomial, Rational>> terms;
  for (const auto& [m, c] : f.terms()) {
    if (m[v] == 0) continue;
    Monomial d = m;
    d[v] -= 1;
    terms.emplace_back(d, c * m[v]);
  }
  return HomogPoly(f.degree() - 1, terms);
}

std::array<HomogPoly, kVariables> gradient(const HomogPoly& f) {
  if (f.degree() < 1) throw InvalidArgument("gradient: degree must be at least 1");
  return {partial_derivative(f, 0), partial_derivative(f, 1), partial_derivative(f, 2),
          partial_derivative(f, 3)};
}

PolyMatrix4 hessian(const HomogPoly& f) {
  if (f.degree() < 2) throw InvalidArgument("hessian: degree must be at least 2");
  const auto g = gradient(f);
  PolyMatrix4 h;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i; j < 4; ++j) {
      h[i][j] = partial_derivative(g[i], static_cast<int>(j));
      h[j][i] = h[i][j];
    }
  return h;
}

HomogPoly compose_linear(const HomogPoly& f, const Matrix4<Rational>& m) {
  std::array<HomogPoly, kVariables> images;
  for (int i = 0; i < kVariables; ++i) {
    HomogPoly row(1);
    for (int j = 0; j < kVariables; ++j) row += m(i, j) * HomogPoly::variable(j);
    images[static_cast<std::size_t>(i)] = row;
  }
  std::array<std::vector<HomogPoly>, kVariables> powers;
  for (std::size_t i = 0; i < 4; ++i) {
    powers[i].push_back(HomogPoly::constant(1));
    for (int e = 1; e <= f.degree(); ++e) powers[i].push_back(powers[i].back() * images[i]);
  }
  HomogPoly out(f.degree());
  for (const auto& [mono, c] : f.terms()) {
    HomogPoly term = HomogPoly::constant(c);
    for (std::size_t i = 0; i < 4; ++i) term = term * powers[i][static_cast<std::size_t>(mono[i])];
    out += term;
  }
  return out;
}

}  // namespace nodalq
