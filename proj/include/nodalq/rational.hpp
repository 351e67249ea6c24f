#pragma once

// Exact scalar types shared by every module, plus Eigen interop.

#include <Eigen/Dense>
#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <string>
#include <string_view>

namespace nodalq {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

using Index = Eigen::Index;

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using Matrix4 = Eigen::Matrix<Scalar, 4, 4>;
template <typename Scalar>
using Vector4 = Eigen::Matrix<Scalar, 4, 1>;

using MatrixXq = MatrixX<Rational>;
using VectorXq = VectorX<Rational>;
using MatrixXz = MatrixX<Integer>;

inline Integer numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

/// Parses "p", "-p" or "p/q" in decimal. Throws ParseError on malformed input
/// or a zero denominator.
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

/// Canonical text form: "p" for integers, "p/q" otherwise (lowest terms).
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Converts an exact scalar to the requested scalar type (identity for
/// Rational, nearest double for floating types).
template <typename Scalar>
Scalar scalar_cast(const Rational& q) {
  if constexpr (std::is_same_v<Scalar, Rational>) {
    return q;
  } else {
    return q.template convert_to<Scalar>();
  }
}

}  // namespace nodalq
