#pragma once

// Exact dense linear algebra over Q and Z on Eigen matrices.
//
// Ranks and determinants go through fraction-free (Bareiss) elimination on
// integer matrices: every intermediate entry is a minor of the input, so
// the divisions are exact and entry growth stays polynomial. Subspace
// computations (kernels, images, solves) use Gauss-Jordan over Q, which is
// fine at the sizes this library deals with (a few dozen rows).

#include "nodalq/errors.hpp"
#include "nodalq/rational.hpp"

#include <optional>
#include <type_traits>
#include <vector>

namespace nodalq {

template <typename Scalar>
inline constexpr bool is_exact_v =
    std::is_same_v<Scalar, Rational> || std::is_same_v<Scalar, Integer>;

template <typename Derived>
bool is_zero(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  for (Index j = 0; j < a.cols(); ++j)
    for (Index i = 0; i < a.rows(); ++i)
      if (a(i, j) != Scalar(0)) return false;
  return true;
}

/// Scales each row by the lcm of its denominators. Row rank, kernel and the
/// vanishing of the determinant are unchanged.
template <typename Derived>
MatrixXz integer_rows(const Eigen::MatrixBase<Derived>& a, Integer* scale_product = nullptr) {
  static_assert(std::is_same_v<typename Derived::Scalar, Rational>);
  MatrixXz out(a.rows(), a.cols());
  Integer total = 1;
  for (Index i = 0; i < a.rows(); ++i) {
    Integer l = 1;
    for (Index j = 0; j < a.cols(); ++j) l = boost::multiprecision::lcm(l, denominator(a(i, j)));
    for (Index j = 0; j < a.cols(); ++j) {
      const Rational& q = a(i, j);
      out(i, j) = numerator(q) * (l / denominator(q));
    }
    total *= l;
  }
  if (scale_product) *scale_product = total;
  return out;
}

/// Exact product over Q carried out in Z: rows of `a` and columns of `b` are
/// cleared of denominators first, so each result entry is normalized once
/// instead of after every multiply-add.
template <typename DerivedA, typename DerivedB>
MatrixXq product(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("product: inner dimensions differ");
  std::vector<Integer> row_scale(static_cast<std::size_t>(a.rows()), Integer(1));
  std::vector<Integer> col_scale(static_cast<std::size_t>(b.cols()), Integer(1));
  for (Index i = 0; i < a.rows(); ++i)
    for (Index k = 0; k < a.cols(); ++k)
      row_scale[static_cast<std::size_t>(i)] = boost::multiprecision::lcm(row_scale[static_cast<std::size_t>(i)], denominator(a(i, k)));
  for (Index j = 0; j < b.cols(); ++j)
    for (Index k = 0; k < b.rows(); ++k)
      col_scale[static_cast<std::size_t>(j)] = boost::multiprecision::lcm(col_scale[static_cast<std::size_t>(j)], denominator(b(k, j)));
  MatrixXz az(a.rows(), a.cols()), bz(b.rows(), b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index k = 0; k < a.cols(); ++k)
      az(i, k) = numerator(a(i, k)) * (row_scale[static_cast<std::size_t>(i)] / denominator(a(i, k)));
  for (Index j = 0; j < b.cols(); ++j)
    for (Index k = 0; k < b.rows(); ++k)
      bz(k, j) = numerator(b(k, j)) * (col_scale[static_cast<std::size_t>(j)] / denominator(b(k, j)));
  MatrixXq out(a.rows(), b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < b.cols(); ++j) {
      Integer acc = 0;
      for (Index k = 0; k < a.cols(); ++k)
        if (az(i, k) != 0 && bz(k, j) != 0) acc += az(i, k) * bz(k, j);
      out(i, j) = Rational(acc, row_scale[static_cast<std::size_t>(i)] * col_scale[static_cast<std::size_t>(j)]);
    }
  return out;
}

/// Fraction-free row echelon reduction in place. Returns the rank; when the
/// matrix is square and `det` is non-null, also stores its determinant.
inline Index bareiss_eliminate(MatrixXz& m, Integer* det = nullptr) {
  const Index rows = m.rows();
  const Index cols = m.cols();
  Integer prev = 1;
  int sign = 1;
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index piv = r;
    while (piv < rows && m(piv, c) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r) {
      m.row(piv).swap(m.row(r));
      sign = -sign;
    }
    const Integer pivot = m(r, c);
    for (Index i = r + 1; i < rows; ++i) {
      const Integer lead = m(i, c);
      for (Index j = c + 1; j < cols; ++j) m(i, j) = (pivot * m(i, j) - lead * m(r, j)) / prev;
      m(i, c) = 0;
    }
    prev = pivot;
    ++r;
  }
  if (det) {
    if (rows == cols && r == rows)
      *det = sign * m(rows - 1, cols - 1);
    else
      *det = 0;
  }
  return r;
}

template <typename Derived>
Index rank(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  if (a.size() == 0) return 0;
  if constexpr (std::is_same_v<Scalar, Rational>) {
    MatrixXz m = integer_rows(a);
    return bareiss_eliminate(m);
  } else if constexpr (std::is_same_v<Scalar, Integer>) {
    MatrixXz m = a;
    return bareiss_eliminate(m);
  } else {
    Eigen::FullPivLU<MatrixX<Scalar>> lu(a);
    return lu.rank();
  }
}

template <typename Derived>
Rational determinant(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  if (a.rows() != a.cols()) throw DimensionMismatch("determinant of a non-square matrix");
  if (a.rows() == 0) return Rational(1);
  Integer det;
  if constexpr (std::is_same_v<Scalar, Rational>) {
    Integer scale;
    MatrixXz m = integer_rows(a, &scale);
    bareiss_eliminate(m, &det);
    return Rational(det) / Rational(scale);
  } else {
    static_assert(std::is_same_v<Scalar, Integer>);
    MatrixXz m = a;
    bareiss_eliminate(m, &det);
    return Rational(det);
  }
}

struct RowEchelon {
  MatrixXq reduced;
  std::vector<Index> pivots;  // pivot column of each nonzero row
};

/// Gauss-Jordan reduced row echelon form over Q.
template <typename Derived>
RowEchelon reduced_row_echelon(const Eigen::MatrixBase<Derived>& a) {
  static_assert(std::is_same_v<typename Derived::Scalar, Rational>,
                "reduced_row_echelon requires exact rational input");
  RowEchelon out{a, {}};
  MatrixXq& m = out.reduced;
  Index r = 0;
  for (Index c = 0; c < m.cols() && r < m.rows(); ++c) {
    Index piv = r;
    while (piv < m.rows() && m(piv, c) == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r) m.row(piv).swap(m.row(r));
    const Rational inv = Rational(1) / m(r, c);
    m.row(r) *= inv;
    for (Index i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Rational f = m(i, c);
      m.row(i) -= f * m.row(r);
    }
    out.pivots.push_back(c);
    ++r;
  }
  return out;
}

/// Basis of the column space made of the independent (pivot) columns of `a`.
template <typename Derived>
MatrixXq column_space(const Eigen::MatrixBase<Derived>& a) {
  const RowEchelon e = reduced_row_echelon(a);
  MatrixXq basis(a.rows(), static_cast<Index>(e.pivots.size()));
  for (std::size_t k = 0; k < e.pivots.size(); ++k) basis.col(static_cast<Index>(k)) = a.col(e.pivots[k]);
  return basis;
}

/// Basis of {x : a x = 0}, one column per free variable.
template <typename Derived>
MatrixXq null_space(const Eigen::MatrixBase<Derived>& a) {
  const RowEchelon e = reduced_row_echelon(a);
  const Index n = a.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (Index p : e.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  MatrixXq basis = MatrixXq::Zero(n, n - static_cast<Index>(e.pivots.size()));
  Index k = 0;
  for (Index free = 0; free < n; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    basis(free, k) = 1;
    for (std::size_t row = 0; row < e.pivots.size(); ++row)
      basis(e.pivots[row], k) = -e.reduced(static_cast<Index>(row), free);
    ++k;
  }
  return basis;
}

/// Coordinates X with basis * X == rhs, or nullopt when some column of rhs
/// leaves the span. `basis` must have independent columns.
template <typename DerivedA, typename DerivedB>
std::optional<MatrixXq> solve_in_basis(const Eigen::MatrixBase<DerivedA>& basis,
                                       const Eigen::MatrixBase<DerivedB>& rhs) {
  if (basis.rows() != rhs.rows()) throw DimensionMismatch("solve_in_basis: row counts differ");
  const Index k = basis.cols();
  MatrixXq aug(basis.rows(), k + rhs.cols());
  aug << basis, rhs;
  const RowEchelon e = reduced_row_echelon(aug);
  Index basis_pivots = 0;
  for (Index p : e.pivots) {
    if (p >= k) return std::nullopt;
    ++basis_pivots;
  }
  if (basis_pivots != k) throw InvalidArgument("solve_in_basis: basis columns are dependent");
  return MatrixXq(e.reduced.topRightCorner(k, rhs.cols()));
}

}  // namespace nodalq
