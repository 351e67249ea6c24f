#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nodalq/linalg.hpp"
#include "support/oracles.hpp"

using namespace nodalq;
using nodalq::testing::oracle_rank;
using nodalq::testing::random_int_matrix;

namespace {

// Leibniz expansion; fine for n <= 5.
Rational leibniz_det(const MatrixXq& m) {
  const Index n = m.rows();
  std::vector<Index> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  Rational det = 0;
  do {
    int inversions = 0;
    for (Index i = 0; i < n; ++i)
      for (Index j = i + 1; j < n; ++j)
        if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)]) ++inversions;
    Rational term = inversions % 2 ? -1 : 1;
    for (Index i = 0; i < n; ++i) term *= m(i, perm[static_cast<std::size_t>(i)]);
    det += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

}  // namespace

TEST_CASE("rank of small hand-checked matrices") {
  MatrixXq a(3, 3);
  a << 1, 2, 3, 4, 5, 6, 7, 8, 9;
  CHECK(rank(a) == 2);
  CHECK(rank(MatrixXq::Zero(4, 5)) == 0);
  CHECK(rank(MatrixXq::Identity(6, 6)) == 6);
  CHECK(rank(MatrixXq(0, 3)) == 0);

  MatrixXq q(2, 2);
  q << Rational(1, 2), Rational(1, 3), Rational(3, 2), Rational(1);
  CHECK(rank(q) == 1);
}

TEST_CASE("Bareiss rank and determinant agree with independent oracles") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const Index rows = std::uniform_int_distribution<Index>(1, 7)(rng);
    const Index cols = std::uniform_int_distribution<Index>(1, 7)(rng);
    MatrixXq m = random_int_matrix(rng, rows, cols, -3, 3);
    // Inject dependencies now and then.
    if (rows > 2 && trial % 3 == 0) m.row(rows - 1) = m.row(0) * Rational(2, 3) - m.row(1);
    CHECK(rank(m) == oracle_rank(m));
    if (rows == cols && rows <= 5) CHECK(determinant(m) == leibniz_det(m));
  }
}

TEST_CASE("determinant of block diagonal Gram") {
  MatrixXq g = MatrixXq::Identity(22, 22);
  for (int i = 0; i < 16; ++i) g(i, i) = -2;
  g(16, 16) = 4;
  CHECK(determinant(g) == Rational(65536 * 4));
  CHECK_THROWS_AS(determinant(MatrixXq(2, 3)), DimensionMismatch);
}

TEST_CASE("floating rank uses a pivoting LU") {
  Eigen::MatrixXd a(2, 2);
  a << 1, 2, 2, 4;
  CHECK(rank(a) == 1);
}

TEST_CASE("null space and column space") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const Index rows = std::uniform_int_distribution<Index>(1, 6)(rng);
    const Index cols = std::uniform_int_distribution<Index>(1, 6)(rng);
    MatrixXq m = random_int_matrix(rng, rows, cols, -2, 2);
    if (cols > 2) m.col(cols - 1) = m.col(0) + m.col(1);
    const MatrixXq k = null_space(m);
    CHECK(k.cols() == cols - oracle_rank(m));
    CHECK(is_zero(MatrixXq(m * k)));
    if (k.cols() > 0) CHECK(oracle_rank(k) == k.cols());
    const MatrixXq c = column_space(m);
    CHECK(c.cols() == oracle_rank(m));
    MatrixXq both(rows, c.cols() + cols);
    both << c, m;
    CHECK(oracle_rank(both) == c.cols());
  }
}

TEST_CASE("solve_in_basis") {
  MatrixXq basis(3, 2);
  basis << 1, 0, 0, 1, 1, 1;
  MatrixXq rhs(3, 1);
  rhs << 2, 3, 5;
  const auto x = solve_in_basis(basis, rhs);
  REQUIRE(x.has_value());
  CHECK((*x)(0, 0) == 2);
  CHECK((*x)(1, 0) == 3);
  rhs(2, 0) = 6;
  CHECK_FALSE(solve_in_basis(basis, rhs).has_value());

  MatrixXq dependent(2, 2);
  dependent << 1, 2, 2, 4;
  MatrixXq b(2, 1);
  b << 1, 2;
  CHECK_THROWS_AS(solve_in_basis(dependent, b), InvalidArgument);
}

TEST_CASE("product agrees with the plain rational product") {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int> den(1, 6);
  for (int trial = 0; trial < 100; ++trial) {
    const Index r = 1 + trial % 5, k = 1 + trial % 3, c = 1 + trial % 4;
    MatrixXq a = random_int_matrix(rng, r, k, -5, 5), b = random_int_matrix(rng, k, c, -5, 5);
    for (Index i = 0; i < r; ++i)
      for (Index j = 0; j < k; ++j) a(i, j) /= den(rng);
    for (Index i = 0; i < k; ++i)
      for (Index j = 0; j < c; ++j) b(i, j) /= den(rng);
    CHECK(product(a, b) == MatrixXq(a * b));
  }
  CHECK_THROWS_AS(product(MatrixXq(2, 3), MatrixXq(2, 3)), DimensionMismatch);
}
