#pragma once

// Rational quadratic spaces modelling H^2 of a nearby smooth quartic, the
// Picard-Lefschetz operators of a family of vanishing cycles, and the
// splitting of H^2 into the span of the cycles and its orthogonal parts.

#include "nodalq/linalg.hpp"

#include <optional>
#include <vector>

namespace nodalq {

inline constexpr int kK3SecondBetti = 22;

/// Finite-dimensional Q-vector space with a nondegenerate symmetric form.
class QuadraticSpace {
 public:
  /// Throws DimensionMismatch for a non-square or empty Gram matrix,
  /// InvalidArgument if it is not symmetric and DegeneratePairing if it is
  /// singular.
  explicit QuadraticSpace(MatrixXq gram);

  Index dim() const { return gram_.rows(); }
  const MatrixXq& gram() const { return gram_; }

  template <typename DerivedA, typename DerivedB>
  Rational pairing(const Eigen::MatrixBase<DerivedA>& u, const Eigen::MatrixBase<DerivedB>& v) const {
    return (u.transpose() * gram_ * v)(0, 0);
  }

 private:
  MatrixXq gram_;
};

/// Linear subspace given by a basis stored column-wise.
class Subspace {
 public:
  /// Throws InvalidArgument if the columns are dependent.
  explicit Subspace(MatrixXq basis);
  /// Span of arbitrary generators (columns); dependent columns are dropped.
  static Subspace span(const MatrixXq& generators);

  Index ambient_dim() const { return basis_.rows(); }
  Index dim() const { return basis_.cols(); }
  const MatrixXq& basis() const { return basis_; }

  bool contains(const VectorXq& v) const;
  /// Same subspace of the same ambient space.
  bool equals(const Subspace& other) const;

 private:
  MatrixXq basis_;
};

struct CycleConfiguration {
  QuadraticSpace space;
  std::vector<VectorXq> sigmas;        // vanishing-cycle classes
  std::optional<VectorXq> polarization;

  /// Throws DimensionMismatch when a vector does not live in the space.
  void validate() const;

  MatrixXq sigma_matrix() const;  // dim x delta, one cycle per column

  /// Pairwise orthogonal cycles of square -2, h orthogonal to all of them
  /// and h.h = 4.
  bool satisfies_nodal_axioms() const;
};

/// Standard model for a quartic with delta nodes: H^2 of dimension 22 with
/// Gram matrix diag(-2 I_delta, 4, I_{21-delta}); the cycles are the first
/// delta basis vectors and the polarization is the next one.
/// Throws OutOfRange unless 0 <= delta <= 16.
CycleConfiguration nodal_model(int delta);

/// Matrix of psi -> <psi, sigma_rho> sigma_rho.
MatrixXq pl_operator(const CycleConfiguration& config, int rho);

std::vector<MatrixXq> pl_operators(const CycleConfiguration& config);

/// Orthogonal complement of `sub` with respect to the form of `space`.
Subspace orthogonal_complement(const QuadraticSpace& space, const Subspace& sub);

struct SigmaSplitting {
  Subspace sigma;            // span of the cycles
  Subspace sigma_perp;       // its orthogonal complement
  Subspace sigma_perp_prim;  // part of sigma_perp orthogonal to the polarization
};

/// Throws DegeneratePairing when the form restricted to the span of the
/// cycles is singular, InvalidArgument when no polarization is given.
SigmaSplitting sigma_splitting(const CycleConfiguration& config);

}  // namespace nodalq
