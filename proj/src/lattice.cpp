#include "nodalq/lattice.hpp"

namespace nodalq {

QuadraticSpace::QuadraticSpace(MatrixXq gram) : gram_(std::move(gram)) {
  if (gram_.rows() == 0 || gram_.rows() != gram_.cols())
    throw DimensionMismatch("Gram matrix must be square and non-empty");
  if (gram_ != gram_.transpose()) throw InvalidArgument("Gram matrix is not symmetric");
  if (determinant(gram_) == 0) throw DegeneratePairing("Gram matrix is singular");
}

Subspace::Subspace(MatrixXq basis) : basis_(std::move(basis)) {
  if (rank(basis_) != basis_.cols()) throw InvalidArgument("Subspace basis columns are dependent");
}

Subspace Subspace::span(const MatrixXq& generators) { return Subspace(column_space(generators)); }

bool Subspace::contains(const VectorXq& v) const {
  if (v.size() != ambient_dim()) throw DimensionMismatch("vector outside the ambient space");
  if (dim() == 0) return is_zero(v);
  return solve_in_basis(basis_, v).has_value();
}

bool Subspace::equals(const Subspace& other) const {
  if (ambient_dim() != other.ambient_dim() || dim() != other.dim()) return false;
  if (dim() == 0) return true;
  MatrixXq both(ambient_dim(), dim() + other.dim());
  both << basis_, other.basis_;
  return rank(both) == dim();
}

void CycleConfiguration::validate() const {
  for (const auto& s : sigmas)
    if (s.size() != space.dim()) throw DimensionMismatch("cycle vector has the wrong dimension");
  if (polarization && polarization->size() != space.dim())
    throw DimensionMismatch("polarization has the wrong dimension");
}

MatrixXq CycleConfiguration::sigma_matrix() const {
  MatrixXq m(space.dim(), static_cast<Index>(sigmas.size()));
  for (std::size_t k = 0; k < sigmas.size(); ++k) m.col(static_cast<Index>(k)) = sigmas[k];
  return m;
}

bool CycleConfiguration::satisfies_nodal_axioms() const {
  const MatrixXq s = sigma_matrix();
  const MatrixXq gs = s.transpose() * space.gram() * s;
  for (Index a = 0; a < gs.rows(); ++a)
    for (Index b = 0; b < gs.cols(); ++b)
      if (gs(a, b) != (a == b ? Rational(-2) : Rational(0))) return false;
  if (polarization) {
    if (space.pairing(*polarization, *polarization) != 4) return false;
    for (const auto& sigma : sigmas)
      if (space.pairing(*polarization, sigma) != 0) return false;
  }
  return true;
}

CycleConfiguration nodal_model(int delta) {
  if (delta < 0 || delta > 16) throw OutOfRange("nodal_model: delta must lie in 0..16");
  MatrixXq gram = MatrixXq::Identity(kK3SecondBetti, kK3SecondBetti);
  for (int i = 0; i < delta; ++i) gram(i, i) = -2;
  gram(delta, delta) = 4;
  CycleConfiguration config{QuadraticSpace(std::move(gram)), {}, {}};
  for (int i = 0; i < delta; ++i) config.sigmas.push_back(VectorXq::Unit(kK3SecondBetti, i));
  config.polarization = VectorXq::Unit(kK3SecondBetti, delta);
  return config;
}

MatrixXq pl_operator(const CycleConfiguration& config, int rho) {
  if (rho < 0 || rho >= static_cast<int>(config.sigmas.size()))
    throw OutOfRange("pl_operator: cycle index out of range");
  const VectorXq& sigma = config.sigmas[static_cast<std::size_t>(rho)];
  return product(sigma, product(sigma.transpose(), config.space.gram()));
}

std::vector<MatrixXq> pl_operators(const CycleConfiguration& config) {
  std::vector<MatrixXq> out;
  for (int rho = 0; rho < static_cast<int>(config.sigmas.size()); ++rho) out.push_back(pl_operator(config, rho));
  return out;
}

Subspace orthogonal_complement(const QuadraticSpace& space, const Subspace& sub) {
  if (sub.ambient_dim() != space.dim()) throw DimensionMismatch("subspace outside the quadratic space");
  if (sub.dim() == 0) return Subspace(MatrixXq::Identity(space.dim(), space.dim()));
  return Subspace(null_space(MatrixXq(sub.basis().transpose() * space.gram())));
}

SigmaSplitting sigma_splitting(const CycleConfiguration& config) {
  config.validate();
  if (!config.polarization) throw InvalidArgument("sigma_splitting needs a polarization");
  const Index n = config.space.dim();
  Subspace sigma = config.sigmas.empty() ? Subspace(MatrixXq(n, 0)) : Subspace::span(config.sigma_matrix());
  if (sigma.dim() > 0) {
    const MatrixXq restricted = sigma.basis().transpose() * config.space.gram() * sigma.basis();
    if (determinant(restricted) == 0) throw DegeneratePairing("form restricted to the cycle span is singular");
  }
  Subspace perp = orthogonal_complement(config.space, sigma);
  MatrixXq conditions(sigma.dim() + 1, n);
  conditions << sigma.basis().transpose() * config.space.gram(),
      config.polarization->transpose() * config.space.gram();
  Subspace prim(null_space(conditions));
  return {std::move(sigma), std::move(perp), std::move(prim)};
}

}  // namespace nodalq
