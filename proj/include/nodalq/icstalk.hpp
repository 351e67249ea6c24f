#pragma once

// Stalk cohomology of an intersection complex at a normal-crossings point,
// computed from the local monodromy logarithms N_1..N_delta as the
// cohomology of
//
//   B^p = (+)_{i_1 < ... < i_p} N_{i_1} ... N_{i_p} R,
//
// where the component from the summand of (i_1, ..., ^i_r, ..., i_{p+1}) to
// the summand of (i_1, ..., i_{p+1}) is (-1)^(r-1) N_{i_r}.

#include "nodalq/lattice.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace nodalq {

struct OperatorFamily {
  Index ambient_dim = 0;
  std::vector<MatrixXq> operators;
  std::string label;

  int delta() const { return static_cast<int>(operators.size()); }
  /// Throws DimensionMismatch unless every operator is ambient_dim square.
  void validate() const;
  bool commuting() const;
};

/// The Picard-Lefschetz operators of a cycle configuration.
OperatorFamily pl_family(const CycleConfiguration& config, std::string label = "picard-lefschetz");

struct BSummand {
  std::vector<int> indices;  // strictly increasing, 0-based
  MatrixXq basis;            // columns span N_{i_1} ... N_{i_p} R
  Index offset = 0;          // first coordinate inside the total space B^p
};

struct BDegree {
  std::vector<BSummand> summands;  // nonzero summands only, in lexicographic order
  Index dim = 0;
};

/// B-complex of an operator family. Degrees above top_degree() vanish and
/// are not stored.
class BComplex {
 public:
  Index ambient_dim() const { return ambient_dim_; }
  int delta() const { return delta_; }
  int top_degree() const { return static_cast<int>(degrees_.size()) - 1; }
  const BDegree& degree(int p) const { return degrees_.at(static_cast<std::size_t>(p)); }
  Index dim(int p) const;

  /// Matrix of d^p : B^p -> B^{p+1} in the summand bases (zero-sized past
  /// the top degree).
  MatrixXq differential(int p) const;

  /// The operators commute pairwise.
  bool commuting() const { return commuting_; }
  /// Every differential component maps its source summand into its target.
  bool corestricted() const { return corestricted_; }
  bool d_squared_zero() const { return d_squared_zero_; }
  bool is_complex() const { return corestricted_ && d_squared_zero_; }

  /// Sum over p of (-1)^p dim B^p.
  long long euler_characteristic() const;

 private:
  friend BComplex build_bcomplex(const OperatorFamily& family);

  Index ambient_dim_ = 0;
  int delta_ = 0;
  std::vector<BDegree> degrees_;
  std::vector<MatrixXq> differentials_;  // d^0 .. d^{top-1}
  bool commuting_ = true;
  bool corestricted_ = true;
  bool d_squared_zero_ = true;
};

/// Builds the complex; non-commuting families are accepted and flagged
/// through commuting(), corestricted() and d_squared_zero().
BComplex build_bcomplex(const OperatorFamily& family);

struct StalkCohomology {
  std::vector<Index> dims;  // H^0 .. H^delta
  long long euler = 0;

  friend bool operator==(const StalkCohomology&, const StalkCohomology&) = default;
};

/// dims[l] = dim ker d^l - dim im d^(l-1). Throws NotAComplex unless
/// b.is_complex().
StalkCohomology cohomology(const BComplex& b);

/// Stalk cohomology for the standard delta-nodal model, cross-checked
/// against H^0 = ker(R -> (+) N_rho R), H^1 = coker of the same map and
/// H^l = 0 for l >= 2 (InternalError if they disagree).
StalkCohomology nodal_stalk(int delta);

/// Betti numbers (b0, ..., b4) of a quartic surface with delta nodes:
/// (1, 0, 22 - delta, 0, 1). Throws OutOfRange unless 0 <= delta <= 16.
std::array<int, 5> betti_nodal_quartic(int delta);

}  // namespace nodalq
