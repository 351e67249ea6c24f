#pragma once

// Certification of singular points on projective surfaces and a numerical
// search for singular-point candidates.

#include "nodalq/qpoly.hpp"

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace nodalq {

/// Rational point of P^3 stored as its canonical integer representative:
/// primitive (gcd 1) with the first nonzero coordinate positive.
class ProjPointQ {
 public:
  explicit ProjPointQ(const std::array<Integer, 4>& coords);
  static ProjPointQ from_rational(const Vector4<Rational>& coords);

  const std::array<Integer, 4>& coords() const { return coords_; }
  Vector4<Rational> as_rational() const;
  Vector4<double> as_double() const;

  friend bool operator==(const ProjPointQ&, const ProjPointQ&) = default;
  friend bool operator<(const ProjPointQ& a, const ProjPointQ& b) { return a.coords_ < b.coords_; }

 private:
  std::array<Integer, 4> coords_;
};

std::string to_string(const ProjPointQ& p);

enum class Classification { Smooth, Node, NonNodeSingular, NotOnSurface };
enum class CertificationMode { Exact, Numerical };

std::string to_string(Classification c);
std::string to_string(CertificationMode m);
Classification parse_classification(const std::string& s);

struct SingularPointReport {
  ProjPointQ point;
  bool on_surface = false;
  bool gradient_vanishes = false;
  int hessian_rank = 0;
  Classification classification = Classification::NotOnSurface;
  CertificationMode mode = CertificationMode::Exact;

  friend bool operator==(const SingularPointReport&, const SingularPointReport&) = default;
};

Classification classify(bool on_surface, bool gradient_vanishes, int hessian_rank);

/// Exact verdict for p on the surface f = 0. A node is a point of the
/// surface where the gradient vanishes and the 4x4 Hessian has rank 3.
/// Throws ZeroPolynomial for f = 0 and InvalidArgument for degree < 2.
SingularPointReport certify_point(const HomogPoly& f, const ProjPointQ& p);

struct SearchConfig {
  int seed_count = 200;  // per affine chart
  int max_newton_steps = 100;
  double tolerance = 1e-10;
  double cluster_radius = 1e-6;
  std::int64_t max_height = 1000000;
};

struct SingularCandidate {
  SingularPointReport report;
  Vector4<double> approximation;  // unit-norm numerical location
  double gradient_residual = 0;   // max |dF/dx_i| at the normalized approximation
  double value_residual = 0;      // |F| at the normalized approximation
};

/// Newton search for solutions of grad F = 0 in each affine chart, followed
/// by clustering, continued-fraction rationalization and exact
/// re-certification. Candidates whose rationalization certifies as singular
/// exactly carry mode Exact; the rest carry mode Numerical and a verdict
/// derived from floating-point data only. Exact candidates come first,
/// sorted by canonical representative.
std::vector<SingularCandidate> find_singular_numeric(const HomogPoly& f, const SearchConfig& config,
                                                     std::mt19937_64& rng);

/// Best rational approximation p/q of x with q <= max_denominator.
Rational rationalize(double x, std::int64_t max_denominator);

}  // namespace nodalq
