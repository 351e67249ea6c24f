#include "nodalq/icstalk.hpp"

#include <numeric>

namespace nodalq {

namespace {

// k-subsets of {0, ..., n-1} in lexicographic order.
std::vector<std::vector<int>> combinations(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k > n || k < 0) return out;
  std::vector<int> c(static_cast<std::size_t>(k));
  std::iota(c.begin(), c.end(), 0);
  while (true) {
    out.push_back(c);
    int i = k - 1;
    while (i >= 0 && c[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++c[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

std::vector<int> without(const std::vector<int>& v, std::size_t r) {
  std::vector<int> out = v;
  out.erase(out.begin() + static_cast<std::ptrdiff_t>(r));
  return out;
}

}  // namespace

void OperatorFamily::validate() const {
  if (ambient_dim <= 0) throw DimensionMismatch("operator family needs a positive ambient dimension");
  for (const auto& n : operators)
    if (n.rows() != ambient_dim || n.cols() != ambient_dim)
      throw DimensionMismatch("operator is " + std::to_string(n.rows()) + "x" + std::to_string(n.cols()) +
                              ", expected " + std::to_string(ambient_dim) + "x" + std::to_string(ambient_dim));
}

bool OperatorFamily::commuting() const {
  for (std::size_t a = 0; a < operators.size(); ++a)
    for (std::size_t b = a + 1; b < operators.size(); ++b)
      if (product(operators[a], operators[b]) != product(operators[b], operators[a])) return false;
  return true;
}

OperatorFamily pl_family(const CycleConfiguration& config, std::string label) {
  return {config.space.dim(), pl_operators(config), std::move(label)};
}

Index BComplex::dim(int p) const {
  if (p < 0 || p > top_degree()) return 0;
  return degrees_[static_cast<std::size_t>(p)].dim;
}

MatrixXq BComplex::differential(int p) const {
  if (p >= 0 && p < static_cast<int>(differentials_.size())) return differentials_[static_cast<std::size_t>(p)];
  return MatrixXq(dim(p + 1), dim(p));
}

long long BComplex::euler_characteristic() const {
  long long chi = 0;
  for (int p = 0; p <= top_degree(); ++p) chi += (p % 2 == 0 ? 1 : -1) * static_cast<long long>(dim(p));
  return chi;
}

BComplex build_bcomplex(const OperatorFamily& family) {
  family.validate();
  const Index n = family.ambient_dim;
  const int delta = family.delta();
  BComplex b;
  b.ambient_dim_ = n;
  b.delta_ = delta;
  b.commuting_ = family.commuting();

  // Summands, degree by degree, from prefix products. A zero product of
  // length p kills every extension, so the first degree with no nonzero
  // summand bounds the complex.
  std::vector<std::map<std::vector<int>, std::size_t>> lookup;
  std::map<std::vector<int>, MatrixXq> products{{{}, MatrixXq::Identity(n, n)}};
  b.degrees_.push_back({{BSummand{{}, MatrixXq::Identity(n, n), 0}}, n});
  lookup.push_back({{{}, 0}});
  for (int p = 1; p <= delta; ++p) {
    std::map<std::vector<int>, MatrixXq> next;
    BDegree deg;
    std::map<std::vector<int>, std::size_t> index;
    for (const auto& tuple : combinations(delta, p)) {
      const auto prefix = products.find(std::vector<int>(tuple.begin(), tuple.end() - 1));
      if (prefix == products.end()) continue;
      MatrixXq prod = product(prefix->second, family.operators[static_cast<std::size_t>(tuple.back())]);
      if (is_zero(prod)) continue;
      MatrixXq basis = column_space(prod);
      index[tuple] = deg.summands.size();
      deg.summands.push_back({tuple, std::move(basis), deg.dim});
      deg.dim += deg.summands.back().basis.cols();
      next.emplace(tuple, std::move(prod));
    }
    if (deg.summands.empty()) break;
    b.degrees_.push_back(std::move(deg));
    lookup.push_back(std::move(index));
    products = std::move(next);
  }

  // Differentials d^p for p = 0..top. Components landing in a vanishing
  // summand (including everything past the top degree) must map to zero.
  const int top = b.top_degree();
  for (int p = 0; p <= top && p < delta; ++p) {
    const BDegree& src = b.degrees_[static_cast<std::size_t>(p)];
    const bool has_target = p + 1 <= top;
    MatrixXq d = MatrixXq::Zero(has_target ? b.degrees_[static_cast<std::size_t>(p + 1)].dim : 0, src.dim);
    for (const auto& target : combinations(delta, p + 1)) {
      const BSummand* tgt = nullptr;
      if (has_target) {
        const auto& idx = lookup[static_cast<std::size_t>(p + 1)];
        if (auto it = idx.find(target); it != idx.end())
          tgt = &b.degrees_[static_cast<std::size_t>(p + 1)].summands[it->second];
      }
      for (std::size_t r = 0; r < target.size(); ++r) {
        const auto& sidx = lookup[static_cast<std::size_t>(p)];
        const auto it = sidx.find(without(target, r));
        if (it == sidx.end()) continue;
        const BSummand& s = src.summands[it->second];
        const MatrixXq image =
            (r % 2 == 0 ? Rational(1) : Rational(-1)) * product(family.operators[static_cast<std::size_t>(target[r])], s.basis);
        if (!tgt) {
          if (!is_zero(image)) b.corestricted_ = false;
          continue;
        }
        const auto coords = solve_in_basis(tgt->basis, image);
        if (!coords) {
          b.corestricted_ = false;
          continue;
        }
        d.block(tgt->offset, s.offset, tgt->basis.cols(), s.basis.cols()) += *coords;
      }
    }
    if (has_target) b.differentials_.push_back(std::move(d));
  }

  for (std::size_t p = 0; p + 1 < b.differentials_.size(); ++p)
    if (!is_zero(product(b.differentials_[p + 1], b.differentials_[p]))) b.d_squared_zero_ = false;
  return b;
}

StalkCohomology cohomology(const BComplex& b) {
  if (!b.is_complex())
    throw NotAComplex(b.corestricted() ? "d o d != 0 for this operator family"
                                       : "a differential component leaves its target summand");
  StalkCohomology h;
  h.dims.assign(static_cast<std::size_t>(b.delta()) + 1, 0);
  std::vector<Index> ranks;
  for (int p = 0; p <= b.top_degree(); ++p) ranks.push_back(rank(b.differential(p)));
  for (int l = 0; l <= b.top_degree(); ++l) {
    const Index incoming = l > 0 ? ranks[static_cast<std::size_t>(l - 1)] : 0;
    h.dims[static_cast<std::size_t>(l)] = b.dim(l) - ranks[static_cast<std::size_t>(l)] - incoming;
  }
  for (std::size_t l = 0; l < h.dims.size(); ++l) h.euler += (l % 2 == 0 ? 1 : -1) * static_cast<long long>(h.dims[l]);
  if (h.euler != b.euler_characteristic()) throw InternalError("Euler characteristic mismatch");
  return h;
}

StalkCohomology nodal_stalk(int delta) {
  const CycleConfiguration config = nodal_model(delta);
  const OperatorFamily family = pl_family(config, "nodal-" + std::to_string(delta));
  const StalkCohomology h = cohomology(build_bcomplex(family));

  const Index n = family.ambient_dim;
  MatrixXq stacked(n * delta, n);
  Index rank_sum = 0;
  for (int rho = 0; rho < delta; ++rho) {
    stacked.middleRows(n * rho, n) = family.operators[static_cast<std::size_t>(rho)];
    rank_sum += rank(family.operators[static_cast<std::size_t>(rho)]);
  }
  const Index map_rank = rank(stacked);
  std::vector<Index> expected(static_cast<std::size_t>(delta) + 1, 0);
  expected[0] = n - map_rank;
  if (delta >= 1) expected[1] = rank_sum - map_rank;
  if (h.dims != expected) throw InternalError("nodal stalk disagrees with the kernel/cokernel sequence");
  return h;
}

std::array<int, 5> betti_nodal_quartic(int delta) {
  if (delta < 0 || delta > 16) throw OutOfRange("betti_nodal_quartic: delta must lie in 0..16");
  return {1, 0, kK3SecondBetti - delta, 0, 1};
}

}  // namespace nodalq
