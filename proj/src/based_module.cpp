#include "fusionseq/based_module.hpp"

#include <numeric>
#include <stdexcept>

namespace fusionseq {

BasedModule::BasedModule(std::shared_ptr<const FusionRing> ring, std::vector<IntMatrix> action,
                         std::vector<std::string> labels)
    : ring_(std::move(ring)), action_(std::move(action)), labels_(std::move(labels)) {
  if (!ring_) throw std::invalid_argument("BasedModule: null ring");
  if (static_cast<int>(action_.size()) != ring_->rank())
    throw std::invalid_argument("BasedModule: one action matrix per ring basis element is required");
  const Index m = action_.front().rows();
  if (m == 0) throw std::invalid_argument("BasedModule: rank must be positive");
  for (const auto& a : action_)
    if (a.rows() != m || a.cols() != m) throw std::invalid_argument("BasedModule: action is not rank(A) x m x m");
  if (!labels_.empty() && static_cast<Index>(labels_.size()) != m)
    throw std::invalid_argument("BasedModule: labels have wrong length");
}

BasedModule BasedModule::from_coefficients(std::shared_ptr<const FusionRing> ring,
                                           const std::vector<std::vector<std::vector<Integer>>>& a,
                                           std::vector<std::string> labels) {
  if (a.empty() || a.front().empty()) throw std::invalid_argument("BasedModule: empty action");
  const auto m = static_cast<Index>(a.front().size());
  std::vector<IntMatrix> action;
  for (const auto& ai : a) {
    if (static_cast<Index>(ai.size()) != m) throw std::invalid_argument("BasedModule: action is not rank(A) x m x m");
    IntMatrix mat(m, m);
    for (Index j = 0; j < m; ++j) {
      if (static_cast<Index>(ai[j].size()) != m)
        throw std::invalid_argument("BasedModule: action is not rank(A) x m x m");
      for (Index k = 0; k < m; ++k) mat(k, j) = ai[j][k];
    }
    action.push_back(std::move(mat));
  }
  return BasedModule(std::move(ring), std::move(action), std::move(labels));
}

std::string BasedModule::label(int j) const {
  if (static_cast<std::size_t>(j) < labels_.size() && !labels_[static_cast<std::size_t>(j)].empty())
    return labels_[static_cast<std::size_t>(j)];
  return "M" + std::to_string(j);
}

ValidationReport validate_module(const BasedModule& m) {
  ValidationReport report;
  const FusionRing& ring = m.ring();
  report.merge(validate_ring(ring), "ring/");
  const int r = ring.rank(), n = m.rank();

  for (int i = 0; i < r; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (m.a(i, j, k) < 0) report.add("negative_coefficient", {i, j, k});

  IntMatrix unit = IntMatrix::Zero(n, n);
  for (int c : ring.unit_components())
    if (c >= 0 && c < r) unit += m.action_matrix(c);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k)
      if (unit(k, j) != (j == k ? 1 : 0)) report.add("unit_action", {j, k});

  bool duals_ok = true;
  for (int i = 0; i < r; ++i)
    if (ring.dual(i) < 0 || ring.dual(i) >= r) duals_ok = false;
  if (duals_ok)
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          if (m.a(i, j, k) != m.a(ring.dual(i), k, j)) report.add("duality_adjunction", {i, j, k});

  // X_i (X_j M_p) = (X_i X_j) M_p  <=>  A_i A_j = sum_m N_ij^m A_m
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      IntMatrix lhs = IntMatrix::Zero(n, n);
      for (int mm = 0; mm < r; ++mm)
        if (ring.N(i, j, mm) != 0) lhs += ring.N(i, j, mm) * m.action_matrix(mm);
      IntMatrix rhs = m.action_matrix(i) * m.action_matrix(j);
      for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q)
          if (lhs(q, p) != rhs(q, p)) report.add("module_associativity", {i, j, p, q});
    }
  return report;
}

std::vector<std::vector<int>> module_components(const BasedModule& m) {
  const int n = m.rank();
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int i = 0; i < m.ring().rank(); ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (m.a(i, j, k) > 0) parent[find(j)] = find(k);
  std::vector<std::vector<int>> out;
  std::vector<int> slot(static_cast<std::size_t>(n), -1);
  for (int j = 0; j < n; ++j) {
    int root = find(j);
    if (slot[root] < 0) {
      slot[root] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[slot[root]].push_back(j);
  }
  return out;
}

bool is_indecomposable(const BasedModule& m) { return module_components(m).size() == 1; }

std::optional<bool> is_exact_module(const BasedModule& m) {
  if (m.ring().is_semisimple()) return true;
  return std::nullopt;
}

ModuleFPData module_fpdims(const BasedModule& m, const PerronOptions& opts) {
  if (m.ring().is_multifusion()) throw std::invalid_argument("module_fpdims: acting ring must be a fusion ring");
  return module_fpdims(m, ring_dimensions(m.ring(), opts), opts);
}

ModuleFPData module_fpdims(const BasedModule& m, const RingDimensions& ring_dims, const PerronOptions& opts) {
  if (m.ring().is_multifusion()) throw std::invalid_argument("module_fpdims: acting ring must be a fusion ring");
  if (!is_indecomposable(m)) throw std::invalid_argument("module_fpdims: module is decomposable");
  const int n = m.rank();

  // The dimension vector is the Perron vector of sum_i A_i, which is
  // irreducible exactly when the module is indecomposable.
  IntMatrix total = IntMatrix::Zero(n, n);
  for (int i = 0; i < m.ring().rank(); ++i) total += m.action_matrix(i);
  PerronVectorEnclosure enc = perron_vector_enclosure(to_rational(total), opts);

  ModuleFPData out;
  out.ring = ring_dims;
  out.perron_vector = enc.center;
  Rational norm2 = 0;
  for (int j = 0; j < n; ++j) norm2 += enc.center(j) * enc.center(j);
  const long bits = 8 + 4 * static_cast<long>(std::max<long>(1, -ilog2(opts.tol)));
  const Interval scale = sqrt(ring_dims.category.interval() / Interval(norm2), bits);
  const Interval slack(1 / enc.spread, enc.spread);
  out.normalization_scale = scale * slack;
  out.dims = IntervalVector(n);
  for (int j = 0; j < n; ++j) out.dims(j) = Interval(enc.center(j)) * out.normalization_scale;
  return out;
}

BasedModule dual_module(const BasedModule& m) {
  auto op = std::make_shared<const FusionRing>(opposite_ring(m.ring()));
  std::vector<IntMatrix> action;
  for (int i = 0; i < m.ring().rank(); ++i) action.push_back(m.action_matrix(m.ring().dual(i)));
  return BasedModule(std::move(op), std::move(action), m.labels());
}

FusionRing end_ring(int mrank) {
  if (mrank <= 0) throw std::invalid_argument("end_ring: rank must be positive");
  const int r = mrank * mrank;
  std::vector<IntMatrix> left(static_cast<std::size_t>(r), IntMatrix::Zero(r, r));
  std::vector<int> dual(static_cast<std::size_t>(r)), units;
  std::vector<std::string> labels;
  for (int k = 0; k < mrank; ++k)
    for (int j = 0; j < mrank; ++j) {
      const int e = k * mrank + j;
      dual[e] = j * mrank + k;
      labels.push_back("E" + std::to_string(k) + "," + std::to_string(j));
      // E_kj E_jl = E_kl
      for (int l = 0; l < mrank; ++l) left[e](k * mrank + l, j * mrank + l) = 1;
    }
  for (int j = 0; j < mrank; ++j) units.push_back(j * mrank + j);
  return FusionRing(std::move(left), std::move(units), std::move(dual), std::nullopt, std::move(labels), mrank > 1);
}

FusionRing end_ring(const BasedModule& m) { return end_ring(m.rank()); }

IntMatrix action_functor_matrix(const BasedModule& m) {
  const int n = m.rank(), r = m.ring().rank();
  IntMatrix f(n * n, r);
  for (int i = 0; i < r; ++i)
    for (int k = 0; k < n; ++k)
      for (int j = 0; j < n; ++j) f(k * n + j, i) = m.a(i, j, k);
  return f;
}

BasedModule regular_module(std::shared_ptr<const FusionRing> ring) {
  std::vector<IntMatrix> action;
  for (int i = 0; i < ring->rank(); ++i) action.push_back(ring->left_matrix(i));
  std::vector<std::string> labels = ring->labels();
  return BasedModule(std::move(ring), std::move(action), std::move(labels));
}

BasedModule fiber_module(std::shared_ptr<const FusionRing> ring, const std::vector<Integer>& dims) {
  if (static_cast<int>(dims.size()) != ring->rank()) throw std::invalid_argument("fiber_module: one dimension per simple");
  std::vector<IntMatrix> action;
  for (const Integer& d : dims) action.push_back(IntMatrix::Constant(1, 1, d));
  return BasedModule(std::move(ring), std::move(action), {"Vec"});
}

BasedModule direct_sum(const BasedModule& a, const BasedModule& b) {
  if (!(a.ring() == b.ring())) throw std::invalid_argument("direct_sum: modules over different rings");
  const int na = a.rank(), nb = b.rank();
  std::vector<IntMatrix> action;
  for (int i = 0; i < a.ring().rank(); ++i) {
    IntMatrix s = IntMatrix::Zero(na + nb, na + nb);
    s.topLeftCorner(na, na) = a.action_matrix(i);
    s.bottomRightCorner(nb, nb) = b.action_matrix(i);
    action.push_back(std::move(s));
  }
  std::vector<std::string> labels;
  for (int j = 0; j < na; ++j) labels.push_back(a.label(j));
  for (int j = 0; j < nb; ++j) labels.push_back(b.label(j));
  return BasedModule(a.ring_ptr(), std::move(action), std::move(labels));
}

}  // namespace fusionseq
