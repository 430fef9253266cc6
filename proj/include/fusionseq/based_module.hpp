#pragma once

// Based modules over fusion rings: module categories seen through their
// Grothendieck groups.

#include "fusionseq/fusion_ring.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace fusionseq {

/// action_matrix(i)(k, j) == a[i][j][k], the multiplicity of M_k in X_i (x) M_j.
class BasedModule {
 public:
  BasedModule(std::shared_ptr<const FusionRing> ring, std::vector<IntMatrix> action,
              std::vector<std::string> labels = {});

  static BasedModule from_coefficients(std::shared_ptr<const FusionRing> ring,
                                       const std::vector<std::vector<std::vector<Integer>>>& a,
                                       std::vector<std::string> labels = {});

  const FusionRing& ring() const { return *ring_; }
  const std::shared_ptr<const FusionRing>& ring_ptr() const { return ring_; }
  int rank() const { return static_cast<int>(action_.front().rows()); }

  const Integer& a(int i, int j, int k) const { return action_[static_cast<std::size_t>(i)](k, j); }
  const IntMatrix& action_matrix(int i) const { return action_.at(static_cast<std::size_t>(i)); }

  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(int j) const;

 private:
  std::shared_ptr<const FusionRing> ring_;
  std::vector<IntMatrix> action_;
  std::vector<std::string> labels_;
};

/// Ring axioms (prefixed "ring/"), nonnegativity, module associativity,
/// unit action and the adjunction a[i][j][k] = a[i*][k][j].
ValidationReport validate_module(const BasedModule& m);

/// Connected components of the support graph (j -- k when some a[i][j][k] > 0).
std::vector<std::vector<int>> module_components(const BasedModule& m);
bool is_indecomposable(const BasedModule& m);

/// Exactness of a module category is invisible at Grothendieck level; it is
/// automatic when the acting ring is semisimple, and unknown otherwise.
std::optional<bool> is_exact_module(const BasedModule& m);

struct ModuleFPData {
  IntervalVector dims;
  /// dims = normalization_scale * perron_vector.
  Interval normalization_scale;
  RatVector perron_vector;
  RingDimensions ring;
};

/// FPdim(M_j), the positive common eigenvector of the action, scaled so that
/// sum_j FPdim(M_j)^2 = FPdim(A). Throws std::invalid_argument for
/// decomposable modules and multifusion rings.
ModuleFPData module_fpdims(const BasedModule& m, const PerronOptions& opts = {});
ModuleFPData module_fpdims(const BasedModule& m, const RingDimensions& ring_dims, const PerronOptions& opts = {});

/// M^v as a left module over the opposite ring: a^v[i][j][k] = a[i*][j][k].
BasedModule dual_module(const BasedModule& m);

/// Matrix units E_kj at index k * rank(m) + j, with E_jk E_lm = delta_kl E_jm.
FusionRing end_ring(int mrank);
FusionRing end_ring(const BasedModule& m);

/// rank(m)^2 x rank(A): the coefficient of E_kj in F(X_i) is a[i][j][k].
IntMatrix action_functor_matrix(const BasedModule& m);

BasedModule regular_module(std::shared_ptr<const FusionRing> ring);
/// Rank-one module where X_i acts by the integer dims[i].
BasedModule fiber_module(std::shared_ptr<const FusionRing> ring, const std::vector<Integer>& dims);
BasedModule direct_sum(const BasedModule& a, const BasedModule& b);

}  // namespace fusionseq
