#pragma once

// Fusion rings (Grothendieck rings of finite tensor categories with their
// basis of simple objects) and their Frobenius-Perron dimensions.

#include "fusionseq/interval.hpp"
#include "fusionseq/numeric.hpp"
#include "fusionseq/perron.hpp"
#include "fusionseq/validation.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fusionseq {

/// Structure constants are stored as left-multiplication matrices:
/// left_matrix(i)(k, j) == N[i][j][k], the multiplicity of X_k in X_i (x) X_j.
class FusionRing {
 public:
  FusionRing(std::vector<IntMatrix> left, std::vector<int> unit_components, std::vector<int> dual,
             std::optional<IntMatrix> cartan = std::nullopt, std::vector<std::string> labels = {},
             std::optional<bool> multifusion = std::nullopt);

  /// From nested coefficients n[i][j][k].
  static FusionRing from_coefficients(const std::vector<std::vector<std::vector<Integer>>>& n,
                                      std::vector<int> unit_components, std::vector<int> dual,
                                      std::optional<IntMatrix> cartan = std::nullopt,
                                      std::vector<std::string> labels = {},
                                      std::optional<bool> multifusion = std::nullopt);

  int rank() const { return static_cast<int>(left_.size()); }
  bool is_multifusion() const { return multifusion_; }
  /// The unit basis index; throws std::logic_error for multifusion rings.
  int unit() const;
  const std::vector<int>& unit_components() const { return unit_components_; }
  bool is_unit_component(int i) const;

  int dual(int i) const { return dual_.at(static_cast<std::size_t>(i)); }
  const std::vector<int>& duals() const { return dual_; }

  const Integer& N(int i, int j, int k) const { return left_[static_cast<std::size_t>(i)](k, j); }
  const IntMatrix& left_matrix(int i) const { return left_.at(static_cast<std::size_t>(i)); }
  /// right_matrix(j)(k, i) == N[i][j][k].
  IntMatrix right_matrix(int j) const;

  bool has_cartan() const { return has_cartan_; }
  /// Identity when no Cartan data was supplied.
  const IntMatrix& cartan() const { return cartan_; }
  bool is_semisimple() const;

  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(int i) const;

  /// Structural equality (labels ignored).
  friend bool operator==(const FusionRing& a, const FusionRing& b);

 private:
  std::vector<IntMatrix> left_;
  std::vector<int> unit_components_;
  std::vector<int> dual_;
  IntMatrix cartan_;
  bool has_cartan_ = false;
  bool multifusion_ = false;
  std::vector<std::string> labels_;
};

/// Coefficient vector over the simple basis.
using GrothendieckElement = RatVector;

GrothendieckElement basis_element(const FusionRing& ring, int i);
/// x * y in the Grothendieck ring.
GrothendieckElement multiply(const FusionRing& ring, const GrothendieckElement& x, const GrothendieckElement& y);

/// Checks associativity, unit laws, duality/Frobenius reciprocity, Cartan
/// positivity and nonnegativity. Violations carry the witnessing indices.
ValidationReport validate_ring(const FusionRing& ring);

/// L with L(k, j) = sum_i x_i N[i][j][k]. Throws std::invalid_argument on a
/// length mismatch.
template <typename Scalar>
Matrix<Scalar> left_mult_matrix(const FusionRing& ring, const Vector<Scalar>& x);
RatMatrix left_mult_matrix(const FusionRing& ring, const GrothendieckElement& x);

/// FPdim(X_i): Perron root of left_matrix(i). Throws std::out_of_range.
PerronResult fpdim_object(const FusionRing& ring, int i, const PerronOptions& opts = {});

/// All object dimensions plus the category dimension, computed once.
struct RingDimensions {
  std::vector<PerronResult> objects;
  PerronResult category;

  IntervalVector object_intervals() const;
  bool all_exact() const;
};

/// FPdim(A) = d^T C d. Certified twice: interval arithmetic over the object
/// brackets, and the Perron root of the integer matrix
/// sum_ij C_ij L_i L_{j*}, whose positive eigenvector is d. The result is the
/// intersection; integer detection comes from the matrix route.
PerronResult fpdim_category(const FusionRing& ring, const PerronOptions& opts = {});
RingDimensions ring_dimensions(const FusionRing& ring, const PerronOptions& opts = {});

/// R_A = sum_i FPdim(X_i) P_i expanded over simples: coefficient j is
/// sum_i d_i cartan(i, j).
IntervalVector regular_object(const FusionRing& ring, const PerronOptions& opts = {});
IntervalVector regular_object(const FusionRing& ring, const RingDimensions& dims);

/// Basis pairs (i, j) in lexicographic order, index i * rank(b) + j.
FusionRing deligne_product(const FusionRing& a, const FusionRing& b);
/// N^op[i][j][k] = N[j][i][k].
FusionRing opposite_ring(const FusionRing& ring);
/// Rank-1 ring Z (the Grothendieck ring of Vec).
FusionRing trivial_ring();

/// Smallest subset containing `seeds` and the unit components that is closed
/// under products and duals.
std::vector<int> fusion_closure(const FusionRing& ring, const std::vector<int>& seeds);
/// Every based subring (as a sorted index set), smallest first; at most `limit`.
std::vector<std::vector<int>> fusion_subrings(const FusionRing& ring, std::size_t limit = 4096);
/// Restriction to a closed subset, reindexed in increasing order.
FusionRing based_subring(const FusionRing& ring, const std::vector<int>& subset);

/// A basis bijection sigma with N_b[s(i)][s(j)][s(k)] = N_a[i][j][k],
/// preserving units and duals, if one exists.
std::optional<std::vector<int>> based_isomorphism(const FusionRing& a, const FusionRing& b);

template <typename Scalar>
Matrix<Scalar> left_mult_matrix(const FusionRing& ring, const Vector<Scalar>& x) {
  if (x.size() != ring.rank()) throw std::invalid_argument("left_mult_matrix: element length differs from rank");
  Matrix<Scalar> out = Matrix<Scalar>::Zero(ring.rank(), ring.rank());
  for (int i = 0; i < ring.rank(); ++i) {
    if (x(i) == Scalar(0)) continue;
    out += x(i) * ring.left_matrix(i).template cast<Scalar>();
  }
  return out;
}

}  // namespace fusionseq
