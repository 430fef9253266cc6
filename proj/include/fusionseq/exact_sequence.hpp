#pragma once

// Sequences A -> B -> C (x) End(M) at Grothendieck level and their
// exactness with respect to M.

#include "fusionseq/based_module.hpp"
#include "fusionseq/fusion_ring.hpp"

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fusionseq {

/// The target basis Y_t (x) E_kj sits at index t * m^2 + k * m + j, where m
/// is the rank of M.
struct SequenceData {
  std::shared_ptr<const FusionRing> A, B, C;
  std::shared_ptr<const BasedModule> M;
  /// rank(B) x rank(A); column i is the image of X_i.
  IntMatrix iota;
  /// rank(C) * m^2 x rank(B); column x is the image of the B-simple x.
  IntMatrix F;
  std::string name;

  int mrank() const { return M->rank(); }
  int target_rank() const { return C->rank() * mrank() * mrank(); }
  int target_index(int t, int k, int j) const { return (t * mrank() + k) * mrank() + j; }
};

/// Certification only handles semisimple data (identity Cartan matrices).
class NotSemisimpleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Shapes, component validity, M over A, iota a based embedding, iota and F
/// unital ring homomorphisms compatible with duality, F o iota equal to the
/// action of A on M. Violation indices name the offending basis elements.
ValidationReport validate_sequence(const SequenceData& s);

/// B-simples whose image lies in 1_C (x) End(M).
std::vector<int> kernel_simples(const SequenceData& s);
/// B-simples hit by iota, sorted.
std::vector<int> iota_image(const SequenceData& s);
/// Every target basis element occurs in some F(X).
bool is_surjective_gr(const SequenceData& s);
/// Every B-simple outside the kernel has no component in 1_C (x) End(M).
/// Throws NotSemisimpleError for non-identity Cartan data.
bool normality_check(const SequenceData& s);
/// Simples outside the kernel with a component in 1_C (x) End(M).
std::vector<int> normality_witnesses(const SequenceData& s);

enum class AlphaRoute { exact_rational, interval_excludes_one, interval_with_normality, undecided };
std::string to_string(AlphaRoute route);

struct AlphaCertificate {
  Interval interval;
  /// Exact value when FPdim(A), FPdim(B), FPdim(C) are all certified integers.
  std::optional<Rational> exact;
  AlphaRoute route = AlphaRoute::undecided;
  bool equals_one = false;
  /// False when the upper bound lies below 1 - tol, which no valid
  /// surjective sequence allows.
  bool consistent = true;
  int refinements = 0;
  PerronResult fpdim_a, fpdim_b, fpdim_c;

  bool decided() const { return route != AlphaRoute::undecided; }
  /// Decided without consulting the normality criterion.
  bool independent() const { return route == AlphaRoute::exact_rational || route == AlphaRoute::interval_excludes_one; }
};

/// Width of the window around 1 inside which normality may settle alpha = 1.
Rational alpha_window();

/// alpha = FPdim(B) / (FPdim(A) FPdim(C)).
AlphaCertificate compute_alpha(const SequenceData& s, const PerronOptions& opts = {});

enum class Verdict { exact, not_exact, undecided };
std::string to_string(Verdict v);

struct ExactnessReport {
  ValidationReport validation;
  std::vector<int> kernel;
  std::vector<int> image;
  bool kernel_matches = false;
  bool kernel_is_subring = false;
  bool surjective = false;
  bool normal = false;
  std::vector<int> normality_witnesses;
  std::optional<AlphaCertificate> alpha;
  Verdict verdict = Verdict::undecided;
  std::string reason;
  /// (kernel = image(iota) and normal) == (alpha = 1); empty when the two
  /// criteria cannot both be decided independently.
  std::optional<bool> cross_check;
};

/// Runs validation, kernel, surjectivity, normality and alpha. Throws
/// NotSemisimpleError when any ring carries a non-identity Cartan matrix.
ExactnessReport check_exact(const SequenceData& s, const PerronOptions& opts = {});

struct NumericCheck {
  bool passed = false;
  /// Largest gap between the compared intervals.
  Rational worst_gap;
  explicit operator bool() const { return passed; }
};

/// F(R_B) = alpha R_C (x) R_M (x) R_{M^v}, componentwise within tol.
/// Requires F surjective and M indecomposable.
NumericCheck regular_image_check(const SequenceData& s, const PerronOptions& opts = {});

/// sum_x FPdim(X_x) [F(X_x) : 1_C (x) E_kj] = alpha FPdim(M_j) FPdim(M_k).
NumericCheck internal_hom_fpdim_check(const SequenceData& s, int j, int k, const PerronOptions& opts = {});

/// C (x) M as a B-module through F: b[x][(t,j)][(u,k)] = sum_s F[(s,k,j)][x] N_C[s][t][u].
BasedModule induced_module(const SequenceData& s);
/// The FPdims of the induced module match sqrt(alpha) FPdim(Y_t) FPdim(M_j).
NumericCheck induced_module_dims(const SequenceData& s, const PerronOptions& opts = {});

/// FPdim(dualA) = FPdim(A), FPdim(dualB) = FPdim(B), FPdim(dualC) = FPdim(C),
/// and FPdim(dualB) = FPdim(dualA) FPdim(dualC) when s is exact.
NumericCheck dual_dims_check(const SequenceData& s, const FusionRing& dual_a, const FusionRing& dual_b,
                             const FusionRing& dual_c, const PerronOptions& opts = {});

/// B = A (x) C, iota(X_i) = X_i (x) 1, F(X_i (x) Y_t) = Y_t (x) F_M(X_i).
/// Throws std::invalid_argument for a decomposable module.
SequenceData make_deligne_sequence(std::shared_ptr<const FusionRing> a, std::shared_ptr<const FusionRing> c,
                                   std::shared_ptr<const BasedModule> m);

}  // namespace fusionseq
