#pragma once

// Fusion rings and sequences built from finite groups given by their
// multiplication tables.

#include "fusionseq/exact_sequence.hpp"
#include "fusionseq/fusion_ring.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fusionseq {

struct GroupTable {
  int order = 0;
  /// mult[a][b] = a * b.
  std::vector<std::vector<int>> mult;
  int identity = 0;
  std::string name;

  int mul(int a, int b) const { return mult[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
};

/// Finds the identity; throws std::invalid_argument if the table is not square
/// or has out-of-range entries. Group axioms are left to validate_group.
GroupTable make_group(std::vector<std::vector<int>> mult, std::string name = {});
/// Closure, associativity, identity and two-sided inverses, checked exhaustively.
ValidationReport validate_group(const GroupTable& g);

std::vector<int> inverses(const GroupTable& g);
int element_order(const GroupTable& g, int x);
int exponent(const GroupTable& g);
bool is_abelian(const GroupTable& g);

struct ConjugacyClasses {
  /// Sorted members; classes[0] is {identity}, the rest ordered by smallest member.
  std::vector<std::vector<int>> classes;
  std::vector<int> class_of;
  /// inverse_class[r] is the class of x^-1 for x in class r.
  std::vector<int> inverse_class;

  int count() const { return static_cast<int>(classes.size()); }
};

ConjugacyClasses conjugacy_classes(const GroupTable& g);

/// Rep(G) from its characters, computed modulo a prime p = 1 (mod exp G)
/// with p > |G|^3. Irreps are ordered by dimension, then trivial first, then
/// by their character residues.
struct CharacterFusion {
  int num_irreps = 0;
  std::vector<Integer> dims;
  FusionRing ring = trivial_ring();
  ConjugacyClasses classes;
  std::uint64_t prime = 0;
  /// chi[i][r]: character of irrep i on class r, reduced mod prime.
  std::vector<std::vector<std::uint64_t>> chi;
};

/// Smallest prime admissible for g that exceeds `above`.
std::uint64_t admissible_prime(const GroupTable& g, std::uint64_t above = 0);

/// With no prime given, tries up to five admissible primes. A given prime
/// must be admissible (std::invalid_argument otherwise); failure to split the
/// class-matrix spectrum throws std::runtime_error.
CharacterFusion rep_g_fusion(const GroupTable& g, std::optional<std::uint64_t> prime = std::nullopt);

/// N[i][j][k] = [ij = k], dual = inverse, unit = identity.
FusionRing vec_g_ring(const GroupTable& g);

bool is_subgroup(const GroupTable& g, const std::vector<int>& subset);
bool is_normal(const GroupTable& g, const std::vector<int>& subset);
/// Table of the subgroup on the sorted subset; element i is subset[i].
/// Throws std::invalid_argument if the subset is not a subgroup.
GroupTable make_subgroup(const GroupTable& g, const std::vector<int>& subset);

struct Quotient {
  GroupTable group;
  /// projection[x] is the coset of x; cosets are ordered by smallest member.
  std::vector<int> projection;
};
Quotient quotient_group(const GroupTable& g, const std::vector<int>& normal);

/// Every subgroup (sorted members), smallest first.
std::vector<std::vector<int>> all_subgroups(const GroupTable& g);
/// Normal subgroups as unions of conjugacy classes, smallest first.
std::vector<std::vector<int>> normal_subgroups(const GroupTable& g);

/// rank(Rep H) x rank(Rep G), R[j][i] = <chi_i|_H, psi_j>. Both character
/// fusions must share the prime; `embedding` maps H-elements into G.
IntMatrix restriction_matrix(const CharacterFusion& g, const CharacterFusion& h, const std::vector<int>& embedding);
/// Convenience form computing both fusions with a common prime.
IntMatrix restriction_matrix(const GroupTable& g, const std::vector<int>& embedding_image);

/// rank(Rep G) x rank(Rep Q): entry (i, q) is <Inf psi_q, chi_i>.
IntMatrix inflation_matrix(const CharacterFusion& g, const CharacterFusion& q, const std::vector<int>& projection);

/// Rep(G/N) -> Rep(G) -> Rep(N) (x) End(Vec): A inflated from the quotient,
/// F the restriction, M the fiber functor of Rep(G/N).
SequenceData extension_sequence(const GroupTable& g, const std::vector<int>& normal_subgroup);

/// Rep(G) restricted to an arbitrary subgroup H, with A the kernel of the
/// restriction (representations trivial on the normal closure of H).
/// Exact precisely when H is normal.
SequenceData restriction_sequence(const GroupTable& g, const std::vector<int>& subgroup);

}  // namespace fusionseq
