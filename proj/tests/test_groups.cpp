#include "doctest.h"
#include "fixtures.hpp"
#include "group_oracle.hpp"

#include "fusionseq/groups.hpp"

#include <algorithm>

using namespace fusionseq;

namespace {

GroupTable cyclic_group(int n) {
  std::vector<std::vector<int>> mult(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) mult[a][b] = (a + b) % n;
  return make_group(mult, "c" + std::to_string(n));
}

std::multiset<std::size_t> class_sizes(const GroupTable& g) {
  std::multiset<std::size_t> out;
  for (const auto& c : conjugacy_classes(g).classes) out.insert(c.size());
  return out;
}

void check_against_oracle(const oracle::MatrixGroup& mg) {
  REQUIRE(validate_group(mg.table).ok());
  const CharacterFusion cf = rep_g_fusion(mg.table);
  REQUIRE(cf.num_irreps == mg.irreps());
  const std::vector<int> pos = oracle::align(mg, cf);
  for (int p : pos) REQUIRE(p >= 0);
  for (int i = 0; i < mg.irreps(); ++i) {
    CHECK(cf.dims[pos[i]] == mg.images.front()[i].rows());
    for (int j = 0; j < mg.irreps(); ++j)
      for (int k = 0; k < mg.irreps(); ++k) CHECK(cf.ring.N(pos[i], pos[j], pos[k]) == oracle::multiplicity(mg, i, j, k));
  }
}

}  // namespace

TEST_CASE("group tables") {
  GroupTable c4 = cyclic_group(4);
  CHECK(validate_group(c4).ok());
  CHECK(exponent(c4) == 4);
  CHECK(is_abelian(c4));
  CHECK(inverses(c4) == std::vector<int>{0, 3, 2, 1});

  GroupTable broken = make_group({{0, 1}, {1, 1}});
  CHECK(validate_group(broken).has("no_inverse"));
  CHECK_THROWS_AS(make_group({{0, 1}, {1}}), std::invalid_argument);
  CHECK_THROWS_AS(make_group({{0, 2}, {1, 0}}), std::invalid_argument);
  CHECK(validate_group(make_group({{1, 0}, {0, 0}})).has("no_identity"));
}

TEST_CASE("conjugacy classes") {
  CHECK(class_sizes(cyclic_group(6)) == std::multiset<std::size_t>{1, 1, 1, 1, 1, 1});
  CHECK(class_sizes(oracle::s3().table) == std::multiset<std::size_t>{1, 2, 3});
  CHECK(class_sizes(oracle::q8().table) == std::multiset<std::size_t>{1, 1, 2, 2, 2});
  ConjugacyClasses cc = conjugacy_classes(oracle::s3().table);
  CHECK(cc.classes[0] == std::vector<int>{oracle::s3().table.identity});
  for (int r = 0; r < cc.count(); ++r) CHECK(cc.inverse_class[r] == r);
}

TEST_CASE("character fusion matches explicit representations") {
  check_against_oracle(oracle::s3());
  check_against_oracle(oracle::q8());
}

TEST_CASE("Rep of cyclic groups") {
  for (int n : {1, 2, 5, 8}) {
    CharacterFusion cf = rep_g_fusion(cyclic_group(n));
    CHECK(cf.num_irreps == n);
    for (const Integer& d : cf.dims) CHECK(d == 1);
    CHECK(validate_ring(cf.ring).ok());
    CHECK(based_isomorphism(cf.ring, vec_g_ring(cyclic_group(n))).has_value());
  }
}

TEST_CASE("Rep(S3) and Rep(Q8)") {
  CharacterFusion s3 = rep_g_fusion(oracle::s3().table);
  CHECK(s3.dims == std::vector<Integer>{1, 1, 2});
  // 2 (x) 2 = 1 + sgn + 2
  CHECK(s3.ring.N(2, 2, 0) == 1);
  CHECK(s3.ring.N(2, 2, 1) == 1);
  CHECK(s3.ring.N(2, 2, 2) == 1);
  CHECK(*fpdim_category(s3.ring).exact_integer == 6);

  CharacterFusion q8 = rep_g_fusion(oracle::q8().table);
  CHECK(q8.dims == std::vector<Integer>{1, 1, 1, 1, 2});
  for (int k = 0; k < 4; ++k) CHECK(q8.ring.N(4, 4, k) == 1);
  CHECK(q8.ring.N(4, 4, 4) == 0);
  CHECK(*fpdim_category(q8.ring).exact_integer == 8);
}

TEST_CASE("primes") {
  GroupTable s3 = oracle::s3().table;
  const auto p = admissible_prime(s3);
  CHECK(p > 216);
  CHECK(p % 6 == 1);
  CHECK(rep_g_fusion(s3, p).prime == p);
  CHECK_THROWS_AS(rep_g_fusion(s3, 211), std::invalid_argument);  // 211 < 6^3
  CHECK_THROWS_AS(rep_g_fusion(s3, 233), std::invalid_argument);  // 233 = 5 mod 6
  CHECK(admissible_prime(s3, p) > p);
}

TEST_CASE("Vec(G)") {
  GroupTable s3 = oracle::s3().table;
  FusionRing v = vec_g_ring(s3);
  CHECK(validate_ring(v).ok());
  CHECK(*fpdim_category(v).exact_integer == 6);
  FusionRing z2 = vec_g_ring(cyclic_group(2));
  CHECK(z2 == fixtures::cyclic(2));
}

TEST_CASE("subgroups and quotients") {
  GroupTable s3 = oracle::s3().table;
  auto subs = all_subgroups(s3);
  CHECK(subs.size() == 6);  // 1, three of order 2, A3, S3
  auto normals = normal_subgroups(s3);
  REQUIRE(normals.size() == 3);
  CHECK(normals[1].size() == 3);
  CHECK(is_normal(s3, normals[1]));
  for (const auto& h : subs) CHECK(is_normal(s3, h) == (std::find(normals.begin(), normals.end(), h) != normals.end()));

  Quotient q = quotient_group(s3, normals[1]);
  CHECK(q.group.order == 2);
  CHECK(validate_group(q.group).ok());
  CHECK_THROWS_AS(quotient_group(s3, subs[1]), std::invalid_argument);
  CHECK_THROWS_AS(make_subgroup(s3, {0, 1, 2, 3}), std::invalid_argument);

  CHECK(normal_subgroups(oracle::q8().table).size() == 6);
  CHECK(all_subgroups(oracle::q8().table).size() == 6);
}

TEST_CASE("restriction matrices") {
  GroupTable s3 = oracle::s3().table;
  const auto a3 = normal_subgroups(s3)[1];
  IntMatrix r = restriction_matrix(s3, a3);
  REQUIRE(r.rows() == 3);
  // trivial and sign restrict to the trivial character; the standard one to the two others
  CHECK(r.col(0) == (IntVector(3) << 1, 0, 0).finished());
  CHECK(r.col(1) == (IntVector(3) << 1, 0, 0).finished());
  CHECK(r.col(2) == (IntVector(3) << 0, 1, 1).finished());

  IntMatrix trivial = restriction_matrix(s3, {s3.identity});
  CHECK(trivial == (IntMatrix(1, 3) << 1, 1, 2).finished());

  std::vector<int> all(6);
  std::iota(all.begin(), all.end(), 0);
  CHECK(restriction_matrix(s3, all) == IntMatrix(IntMatrix::Identity(3, 3)));
}

TEST_CASE("extension sequences of S3") {
  GroupTable s3 = oracle::s3().table;
  const auto a3 = normal_subgroups(s3)[1];
  SequenceData s = extension_sequence(s3, a3);
  CHECK(validate_sequence(s).ok());
  CHECK(s.A->rank() == 2);
  CHECK(s.C->rank() == 3);
  CHECK(kernel_simples(s) == std::vector<int>{0, 1});
  CHECK_THROWS_AS(extension_sequence(s3, all_subgroups(s3)[1]), std::invalid_argument);

  std::vector<int> all(6);
  std::iota(all.begin(), all.end(), 0);
  SequenceData whole = extension_sequence(s3, all);
  CHECK(whole.A->rank() == 1);
  CHECK(whole.F == IntMatrix(IntMatrix::Identity(3, 3)));
  CHECK(validate_sequence(whole).ok());
}

TEST_CASE("restriction to a non-normal subgroup") {
  GroupTable s3 = oracle::s3().table;
  SequenceData s = restriction_sequence(s3, all_subgroups(s3)[1]);
  CHECK(validate_sequence(s).ok());
  CHECK(s.A->rank() == 1);  // the normal closure of a reflection is S3
  CHECK_FALSE(normality_check(s));
}
