#include "doctest.h"

#include "fusionseq/corpus.hpp"
#include "fusionseq/groups.hpp"
#include "fusionseq/io.hpp"

#include <set>

using namespace fusionseq;
namespace fs = std::filesystem;

namespace {

std::vector<std::pair<std::string, GroupTable>> bundled_groups() {
  std::vector<std::pair<std::string, GroupTable>> out;
  for (const auto& entry : fs::directory_iterator(fs::path(CORPUS_DIR) / "groups"))
    out.emplace_back(entry.path().stem().string(), load_group(entry.path()));
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

}  // namespace

TEST_CASE("every bundled group gives a consistent Rep(G)") {
  const auto groups = bundled_groups();
  CHECK(groups.size() >= 40);
  for (const auto& [name, g] : groups) {
    INFO(name);
    REQUIRE(validate_group(g).ok());
    const CharacterFusion cf = rep_g_fusion(g);
    CHECK(cf.num_irreps == conjugacy_classes(g).count());
    Integer sum = 0;
    for (const auto& d : cf.dims) sum += d * d;
    CHECK(sum == g.order);
    CHECK(validate_ring(cf.ring).ok());
    CHECK(*fpdim_category(cf.ring).exact_integer == g.order);
    for (int i = 0; i < cf.num_irreps; ++i) CHECK(*fpdim_object(cf.ring, i).exact_integer == cf.dims[static_cast<std::size_t>(i)]);
    CHECK(validate_ring(vec_g_ring(g)).ok());
    if (is_abelian(g)) {
      CHECK(cf.num_irreps == g.order);
      CHECK(based_isomorphism(cf.ring, vec_g_ring(g)).has_value());
    } else {
      CHECK_FALSE(based_isomorphism(cf.ring, vec_g_ring(g)).has_value());
    }
  }
}

TEST_CASE("restriction preserves dimension for every subgroup") {
  for (const auto& [name, g] : bundled_groups()) {
    if (g.order > 12) continue;
    const CharacterFusion cf = rep_g_fusion(g);
    for (const auto& h : all_subgroups(g)) {
      INFO(name << " subgroup of order " << h.size());
      const IntMatrix r = restriction_matrix(g, h);
      const CharacterFusion ch = rep_g_fusion(make_subgroup(g, h), cf.prime);
      REQUIRE(r.rows() == ch.num_irreps);
      for (int i = 0; i < cf.num_irreps; ++i) {
        Integer d = 0;
        for (int j = 0; j < ch.num_irreps; ++j) d += r(j, i) * ch.dims[static_cast<std::size_t>(j)];
        CHECK(d == cf.dims[static_cast<std::size_t>(i)]);
      }
      // Frobenius reciprocity: sum_i R[j][i] d_i = [G:H] d_j
      for (int j = 0; j < ch.num_irreps; ++j) {
        Integer s = 0;
        for (int i = 0; i < cf.num_irreps; ++i) s += r(j, i) * cf.dims[static_cast<std::size_t>(i)];
        CHECK(s == Integer(g.order / static_cast<int>(h.size())) * ch.dims[static_cast<std::size_t>(j)]);
      }
    }
  }
}

TEST_CASE("corpus builder") {
  CorpusOptions opts;
  opts.root = CORPUS_DIR;
  opts.max_group_order = 6;
  opts.mutations = 30;
  const auto cases = build_corpus(opts);
  std::set<std::string> ids;
  int mutations = 0;
  for (const auto& c : cases) {
    ids.insert(c.id);
    if (c.origin == "mutation") ++mutations;
  }
  CHECK(ids.size() == cases.size());
  CHECK(std::is_sorted(cases.begin(), cases.end(), [](const auto& a, const auto& b) { return a.id < b.id; }));
  CHECK(mutations == 30);
  CHECK(ids.count("extension/s3/0-2-4") == 1);
  CHECK(ids.count("restriction/s3/0-1") == 1);
  CHECK(ids.count("file/s3_small_a") == 1);

  const auto summary = run_corpus(cases, {}, 2);
  CHECK(summary.disagreements == 0);
  CHECK(summary.expectation_failures == 0);
  CHECK(summary.regular_image_failures == 0);
  CHECK(summary.exit_code() == 0);
  CHECK(summary.results.size() == cases.size());
  for (std::size_t i = 0; i < cases.size(); ++i) CHECK(summary.results[i].id == cases[i].id);

  // same seed, same corpus
  const auto again = build_corpus(opts);
  REQUIRE(again.size() == cases.size());
  for (std::size_t i = 0; i < cases.size(); ++i) CHECK(again[i].id == cases[i].id);
}

TEST_CASE("missing corpus directory") {
  CorpusOptions opts;
  opts.root = fs::temp_directory_path() / "fusionseq_no_such_corpus";
  CHECK_THROWS_AS(build_corpus(opts), CorpusError);
}
