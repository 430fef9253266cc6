#include "fusionseq/corpus.hpp"

#include "fusionseq/groups.hpp"
#include "fusionseq/io.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <thread>

#ifndef FUSIONSEQ_CORPUS_DIR
#define FUSIONSEQ_CORPUS_DIR "corpus"
#endif

namespace fusionseq {

namespace fs = std::filesystem;

namespace {

std::vector<fs::path> json_files(const fs::path& dir) {
  std::vector<fs::path> out;
  if (!fs::is_directory(dir)) return out;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".json") out.push_back(entry.path());
  std::sort(out.begin(), out.end());
  return out;
}

std::string join(const std::vector<int>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "-" : "") + std::to_string(xs[i]);
  return out;
}

// Drops A to the based subring on `subset`, keeping iota and M restricted.
std::optional<SequenceData> shrink_a(const SequenceData& s, const std::vector<int>& subset) {
  auto a = std::make_shared<const FusionRing>(based_subring(*s.A, subset));
  std::vector<IntMatrix> action;
  for (int i : subset) action.push_back(s.M->action_matrix(i));
  BasedModule m(a, std::move(action), s.M->labels());
  if (!is_indecomposable(m)) return std::nullopt;
  SequenceData t = s;
  t.A = a;
  t.M = std::make_shared<const BasedModule>(std::move(m));
  t.iota = IntMatrix(s.iota.rows(), static_cast<Index>(subset.size()));
  for (std::size_t c = 0; c < subset.size(); ++c) t.iota.col(static_cast<Index>(c)) = s.iota.col(subset[c]);
  return t;
}

void add_group_cases(const GroupTable& g, const std::string& stem, const CorpusOptions& opts, std::vector<CorpusCase>& out,
                     std::vector<std::size_t>& exact_bases) {
  for (const auto& normal : normal_subgroups(g)) {
    SequenceData s = extension_sequence(g, normal);
    const std::string id = "extension/" + stem + "/" + join(normal);
    const auto subrings = fusion_subrings(*s.A);
    std::vector<std::vector<int>> proper;
    for (const auto& sub : subrings)
      if (static_cast<int>(sub.size()) < s.A->rank()) proper.push_back(sub);
    // smallest and largest proper subrings first
    std::vector<std::vector<int>> picks;
    if (!proper.empty()) picks.push_back(proper.front());
    if (proper.size() > 1) picks.push_back(proper.back());
    if (static_cast<int>(picks.size()) > opts.subrings_per_extension) picks.resize(static_cast<std::size_t>(opts.subrings_per_extension));
    for (const auto& sub : picks)
      if (auto t = shrink_a(s, sub)) {
        t->name = s.name + "/A" + join(sub);
        out.push_back({"subring/" + stem + "/" + join(normal) + "/" + join(sub), "subring", std::move(*t), Verdict::not_exact});
      }
    exact_bases.push_back(out.size());
    out.push_back({id, "extension", std::move(s), Verdict::exact});
  }
  for (const auto& h : all_subgroups(g)) {
    if (is_normal(g, h)) continue;
    out.push_back({"restriction/" + stem + "/" + join(h), "restriction", restriction_sequence(g, h), Verdict::not_exact});
  }
}

}  // namespace

fs::path default_corpus_root() {
  if (const char* env = std::getenv("FUSIONSEQ_CORPUS"); env && *env) return fs::path(env);
  return fs::path(FUSIONSEQ_CORPUS_DIR);
}

std::vector<CorpusCase> build_corpus(const CorpusOptions& opts) {
  if (!fs::is_directory(opts.root)) throw CorpusError("corpus directory not found: " + opts.root.string());
  std::vector<CorpusCase> out;
  std::vector<std::size_t> exact_bases;

  for (const auto& path : json_files(opts.root / "groups")) {
    const GroupTable g = load_group(path);
    if (!validate_group(g).ok()) throw CorpusError("invalid group table: " + path.string());
    if (g.order > opts.max_group_order) continue;
    add_group_cases(g, path.stem().string(), opts, out, exact_bases);
  }

  std::vector<std::pair<std::string, std::shared_ptr<const FusionRing>>> rings;
  for (const auto& path : json_files(opts.root / "rings"))
    rings.emplace_back(path.stem().string(), std::make_shared<const FusionRing>(load_ring(path)));
  for (const auto& path : json_files(opts.root / "modules")) {
    const BasedModule m = load_module(path);
    auto mod = std::make_shared<const BasedModule>(m);
    for (const auto& [stem, c] : rings) {
      SequenceData s = make_deligne_sequence(m.ring_ptr(), c, mod);
      s.name = path.stem().string() + "_" + stem;
      exact_bases.push_back(out.size());
      out.push_back({"deligne/" + path.stem().string() + "/" + stem, "deligne", std::move(s), Verdict::exact});
    }
  }

  for (const auto& path : json_files(opts.root / "sequences")) {
    const Json doc = read_json_file(path);
    std::optional<Verdict> expected;
    if (auto it = doc.find("expected"); it != doc.end() && it->is_string()) {
      const std::string e = it->get<std::string>();
      if (e == "exact") expected = Verdict::exact;
      else if (e == "not_exact") expected = Verdict::not_exact;
      else throw ParseError(path.string() + ": unknown expected verdict \"" + e + "\"");
    }
    out.push_back({"file/" + path.stem().string(), "file", sequence_from_json(doc, path.parent_path()), expected});
  }

  if (out.empty()) throw CorpusError("corpus directory has no cases: " + opts.root.string());

  // Single-entry mutations of exact cases: one coefficient of iota or F is
  // toggled between zero and a small positive value.
  std::mt19937 rng(opts.seed);
  for (int n = 0; n < opts.mutations && !exact_bases.empty(); ++n) {
    const CorpusCase& base = out[exact_bases[rng() % exact_bases.size()]];
    SequenceData s = base.sequence;
    const bool in_f = rng() % 2 == 0;
    IntMatrix& target = in_f ? s.F : s.iota;
    const Index i = static_cast<Index>(rng() % static_cast<unsigned>(target.rows()));
    const Index j = static_cast<Index>(rng() % static_cast<unsigned>(target.cols()));
    target(i, j) = target(i, j) == 0 ? Integer(1 + rng() % 2) : Integer(0);
    char tag[16];
    std::snprintf(tag, sizeof tag, "%04d", n);
    std::string id = std::string("mutation/") + tag + "/" + base.id.substr(base.id.find('/') + 1) + (in_f ? "/F" : "/iota") + "/" +
                     std::to_string(i) + "," + std::to_string(j);
    s.name = base.sequence.name + "/mutated";
    out.push_back({std::move(id), "mutation", std::move(s), Verdict::not_exact});
  }

  std::sort(out.begin(), out.end(), [](const CorpusCase& a, const CorpusCase& b) { return a.id < b.id; });
  return out;
}

CaseResult run_case(const CorpusCase& c, const PerronOptions& opts) {
  CaseResult r;
  r.id = c.id;
  r.origin = c.origin;
  r.expected = c.expected;
  try {
    ExactnessReport report = check_exact(c.sequence, opts);
    r.verdict = report.verdict;
    r.reason = report.reason;
    r.alpha = report.alpha;
    r.cross_check = report.cross_check;
    r.decidable = report.validation.ok() && report.surjective && report.alpha && report.alpha->independent();
    if (report.validation.ok() && report.surjective && is_indecomposable(*c.sequence.M))
      r.regular_image = regular_image_check(c.sequence, opts).passed;
  } catch (const std::exception& e) {
    r.verdict = Verdict::undecided;
    r.error = e.what();
  }
  return r;
}

CorpusSummary run_corpus(const std::vector<CorpusCase>& cases, const PerronOptions& opts, unsigned threads) {
  CorpusSummary summary;
  summary.results.resize(cases.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, cases.size())));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cases.size(); i = next++) summary.results[i] = run_case(cases[i], opts);
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (const auto& r : summary.results) {
    switch (r.verdict) {
      case Verdict::exact: ++summary.exact; break;
      case Verdict::not_exact: ++summary.not_exact; break;
      case Verdict::undecided: ++summary.undecided; break;
    }
    if (r.decidable && r.cross_check) {
      ++summary.decidable;
      if (*r.cross_check) ++summary.agreements;
      else ++summary.disagreements;
    }
    if (!r.matches_expected() || !r.error.empty()) ++summary.expectation_failures;
    if (r.regular_image && !*r.regular_image) ++summary.regular_image_failures;
  }
  return summary;
}

int CorpusSummary::exit_code() const {
  if (disagreements > 0) return 4;
  if (expectation_failures > 0 || regular_image_failures > 0) return 1;
  return 0;
}

}  // namespace fusionseq
