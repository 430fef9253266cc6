#pragma once

// The bundled test corpus: sequences built from the group tables, rings and
// modules under a corpus directory, with known expected verdicts, plus
// single-entry mutations of the exact ones.

#include "fusionseq/exact_sequence.hpp"

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fusionseq {

class CorpusError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// $FUSIONSEQ_CORPUS if set, else the corpus directory of the source tree.
std::filesystem::path default_corpus_root();

struct CorpusOptions {
  std::filesystem::path root = default_corpus_root();
  /// Groups above this order are skipped.
  int max_group_order = 1 << 20;
  int mutations = 240;
  unsigned seed = 1;
  /// Proper subrings tried per extension sequence.
  int subrings_per_extension = 2;
};

struct CorpusCase {
  /// "<origin>/<details>", unique; cases are sorted by id.
  std::string id;
  std::string origin;
  SequenceData sequence;
  std::optional<Verdict> expected;
};

/// Reads groups/, rings/, modules/ and sequences/ under the root. Throws
/// CorpusError when nothing usable is found and ParseError on bad files.
std::vector<CorpusCase> build_corpus(const CorpusOptions& opts);

struct CaseResult {
  std::string id;
  std::string origin;
  std::optional<Verdict> expected;
  Verdict verdict = Verdict::undecided;
  std::string reason;
  std::optional<AlphaCertificate> alpha;
  std::optional<bool> cross_check;
  /// Valid, surjective, and alpha decided without normality.
  bool decidable = false;
  /// Run on valid surjective sequences with indecomposable M.
  std::optional<bool> regular_image;
  std::string error;

  bool matches_expected() const { return !expected || *expected == verdict; }
};

struct CorpusSummary {
  std::vector<CaseResult> results;
  int exact = 0, not_exact = 0, undecided = 0;
  int decidable = 0, agreements = 0, disagreements = 0;
  int expectation_failures = 0;
  int regular_image_failures = 0;

  /// 0 all good, 4 on any cross-check disagreement, 1 on other failures.
  int exit_code() const;
};

CaseResult run_case(const CorpusCase& c, const PerronOptions& opts = {});
/// Cases run on up to `threads` workers; results keep the input order.
CorpusSummary run_corpus(const std::vector<CorpusCase>& cases, const PerronOptions& opts = {}, unsigned threads = 0);

}  // namespace fusionseq
