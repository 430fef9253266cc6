#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace fusionseq {

/// One violated invariant, with the indices that witness it.
struct Violation {
  std::string kind;
  std::vector<long> indices;
  std::string detail;
};

/// Violations are data, not errors: an empty report means the object is valid.
class ValidationReport {
 public:
  static constexpr std::size_t kMaxRecorded = 10000;

  void add(std::string kind, std::vector<long> indices, std::string detail = {});
  void merge(const ValidationReport& other, const std::string& prefix);

  bool ok() const { return violations_.empty() && dropped_ == 0; }
  const std::vector<Violation>& violations() const { return violations_; }
  /// Violations beyond kMaxRecorded are counted but not stored.
  std::size_t dropped() const { return dropped_; }
  bool has(const std::string& kind) const;

 private:
  std::vector<Violation> violations_;
  std::size_t dropped_ = 0;
};

}  // namespace fusionseq
