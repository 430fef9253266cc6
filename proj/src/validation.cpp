#include "fusionseq/validation.hpp"

#include <algorithm>

namespace fusionseq {

void ValidationReport::add(std::string kind, std::vector<long> indices, std::string detail) {
  if (violations_.size() >= kMaxRecorded) {
    ++dropped_;
    return;
  }
  violations_.push_back({std::move(kind), std::move(indices), std::move(detail)});
}

void ValidationReport::merge(const ValidationReport& other, const std::string& prefix) {
  for (const auto& v : other.violations_) add(prefix + v.kind, v.indices, v.detail);
  dropped_ += other.dropped_;
}

bool ValidationReport::has(const std::string& kind) const {
  return std::any_of(violations_.begin(), violations_.end(), [&](const Violation& v) { return v.kind == kind; });
}

}  // namespace fusionseq
