#pragma once

// JSON encodings. Every document carries a "schema" field; integers are
// written as decimal strings and rationals as "p/q" strings. Output uses
// insertion-ordered objects so that identical inputs give identical bytes.

#include "fusionseq/based_module.hpp"
#include "fusionseq/exact_sequence.hpp"
#include "fusionseq/fusion_ring.hpp"
#include "fusionseq/groups.hpp"

#include <filesystem>
#include <stdexcept>
#include <string>

#include "json.hpp"

namespace fusionseq {

using Json = nlohmann::ordered_json;

/// Unreadable file, malformed JSON, or a document of the wrong shape.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const Json& doc);
/// Two-space indented text with a trailing newline.
std::string dump(const Json& doc);

/// The "schema" field; throws ParseError when missing.
std::string schema_of(const Json& doc);

// Nested references ("ring": "fib.json") resolve against `base`.
FusionRing ring_from_json(const Json& doc);
BasedModule module_from_json(const Json& doc, const std::filesystem::path& base);
GroupTable group_from_json(const Json& doc);
SequenceData sequence_from_json(const Json& doc, const std::filesystem::path& base);
RatMatrix matrix_from_json(const Json& doc);

FusionRing load_ring(const std::filesystem::path& path);
BasedModule load_module(const std::filesystem::path& path);
GroupTable load_group(const std::filesystem::path& path);
SequenceData load_sequence(const std::filesystem::path& path);

Json ring_to_json(const FusionRing& ring, const std::string& name = {});
/// The acting ring is written inline.
Json module_to_json(const BasedModule& m, const std::string& name = {});
Json group_to_json(const GroupTable& g);
/// Rings and module inline.
Json sequence_to_json(const SequenceData& s);
Json matrix_to_json(const RatMatrix& m);

Json to_json(const Interval& x);
Json to_json(const PerronResult& r, bool with_eigvec = false);
Json to_json(const ValidationReport& r);
Json to_json(const RingDimensions& d);
Json to_json(const ModuleFPData& d);
Json to_json(const AlphaCertificate& a);
Json to_json(const ExactnessReport& r);
Json to_json(const NumericCheck& c);

}  // namespace fusionseq
