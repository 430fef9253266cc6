#include "fusionseq/io.hpp"

#include <fstream>
#include <sstream>

namespace fusionseq {

namespace fs = std::filesystem;

namespace {

[[noreturn]] void fail(const std::string& what) { throw ParseError(what); }

const Json& field(const Json& doc, const char* key, const std::string& where) {
  if (!doc.is_object()) fail(where + ": expected an object");
  auto it = doc.find(key);
  if (it == doc.end()) fail(where + ": missing field \"" + key + "\"");
  return *it;
}

Integer integer_of(const Json& v, const std::string& where) {
  try {
    if (v.is_string()) return parse_integer(v.get<std::string>());
    if (v.is_number_integer()) return Integer(v.get<long long>());
    if (v.is_number_unsigned()) return Integer(v.get<unsigned long long>());
  } catch (const std::invalid_argument& e) {
    fail(where + ": " + e.what());
  }
  fail(where + ": expected an integer (decimal string or number)");
}

Rational rational_of(const Json& v, const std::string& where) {
  try {
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<long long>());
    if (v.is_number_unsigned()) return Rational(Integer(v.get<unsigned long long>()));
  } catch (const std::invalid_argument& e) {
    fail(where + ": " + e.what());
  }
  fail(where + ": expected a rational (\"p/q\" string or integer)");
}

int index_of(const Json& v, const std::string& where) {
  Integer z = integer_of(v, where);
  if (z < 0 || z > 1'000'000'000) fail(where + ": index out of range");
  return z.convert_to<int>();
}

std::vector<int> indices_of(const Json& v, const std::string& where) {
  if (!v.is_array()) fail(where + ": expected an array");
  std::vector<int> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(index_of(v[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

IntMatrix int_matrix_of(const Json& v, const std::string& where) {
  if (!v.is_array()) fail(where + ": expected an array of rows");
  const auto rows = static_cast<Index>(v.size());
  const Index cols = rows ? static_cast<Index>(v[0].is_array() ? v[0].size() : 0) : 0;
  IntMatrix m(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    const Json& row = v[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Index>(row.size()) != cols) fail(where + ": ragged rows");
    for (Index j = 0; j < cols; ++j)
      m(i, j) = integer_of(row[static_cast<std::size_t>(j)], where + "[" + std::to_string(i) + "][" + std::to_string(j) + "]");
  }
  return m;
}

std::vector<std::vector<std::vector<Integer>>> cube_of(const Json& v, std::size_t d0, std::size_t d1, const std::string& where) {
  if (!v.is_array() || v.size() != d0) fail(where + ": expected " + std::to_string(d0) + " entries");
  std::vector<std::vector<std::vector<Integer>>> out(d0);
  for (std::size_t i = 0; i < d0; ++i) {
    const Json& plane = v[i];
    if (!plane.is_array() || plane.size() != d1) fail(where + "[" + std::to_string(i) + "]: wrong length");
    out[i].resize(d1);
    for (std::size_t j = 0; j < d1; ++j) {
      const Json& row = plane[j];
      if (!row.is_array() || row.size() != d1) fail(where + "[" + std::to_string(i) + "][" + std::to_string(j) + "]: wrong length");
      for (std::size_t k = 0; k < d1; ++k)
        out[i][j].push_back(integer_of(row[k], where + "[" + std::to_string(i) + "][" + std::to_string(j) + "][" + std::to_string(k) + "]"));
    }
  }
  return out;
}

std::vector<std::string> labels_of(const Json& doc, const std::string& where) {
  auto it = doc.find("labels");
  if (it == doc.end()) return {};
  if (!it->is_array()) fail(where + ": labels must be an array of strings");
  std::vector<std::string> out;
  for (const auto& l : *it) {
    if (!l.is_string()) fail(where + ": labels must be an array of strings");
    out.push_back(l.get<std::string>());
  }
  return out;
}

void expect_schema(const Json& doc, const std::string& schema) {
  const std::string found = schema_of(doc);
  if (found != schema) fail("expected schema \"" + schema + "\", found \"" + found + "\"");
}

Json str(const Integer& z) { return to_string(z); }
Json str(const Rational& q) { return to_fraction_string(q); }

Json matrix_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(str(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

// A nested document: either inline or a path relative to `base`.
Json resolve(const Json& ref, const fs::path& base, fs::path& nested_base, const std::string& where) {
  if (ref.is_string()) {
    fs::path p = fs::path(ref.get<std::string>());
    if (p.is_relative()) p = base / p;
    nested_base = p.parent_path();
    return read_json_file(p);
  }
  if (ref.is_object()) {
    nested_base = base;
    return ref;
  }
  fail(where + ": expected a path or an inline document");
}

std::shared_ptr<const FusionRing> ring_ref(const Json& ref, const fs::path& base, const std::string& where) {
  fs::path nested;
  return std::make_shared<const FusionRing>(ring_from_json(resolve(ref, base, nested, where)));
}

}  // namespace

Json read_json_file(const fs::path& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    fail(path.string() + ": malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

void write_json_file(const fs::path& path, const Json& doc) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << dump(doc);
}

std::string schema_of(const Json& doc) {
  if (!doc.is_object()) fail("document is not a JSON object");
  auto it = doc.find("schema");
  if (it == doc.end() || !it->is_string()) fail("document has no \"schema\" field");
  return it->get<std::string>();
}

FusionRing ring_from_json(const Json& doc) {
  expect_schema(doc, "ring");
  const int rank = index_of(field(doc, "rank", "ring"), "ring.rank");
  if (rank <= 0) fail("ring.rank must be positive");
  std::vector<int> units;
  std::optional<bool> multifusion;
  if (doc.contains("unit_components")) {
    units = indices_of(doc["unit_components"], "ring.unit_components");
    multifusion = units.size() > 1 || (doc.contains("multifusion") && doc["multifusion"].get<bool>());
  } else {
    units = {index_of(field(doc, "unit", "ring"), "ring.unit")};
  }
  const std::vector<int> dual = indices_of(field(doc, "dual", "ring"), "ring.dual");
  const auto n = cube_of(field(doc, "N", "ring"), static_cast<std::size_t>(rank), static_cast<std::size_t>(rank), "ring.N");
  std::optional<IntMatrix> cartan;
  if (doc.contains("cartan") && !doc["cartan"].is_null()) {
    cartan = int_matrix_of(doc["cartan"], "ring.cartan");
    if (cartan->rows() != rank || cartan->cols() != rank) fail("ring.cartan: expected a rank x rank matrix");
  }
  for (int u : units)
    if (u >= rank) fail("ring: unit index out of range");
  try {
    return FusionRing::from_coefficients(n, units, dual, cartan, labels_of(doc, "ring"), multifusion);
  } catch (const std::invalid_argument& e) {
    fail(std::string("ring: ") + e.what());
  }
}

BasedModule module_from_json(const Json& doc, const fs::path& base) {
  expect_schema(doc, "module");
  auto ring = ring_ref(field(doc, "ring", "module"), base, "module.ring");
  const int m = index_of(field(doc, "mrank", "module"), "module.mrank");
  if (m <= 0) fail("module.mrank must be positive");
  const auto a = cube_of(field(doc, "a", "module"), static_cast<std::size_t>(ring->rank()), static_cast<std::size_t>(m), "module.a");
  try {
    return BasedModule::from_coefficients(ring, a, labels_of(doc, "module"));
  } catch (const std::invalid_argument& e) {
    fail(std::string("module: ") + e.what());
  }
}

GroupTable group_from_json(const Json& doc) {
  expect_schema(doc, "group");
  const int order = index_of(field(doc, "order", "group"), "group.order");
  const Json& mult = field(doc, "mult", "group");
  if (!mult.is_array() || static_cast<int>(mult.size()) != order) fail("group.mult: expected order rows");
  std::vector<std::vector<int>> table;
  for (std::size_t i = 0; i < mult.size(); ++i) table.push_back(indices_of(mult[i], "group.mult[" + std::to_string(i) + "]"));
  std::string name = doc.contains("name") && doc["name"].is_string() ? doc["name"].get<std::string>() : "";
  try {
    return make_group(std::move(table), std::move(name));
  } catch (const std::invalid_argument& e) {
    fail(std::string("group: ") + e.what());
  }
}

SequenceData sequence_from_json(const Json& doc, const fs::path& base) {
  expect_schema(doc, "sequence");
  SequenceData s;
  s.A = ring_ref(field(doc, "A", "sequence"), base, "sequence.A");
  s.B = ring_ref(field(doc, "B", "sequence"), base, "sequence.B");
  s.C = ring_ref(field(doc, "C", "sequence"), base, "sequence.C");
  fs::path nested;
  const Json mdoc = resolve(field(doc, "M", "sequence"), base, nested, "sequence.M");
  BasedModule m = module_from_json(mdoc, nested);
  // share the acting ring with A when they agree
  if (m.ring() == *s.A) {
    std::vector<IntMatrix> action;
    for (int i = 0; i < s.A->rank(); ++i) action.push_back(m.action_matrix(i));
    m = BasedModule(s.A, std::move(action), m.labels());
  }
  s.M = std::make_shared<const BasedModule>(std::move(m));
  s.iota = int_matrix_of(field(doc, "iota", "sequence"), "sequence.iota");
  s.F = int_matrix_of(field(doc, "F", "sequence"), "sequence.F");
  if (doc.contains("name") && doc["name"].is_string()) s.name = doc["name"].get<std::string>();
  return s;
}

RatMatrix matrix_from_json(const Json& doc) {
  expect_schema(doc, "matrix");
  const Json& rows = field(doc, "rows", "matrix");
  if (!rows.is_array() || rows.empty()) fail("matrix.rows: expected a nonempty array of rows");
  const std::size_t cols = rows[0].is_array() ? rows[0].size() : 0;
  RatMatrix m(static_cast<Index>(rows.size()), static_cast<Index>(cols));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!rows[i].is_array() || rows[i].size() != cols) fail("matrix.rows: ragged rows");
    for (std::size_t j = 0; j < cols; ++j)
      m(static_cast<Index>(i), static_cast<Index>(j)) =
          rational_of(rows[i][j], "matrix.rows[" + std::to_string(i) + "][" + std::to_string(j) + "]");
  }
  return m;
}

FusionRing load_ring(const fs::path& path) { return ring_from_json(read_json_file(path)); }
BasedModule load_module(const fs::path& path) { return module_from_json(read_json_file(path), path.parent_path()); }
GroupTable load_group(const fs::path& path) { return group_from_json(read_json_file(path)); }
SequenceData load_sequence(const fs::path& path) { return sequence_from_json(read_json_file(path), path.parent_path()); }

Json ring_to_json(const FusionRing& ring, const std::string& name) {
  Json doc;
  doc["schema"] = "ring";
  if (!name.empty()) doc["name"] = name;
  doc["rank"] = ring.rank();
  if (ring.is_multifusion()) doc["unit_components"] = ring.unit_components();
  else doc["unit"] = ring.unit();
  doc["dual"] = ring.duals();
  Json n = Json::array();
  for (int i = 0; i < ring.rank(); ++i) {
    Json plane = Json::array();
    for (int j = 0; j < ring.rank(); ++j) {
      Json row = Json::array();
      for (int k = 0; k < ring.rank(); ++k) row.push_back(str(ring.N(i, j, k)));
      plane.push_back(std::move(row));
    }
    n.push_back(std::move(plane));
  }
  doc["N"] = std::move(n);
  if (ring.has_cartan()) doc["cartan"] = matrix_json(ring.cartan());
  if (!ring.labels().empty()) doc["labels"] = ring.labels();
  return doc;
}

Json module_to_json(const BasedModule& m, const std::string& name) {
  Json doc;
  doc["schema"] = "module";
  if (!name.empty()) doc["name"] = name;
  doc["ring"] = ring_to_json(m.ring());
  doc["mrank"] = m.rank();
  Json a = Json::array();
  for (int i = 0; i < m.ring().rank(); ++i) {
    Json plane = Json::array();
    for (int j = 0; j < m.rank(); ++j) {
      Json row = Json::array();
      for (int k = 0; k < m.rank(); ++k) row.push_back(str(m.a(i, j, k)));
      plane.push_back(std::move(row));
    }
    a.push_back(std::move(plane));
  }
  doc["a"] = std::move(a);
  if (!m.labels().empty()) doc["labels"] = m.labels();
  return doc;
}

Json group_to_json(const GroupTable& g) {
  Json doc;
  doc["schema"] = "group";
  if (!g.name.empty()) doc["name"] = g.name;
  doc["order"] = g.order;
  doc["mult"] = g.mult;
  return doc;
}

Json sequence_to_json(const SequenceData& s) {
  Json doc;
  doc["schema"] = "sequence";
  if (!s.name.empty()) doc["name"] = s.name;
  doc["A"] = ring_to_json(*s.A);
  doc["B"] = ring_to_json(*s.B);
  doc["C"] = ring_to_json(*s.C);
  doc["M"] = module_to_json(*s.M);
  doc["iota"] = matrix_json(s.iota);
  doc["F"] = matrix_json(s.F);
  return doc;
}

Json matrix_to_json(const RatMatrix& m) {
  Json doc;
  doc["schema"] = "matrix";
  Json rows = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(str(m(i, j)));
    rows.push_back(std::move(row));
  }
  doc["rows"] = std::move(rows);
  return doc;
}

Json to_json(const Interval& x) {
  Json doc;
  doc["lo"] = str(x.lo());
  doc["hi"] = str(x.hi());
  return doc;
}

Json to_json(const PerronResult& r, bool with_eigvec) {
  Json doc;
  doc["lo"] = str(r.lo);
  doc["hi"] = str(r.hi);
  doc["exact_integer"] = r.exact_integer ? str(*r.exact_integer) : Json(nullptr);
  doc["irreducible"] = r.irreducible;
  if (with_eigvec) {
    Json v = Json::array();
    for (Index i = 0; i < r.eigvec.size(); ++i) v.push_back(str(r.eigvec(i)));
    doc["eigvec"] = std::move(v);
  }
  return doc;
}

Json to_json(const ValidationReport& r) {
  Json doc;
  doc["ok"] = r.ok();
  Json list = Json::array();
  for (const auto& v : r.violations()) {
    Json item;
    item["kind"] = v.kind;
    item["indices"] = v.indices;
    if (!v.detail.empty()) item["detail"] = v.detail;
    list.push_back(std::move(item));
  }
  doc["violations"] = std::move(list);
  doc["dropped"] = r.dropped();
  return doc;
}

Json to_json(const RingDimensions& d) {
  Json doc;
  Json objects = Json::array();
  for (const auto& o : d.objects) objects.push_back(to_json(o));
  doc["objects"] = std::move(objects);
  doc["category"] = to_json(d.category);
  return doc;
}

Json to_json(const ModuleFPData& d) {
  Json doc;
  Json dims = Json::array();
  for (Index j = 0; j < d.dims.size(); ++j) dims.push_back(to_json(d.dims(j)));
  doc["dims"] = std::move(dims);
  doc["normalization_scale"] = to_json(d.normalization_scale);
  Json v = Json::array();
  for (Index j = 0; j < d.perron_vector.size(); ++j) v.push_back(str(d.perron_vector(j)));
  doc["perron_vector"] = std::move(v);
  doc["ring_fpdim"] = to_json(d.ring.category);
  return doc;
}

Json to_json(const AlphaCertificate& a) {
  Json doc;
  doc["lo"] = str(a.interval.lo());
  doc["hi"] = str(a.interval.hi());
  doc["exact"] = a.exact ? str(*a.exact) : Json(nullptr);
  doc["route"] = to_string(a.route);
  doc["equals_one"] = a.equals_one;
  doc["consistent"] = a.consistent;
  doc["refinements"] = a.refinements;
  doc["fpdim_A"] = to_json(a.fpdim_a);
  doc["fpdim_B"] = to_json(a.fpdim_b);
  doc["fpdim_C"] = to_json(a.fpdim_c);
  return doc;
}

Json to_json(const ExactnessReport& r) {
  Json doc;
  doc["verdict"] = to_string(r.verdict);
  doc["reason"] = r.reason;
  doc["kernel"] = r.kernel;
  doc["iota_image"] = r.image;
  doc["kernel_matches"] = r.kernel_matches;
  doc["kernel_is_subring"] = r.kernel_is_subring;
  doc["surjective"] = r.surjective;
  doc["normal"] = r.normal;
  doc["normality_witnesses"] = r.normality_witnesses;
  doc["alpha"] = r.alpha ? to_json(*r.alpha) : Json(nullptr);
  doc["cross_check"] = r.cross_check ? Json(*r.cross_check) : Json(nullptr);
  doc["validation"] = to_json(r.validation);
  return doc;
}

Json to_json(const NumericCheck& c) {
  Json doc;
  doc["passed"] = c.passed;
  doc["worst_gap"] = str(c.worst_gap);
  return doc;
}

}  // namespace fusionseq
