#include "doctest.h"
#include "fixtures.hpp"

#include "fusionseq/groups.hpp"
#include "fusionseq/io.hpp"

#include <fstream>

using namespace fusionseq;
using namespace fixtures;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  fs::path dir = fs::temp_directory_path() / "fusionseq_test_io";
  fs::create_directories(dir);
  return dir / name;
}

void write_text(const fs::path& p, const std::string& text) {
  std::ofstream out(p);
  out << text;
}

std::string parse_error_of(const Json& doc) {
  try {
    (void)ring_from_json(doc);
  } catch (const ParseError& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_CASE("rings round-trip") {
  for (const auto& r : {fibonacci(), ising(), rep_s3(), cyclic(5), end_ring(3)}) {
    const Json doc = ring_to_json(r, "x");
    CHECK(doc["schema"] == "ring");
    const FusionRing back = ring_from_json(doc);
    CHECK(back == r);
    CHECK(back.labels() == r.labels());
    CHECK(dump(ring_to_json(back, "x")) == dump(doc));
  }
}

TEST_CASE("coefficients may be strings or numbers") {
  Json doc = Json::parse(R"({"schema":"ring","rank":2,"unit":0,"dual":[0,1],
    "N":[[[1,0],[0,1]],[[0,"1"],["1",1]]]})");
  CHECK(ring_from_json(doc) == fibonacci());
  // leading zeros are decimal, not octal
  doc["N"][1][1][1] = "01";
  CHECK(ring_from_json(doc).N(1, 1, 1) == 1);
}

TEST_CASE("huge coefficients survive") {
  Json doc = ring_to_json(cyclic(1));
  doc["N"][0][0][0] = "123456789012345678901234567890";
  const FusionRing r = ring_from_json(doc);
  CHECK(to_string(r.N(0, 0, 0)) == "123456789012345678901234567890");
  CHECK_FALSE(validate_ring(r).ok());
}

TEST_CASE("shape errors are parse errors") {
  const Json good = ring_to_json(fibonacci());
  Json doc = good;
  doc.erase("N");
  CHECK(parse_error_of(doc).find("missing field \"N\"") != std::string::npos);

  doc = good;
  doc["N"][1][0] = Json::array({"1"});
  CHECK(parse_error_of(doc).find("ring.N[1][0]") != std::string::npos);

  doc = good;
  doc["N"][0][0][0] = "one";
  CHECK_FALSE(parse_error_of(doc).empty());

  doc = good;
  doc["schema"] = "module";
  CHECK(parse_error_of(doc).find("expected schema \"ring\"") != std::string::npos);

  doc = good;
  doc["dual"] = Json::array({0});
  CHECK_FALSE(parse_error_of(doc).empty());

  doc = good;
  doc["unit"] = 7;
  CHECK_FALSE(parse_error_of(doc).empty());

  CHECK_THROWS_AS(schema_of(Json::array()), ParseError);
  CHECK_THROWS_AS(schema_of(Json::object()), ParseError);
}

TEST_CASE("axiom violations are not parse errors") {
  Json doc = ring_to_json(fibonacci());
  doc["N"][1][1][0] = "0";
  FusionRing r = ring_from_json(doc);
  CHECK_FALSE(validate_ring(r).ok());
}

TEST_CASE("malformed JSON reports a position") {
  const fs::path p = scratch("broken.json");
  write_text(p, "{\"schema\": \"ring\",\n \"rank\": 2,, }");
  try {
    (void)read_json_file(p);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("byte") != std::string::npos);
  }
  CHECK_THROWS_AS(read_json_file(scratch("missing.json")), ParseError);
}

TEST_CASE("modules resolve ring paths relative to their file") {
  const fs::path dir = scratch("nested");
  fs::create_directories(dir / "rings");
  fs::create_directories(dir / "modules");
  write_json_file(dir / "rings" / "fib.json", ring_to_json(fibonacci(), "fib"));
  auto fib = std::make_shared<const FusionRing>(fibonacci());
  Json m = module_to_json(regular_module(fib));
  m["ring"] = "../rings/fib.json";
  write_json_file(dir / "modules" / "reg.json", m);
  const BasedModule loaded = load_module(dir / "modules" / "reg.json");
  CHECK(loaded.ring() == *fib);
  CHECK(loaded.rank() == 2);
  CHECK(validate_module(loaded).ok());
}

TEST_CASE("sequences round-trip and share the ring of M with A") {
  const GroupTable s3 = make_group({{0, 1, 2, 3, 4, 5}, {1, 0, 5, 4, 3, 2}, {2, 3, 4, 5, 0, 1},
                                    {3, 2, 1, 0, 5, 4}, {4, 5, 0, 1, 2, 3}, {5, 4, 3, 2, 1, 0}}, "s3");
  const SequenceData s = extension_sequence(s3, {0, 2, 4});
  const Json doc = sequence_to_json(s);
  const SequenceData back = sequence_from_json(doc, ".");
  CHECK(back.M->ring_ptr() == back.A);
  CHECK(back.iota == s.iota);
  CHECK(back.F == s.F);
  CHECK(*back.B == *s.B);
  CHECK(back.name == s.name);
  CHECK(dump(sequence_to_json(back)) == dump(doc));
  CHECK(check_exact(back).verdict == Verdict::exact);
}

TEST_CASE("groups and matrices") {
  const GroupTable z3 = make_group({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}, "c3");
  const GroupTable back = group_from_json(group_to_json(z3));
  CHECK(back.mult == z3.mult);
  CHECK(back.name == "c3");

  Json bad = group_to_json(z3);
  bad["mult"][1][1] = 9;
  CHECK_THROWS_AS(group_from_json(bad), ParseError);

  const RatMatrix m = rat({{1, 2}, {3, 4}});
  RatMatrix q = m;
  q(0, 1) = Rational(-7) / 4;
  const Json doc = matrix_to_json(q);
  CHECK(doc["rows"][0][1] == "-7/4");
  CHECK(matrix_from_json(doc) == q);
  Json decimals = Json::parse(R"({"schema":"matrix","rows":[["0.25","1e-3"]]})");
  const RatMatrix d = matrix_from_json(decimals);
  CHECK(d(0, 0) == Rational(1) / 4);
  CHECK(d(0, 1) == Rational(1) / 1000);
}

TEST_CASE("reports carry no floating point") {
  auto fib = std::make_shared<const FusionRing>(fibonacci());
  const auto dims = ring_dimensions(*fib);
  const std::string text = dump(to_json(dims));
  for (const auto& item : to_json(dims)["objects"]) {
    CHECK(item["lo"].is_string());
    CHECK(item["hi"].is_string());
  }
  CHECK(text.find('.') == std::string::npos);
  const Json p = to_json(perron_eigen(rat({{1, 1}, {1, 0}})), true);
  CHECK(p["exact_integer"].is_null());
  CHECK(p["eigvec"].size() == 2);
}
