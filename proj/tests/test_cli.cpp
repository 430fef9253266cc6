#include "doctest.h"

#include "fusionseq/io.hpp"

#include <array>
#include <cstdio>
#include <fstream>
#include <sys/wait.h>

using namespace fusionseq;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args, bool with_stderr = false) {
  const std::string cmd = std::string(FUSIONSEQ_BIN) + " " + args + (with_stderr ? " 2>&1" : " 2>/dev/null");
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string corpus(const std::string& rel) { return std::string(CORPUS_DIR) + "/" + rel; }

fs::path scratch(const std::string& name) {
  fs::path dir = fs::temp_directory_path() / "fusionseq_test_cli";
  fs::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("validate") {
  CHECK(run("validate " + corpus("groups/s3.json")).code == 0);
  CHECK(run("validate " + corpus("rings/fib.json")).code == 0);
  CHECK(run("validate " + corpus("modules/fib_regular.json")).code == 0);
  CHECK(run("validate " + corpus("sequences/s3_small_a.json")).code == 0);

  const auto broken = scratch("broken.json");
  std::ofstream(broken) << "{\"schema\": \"ring\", \"rank\": }";
  const Run r = run("validate " + broken.string(), true);
  CHECK(r.code == 2);
  CHECK(r.out.find("line 1, column 28") != std::string::npos);

  Json doc = read_json_file(corpus("rings/fib.json"));
  doc["N"][1][1][0] = "0";
  write_json_file(scratch("bad_fib.json"), doc);
  const Run bad = run("validate " + scratch("bad_fib.json").string());
  CHECK(bad.code == 1);
  const Json report = Json::parse(bad.out);
  CHECK(report["valid"] == false);
  CHECK_FALSE(report["validation"]["violations"].empty());

  CHECK(run("validate " + scratch("nowhere.json").string()).code == 2);
  CHECK(run("validate").code == 2);
}

TEST_CASE("fpdim") {
  const Json s3 = Json::parse(run("fpdim " + corpus("rings/reps3.json")).out);
  CHECK(s3["category"]["exact_integer"] == "6");
  std::vector<std::string> dims;
  for (const auto& o : s3["objects"]) dims.push_back(o["exact_integer"]);
  CHECK(dims == std::vector<std::string>{"1", "1", "2"});

  const Json fib = Json::parse(run("fpdim " + corpus("rings/fib.json")).out);
  CHECK(fib["category"]["exact_integer"].is_null());
  const Rational lo = parse_rational(fib["category"]["lo"].get<std::string>());
  const Rational hi = parse_rational(fib["category"]["hi"].get<std::string>());
  // (5 + sqrt 5) / 2 is the larger root of x^2 - 5x + 5
  auto f = [](const Rational& x) { return x * x - 5 * x + 5; };
  CHECK(f(lo) < 0);
  CHECK(f(hi) > 0);
  CHECK(hi - lo <= pow10(-12));

  const Json m = Json::parse(run("fpdim " + corpus("modules/reps3_vec.json")).out);
  const Rational s_lo = parse_rational(m["normalization_scale"]["lo"].get<std::string>());
  const Rational s_hi = parse_rational(m["normalization_scale"]["hi"].get<std::string>());
  CHECK(s_lo * s_lo <= 6);
  CHECK(s_hi * s_hi >= 6);

  CHECK(run("fpdim " + corpus("groups/s3.json")).code == 2);
  CHECK(run("--tol 0 fpdim " + corpus("rings/fib.json")).code == 2);
  CHECK(run("--tol abc fpdim " + corpus("rings/fib.json")).code == 2);
}

TEST_CASE("perron") {
  Json doc;
  doc["schema"] = "matrix";
  doc["rows"] = Json::array({Json::array({"2", "1"}), Json::array({"1", "2"})});
  write_json_file(scratch("m.json"), doc);
  const Json r = Json::parse(run("perron " + scratch("m.json").string()).out);
  CHECK(r["result"]["exact_integer"] == "3");

  doc["rows"][0][1] = "-1";
  write_json_file(scratch("neg.json"), doc);
  CHECK(run("perron " + scratch("neg.json").string()).code == 2);
}

TEST_CASE("make and check-exact") {
  const auto ext = scratch("s3_ext.json");
  CHECK(run("make extension --group " + corpus("groups/s3.json") + " --normal 0,2,4 -o " + ext.string()).code == 0);
  const Run check = run("check-exact " + ext.string());
  CHECK(check.code == 0);
  const Json report = Json::parse(check.out);
  CHECK(report["verdict"] == "exact");
  CHECK(report["alpha"]["exact"] == "1");
  CHECK(report["cross_check"] == true);

  CHECK(run("make extension --group " + corpus("groups/s3.json") + " --normal 0,1").code == 2);
  CHECK(run("make extension --group " + corpus("groups/s3.json") + " --normal 0,9").code == 2);

  const Json q8 = Json::parse(run("make repg --group " + corpus("groups/q8.json")).out);
  CHECK(q8["rank"] == 5);
  const Json vec = Json::parse(run("make vecg --group " + corpus("groups/q8.json")).out);
  CHECK(vec["rank"] == 8);
  const Json end = Json::parse(run("make end --mrank 2").out);
  CHECK(end["unit_components"] == Json::array({0, 3}));

  const auto del = scratch("fib_del.json");
  CHECK(run("make deligne --a " + corpus("rings/fib.json") + " --c " + corpus("rings/repz2.json") + " --module " +
            corpus("modules/fib_regular.json") + " -o " + del.string())
            .code == 0);
  const Run fib = run("check-exact " + del.string());
  CHECK(fib.code == 0);
  const Json fr = Json::parse(fib.out);
  CHECK(fr["normal"] == true);
  const Rational lo = parse_rational(fr["alpha"]["lo"].get<std::string>());
  const Rational hi = parse_rational(fr["alpha"]["hi"].get<std::string>());
  CHECK(lo <= 1);
  CHECK(hi >= 1);
  CHECK(hi - lo <= pow10(-12));

  const Run small = run("check-exact " + corpus("sequences/s3_small_a.json"));
  CHECK(small.code == 1);
  CHECK(Json::parse(small.out)["reason"].get<std::string>().find("kernel mismatch") == 0);

  // a module over the wrong ring
  CHECK(run("make deligne --a " + corpus("rings/ising.json") + " --c " + corpus("rings/repz2.json") + " --module " +
            corpus("modules/fib_regular.json"))
            .code == 2);
}

TEST_CASE("invalid sequences never exit 0") {
  Json doc = read_json_file(corpus("sequences/s3_extension.json"));
  doc["F"][0][2] = "1";
  write_json_file(scratch("bad_seq.json"), doc);
  CHECK(run("check-exact " + scratch("bad_seq.json").string()).code == 2);
  CHECK(run("validate " + scratch("bad_seq.json").string()).code == 1);
}

TEST_CASE("json output is byte-stable") {
  const std::string args = "check-exact " + corpus("sequences/fib_deligne.json");
  CHECK(run(args).out == run(args).out);
  const std::string f = "--tol 1e-20 fpdim " + corpus("rings/ising.json");
  CHECK(run(f).out == run(f).out);
  CHECK(run(f).out.find('.') == std::string::npos);
}

TEST_CASE("human format and output file") {
  const Run h = run("--format human fpdim " + corpus("rings/reps3.json"));
  CHECK(h.code == 0);
  CHECK(h.out.find("FPdim") != std::string::npos);
  CHECK(run("--format xml fpdim " + corpus("rings/reps3.json")).code == 2);
  const auto out = scratch("out.json");
  fs::remove(out);
  CHECK(run("fpdim " + corpus("rings/reps3.json") + " --output " + out.string()).code == 0);
  CHECK(read_json_file(out)["category"]["exact_integer"] == "6");
}

TEST_CASE("corpus command") {
  const Run one = run("corpus --case file/s3_small_a --format human");
  CHECK(one.code == 0);
  const Json single = Json::parse(run("corpus --case extension/s3/0-2-4").out);
  CHECK(single["cases"].size() == 1);
  CHECK(single["summary"]["agreements"] == 1);
  CHECK(run("corpus --case no/such/case").code == 2);

  fs::create_directories(scratch("empty"));
  CHECK(run("corpus --dir " + scratch("empty").string()).code == 2);
  CHECK(run("corpus --dir " + scratch("missing_dir").string()).code == 2);

  const std::string env = "FUSIONSEQ_CORPUS=" + scratch("empty").string() + " ";
  const std::string cmd = env + FUSIONSEQ_BIN + " corpus >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  CHECK(WEXITSTATUS(status) == 2);
}
