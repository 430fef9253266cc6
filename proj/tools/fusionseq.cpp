// fusionseq: validate fusion data, compute FP dimensions, build rings and
// sequences, and certify exactness.
//
// Exit codes: 0 success / valid / exact, 1 invalid data or not exact,
// 2 parse or argument errors, 3 undecided, 4 cross-check disagreement.

#include "fusionseq/corpus.hpp"
#include "fusionseq/groups.hpp"
#include "fusionseq/io.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

namespace fs = std::filesystem;
using namespace fusionseq;

namespace {

enum Exit { kOk = 0, kInvalid = 1, kParse = 2, kUndecided = 3, kBreach = 4 };

struct Config {
  std::string tol = "1e-12";
  long max_iter = 1'000'000;
  std::string format = "json";
  std::string output;
  PerronOptions perron;

  bool human() const { return format == "human"; }
};

class Usage : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void emit(const Config& cfg, const std::string& text) {
  if (cfg.output.empty() || cfg.output == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(cfg.output);
  if (!out) throw Usage("cannot write " + cfg.output);
  out << text;
}

void emit(const Config& cfg, const Json& doc) { emit(cfg, dump(doc)); }

std::string approx(const Rational& q) {
  std::ostringstream os;
  os << std::setprecision(15) << to_double(q);
  return os.str();
}

std::string approx(const Interval& x) {
  if (x.is_point()) return to_fraction_string(x.lo());
  return "[" + approx(x.lo()) + ", " + approx(x.hi()) + "]";
}

std::string approx(const PerronResult& r) {
  if (r.exact_integer) return to_string(*r.exact_integer);
  return approx(r.interval());
}

std::string describe(const ValidationReport& r, const std::string& what) {
  std::ostringstream os;
  if (r.ok()) {
    os << what << ": valid\n";
    return os.str();
  }
  os << what << ": invalid, " << r.violations().size() + r.dropped() << " violation(s)\n";
  std::size_t shown = 0;
  for (const auto& v : r.violations()) {
    if (++shown > 25) {
      os << "  ...\n";
      break;
    }
    os << "  " << v.kind << " (";
    for (std::size_t i = 0; i < v.indices.size(); ++i) os << (i ? "," : "") << v.indices[i];
    os << ")";
    if (!v.detail.empty()) os << ": " << v.detail;
    os << "\n";
  }
  return os.str();
}

Json header(const std::string& command, const std::string& schema) {
  Json doc;
  doc["command"] = command;
  doc["schema"] = schema;
  return doc;
}

int cmd_validate(const Config& cfg, const fs::path& path) {
  const Json doc = read_json_file(path);
  const std::string schema = schema_of(doc);
  ValidationReport report;
  if (schema == "ring") report = validate_ring(ring_from_json(doc));
  else if (schema == "module") report = validate_module(module_from_json(doc, path.parent_path()));
  else if (schema == "group") report = validate_group(group_from_json(doc));
  else if (schema == "sequence") report = validate_sequence(sequence_from_json(doc, path.parent_path()));
  else throw ParseError("validate: unsupported schema \"" + schema + "\"");

  if (cfg.human()) {
    emit(cfg, describe(report, schema));
  } else {
    Json out = header("validate", schema);
    out["valid"] = report.ok();
    out["validation"] = to_json(report);
    emit(cfg, out);
  }
  return report.ok() ? kOk : kInvalid;
}

Json object_dims(const FusionRing& ring, const std::vector<PerronResult>& dims) {
  Json list = Json::array();
  for (int i = 0; i < ring.rank(); ++i) {
    Json item;
    item["label"] = ring.label(i);
    const Json d = to_json(dims[static_cast<std::size_t>(i)]);
    item["lo"] = d["lo"];
    item["hi"] = d["hi"];
    item["exact_integer"] = d["exact_integer"];
    list.push_back(std::move(item));
  }
  return list;
}

int cmd_fpdim(const Config& cfg, const fs::path& path) {
  const Json doc = read_json_file(path);
  const std::string schema = schema_of(doc);
  if (schema == "ring") {
    const FusionRing ring = ring_from_json(doc);
    const auto report = validate_ring(ring);
    if (!report.ok()) {
      if (cfg.human()) emit(cfg, describe(report, "ring"));
      else emit(cfg, to_json(report));
      return kInvalid;
    }
    std::vector<PerronResult> objects;
    for (int i = 0; i < ring.rank(); ++i) objects.push_back(fpdim_object(ring, i, cfg.perron));
    std::optional<PerronResult> category;
    if (!ring.is_multifusion()) category = fpdim_category(ring, cfg.perron);
    if (cfg.human()) {
      std::ostringstream os;
      for (int i = 0; i < ring.rank(); ++i) os << std::left << std::setw(12) << ring.label(i) << approx(objects[static_cast<std::size_t>(i)]) << "\n";
      os << std::left << std::setw(12) << "FPdim" << (category ? approx(*category) : std::string("n/a (multifusion)")) << "\n";
      emit(cfg, os.str());
    } else {
      Json out = header("fpdim", "ring");
      out["objects"] = object_dims(ring, objects);
      out["category"] = category ? to_json(*category) : Json(nullptr);
      emit(cfg, out);
    }
    return kOk;
  }
  if (schema == "module") {
    const BasedModule m = module_from_json(doc, path.parent_path());
    const auto report = validate_module(m);
    if (!report.ok()) {
      if (cfg.human()) emit(cfg, describe(report, "module"));
      else emit(cfg, to_json(report));
      return kInvalid;
    }
    const ModuleFPData data = module_fpdims(m, cfg.perron);
    if (cfg.human()) {
      std::ostringstream os;
      os << std::left << std::setw(12) << "scale" << approx(data.normalization_scale) << "\n";
      for (int j = 0; j < m.rank(); ++j) os << std::left << std::setw(12) << m.label(j) << approx(data.dims(j)) << "\n";
      emit(cfg, os.str());
    } else {
      Json out = header("fpdim", "module");
      out["ring_fpdim"] = to_json(data.ring.category);
      out["normalization_scale"] = to_json(data.normalization_scale);
      Json dims = Json::array();
      for (int j = 0; j < m.rank(); ++j) {
        Json item;
        item["label"] = m.label(j);
        item["lo"] = to_fraction_string(data.dims(j).lo());
        item["hi"] = to_fraction_string(data.dims(j).hi());
        dims.push_back(std::move(item));
      }
      out["dims"] = std::move(dims);
      emit(cfg, out);
    }
    return kOk;
  }
  throw ParseError("fpdim: expected a ring or module, found \"" + schema + "\"");
}

int cmd_perron(const Config& cfg, const fs::path& path) {
  const RatMatrix m = matrix_from_json(read_json_file(path));
  if (m.rows() != m.cols()) throw ParseError("perron: matrix is not square");
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      if (m(i, j) < 0) throw ParseError("perron: matrix has a negative entry");
  const PerronResult r = perron_eigen(m, cfg.perron);
  if (cfg.human()) {
    emit(cfg, "lambda " + approx(r) + "\n");
  } else {
    Json out = header("perron", "matrix");
    out["result"] = to_json(r, true);
    emit(cfg, out);
  }
  return kOk;
}

GroupTable checked_group(const std::string& path) {
  GroupTable g = load_group(path);
  if (!validate_group(g).ok()) throw Usage("not a group table: " + path);
  if (g.name.empty()) g.name = fs::path(path).stem().string();
  return g;
}

std::vector<int> parse_elements(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const int x = std::stoi(item, &used);
      if (used != item.size() || x < 0) throw std::invalid_argument(item);
      out.push_back(x);
    } catch (const std::exception&) {
      throw Usage("bad element list \"" + text + "\"");
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<int> checked_subset(const GroupTable& g, const std::string& text) {
  const auto subset = parse_elements(text);
  for (int x : subset)
    if (x >= g.order) throw Usage("element " + std::to_string(x) + " is outside the group");
  return subset;
}

struct MakeArgs {
  std::string group, normal, a, c, module;
  int mrank = 0;
};

int cmd_make(const Config& cfg, const std::string& what, const MakeArgs& args) {
  if (what == "vecg") {
    const GroupTable g = checked_group(args.group);
    emit(cfg, ring_to_json(vec_g_ring(g), "vec_" + g.name));
  } else if (what == "repg") {
    const GroupTable g = checked_group(args.group);
    emit(cfg, ring_to_json(rep_g_fusion(g).ring, "rep_" + g.name));
  } else if (what == "extension") {
    const GroupTable g = checked_group(args.group);
    const auto normal = checked_subset(g, args.normal);
    if (!is_normal(g, normal)) throw Usage("--normal is not a normal subgroup of " + g.name);
    emit(cfg, sequence_to_json(extension_sequence(g, normal)));
  } else if (what == "deligne") {
    auto a = std::make_shared<const FusionRing>(load_ring(args.a));
    auto c = std::make_shared<const FusionRing>(load_ring(args.c));
    if (!validate_ring(*a).ok() || !validate_ring(*c).ok()) throw Usage("deligne: input rings must be valid");
    if (args.module.empty()) {
      emit(cfg, ring_to_json(deligne_product(*a, *c)));
      return kOk;
    }
    const BasedModule loaded = load_module(args.module);
    if (!(loaded.ring() == *a)) throw Usage("deligne: the module is not over --a");
    if (!validate_module(loaded).ok()) throw Usage("deligne: module is invalid");
    std::vector<IntMatrix> action;
    for (int i = 0; i < a->rank(); ++i) action.push_back(loaded.action_matrix(i));
    auto m = std::make_shared<const BasedModule>(a, std::move(action), loaded.labels());
    SequenceData s = make_deligne_sequence(a, c, m);
    s.name = fs::path(args.a).stem().string() + "_" + fs::path(args.c).stem().string();
    emit(cfg, sequence_to_json(s));
  } else if (what == "end") {
    if (!args.module.empty()) emit(cfg, ring_to_json(end_ring(load_module(args.module))));
    else if (args.mrank > 0) emit(cfg, ring_to_json(end_ring(args.mrank)));
    else throw Usage("end: give --mrank or --module");
  }
  return kOk;
}

int cmd_check_exact(const Config& cfg, const fs::path& path) {
  const SequenceData s = load_sequence(path);
  const ExactnessReport report = check_exact(s, cfg.perron);
  const bool valid = report.validation.ok();

  if (cfg.human()) {
    std::ostringstream os;
    if (!valid) os << describe(report.validation, "sequence");
    os << "verdict   " << to_string(report.verdict) << " (" << report.reason << ")\n";
    if (valid) {
      os << "kernel    " << (report.kernel_matches ? "matches" : "differs from") << " image of A\n";
      os << "surjective " << (report.surjective ? "yes" : "no") << ", normal " << (report.normal ? "yes" : "no") << "\n";
    }
    if (report.alpha) {
      os << "alpha     " << (report.alpha->exact ? to_fraction_string(*report.alpha->exact) : approx(report.alpha->interval))
         << " via " << to_string(report.alpha->route) << "\n";
    }
    if (report.cross_check) os << "cross-check " << (*report.cross_check ? "agrees" : "DISAGREES") << "\n";
    emit(cfg, os.str());
  } else {
    Json out = header("check-exact", "sequence");
    out["name"] = s.name;
    const Json body = to_json(report);
    for (const auto& [k, v] : body.items()) out[k] = v;
    emit(cfg, out);
  }
  if (!valid) return kParse;
  if (report.cross_check && !*report.cross_check) return kBreach;
  switch (report.verdict) {
    case Verdict::exact: return kOk;
    case Verdict::not_exact: return kInvalid;
    case Verdict::undecided: return kUndecided;
  }
  return kUndecided;
}

struct CorpusArgs {
  std::string dir;
  std::string only;
  unsigned threads = 0;
  int mutations = 240;
  unsigned seed = 1;
};

Json case_json(const CaseResult& r) {
  Json item;
  item["id"] = r.id;
  item["origin"] = r.origin;
  item["expected"] = r.expected ? Json(to_string(*r.expected)) : Json(nullptr);
  item["verdict"] = to_string(r.verdict);
  item["reason"] = r.reason;
  if (r.alpha) {
    Json alpha;
    alpha["route"] = to_string(r.alpha->route);
    alpha["exact"] = r.alpha->exact ? Json(to_fraction_string(*r.alpha->exact)) : Json(nullptr);
    alpha["lo"] = to_fraction_string(r.alpha->interval.lo());
    alpha["hi"] = to_fraction_string(r.alpha->interval.hi());
    item["alpha"] = std::move(alpha);
  } else {
    item["alpha"] = nullptr;
  }
  item["decidable"] = r.decidable;
  item["cross_check"] = r.cross_check ? Json(*r.cross_check) : Json(nullptr);
  item["regular_image"] = r.regular_image ? Json(*r.regular_image) : Json(nullptr);
  if (!r.error.empty()) item["error"] = r.error;
  return item;
}

int cmd_corpus(const Config& cfg, const CorpusArgs& args) {
  const auto start = std::chrono::steady_clock::now();
  CorpusOptions opts;
  if (!args.dir.empty()) opts.root = args.dir;
  opts.mutations = args.mutations;
  opts.seed = args.seed;
  auto cases = build_corpus(opts);
  if (!args.only.empty()) {
    std::erase_if(cases, [&](const CorpusCase& c) { return c.id != args.only; });
    if (cases.empty()) throw Usage("no corpus case with id \"" + args.only + "\"");
  }
  const CorpusSummary summary = run_corpus(cases, cfg.perron, args.threads);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  if (cfg.human()) {
    std::ostringstream os;
    os << std::left << std::setw(52) << "case" << std::setw(11) << "expected" << std::setw(11) << "verdict" << std::setw(24)
       << "alpha" << "cross\n";
    for (const auto& r : summary.results) {
      std::string alpha = "-";
      if (r.alpha) alpha = r.alpha->exact ? to_fraction_string(*r.alpha->exact) : "~" + approx(r.alpha->interval.mid());
      std::string cross = r.cross_check ? (*r.cross_check ? "agree" : "DISAGREE") : "-";
      os << std::left << std::setw(52) << r.id << std::setw(11) << (r.expected ? to_string(*r.expected) : "-") << std::setw(11)
         << to_string(r.verdict) << std::setw(24) << alpha << cross << (r.matches_expected() ? "" : "  UNEXPECTED") << "\n";
    }
    os << "\n" << summary.results.size() << " cases: " << summary.exact << " exact, " << summary.not_exact << " not exact, "
       << summary.undecided << " undecided\n";
    os << "criterion agreement: " << summary.agreements << "/" << summary.decidable << " decidable cases\n";
    os << "unexpected verdicts: " << summary.expectation_failures << ", regular-image failures: " << summary.regular_image_failures
       << "\n";
    os << "runtime: " << std::fixed << std::setprecision(2) << seconds << " s\n";
    emit(cfg, os.str());
  } else {
    Json out;
    out["command"] = "corpus";
    Json list = Json::array();
    for (const auto& r : summary.results) list.push_back(case_json(r));
    out["cases"] = std::move(list);
    Json tally;
    tally["cases"] = summary.results.size();
    tally["exact"] = summary.exact;
    tally["not_exact"] = summary.not_exact;
    tally["undecided"] = summary.undecided;
    tally["decidable"] = summary.decidable;
    tally["agreements"] = summary.agreements;
    tally["disagreements"] = summary.disagreements;
    tally["expectation_failures"] = summary.expectation_failures;
    tally["regular_image_failures"] = summary.regular_image_failures;
    out["summary"] = std::move(tally);
    emit(cfg, out);
    // wall time stays out of the payload so that reruns are byte-identical
    std::fprintf(stderr, "runtime: %.2f s\n", seconds);
  }
  return summary.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fusion rings, based modules and exact sequences"};
  app.require_subcommand(1);
  app.fallthrough();
  Config cfg;
  app.add_option("--tol", cfg.tol, "Certification tolerance, decimal or p/q")->capture_default_str();
  app.add_option("--max-iter", cfg.max_iter, "Iteration cap for eigenvalue refinement")->capture_default_str();
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "human"}))->capture_default_str();
  app.add_option("--output,-o", cfg.output, "Write output to a file instead of stdout");

  std::string path;
  auto* validate = app.add_subcommand("validate", "Check the axioms of a ring, module, group or sequence file");
  validate->add_option("file", path)->required();
  auto* fpdim = app.add_subcommand("fpdim", "Frobenius-Perron dimensions of a ring or module");
  fpdim->add_option("file", path)->required();
  auto* perron = app.add_subcommand("perron", "Certified Perron root of a nonnegative rational matrix");
  perron->add_option("file", path)->required();
  auto* check = app.add_subcommand("check-exact", "Certify exactness of a sequence");
  check->add_option("file", path)->required();

  MakeArgs make_args;
  auto* make = app.add_subcommand("make", "Build rings and sequences");
  make->require_subcommand(1);
  auto* vecg = make->add_subcommand("vecg", "Vec(G) from a group table");
  vecg->add_option("--group", make_args.group)->required();
  auto* repg = make->add_subcommand("repg", "Rep(G) from a group table");
  repg->add_option("--group", make_args.group)->required();
  auto* extension = make->add_subcommand("extension", "Rep(G/N) -> Rep(G) -> Rep(N) for a normal subgroup N");
  extension->add_option("--group", make_args.group)->required();
  extension->add_option("--normal", make_args.normal, "Comma-separated elements of N")->required();
  auto* deligne = make->add_subcommand("deligne", "A (x) C, or the Deligne sequence when a module over A is given");
  deligne->add_option("--a", make_args.a)->required();
  deligne->add_option("--c", make_args.c)->required();
  deligne->add_option("--module", make_args.module);
  auto* end = make->add_subcommand("end", "Matrix-unit ring End(M)");
  end->add_option("--mrank", make_args.mrank)->check(CLI::PositiveNumber);
  end->add_option("--module", make_args.module);

  CorpusArgs corpus_args;
  bool run_all = false;
  auto* corpus = app.add_subcommand("corpus", "Run the bundled corpus and tally the results");
  corpus->add_flag("--run-all", run_all, "Run every case (the default without --case)");
  corpus->add_option("--case", corpus_args.only, "Run only the case with this id");
  corpus->add_option("--dir", corpus_args.dir, "Corpus directory (default $FUSIONSEQ_CORPUS or the bundled one)");
  corpus->add_option("--threads", corpus_args.threads, "Worker threads, 0 for all cores");
  corpus->add_option("--mutations", corpus_args.mutations, "Number of mutated cases")->check(CLI::NonNegativeNumber);
  corpus->add_option("--seed", corpus_args.seed, "Seed for the mutations");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kParse;
  }

  try {
    cfg.perron.tol = parse_rational(cfg.tol);
    if (cfg.perron.tol <= 0) throw Usage("--tol must be positive");
    if (cfg.max_iter <= 0) throw Usage("--max-iter must be positive");
    cfg.perron.max_iter = cfg.max_iter;

    if (*validate) return cmd_validate(cfg, path);
    if (*fpdim) return cmd_fpdim(cfg, path);
    if (*perron) return cmd_perron(cfg, path);
    if (*check) return cmd_check_exact(cfg, path);
    if (*corpus) return cmd_corpus(cfg, corpus_args);
    for (auto* sub : make->get_subcommands())
      if (*sub) return cmd_make(cfg, sub->get_name(), make_args);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParse;
  } catch (const CorpusError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParse;
  } catch (const NotSemisimpleError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParse;
  } catch (const Usage& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParse;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUndecided;
  }
  return kParse;
}
