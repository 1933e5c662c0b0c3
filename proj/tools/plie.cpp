// plie - restricted Lie superalgebras over GF(p) and their enveloping
// algebras: axiom verification, PBW construction, Lie-theoretic series, and
// cross-validated classification.

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "plie/corpus.hpp"
#include "plie/format.hpp"

namespace fs = std::filesystem;
using namespace plie;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;        // verification failure or disagreement
constexpr int kExitInconclusive = 2;  // budget exhaustion

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_out(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw Error("cannot open output file: " + out_path);
  out << text;
}

Caps caps_from_env() {
  Caps caps;
  if (const char* e = std::getenv("PLIE_ENUM_CAP"))
    caps.enum_cap = std::strtoull(e, nullptr, 10);
  if (const char* e = std::getenv("PLIE_DIM_CAP"))
    caps.dim_cap = static_cast<std::uint32_t>(std::strtoul(e, nullptr, 10));
  return caps;
}

int report_exit_code(const ClassificationReport& rep) {
  if (rep.axioms != "pass") return kExitFail;
  if (!rep.all_agree() || rep.any_check_failed())
    return rep.any_inconclusive() ? kExitInconclusive : kExitFail;
  if (rep.any_inconclusive()) return kExitInconclusive;
  return kExitOk;
}

int cmd_verify(const std::string& path, const Caps& caps) {
  LieSuperData L;
  try {
    L = parse_algebra(slurp(path));
  } catch (const Error& e) {
    std::cout << "parse: fail (" << e.what() << ")\n";
    return kExitFail;
  }
  AxiomReport ax = verify_axioms(L, caps.enum_cap);
  for (const auto& c : ax.checks) {
    std::cout << c.name << ": "
              << (c.status == CheckStatus::pass
                      ? "pass"
                      : (c.status == CheckStatus::fail ? "fail" : "unverified"));
    if (!c.detail.empty()) std::cout << " (" << c.detail << ")";
    std::cout << "\n";
  }
  if (!ax.passed()) {
    std::cout << "axioms: fail\n";
    return kExitFail;
  }
  if (!ax.fully_verified()) {
    std::cout << "axioms: pass (unverified at element level)\n";
    return kExitInconclusive;
  }
  std::cout << "axioms: pass\n";
  return kExitOk;
}

int cmd_info(const std::string& path, const Caps& caps) {
  LoadedAlgebra la;
  try {
    la = load_verified(slurp(path), caps.enum_cap);
  } catch (const Error& e) {
    std::cout << e.what() << "\n";
    return kExitFail;
  }
  const LieSuperData& L = la.L;
  std::cout << "p = " << L.F.p() << ", dim L0 = " << L.n0
            << ", dim L1 = " << L.n1 << "\n";
  std::cout << "basis:";
  for (int i = 0; i < L.dim(); ++i)
    std::cout << " " << L.names[i] << (L.odd(i) ? "(odd)" : "");
  std::cout << "\n";
  std::uint64_t D = pow_clamped(L.F.p(), L.n0, UINT64_MAX / 4);
  for (int i = 0; i < L.n1; ++i) D *= 2;
  std::cout << "dim u(L) = p^" << L.n0 << " * 2^" << L.n1 << " = " << D << "\n";
  GradedSubspace z = center(L);
  std::cout << "center: even dim " << z.even.dim() << ", odd dim "
            << z.odd.dim() << "\n";
  LSeries lcs = lower_central_series(L);
  std::cout << "lower central series of L:";
  for (int d : lcs.dims()) std::cout << " " << d;
  std::cout << (lcs.terminated ? "  (nilpotent, class " +
                                     std::to_string(lcs.class_or_length) + ")"
                               : "  (not nilpotent)")
            << "\n";
  LSeries der = derived_series(L);
  std::cout << "derived series of L:";
  for (int d : der.dims()) std::cout << " " << d;
  std::cout << (der.terminated ? "  (solvable, length " +
                                     std::to_string(der.class_or_length) + ")"
                               : "  (not solvable)")
            << "\n";
  PMapClosure pm(L);
  PNilResult pn = is_p_nilpotent(L, Subspace::full(L.F, L.n0), caps.enum_cap, pm);
  std::cout << "L0 p-nilpotent: " << tri_name(pn.verdict);
  if (pn.verdict == Tri::yes) std::cout << " (index " << pn.index << ")";
  std::cout << "\n";
  return kExitOk;
}

int cmd_series(const std::string& path, const std::string& kind, int max_terms,
               const Caps& caps) {
  LoadedAlgebra la;
  try {
    la = load_verified(slurp(path), caps.enum_cap);
  } catch (const Error& e) {
    std::cout << e.what() << "\n";
    return kExitFail;
  }
  PbwAlgebra U;
  try {
    U = build_enveloping_algebra(la.L, caps.dim_cap);
  } catch (const BudgetExceeded& e) {
    std::cout << "inconclusive: " << e.what() << "\n";
    return kExitInconclusive;
  }
  SeriesResult s;
  if (kind == "gamma")
    s = lie_lower_central_series(U.alg, max_terms);
  else if (kind == "delta")
    s = lie_derived_series(U.alg, max_terms);
  else if (kind == "super")
    s = super_central_series(U.alg, max_terms);
  else {
    std::cout << "unknown series kind: " << kind << "\n";
    return kExitFail;
  }
  std::cout << series_kind_name(s.kind) << " dims:";
  for (int d : s.dims) std::cout << " " << d;
  std::cout << "\n";
  if (s.terminated) {
    std::cout << "terminated: class/length " << s.class_or_length << "\n";
  } else if (s.dims.size() >= 2 &&
             s.dims[s.dims.size() - 1] == s.dims[s.dims.size() - 2]) {
    std::cout << "stabilized above zero\n";
  } else {
    std::cout << "truncated by --max before stabilizing\n";
  }
  return kExitOk;
}

int run_pipeline(const std::string& name, const std::string& text,
                 const Caps& caps, bool run_checks, bool structured,
                 const std::string& out_path, std::string* structured_sink) {
  LieSuperData L;
  try {
    L = parse_algebra(text);
  } catch (const Error& e) {
    std::cout << name << ": parse failure: " << e.what() << "\n";
    return kExitFail;
  }
  ClassifyOptions opt;
  opt.caps = caps;
  opt.run_checks = run_checks;
  ClassificationReport rep = cross_validate(L, name, opt);
  std::string rendered = structured ? emit_report(rep) : render_report_text(rep);
  if (structured_sink)
    *structured_sink = emit_report(rep);
  else
    write_out(out_path, rendered);
  return report_exit_code(rep);
}

struct CorpusItem {
  std::string name;
  std::string text;
  std::optional<std::array<bool, 4>> expected;
};

int cmd_corpus(const std::string& dir, int jobs, const Caps& caps,
               bool structured, const std::string& out_path) {
  std::vector<CorpusItem> items;
  if (dir == "builtin") {
    for (const auto& e : builtin_corpus())
      items.push_back({e.name, e.json_text, e.expected});
  } else {
    // an expected_verdicts.json (as written by dump-corpus) annotates the run
    std::map<std::string, std::array<bool, 4>> expected;
    fs::path marker = fs::path(dir) / "expected_verdicts.json";
    if (fs::exists(marker)) {
      auto j = nlohmann::ordered_json::parse(slurp(marker.string()));
      for (auto it = j.begin(); it != j.end(); ++it)
        expected[it.key()] = {it.value().at("nonmatrix_pi").get<bool>(),
                              it.value().at("lie_solvable").get<bool>(),
                              it.value().at("lie_nilpotent").get<bool>(),
                              it.value().at("lie_super_nilpotent").get<bool>()};
    }
    std::vector<fs::path> paths;
    for (const auto& ent : fs::directory_iterator(dir))
      if (ent.path().extension() == ".json" &&
          ent.path().filename() != "expected_verdicts.json")
        paths.push_back(ent.path());
    std::sort(paths.begin(), paths.end());
    for (const auto& p : paths) {
      CorpusItem item{p.filename().string(), slurp(p.string()), std::nullopt};
      auto found = expected.find(p.stem().string());
      if (found != expected.end()) item.expected = found->second;
      items.push_back(std::move(item));
    }
  }
  if (items.empty()) {
    std::cout << "no algebra files found in " << dir << "\n";
    return kExitFail;
  }

  std::vector<ClassificationReport> reports(items.size());
  std::vector<std::string> errors(items.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= items.size()) return;
      try {
        LieSuperData L = parse_algebra(items[i].text);
        ClassifyOptions opt;
        opt.caps = caps;
        ClassificationReport rep = cross_validate(L, items[i].name, opt);
        reports[i] = std::move(rep);
      } catch (const Error& e) {
        errors[i] = e.what();
      }
    }
  };
  jobs = std::max(1, jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  int exit_code = kExitOk;
  std::ostringstream text_out;
  nlohmann::ordered_json all = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (!errors[i].empty()) {
      text_out << items[i].name << ": error: " << errors[i] << "\n";
      exit_code = std::max(exit_code, kExitFail);
      continue;
    }
    const ClassificationReport& rep = reports[i];
    int code = report_exit_code(rep);
    bool expected_ok = true;
    if (items[i].expected) {
      auto v = [&](const PropertyReport& p) { return p.oracle == Verdict::yes; };
      std::array<bool, 4> got = {v(rep.nonmatrix), v(rep.solvable),
                                 v(rep.nilpotent), v(rep.super_nilpotent)};
      expected_ok = got == *items[i].expected;
      if (!expected_ok) code = std::max(code, kExitFail);
    }
    exit_code = std::max(exit_code, code);
    text_out << items[i].name << ": "
             << (code == kExitOk ? "ok" : (code == kExitFail ? "FAIL" : "inconclusive"))
             << "  [" << verdict_name(rep.nonmatrix.oracle) << ", "
             << verdict_name(rep.solvable.oracle) << ", "
             << verdict_name(rep.nilpotent.oracle) << ", "
             << verdict_name(rep.super_nilpotent.oracle) << "]"
             << (rep.all_agree() ? "" : "  DISAGREEMENT")
             << (expected_ok ? "" : "  EXPECTED-MISMATCH") << "\n";
    if (structured) all.push_back(nlohmann::ordered_json::parse(emit_report(rep)));
  }
  if (structured)
    write_out(out_path, all.dump(2) + "\n");
  else
    write_out(out_path, text_out.str());
  return exit_code;
}

int cmd_dump_corpus(const std::string& dir) {
  fs::create_directories(dir);
  nlohmann::ordered_json expected = nlohmann::ordered_json::object();
  for (const auto& e : builtin_corpus()) {
    LieSuperData L = parse_algebra(e.json_text);
    std::ofstream out(fs::path(dir) / (e.name + ".json"), std::ios::binary);
    out << emit_algebra(L);
    expected[e.name] = {{"nonmatrix_pi", e.expected[0]},
                        {"lie_solvable", e.expected[1]},
                        {"lie_nilpotent", e.expected[2]},
                        {"lie_super_nilpotent", e.expected[3]}};
  }
  std::ofstream out(fs::path(dir) / "expected_verdicts.json", std::ios::binary);
  out << expected.dump(2) << "\n";
  std::cout << "wrote " << builtin_corpus().size() << " algebras to " << dir
            << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"restricted Lie superalgebra enveloping-algebra engine"};
  app.require_subcommand(1);

  Caps env_caps = caps_from_env();
  std::uint64_t enum_cap = env_caps.enum_cap;
  std::uint32_t cap_dim = env_caps.dim_cap;
  std::string file, out_path, format = "text", kind = "gamma", dir;
  int max_terms = -1, jobs = 1;

  auto add_caps = [&](CLI::App* cmd) {
    cmd->add_option("--enum-cap", enum_cap, "enumeration budget (p^dim bound)");
    cmd->add_option("--cap-dim", cap_dim, "dimension cap for u(L)");
  };

  CLI::App* verify = app.add_subcommand("verify", "check the axioms of an algebra file");
  verify->add_option("file", file)->required();
  add_caps(verify);

  CLI::App* info = app.add_subcommand("info", "basic structure of an algebra");
  info->add_option("file", file)->required();
  add_caps(info);

  CLI::App* series = app.add_subcommand("series", "a Lie series of u(L)");
  series->add_option("file", file)->required();
  series->add_option("--kind", kind, "gamma | delta | super");
  series->add_option("--max", max_terms, "maximum number of terms");
  add_caps(series);

  CLI::App* classify = app.add_subcommand("classify", "condition and oracle verdicts");
  classify->add_option("file", file)->required();
  classify->add_option("--format", format, "text | structured");
  classify->add_option("--out", out_path, "write the report to a file");
  add_caps(classify);

  CLI::App* cross = app.add_subcommand("cross-validate",
                                       "classification plus theorem instances");
  cross->add_option("file", file)->required();
  cross->add_option("--format", format, "text | structured");
  cross->add_option("--out", out_path, "write the report to a file");
  add_caps(cross);

  CLI::App* corpus = app.add_subcommand("corpus", "run a directory of algebras (or 'builtin')");
  corpus->add_option("dir", dir)->required();
  corpus->add_option("--jobs", jobs, "parallel workers (whole-algebra granularity)");
  corpus->add_option("--format", format, "text | structured");
  corpus->add_option("--out", out_path, "write the report to a file");
  add_caps(corpus);

  CLI::App* dump = app.add_subcommand("dump-corpus", "write the builtin corpus as files");
  dump->add_option("dir", dir)->required();

  CLI11_PARSE(app, argc, argv);

  Caps caps{enum_cap, cap_dim};
  try {
    if (app.got_subcommand(verify)) return cmd_verify(file, caps);
    if (app.got_subcommand(info)) return cmd_info(file, caps);
    if (app.got_subcommand(series)) return cmd_series(file, kind, max_terms, caps);
    if (app.got_subcommand(classify))
      return run_pipeline(file, slurp(file), caps, false, format == "structured",
                          out_path, nullptr);
    if (app.got_subcommand(cross))
      return run_pipeline(file, slurp(file), caps, true, format == "structured",
                          out_path, nullptr);
    if (app.got_subcommand(corpus))
      return cmd_corpus(dir, jobs, caps, format == "structured", out_path);
    if (app.got_subcommand(dump)) return cmd_dump_corpus(dir);
  } catch (const BudgetExceeded& e) {
    std::cerr << "inconclusive: " << e.what() << "\n";
    return kExitInconclusive;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitOk;
}
