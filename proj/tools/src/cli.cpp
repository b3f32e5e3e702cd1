#include "keg/cli/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>

#include "keg/analysis.hpp"
#include "keg/batch.hpp"
#include "keg/cli/verify.hpp"
#include "keg/error.hpp"
#include "keg/fixtures.hpp"
#include "keg/formats.hpp"

namespace keg::cli {

namespace {

enum class Format { automatic, graph6, edges };

const std::map<std::string, Format> kFormats{{"graph6", Format::graph6}, {"edges", Format::edges}};

std::uint64_t default_seed() {
  if (const char* env = std::getenv("KEG_SEED")) {
    char* end = nullptr;
    const auto v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && end != env) return v;
  }
  return kDefaultSeed;
}

bool read_input(const std::string& path, std::istream& in, std::string& text, std::ostream& err) {
  if (path.empty() || path == "-") {
    text.assign(std::istreambuf_iterator<char>(in), {});
    return true;
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) {
    err << "keg: cannot open " << path << "\n";
    return false;
  }
  text.assign(std::istreambuf_iterator<char>(file), {});
  return true;
}

bool looks_like_graph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.starts_with(">>graph6<<")) return true;
  return std::all_of(text.begin(), text.end(), [](char c) { return c >= 63 && c <= 126; });
}

std::string stem(const std::string& path) {
  const auto slash = path.find_last_of('/');
  std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
  const auto dot = base.find_last_of('.');
  return dot == std::string::npos || dot == 0 ? base : base.substr(0, dot);
}

struct AnalyzeArgs {
  std::string input;
  std::string fixture;
  std::string name;
  Format format = Format::automatic;
  bool csv = false;
  bool force = false;
  bool oracle = false;
  bool poly = false;
  std::size_t cap = kDefaultOmegaCap;
};

int cmd_analyze(const AnalyzeArgs& a, std::istream& in, std::ostream& out, std::ostream& err) {
  Graph g;
  std::string name = a.name;
  try {
    if (!a.fixture.empty()) {
      g = fixture(a.fixture);
      if (name.empty()) name = a.fixture;
    } else {
      std::string text;
      if (!read_input(a.input, in, text, err)) return kInputError;
      if (text.find_first_not_of(" \t\r\n") == std::string::npos) {
        err << "keg: empty input\n";
        return kInputError;
      }
      Format f = a.format;
      if (f == Format::automatic)
        f = a.input.ends_with(".edges") || !looks_like_graph6(text) ? Format::edges : Format::graph6;
      if (f == Format::graph6) {
        g = parse_graph6(text);
      } else {
        auto parsed = parse_edge_list(text);
        if (parsed.had_duplicates())
          err << "keg: ignored " << parsed.duplicate_edges << " duplicate edge(s)\n";
        g = std::move(parsed.graph);
      }
      if (name.empty()) name = a.input.empty() || a.input == "-" ? "stdin" : stem(a.input);
    }
  } catch (const Error& e) {
    err << "keg: " << e.what() << "\n";
    return kInputError;
  }

  AnalysisOptions opt;
  opt.limits.force = a.force;
  opt.omega_cap = a.cap;
  opt.oracle = a.oracle;
  opt.polynomial_only = a.poly;
  const AnalysisReport r = analyze(g, name, opt);
  if (a.csv)
    out << csv_header() << "\n" << csv_row(r) << "\n";
  else
    out << report_to_json(r) << "\n";

  if (r.oracle && !r.oracle->agree) {
    err << "keg: oracle disagreement\n";
    return kViolation;
  }
  if (!a.poly && !r.gated.empty()) {
    err << "keg: n=" << r.n << " exceeds the exact-solver limit; pass --force for gated fields\n";
    return kGated;
  }
  return kOk;
}

struct BatchArgs {
  std::string input;
  bool force = false;
  bool oracle = false;
  bool poly = false;
  std::size_t cap = kDefaultOmegaCap;
  std::size_t jobs = 0;
};

int cmd_batch(const BatchArgs& a, std::istream& in, std::ostream& out, std::ostream& err) {
  std::string text;
  if (!read_input(a.input, in, text, err)) return kInputError;
  BatchOptions opt;
  opt.analysis.limits.force = a.force;
  opt.analysis.omega_cap = a.cap;
  opt.analysis.oracle = a.oracle;
  opt.analysis.polynomial_only = a.poly;
  opt.jobs = a.jobs;
  const BatchResult result = run_batch(text, opt);
  for (const auto& e : result.errors) err << "keg: line " << e.line << ": " << e.message << "\n";
  if (result.reports.empty()) {
    err << "keg: no graph parsed\n";
    return kInputError;
  }
  out << csv_header() << "\n";
  for (const auto& r : result.reports) out << csv_row(r) << "\n";
  out << batch_summary(result) << "\n";
  return kOk;
}

struct GenArgs {
  std::string family;
  std::vector<std::string> params;
  std::string fixture;
  Format format = Format::graph6;
  std::size_t count = 1;
  std::uint64_t seed = kDefaultSeed;
};

void emit(const Graph& g, Format f, std::ostream& out) {
  if (f == Format::edges)
    out << emit_edge_list(g);
  else
    out << emit_graph6(g) << "\n";
}

std::size_t to_size(const std::string& s) {
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(s, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != s.size() || s.empty() || s.front() == '-') throw Error(Errc::BadParams, "not a count: " + s);
  return static_cast<std::size_t>(v);
}

double to_probability(const std::string& s) {
  std::size_t pos = 0;
  double v = -1;
  try {
    v = std::stod(s, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != s.size() || !(v >= 0.0 && v <= 1.0)) throw Error(Errc::BadParams, "not a probability: " + s);
  return v;
}

int cmd_gen(const GenArgs& a, std::ostream& out, std::ostream& err) {
  try {
    if (!a.fixture.empty()) {
      emit(fixture(a.fixture), a.format, out);
      return kOk;
    }
    if (a.family.empty()) throw Error(Errc::BadParams, "a family or --fixture is required");
    Rng rng(a.seed);
    if (a.family == "random") {
      if (a.params.size() != 2) throw Error(Errc::BadParams, "random takes n p");
      const std::size_t n = to_size(a.params[0]);
      const double p = to_probability(a.params[1]);
      for (std::size_t i = 0; i < a.count; ++i) emit(random_graph(n, p, rng), a.format, out);
      return kOk;
    }
    if (a.family == "bipartite") {
      if (a.params.size() != 3) throw Error(Errc::BadParams, "bipartite takes a b p");
      const std::size_t l = to_size(a.params[0]), r = to_size(a.params[1]);
      const double p = to_probability(a.params[2]);
      for (std::size_t i = 0; i < a.count; ++i) emit(random_bipartite(l, r, p, rng).graph, a.format, out);
      return kOk;
    }
    std::vector<std::size_t> params;
    for (const auto& s : a.params) params.push_back(to_size(s));
    emit(generate(a.family, params), a.format, out);
    return kOk;
  } catch (const Error& e) {
    err << "keg: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Matching, independence and König-Egerváry analysis of graphs", "keg"};
  app.require_subcommand(1);

  AnalyzeArgs an;
  auto* analyze_cmd = app.add_subcommand("analyze", "Analyze one graph (JSON report by default)");
  analyze_cmd->add_option("input", an.input, "graph file, or - for stdin");
  analyze_cmd->add_option("--format", an.format, "graph6 | edges (default: detect)")
      ->transform(CLI::CheckedTransformer(kFormats));
  analyze_cmd->add_option("--fixture", an.fixture, "analyze a named example graph instead");
  analyze_cmd->add_option("--name", an.name, "report name");
  auto* json_flag = analyze_cmd->add_flag("--json", "JSON report (default)");
  analyze_cmd->add_flag("--csv", an.csv, "one CSV row with header")->excludes(json_flag);
  analyze_cmd->add_flag("--force", an.force, "run the exact solver beyond its size limit");
  analyze_cmd->add_option("--cap", an.cap, "cap on enumerated maximum independent sets");
  analyze_cmd->add_flag("--oracle", an.oracle, "cross-check against brute force (n <= 20)");
  analyze_cmd->add_flag("--poly", an.poly, "polynomial-time fields only");

  BatchArgs ba;
  auto* batch_cmd = app.add_subcommand("batch", "Analyze graph6 lines, one CSV row each");
  batch_cmd->add_option("input", ba.input, "file of graph6 lines, or - for stdin");
  batch_cmd->add_flag("--force", ba.force, "run the exact solver beyond its size limit");
  batch_cmd->add_option("--cap", ba.cap, "cap on enumerated maximum independent sets");
  batch_cmd->add_flag("--oracle", ba.oracle, "cross-check against brute force (n <= 20)");
  batch_cmd->add_flag("--poly", ba.poly, "polynomial-time fields only");
  batch_cmd->add_option("--jobs,-j", ba.jobs, "worker threads (0: all cores)");

  GenArgs ge;
  ge.seed = default_seed();
  auto* gen_cmd = app.add_subcommand("gen", "Print a generated graph");
  gen_cmd->add_option("family", ge.family,
                      "path | cycle | complete | complete_minus_edge | star | complete_bipartite | empty | "
                      "random | bipartite");
  gen_cmd->add_option("params", ge.params, "family parameters (random: n p, bipartite: a b p)");
  gen_cmd->add_option("--fixture", ge.fixture, "print a named example graph");
  gen_cmd->add_option("--format", ge.format, "graph6 | edges")->transform(CLI::CheckedTransformer(kFormats));
  gen_cmd->add_option("--count", ge.count, "number of random graphs");
  gen_cmd->add_option("--seed", ge.seed, "RNG seed (default: KEG_SEED or 20090001)");

  VerifyOptions vo;
  vo.seed = default_seed();
  std::string scope = "quick";
  auto* verify_cmd = app.add_subcommand("verify", "Check the invariant suites");
  verify_cmd->add_option("--scope", scope, "quick (fixtures) | full (random and oracle suites)")
      ->check(CLI::IsMember({"quick", "full"}));
  verify_cmd->add_option("--seed", vo.seed, "RNG seed (default: KEG_SEED or 20090001)");
  verify_cmd->add_option("--count", vo.count, "random graphs per suite in the full scope");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kInputError;
  }

  if (analyze_cmd->parsed()) return cmd_analyze(an, in, out, err);
  if (batch_cmd->parsed()) return cmd_batch(ba, in, out, err);
  if (gen_cmd->parsed()) return cmd_gen(ge, out, err);

  vo.scope = scope == "full" ? VerifyScope::full : VerifyScope::quick;
  const VerifyOutcome v = run_verify(vo, out);
  if (v.ok) {
    out << "verify: " << v.checks << " checks on " << v.graphs << " graphs passed\n";
    return kOk;
  }
  err << "verify: violation of " << v.property << ": " << v.detail << "\n";
  err << "verify: minimal repro " << v.repro << "\n";
  return kViolation;
}

}  // namespace keg::cli
