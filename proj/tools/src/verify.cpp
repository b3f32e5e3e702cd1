#include "keg/cli/verify.hpp"

#include <functional>
#include <optional>
#include <ostream>
#include <vector>

#include "keg/critical.hpp"
#include "keg/error.hpp"
#include "keg/formats.hpp"
#include "keg/graph_ops.hpp"
#include "keg/independence.hpp"
#include "keg/koenig.hpp"
#include "keg/matching.hpp"
#include "keg/oracle.hpp"

namespace keg::cli {

namespace {

using Failure = std::optional<std::string>;

struct Property {
  std::string name;
  std::size_t max_n;
  std::function<Failure(const Graph&)> check;
};

template <class A, class B>
Failure differ(std::string_view what, const A& got, const B& want) {
  if (got == want) return std::nullopt;
  return std::string(what) + ": got " + std::to_string(got) + ", expected " + std::to_string(want);
}

Failure unless(bool ok, std::string_view what) {
  if (ok) return std::nullopt;
  return std::string(what);
}

std::vector<Property> properties() {
  using oracle::SubsetFamily;
  std::vector<Property> out;
  out.push_back({"graph6 round trip", 1'000'000, [](const Graph& g) {
                   return unless(same_adjacency(parse_graph6(emit_graph6(g)), g), "decoded graph differs");
                 }});
  out.push_back({"matching", 1'000'000, [](const Graph& g) -> Failure {
                   const Matching m = maximum_matching(g);
                   if (!is_valid_matching(g, m)) return "invalid matching";
                   for (const Edge& e : g.edges())
                     if (!m.is_matched(e.u) && !m.is_matched(e.v)) return "matching is not maximal";
                   const auto cover = bipartite_double_cover(g);
                   const std::size_t hk = maximum_bipartite_matching(cover.graph, cover.left).size();
                   if (hk < 2 * m.size()) return "double cover matching below 2 mu";
                   return differ("double cover mu", maximum_matching(cover.graph).size(), hk);
                 }});
  out.push_back({"mu vs brute force", oracle::kMaxVertices, [](const Graph& g) -> Failure {
                   if (g.size() > oracle::kMaxEdges) return std::nullopt;
                   return differ("mu", maximum_matching(g).size(), oracle::brute_mu(g));
                 }});
  out.push_back({"alpha vs brute force", oracle::kMaxVertices, [](const Graph& g) -> Failure {
                   const auto a = alpha(g);
                   if (!is_independent(g, a.witness) || a.witness.size() != a.size) return "bad witness";
                   return differ("alpha", a.size, oracle::brute_alpha(g));
                 }});
  out.push_back({"d vs brute force", oracle::kMaxVertices, [](const Graph& g) -> Failure {
                   const auto d = critical_difference(g);
                   if (auto f = differ("d (independent)", d,
                                       oracle::brute_critical_difference(g, SubsetFamily::independent_only)))
                     return f;
                   return differ("d (all subsets)", d, oracle::brute_critical_difference(g, SubsetFamily::all_subsets));
                 }});
  out.push_back({"alpha_c vs brute force", oracle::kMaxVertices, [](const Graph& g) -> Failure {
                   const auto w = max_critical_independent_set(g);
                   if (!is_critical(g, w.set)) return "set is not critical";
                   return differ("alpha_c", w.set.size(), oracle::brute_alpha_c(g).size);
                 }});
  out.push_back({"core vs brute force", oracle::kMaxVertices, [](const Graph& g) {
                   return unless(core(g) == oracle::brute_core(g), "core differs");
                 }});
  out.push_back({"inequalities", 1'000'000, [](const Graph& g) -> Failure {
                   const auto n = static_cast<std::int64_t>(g.order());
                   const auto mu = static_cast<std::int64_t>(maximum_matching(g).size());
                   const auto ac = static_cast<std::int64_t>(max_critical_independent_set(g).set.size());
                   const auto d = critical_difference(g);
                   if (d < 0) return "d < 0";
                   if (ac > n - mu) return "alpha_c > n - mu";
                   if (g.order() <= 64) {
                     const auto a = static_cast<std::int64_t>(alpha(g).size);
                     if (ac > a || a > n - mu) return "alpha_c <= alpha <= n - mu fails";
                     if (d < a - mu) return "d < alpha - mu";
                   }
                   return std::nullopt;
                 }});
  out.push_back({"recognition", 64, [](const Graph& g) -> Failure {
                   const auto cert = recognize_ke(g);
                   if (!check_certificate(g, cert)) return "certificate rejected";
                   return unless(cert.is_ke == (alpha(g).size + maximum_matching(g).size() == g.order()),
                                 "verdict differs from alpha + mu = n");
                 }});
  out.push_back({"characterization", 14, [](const Graph& g) -> Failure {
                   const auto r = characterization_check(g);
                   if (!r.consistent()) return "predicates disagree";
                   return unless(r.is_ke == recognize_ke(g).is_ke, "characterization differs from recognition");
                 }});
  out.push_back({"KE equality chain", 64, [](const Graph& g) -> Failure {
                   if (!recognize_ke(g).is_ke) return std::nullopt;
                   if (!equality_chain_report(g).chain_holds) return "chain fails on a KE graph";
                   return unless((critical_difference(g) == 0) == has_perfect_matching(g),
                                 "d = 0 differs from perfect matching");
                 }});
  out.push_back({"KE structure", 14, [](const Graph& g) -> Failure {
                   if (!recognize_ke(g).is_ke) return std::nullopt;
                   return unless(ke_structure_checks(g).all_pass(), "structure checks fail");
                 }});
  out.push_back({"critical sets", 12, [](const Graph& g) -> Failure {
                   for (const auto& s : oracle::brute_critical_independent_sets(g)) {
                     if (!extends_to_maximum(g, s)) return "critical set not in a maximum independent set";
                     const Matching m = hall_certificate(g, s);
                     if (m.size() != neighborhood(g, s).size()) return "Hall matching does not saturate N(S)";
                   }
                   return std::nullopt;
                 }});
  return out;
}

Failure evaluate(const Property& p, const Graph& g) {
  try {
    return p.check(g);
  } catch (const std::exception& e) {
    return std::string("exception: ") + e.what();
  }
}

Graph without_edge(const Graph& g, std::size_t skip) {
  std::vector<Edge> edges = g.edges();
  edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(skip));
  return make_graph(g.order(), edges);
}

/// Greedy shrinking: drop vertices, then edges, while the violation persists.
Graph minimize(Graph g, const Property& p) {
  g = make_graph(g.order(), g.edges());
  for (bool changed = true; changed;) {
    changed = false;
    for (Vertex v = 0; v < g.order(); ++v) {
      Graph smaller = delete_vertices(g, VertexSet(g.order(), {v})).graph;
      smaller = make_graph(smaller.order(), smaller.edges());
      if (evaluate(p, smaller)) {
        g = std::move(smaller);
        changed = true;
        break;
      }
    }
    if (changed) continue;
    for (std::size_t e = 0; e < g.size(); ++e) {
      Graph smaller = without_edge(g, e);
      if (evaluate(p, smaller)) {
        g = std::move(smaller);
        changed = true;
        break;
      }
    }
  }
  return g;
}

std::vector<Graph> corpus(const VerifyOptions& options) {
  std::vector<Graph> out;
  for (auto name : fixture_names()) out.push_back(fixture(name));
  for (std::size_t n = 0; n <= 6; ++n) out.push_back(generate("empty", {n}));
  for (std::size_t n = 1; n <= 8; ++n) {
    out.push_back(generate("path", {n}));
    out.push_back(generate("complete", {n}));
    out.push_back(generate("star", {n}));
  }
  for (std::size_t n = 3; n <= 9; ++n) out.push_back(generate("cycle", {n}));
  for (std::size_t n = 2; n <= 10; ++n) out.push_back(generate("complete_minus_edge", {n}));
  for (std::size_t a = 1; a <= 4; ++a)
    for (std::size_t b = a; b <= 4; ++b) out.push_back(generate("complete_bipartite", {a, b}));
  if (options.scope == VerifyScope::quick) return out;

  Rng rng(options.seed);
  for (std::size_t i = 0; i < options.count; ++i) {
    const std::size_t n = rng() % 13;
    out.push_back(random_graph(n, 0.1 * static_cast<double>(1 + rng() % 9), rng));
  }
  for (std::size_t i = 0; i < options.count; ++i) {
    const std::size_t a = rng() % 9, b = rng() % 9;
    out.push_back(random_bipartite(a, b, 0.1 * static_cast<double>(1 + rng() % 9), rng).graph);
  }
  for (std::size_t i = 0; i < options.count / 10; ++i) out.push_back(random_graph(30 + rng() % 31, 0.1, rng));
  return out;
}

}  // namespace

VerifyOutcome run_verify(const VerifyOptions& options, std::ostream& log) {
  VerifyOutcome outcome;
  const std::vector<Graph> graphs = corpus(options);
  outcome.graphs = graphs.size();
  for (const Property& p : properties()) {
    std::size_t applied = 0;
    for (const Graph& g : graphs) {
      if (g.order() > p.max_n) continue;
      ++applied;
      ++outcome.checks;
      if (auto failure = evaluate(p, g)) {
        outcome.ok = false;
        outcome.property = p.name;
        outcome.detail = *failure;
        outcome.repro = emit_graph6(minimize(g, p));
        return outcome;
      }
    }
    log << "ok  " << p.name << " (" << applied << " graphs)\n";
  }
  return outcome;
}

}  // namespace keg::cli
