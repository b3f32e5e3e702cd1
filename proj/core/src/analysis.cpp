#include "keg/analysis.hpp"

#include <chrono>

#include "keg/critical.hpp"
#include "keg/error.hpp"
#include "keg/graph_ops.hpp"
#include "keg/matching.hpp"
#include "keg/oracle.hpp"

namespace keg {

namespace {

std::vector<LabeledEdge> label_edges(const Graph& g, const Matching& m) {
  std::vector<LabeledEdge> out;
  for (const auto& e : m.edges()) out.push_back({g.label(e.u), g.label(e.v)});
  return out;
}

template <class T, class U>
void compare(OracleSummary& out, std::string_view what, const T& main_path, const U& reference) {
  if (main_path == reference) return;
  out.agree = false;
  out.mismatches.push_back(std::string(what));
}

OracleSummary cross_check(const Graph& g, const AnalysisReport& r, const std::optional<VertexSet>& core_set) {
  OracleSummary out;
  using oracle::SubsetFamily;
  compare(out, "d (independent sets)", r.d, oracle::brute_critical_difference(g, SubsetFamily::independent_only));
  compare(out, "d (all subsets)", r.d, oracle::brute_critical_difference(g, SubsetFamily::all_subsets));
  compare(out, "alpha_c", r.alpha_c, oracle::brute_alpha_c(g).size);
  if (g.size() <= oracle::kMaxEdges) compare(out, "mu", r.mu, oracle::brute_mu(g));
  if (r.alpha) compare(out, "alpha", *r.alpha, oracle::brute_alpha(g));
  if (core_set) compare(out, "core", *core_set, oracle::brute_core(g));
  return out;
}

}  // namespace

AnalysisReport analyze(const Graph& g, std::string name, const AnalysisOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  AnalysisReport r;
  r.name = std::move(name);
  r.n = g.order();
  r.m = g.size();

  const Matching max_matching = maximum_matching(g);
  r.mu = max_matching.size();
  r.deficiency = r.n - 2 * r.mu;
  r.d = critical_difference(g);

  const bool exact = !options.polynomial_only && options.limits.admits(g.order());
  KECertificate cert = recognize_ke(g, {.limits = options.limits, .attach_mis = exact});
  r.is_ke = cert.is_ke;

  const CriticalWitness critical = max_critical_independent_set(g);
  r.alpha_c = critical.set.size();
  r.certificates.critical_set = g.labels_of(critical.set);
  r.certificates.hall_matching = label_edges(g, critical.hall_matching);
  if (cert.ke) {
    r.certificates.ke = CertificateSummary::KE{g.labels_of(cert.ke->independent_set),
                                               label_edges(g, cert.ke->matching)};
  }
  if (cert.non_ke) {
    CertificateSummary::NonKE rec{cert.non_ke->alpha_c, cert.non_ke->mu, cert.non_ke->n, std::nullopt};
    if (cert.non_ke->non_critical_mis) rec.non_critical_mis = g.labels_of(*cert.non_ke->non_critical_mis);
    r.certificates.non_ke = std::move(rec);
  }

  std::optional<VertexSet> core_set;
  if (exact) {
    r.alpha = alpha(g, options.limits).size;
    core_set = core(g, options.limits);
    r.core = g.labels_of(*core_set);
    r.core_neighborhood = g.labels_of(neighborhood(g, *core_set));
    r.chain = equality_chain_report(g, options.limits);

    CharacterizationSummary ch;
    auto stream = enumerate_maximum_independent_sets(g, options.omega_cap, options.limits);
    ch.all_mis_critical = true;
    while (auto s = stream.next()) {
      ++ch.omega_size;
      if (surplus(g, *s) == r.d) {
        ch.exists_critical_mis = true;
      } else {
        ch.all_mis_critical = false;
        if (!ch.witness) ch.witness = g.labels_of(*s);
      }
    }
    ch.truncated = stream.truncated();
    r.characterization = std::move(ch);
  } else {
    r.gated = {"alpha", "core", "core_neighborhood", "chain", "characterization"};
  }

  if (options.oracle && g.order() <= oracle::kMaxVertices) r.oracle = cross_check(g, r, core_set);

  r.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace keg
