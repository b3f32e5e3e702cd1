#include "keg/koenig.hpp"

#include <string>

#include "keg/critical.hpp"
#include "keg/error.hpp"

namespace keg {

KECertificate recognize_ke(const Graph& g, const RecognizeOptions& options) {
  const std::size_t n = g.order();
  const std::size_t mu = maximum_matching(g).size();
  CriticalWitness critical = max_critical_independent_set(g);

  KECertificate cert;
  cert.is_ke = critical.set.size() == n - mu;
  if (cert.is_ke) {
    // S has size n - mu >= alpha, so it is maximum and hence maximal:
    // N(S) = V - S and the Hall matching already saturates V - S.
    cert.ke = KEWitness{std::move(critical.set), std::move(critical.hall_matching)};
    return cert;
  }
  NonKEWitness record{critical.set.size(), mu, n, std::nullopt};
  if (options.attach_mis && options.limits.admits(n)) {
    // In a non-KE graph no maximum independent set is critical.
    record.non_critical_mis = alpha(g, options.limits).witness;
  }
  cert.non_ke = std::move(record);
  return cert;
}

bool check_certificate(const Graph& g, const KECertificate& cert, const ExactLimits& limits) {
  const std::size_t n = g.order();
  const std::size_t mu = maximum_matching(g).size();
  if (cert.is_ke) {
    if (!cert.ke || cert.non_ke) return false;
    const auto& [s, m] = *cert.ke;
    if (s.universe() != n || !is_independent(g, s) || !is_valid_matching(g, m)) return false;
    if (s.size() + mu != n || m.size() != n - s.size()) return false;
    // Every vertex outside S matched to a vertex of S.
    for (Vertex v = 0; v < n; ++v) {
      if (s.contains(v)) continue;
      const auto w = m.mate(v);
      if (!w || !s.contains(*w)) return false;
    }
    return true;
  }
  if (!cert.non_ke || cert.ke) return false;
  const auto& rec = *cert.non_ke;
  if (rec.n != n || rec.mu != mu || rec.alpha_c >= n - mu) return false;
  if (max_critical_independent_set(g).set.size() != rec.alpha_c) return false;
  if (rec.non_critical_mis) {
    const VertexSet& s = *rec.non_critical_mis;
    if (s.universe() != n || !is_independent(g, s) || is_critical(g, s)) return false;
    if (limits.admits(n) && s.size() != alpha(g, limits).size) return false;
  }
  return true;
}

KEDecomposition ke_decomposition(const Graph& g) {
  KECertificate cert = recognize_ke(g, {.limits = {}, .attach_mis = false});
  if (!cert.is_ke) throw Error(Errc::NotKE, "graph is not Koenig-Egervary");
  KEDecomposition out;
  out.independent_part = std::move(cert.ke->independent_set);
  out.rest = delete_vertices(g, out.independent_part);
  out.matching = std::move(cert.ke->matching);
  return out;
}

EqualityChainReport equality_chain_report(const Graph& g, const ExactLimits& limits) {
  const std::int64_t n = static_cast<std::int64_t>(g.order());
  const auto a = static_cast<std::int64_t>(alpha(g, limits).size);
  const auto mu = static_cast<std::int64_t>(maximum_matching(g).size());
  const VertexSet c = core(g, limits);

  EqualityChainReport r;
  r.d = critical_difference(g);
  r.core_surplus = surplus(g, c);
  r.alpha_minus_mu = a - mu;
  r.deficiency = n - 2 * mu;
  r.chain_holds = r.d == r.core_surplus && r.core_surplus == r.alpha_minus_mu &&
                  r.alpha_minus_mu == r.deficiency;
  if (a + mu == n && !r.chain_holds) {
    throw Error(Errc::Defect, "equality chain broken on a KE graph: d=" + std::to_string(r.d) +
                                  " core_surplus=" + std::to_string(r.core_surplus) +
                                  " alpha-mu=" + std::to_string(r.alpha_minus_mu) +
                                  " def=" + std::to_string(r.deficiency));
  }
  return r;
}

CharacterizationRecord characterization_check(const Graph& g, std::size_t cap, const ExactLimits& limits) {
  auto stream = enumerate_maximum_independent_sets(g, cap, limits);
  const std::int64_t d = critical_difference(g);

  CharacterizationRecord rec;
  rec.all_mis_critical = true;
  while (auto s = stream.next()) {
    ++rec.omega_size;
    if (surplus(g, *s) == d) {
      rec.exists_critical_mis = true;
    } else {
      rec.all_mis_critical = false;
      if (!rec.witness) rec.witness = std::move(*s);
    }
  }
  if (stream.truncated()) {
    throw Error(Errc::EnumerationTruncated, "more than " + std::to_string(cap) + " maximum independent sets");
  }
  rec.is_ke = stream.alpha() + maximum_matching(g).size() == g.order();
  return rec;
}

StructureChecks ke_structure_checks(const Graph& g, std::size_t cap, const ExactLimits& limits) {
  require_exact(g, limits);
  if (!recognize_ke(g, {.limits = limits, .attach_mis = false}).is_ke) {
    throw Error(Errc::NotKE, "graph is not Koenig-Egervary");
  }
  const OmegaFamily omega = collect_maximum_independent_sets(g, cap, limits);
  if (omega.truncated) {
    throw Error(Errc::EnumerationTruncated, "more than " + std::to_string(cap) + " maximum independent sets");
  }

  StructureChecks out;
  out.alpha = omega.sets.front().size();
  out.mu = maximum_matching(g).size();
  out.core = core(g, limits);
  out.core_neighborhood = neighborhood(g, out.core);

  VertexSet in_all = g.vertices();
  VertexSet outside_all = g.vertices();
  for (const auto& s : omega.sets) {
    in_all &= s;
    outside_all -= s;
  }
  out.outside_every_mis = outside_all;
  out.neighborhood_identity = out.core_neighborhood == outside_all;
  out.counting_identity = out.alpha + outside_all.size() == out.mu + in_all.size();

  const Graph residual = delete_closed_neighborhood(g, out.core).graph;
  out.residual_perfect = has_perfect_matching(residual);
  out.residual_ke = recognize_ke(residual, {.limits = limits, .attach_mis = false}).is_ke;
  return out;
}

}  // namespace keg
