#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "keg/graph.hpp"
#include "keg/graph_ops.hpp"
#include "keg/independence.hpp"
#include "keg/matching.hpp"

namespace keg {

/// S is a maximum independent set and `matching` saturates V - S into S.
struct KEWitness {
  VertexSet independent_set;
  Matching matching;
};

/// alpha_c < n - mu, optionally with a maximum independent set that is not
/// critical (attached only when the exact solver admits the graph).
struct NonKEWitness {
  std::size_t alpha_c = 0;
  std::size_t mu = 0;
  std::size_t n = 0;
  std::optional<VertexSet> non_critical_mis;
};

struct KECertificate {
  bool is_ke = false;
  std::optional<KEWitness> ke;
  std::optional<NonKEWitness> non_ke;
};

struct RecognizeOptions {
  ExactLimits limits;
  bool attach_mis = true;
};

/// Polynomial recognition: G is KE iff alpha_c(G) = n - mu(G), because
/// alpha_c <= alpha <= n - mu always holds.
KECertificate recognize_ke(const Graph& g, const RecognizeOptions& options = {});

/// Re-derives everything a certificate claims. The exact solver is used for
/// the maximality of S only when `limits` admit the graph.
bool check_certificate(const Graph& g, const KECertificate& cert, const ExactLimits& limits = {});

/// G = S * H with S maximum independent and |S| >= mu(G) = |V(H)|.
struct KEDecomposition {
  VertexSet independent_part;
  InducedSubgraph rest;
  Matching matching;
};

/// Throws Errc::NotKE.
KEDecomposition ke_decomposition(const Graph& g);

/// The four quantities d, |core| - |N(core)|, alpha - mu and def.
struct EqualityChainReport {
  std::int64_t d = 0;
  std::int64_t core_surplus = 0;
  std::int64_t alpha_minus_mu = 0;
  std::int64_t deficiency = 0;
  bool chain_holds = false;

  bool operator==(const EqualityChainReport&) const = default;
};

/// On KE graphs the chain must hold; a break there throws Errc::Defect.
/// On other graphs the report is informational.
EqualityChainReport equality_chain_report(const Graph& g, const ExactLimits& limits = {});

struct CharacterizationRecord {
  bool is_ke = false;                ///< alpha + mu = n
  bool exists_critical_mis = false;  ///< some maximum independent set is critical
  bool all_mis_critical = false;     ///< every maximum independent set is critical
  std::size_t omega_size = 0;
  /// First maximum independent set (lexicographic) that is not critical.
  std::optional<VertexSet> witness;

  bool consistent() const noexcept {
    return is_ke == exists_critical_mis && exists_critical_mis == all_mis_critical;
  }
};

/// Evaluates the three equivalent KE predicates over a complete enumeration
/// of the maximum independent sets. Throws Errc::EnumerationTruncated.
CharacterizationRecord characterization_check(const Graph& g, std::size_t cap = kDefaultOmegaCap,
                                              const ExactLimits& limits = {});

/// Structure of a KE graph in terms of its maximum independent sets.
struct StructureChecks {
  VertexSet core;
  VertexSet core_neighborhood;
  VertexSet outside_every_mis;      ///< intersection of V - S over all S
  std::size_t alpha = 0;
  std::size_t mu = 0;
  bool neighborhood_identity = false;  ///< N(core) = intersection of V - S
  bool counting_identity = false;      ///< alpha + |n(V - S)| = mu + |n S|
  bool residual_perfect = false;       ///< G - N[core] has a perfect matching
  bool residual_ke = false;            ///< ... and is KE

  bool all_pass() const noexcept {
    return neighborhood_identity && counting_identity && residual_perfect && residual_ke;
  }
};

/// Throws Errc::NotKE, Errc::TooLarge, Errc::EnumerationTruncated.
StructureChecks ke_structure_checks(const Graph& g, std::size_t cap = kDefaultOmegaCap,
                                    const ExactLimits& limits = {});

}  // namespace keg
