#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "keg/graph.hpp"
#include "keg/independence.hpp"
#include "keg/koenig.hpp"

namespace keg {

struct AnalysisOptions {
  /// Gate for fields that need the exact solver (alpha, core, chain,
  /// characterization). Polynomial fields are always computed.
  ExactLimits limits;
  std::size_t omega_cap = kDefaultOmegaCap;
  /// Cross-check against the brute-force oracle when n is small enough.
  bool oracle = false;
  /// Skip every exact field regardless of size.
  bool polynomial_only = false;
};

struct LabeledEdge {
  std::string u;
  std::string v;

  bool operator==(const LabeledEdge&) const = default;
};

struct CertificateSummary {
  struct KE {
    std::vector<std::string> independent_set;
    std::vector<LabeledEdge> matching;

    bool operator==(const KE&) const = default;
  };
  struct NonKE {
    std::size_t alpha_c = 0;
    std::size_t mu = 0;
    std::size_t n = 0;
    std::optional<std::vector<std::string>> non_critical_mis;

    bool operator==(const NonKE&) const = default;
  };

  std::vector<std::string> critical_set;
  std::vector<LabeledEdge> hall_matching;
  std::optional<KE> ke;
  std::optional<NonKE> non_ke;

  bool operator==(const CertificateSummary&) const = default;
};

struct CharacterizationSummary {
  bool exists_critical_mis = false;
  bool all_mis_critical = false;
  std::size_t omega_size = 0;
  bool truncated = false;
  std::optional<std::vector<std::string>> witness;

  bool operator==(const CharacterizationSummary&) const = default;
};

struct OracleSummary {
  bool agree = true;
  std::vector<std::string> mismatches;

  bool operator==(const OracleSummary&) const = default;
};

/// Everything computed for one graph. Optional fields are null when the
/// size gate withheld them; `gated` names them.
struct AnalysisReport {
  std::string name;
  std::size_t n = 0;
  std::size_t m = 0;
  std::optional<std::size_t> alpha;
  std::size_t mu = 0;
  std::size_t deficiency = 0;
  std::int64_t d = 0;
  std::size_t alpha_c = 0;
  std::optional<std::vector<std::string>> core;
  std::optional<std::vector<std::string>> core_neighborhood;
  bool is_ke = false;
  std::optional<EqualityChainReport> chain;
  CertificateSummary certificates;
  std::optional<CharacterizationSummary> characterization;
  std::vector<std::string> gated;
  std::optional<OracleSummary> oracle;
  double timing_ms = 0.0;

  bool operator==(const AnalysisReport&) const = default;
};

AnalysisReport analyze(const Graph& g, std::string name, const AnalysisOptions& options = {});

std::string report_to_json(const AnalysisReport& report, int indent = 2);
/// Throws Errc::Malformed on schema violations.
AnalysisReport report_from_json(std::string_view text);

/// name,n,m,alpha,mu,def,d,alpha_c,core_size,ncore_size,is_ke,chain_holds
std::string_view csv_header();
std::string csv_row(const AnalysisReport& report);

}  // namespace keg
