#include <sstream>

#include "json.hpp"
#include "keg/analysis.hpp"
#include "keg/error.hpp"

namespace keg {

using nlohmann::json;

namespace {

template <class T>
json nullable(const std::optional<T>& value) {
  return value ? json(*value) : json(nullptr);
}

template <class T>
std::optional<T> read_nullable(const json& j, const char* key) {
  const auto& v = j.at(key);
  if (v.is_null()) return std::nullopt;
  return v.get<T>();
}

}  // namespace

void to_json(json& j, const LabeledEdge& e) { j = json::array({e.u, e.v}); }
void from_json(const json& j, LabeledEdge& e) {
  if (!j.is_array() || j.size() != 2) throw Error(Errc::Malformed, "matching edge must be a pair");
  e.u = j[0].get<std::string>();
  e.v = j[1].get<std::string>();
}

void to_json(json& j, const EqualityChainReport& r) {
  j = json{{"d", r.d},
           {"core_surplus", r.core_surplus},
           {"alpha_minus_mu", r.alpha_minus_mu},
           {"def", r.deficiency},
           {"chain_holds", r.chain_holds}};
}
void from_json(const json& j, EqualityChainReport& r) {
  r.d = j.at("d").get<std::int64_t>();
  r.core_surplus = j.at("core_surplus").get<std::int64_t>();
  r.alpha_minus_mu = j.at("alpha_minus_mu").get<std::int64_t>();
  r.deficiency = j.at("def").get<std::int64_t>();
  r.chain_holds = j.at("chain_holds").get<bool>();
}

void to_json(json& j, const CertificateSummary& c) {
  j = json{{"critical_set", c.critical_set}, {"hall_matching", c.hall_matching}};
  j["ke_witness"] = c.ke ? json{{"independent_set", c.ke->independent_set}, {"matching", c.ke->matching}}
                         : json(nullptr);
  if (c.non_ke) {
    j["non_ke_witness"] = json{{"alpha_c", c.non_ke->alpha_c},
                               {"mu", c.non_ke->mu},
                               {"n", c.non_ke->n},
                               {"non_critical_mis", nullable(c.non_ke->non_critical_mis)}};
  } else {
    j["non_ke_witness"] = nullptr;
  }
}
void from_json(const json& j, CertificateSummary& c) {
  c.critical_set = j.at("critical_set").get<std::vector<std::string>>();
  c.hall_matching = j.at("hall_matching").get<std::vector<LabeledEdge>>();
  const auto& ke = j.at("ke_witness");
  if (!ke.is_null()) {
    c.ke = CertificateSummary::KE{ke.at("independent_set").get<std::vector<std::string>>(),
                                  ke.at("matching").get<std::vector<LabeledEdge>>()};
  }
  const auto& non_ke = j.at("non_ke_witness");
  if (!non_ke.is_null()) {
    c.non_ke = CertificateSummary::NonKE{non_ke.at("alpha_c").get<std::size_t>(),
                                         non_ke.at("mu").get<std::size_t>(), non_ke.at("n").get<std::size_t>(),
                                         read_nullable<std::vector<std::string>>(non_ke, "non_critical_mis")};
  }
}

void to_json(json& j, const CharacterizationSummary& c) {
  j = json{{"exists_critical_mis", c.exists_critical_mis},
           {"all_mis_critical", c.all_mis_critical},
           {"omega_size", c.omega_size},
           {"truncated", c.truncated},
           {"witness", nullable(c.witness)}};
}
void from_json(const json& j, CharacterizationSummary& c) {
  c.exists_critical_mis = j.at("exists_critical_mis").get<bool>();
  c.all_mis_critical = j.at("all_mis_critical").get<bool>();
  c.omega_size = j.at("omega_size").get<std::size_t>();
  c.truncated = j.at("truncated").get<bool>();
  c.witness = read_nullable<std::vector<std::string>>(j, "witness");
}

void to_json(json& j, const OracleSummary& o) { j = json{{"agree", o.agree}, {"mismatches", o.mismatches}}; }
void from_json(const json& j, OracleSummary& o) {
  o.agree = j.at("agree").get<bool>();
  o.mismatches = j.at("mismatches").get<std::vector<std::string>>();
}

std::string report_to_json(const AnalysisReport& r, int indent) {
  json j;
  j["name"] = r.name;
  j["n"] = r.n;
  j["m"] = r.m;
  j["alpha"] = nullable(r.alpha);
  j["mu"] = r.mu;
  j["def"] = r.deficiency;
  j["d"] = r.d;
  j["alpha_c"] = r.alpha_c;
  j["core"] = nullable(r.core);
  j["n_core"] = nullable(r.core_neighborhood);
  j["is_ke"] = r.is_ke;
  j["equality_chain"] = nullable(r.chain);
  j["certificates"] = r.certificates;
  j["characterization"] = nullable(r.characterization);
  j["gated"] = r.gated;
  j["oracle"] = nullable(r.oracle);
  j["timing_ms"] = r.timing_ms;
  return j.dump(indent);
}

AnalysisReport report_from_json(std::string_view text) {
  try {
    const json j = json::parse(text);
    AnalysisReport r;
    r.name = j.at("name").get<std::string>();
    r.n = j.at("n").get<std::size_t>();
    r.m = j.at("m").get<std::size_t>();
    r.alpha = read_nullable<std::size_t>(j, "alpha");
    r.mu = j.at("mu").get<std::size_t>();
    r.deficiency = j.at("def").get<std::size_t>();
    r.d = j.at("d").get<std::int64_t>();
    r.alpha_c = j.at("alpha_c").get<std::size_t>();
    r.core = read_nullable<std::vector<std::string>>(j, "core");
    r.core_neighborhood = read_nullable<std::vector<std::string>>(j, "n_core");
    r.is_ke = j.at("is_ke").get<bool>();
    r.chain = read_nullable<EqualityChainReport>(j, "equality_chain");
    r.certificates = j.at("certificates").get<CertificateSummary>();
    r.characterization = read_nullable<CharacterizationSummary>(j, "characterization");
    r.gated = j.at("gated").get<std::vector<std::string>>();
    r.oracle = read_nullable<OracleSummary>(j, "oracle");
    r.timing_ms = j.at("timing_ms").get<double>();
    return r;
  } catch (const json::exception& e) {
    throw Error(Errc::Malformed, std::string("report JSON: ") + e.what());
  }
}

std::string_view csv_header() { return "name,n,m,alpha,mu,def,d,alpha_c,core_size,ncore_size,is_ke,chain_holds"; }

std::string csv_row(const AnalysisReport& r) {
  std::ostringstream out;
  auto field = [&](const auto& v) { out << ',' << v; };
  auto opt_size = [&](const auto& v) {
    out << ',';
    if (v) out << v->size();
  };
  if (r.name.find_first_of(",\"\n") != std::string::npos) {
    out << '"';
    for (char c : r.name) out << (c == '"' ? std::string("\"\"") : std::string(1, c));
    out << '"';
  } else {
    out << r.name;
  }
  field(r.n);
  field(r.m);
  out << ',';
  if (r.alpha) out << *r.alpha;
  field(r.mu);
  field(r.deficiency);
  field(r.d);
  field(r.alpha_c);
  opt_size(r.core);
  opt_size(r.core_neighborhood);
  field(r.is_ke ? "true" : "false");
  out << ',';
  if (r.chain) out << (r.chain->chain_holds ? "true" : "false");
  return out.str();
}

}  // namespace keg
