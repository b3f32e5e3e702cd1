#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "json.hpp"
#include <string>

#include "keg/analysis.hpp"
#include "keg/error.hpp"
#include "keg/fixtures.hpp"
#include "test_support.hpp"

using namespace keg;

TEST_CASE("analysis of GF10") {
  const auto r = analyze(fixture("GF10"), "GF10", {.oracle = true});
  CHECK(r.n == 8);
  CHECK(r.m == 8);
  CHECK(r.alpha == 4u);
  CHECK(r.mu == 3);
  CHECK(r.deficiency == 2);
  CHECK(r.d == 1);
  CHECK(r.alpha_c == 2);
  CHECK(r.core == std::vector<std::string>{"a", "h"});
  CHECK(r.core_neighborhood == std::vector<std::string>{"b"});
  CHECK_FALSE(r.is_ke);
  REQUIRE(r.chain);
  CHECK_FALSE(r.chain->chain_holds);
  REQUIRE(r.characterization);
  CHECK(r.characterization->omega_size == 5);
  CHECK(r.characterization->witness == std::vector<std::string>{"a", "c", "f", "h"});
  REQUIRE(r.oracle);
  CHECK(r.oracle->agree);
  CHECK(r.gated.empty());
  REQUIRE(r.certificates.non_ke);
  CHECK(r.certificates.non_ke->alpha_c == 2);
}

TEST_CASE("gated and polynomial-only analysis") {
  const auto big = analyze(Graph(70), "big");
  CHECK_FALSE(big.alpha);
  CHECK_FALSE(big.core);
  CHECK(big.gated.size() == 5);
  CHECK(big.is_ke);
  CHECK(big.alpha_c == 70);

  const auto poly = analyze(fixture("H1"), "H1", {.polynomial_only = true});
  CHECK_FALSE(poly.alpha);
  CHECK_FALSE(poly.chain);
  CHECK(poly.is_ke);

  const auto forced = analyze(Graph(70), "big", {.limits = {.max_vertices = 64, .force = true}});
  CHECK(forced.alpha == 70u);
}

TEST_CASE("JSON layout") {
  const auto r = analyze(fixture("H1"), "H1");
  const auto j = nlohmann::json::parse(report_to_json(r));
  for (const char* key : {"name", "n", "m", "alpha", "mu", "def", "d", "alpha_c", "core", "n_core", "is_ke",
                          "equality_chain", "certificates", "characterization", "gated", "oracle", "timing_ms"})
    CHECK_MESSAGE(j.contains(key), key);
  CHECK(j["core"] == nlohmann::json::array({"1"}));
  CHECK(j["certificates"]["ke_witness"]["independent_set"] == nlohmann::json::array({"1", "3"}));
  CHECK(j["certificates"]["non_ke_witness"].is_null());
  CHECK(j["oracle"].is_null());
  CHECK(j["is_ke"] == true);

  const auto g = nlohmann::json::parse(report_to_json(analyze(Graph(70), "big")));
  CHECK(g["alpha"].is_null());
  CHECK(g["gated"].size() == 5);
}

TEST_CASE("JSON round trip is exact") {
  Rng rng(testing::seed() + 60);
  std::vector<AnalysisReport> reports;
  for (const Graph& f : testing::fixtures()) reports.push_back(analyze(f, "fixture", {.oracle = true}));
  for (const Graph& g : testing::random_pool(100, 0, 14, rng)) reports.push_back(analyze(g, "random"));
  reports.push_back(analyze(Graph(70), "gated"));
  for (const auto& r : reports) {
    const std::string text = report_to_json(r);
    const AnalysisReport back = report_from_json(text);
    REQUIRE(back == r);
    REQUIRE(report_to_json(back) == text);
  }
}

TEST_CASE("malformed JSON is rejected") {
  auto code = [](std::string_view text) {
    try {
      report_from_json(text);
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::Defect;
  };
  CHECK(code("not json") == Errc::Malformed);
  CHECK(code("[]") == Errc::Malformed);
  CHECK(code(R"({"name": "x"})") == Errc::Malformed);
}

TEST_CASE("CSV rows") {
  CHECK(csv_header() == "name,n,m,alpha,mu,def,d,alpha_c,core_size,ncore_size,is_ke,chain_holds");
  CHECK(csv_row(analyze(fixture("H1"), "H1")) == "H1,4,4,2,2,0,0,2,1,1,true,true");
  CHECK(csv_row(analyze(fixture("GF10"), "GF10")) == "GF10,8,8,4,3,2,1,2,2,1,false,false");
  CHECK(csv_row(analyze(fixture("H1"), "p", {.polynomial_only = true})) == "p,4,4,,2,0,0,2,,,true,");
}
