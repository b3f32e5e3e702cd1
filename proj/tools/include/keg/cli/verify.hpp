#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>

#include "keg/fixtures.hpp"

namespace keg::cli {

enum class VerifyScope { quick, full };

struct VerifyOptions {
  VerifyScope scope = VerifyScope::quick;
  std::uint64_t seed = kDefaultSeed;
  /// Random graphs per family in the full scope.
  std::size_t count = 300;
};

struct VerifyOutcome {
  bool ok = true;
  std::size_t graphs = 0;
  std::size_t checks = 0;
  std::string property;
  std::string detail;
  /// graph6 of a vertex- and edge-minimal graph still violating `property`.
  std::string repro;
};

/// Every property is evaluated on every graph it applies to; stops at the
/// first violation. Progress lines go to `log`.
VerifyOutcome run_verify(const VerifyOptions& options, std::ostream& log);

}  // namespace keg::cli
