#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "keg/analysis.hpp"

namespace keg {

struct BatchOptions {
  AnalysisOptions analysis;
  /// Worker threads; 0 picks the hardware concurrency.
  std::size_t jobs = 0;
};

struct BatchLineError {
  std::size_t line = 0;  ///< 1-based
  std::string message;
};

struct BatchResult {
  std::vector<AnalysisReport> reports;  ///< input order
  std::vector<BatchLineError> errors;
  std::size_t ke = 0;
  std::size_t chain_holds_non_ke = 0;
  std::size_t other = 0;
};

/// One graph6 record per line, optionally followed by whitespace and a name
/// (the line number otherwise). Blank lines and lines starting with '#' are
/// skipped. Malformed lines are collected, not fatal.
BatchResult run_batch(std::string_view text, const BatchOptions& options = {});

/// "# graphs=.. ke=.. chain_holds_non_ke=.. other=.. malformed=.."
std::string batch_summary(const BatchResult& result);

}  // namespace keg
