#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace keg {

enum class Errc {
  // graph6 / edge-list input
  InvalidChar,
  Truncated,
  TrailingData,
  NOverflow,
  SelfLoop,
  UnknownVertex,
  Malformed,
  // fixtures and generators
  UnknownName,
  BadParams,
  // algorithms
  NotBipartite,
  TooLarge,
  NotIndependent,
  NotCritical,
  NotKE,
  EnumerationTruncated,
  // an internal contract check failed; always a bug
  Defect,
};

std::string_view to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace keg
