#include <cstdint>
#include <string>

#include "keg/error.hpp"
#include "keg/formats.hpp"

namespace keg {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";
constexpr unsigned char kBias = 63;
constexpr unsigned char kWide = 126;
constexpr std::uint64_t kMaxShortN = 62;
constexpr std::uint64_t kMaxMediumN = (std::uint64_t{1} << 18) - 1;
constexpr std::uint64_t kMaxLongN = (std::uint64_t{1} << 36) - 1;

std::uint64_t read_groups(std::string_view bytes) {
  std::uint64_t value = 0;
  for (unsigned char c : bytes) value = (value << 6) | static_cast<std::uint64_t>(c - kBias);
  return value;
}

void write_groups(std::string& out, std::uint64_t value, int groups) {
  for (int i = groups - 1; i >= 0; --i) {
    out.push_back(static_cast<char>(((value >> (6 * i)) & 0x3F) + kBias));
  }
}

}  // namespace

Graph parse_graph6(std::string_view text, const Graph6Options& options) {
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  if (text.ends_with("\r\n")) {
    text.remove_suffix(2);
  } else if (text.ends_with('\n')) {
    text.remove_suffix(1);
  }
  for (std::size_t i = 0; i < text.size(); ++i) {
    const auto c = static_cast<unsigned char>(text[i]);
    if (c < kBias || c > kWide) {
      throw Error(Errc::InvalidChar, "byte " + std::to_string(c) + " at offset " + std::to_string(i));
    }
  }
  if (text.empty()) throw Error(Errc::Truncated, "missing vertex count");

  std::uint64_t n = 0;
  std::size_t prefix = 0;
  if (static_cast<unsigned char>(text[0]) != kWide) {
    n = static_cast<unsigned char>(text[0]) - kBias;
    prefix = 1;
  } else if (text.size() >= 2 && static_cast<unsigned char>(text[1]) == kWide) {
    if (text.size() < 8) throw Error(Errc::Truncated, "36-bit vertex count cut short");
    n = read_groups(text.substr(2, 6));
    prefix = 8;
  } else {
    if (text.size() < 4) throw Error(Errc::Truncated, "18-bit vertex count cut short");
    n = read_groups(text.substr(1, 3));
    prefix = 4;
  }
  if (n > options.max_vertices) {
    throw Error(Errc::NOverflow, "n = " + std::to_string(n) + " exceeds limit " +
                                     std::to_string(options.max_vertices));
  }

  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t body_bytes = (bits + 5) / 6;
  const std::string_view body = text.substr(prefix);
  if (body.size() < body_bytes) {
    throw Error(Errc::Truncated, "expected " + std::to_string(body_bytes) + " body bytes, got " +
                                     std::to_string(body.size()));
  }
  if (body.size() > body_bytes) {
    throw Error(Errc::TrailingData, std::to_string(body.size() - body_bytes) + " extra bytes");
  }

  GraphBuilder b(static_cast<std::size_t>(n));
  std::uint64_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const auto byte = static_cast<unsigned char>(body[k / 6]) - kBias;
      if ((byte >> (5 - k % 6)) & 1U) b.add_edge(i, j);
    }
  }
  return std::move(b).build();
}

std::string emit_graph6(const Graph& g) {
  const std::uint64_t n = g.order();
  std::string out;
  if (n <= kMaxShortN) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= kMaxMediumN) {
    out.push_back(static_cast<char>(kWide));
    write_groups(out, n, 3);
  } else if (n <= kMaxLongN) {
    out.push_back(static_cast<char>(kWide));
    out.push_back(static_cast<char>(kWide));
    write_groups(out, n, 6);
  } else {
    throw Error(Errc::NOverflow, "graph6 cannot encode n = " + std::to_string(n));
  }

  unsigned group = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      group = (group << 1) | (g.has_edge(i, j) ? 1U : 0U);
      if (++filled == 6) {
        out.push_back(static_cast<char>(group + kBias));
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled != 0) out.push_back(static_cast<char>((group << (6 - filled)) + kBias));
  return out;
}

}  // namespace keg
