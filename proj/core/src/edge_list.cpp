#include <algorithm>
#include <charconv>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "keg/error.hpp"
#include "keg/formats.hpp"

namespace keg {

namespace {

constexpr std::string_view kVerticesKey = "vertices:";

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::optional<std::size_t> as_index(std::string_view token) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) return std::nullopt;
  return value;
}

std::string where(std::size_t line_no) { return "line " + std::to_string(line_no); }

}  // namespace

EdgeListResult parse_edge_list(std::string_view text) {
  struct RawEdge {
    std::string_view a, b;
    std::size_t line;
  };

  std::optional<std::size_t> declared_count;
  std::vector<std::string> declared_labels;
  std::vector<RawEdge> raw;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tokens = split_ws(line);
    if (tokens.empty()) continue;

    if (tokens[0].starts_with(kVerticesKey)) {
      if (declared_count || !declared_labels.empty() || !raw.empty()) {
        throw Error(Errc::Malformed, where(line_no) + ": vertices header must come first, once");
      }
      std::vector<std::string_view> names(tokens.begin() + 1, tokens.end());
      if (tokens[0].size() > kVerticesKey.size()) {
        names.insert(names.begin(), tokens[0].substr(kVerticesKey.size()));
      }
      if (names.size() == 1 && as_index(names[0])) {
        declared_count = *as_index(names[0]);
      } else {
        std::map<std::string_view, bool> seen;
        for (auto name : names) {
          if (seen[name]) throw Error(Errc::Malformed, where(line_no) + ": duplicate vertex " + std::string(name));
          seen[name] = true;
          declared_labels.emplace_back(name);
        }
        declared_count = declared_labels.size();
      }
      continue;
    }
    if (tokens.size() != 2) {
      throw Error(Errc::Malformed, where(line_no) + ": expected two vertex tokens");
    }
    raw.push_back({tokens[0], tokens[1], line_no});
  }

  // Resolve tokens to indices.
  std::map<std::string, Vertex, std::less<>> index_of;
  std::vector<std::string> labels;
  bool indexed = false;
  std::size_t n = 0;

  if (!declared_labels.empty()) {
    labels = declared_labels;
    for (Vertex v = 0; v < labels.size(); ++v) index_of.emplace(labels[v], v);
    n = labels.size();
  } else if (declared_count) {
    indexed = true;
    n = *declared_count;
  } else {
    indexed = true;
    for (const auto& e : raw) {
      if (!as_index(e.a) || !as_index(e.b)) {
        indexed = false;
        break;
      }
    }
    if (indexed) {
      for (const auto& e : raw) n = std::max({n, *as_index(e.a) + 1, *as_index(e.b) + 1});
    } else {
      for (const auto& e : raw) {
        for (auto token : {e.a, e.b}) {
          if (index_of.find(token) == index_of.end()) {
            index_of.emplace(std::string(token), static_cast<Vertex>(labels.size()));
            labels.emplace_back(token);
          }
        }
      }
      n = labels.size();
    }
  }

  auto resolve = [&](std::string_view token, std::size_t line) -> Vertex {
    if (indexed) {
      auto idx = as_index(token);
      if (!idx) throw Error(Errc::Malformed, where(line) + ": '" + std::string(token) + "' is not an index");
      if (*idx >= n) {
        throw Error(Errc::UnknownVertex, where(line) + ": index " + std::string(token) +
                                             " >= declared n = " + std::to_string(n));
      }
      return static_cast<Vertex>(*idx);
    }
    auto it = index_of.find(token);
    if (it == index_of.end()) {
      throw Error(Errc::UnknownVertex, where(line) + ": undeclared vertex '" + std::string(token) + "'");
    }
    return it->second;
  };

  GraphBuilder b(n);
  EdgeListResult result;
  for (const auto& e : raw) {
    const Vertex u = resolve(e.a, e.line);
    const Vertex v = resolve(e.b, e.line);
    if (u == v) throw Error(Errc::SelfLoop, where(e.line) + ": self-loop at '" + std::string(e.a) + "'");
    if (!b.add_edge(u, v)) ++result.duplicate_edges;
  }
  b.set_labels(std::move(labels));
  result.graph = std::move(b).build();
  return result;
}

std::string emit_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "vertices:";
  if (g.has_labels()) {
    for (Vertex v = 0; v < g.order(); ++v) out << ' ' << g.label(v);
  } else {
    out << ' ' << g.order();
  }
  out << '\n';
  for (const auto& e : g.edges()) out << g.label(e.u) << ' ' << g.label(e.v) << '\n';
  return out.str();
}

}  // namespace keg
