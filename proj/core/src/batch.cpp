#include "keg/batch.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>

#include "keg/formats.hpp"

namespace keg {

namespace {

struct Record {
  std::size_t line;
  std::string name;
  std::string_view g6;
};

std::string_view trim(std::string_view s) {
  const auto space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
  while (!s.empty() && space(s.front())) s.remove_prefix(1);
  while (!s.empty() && space(s.back())) s.remove_suffix(1);
  return s;
}

std::vector<Record> split_records(std::string_view text) {
  std::vector<Record> out;
  std::size_t line = 0;
  while (!text.empty()) {
    const std::size_t eol = text.find('\n');
    std::string_view raw = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line;
    raw = trim(raw);
    if (raw.empty() || raw.front() == '#') continue;
    const std::size_t gap = raw.find_first_of(" \t");
    Record r{line, std::to_string(line), raw.substr(0, gap)};
    if (gap != std::string_view::npos) r.name = std::string(trim(raw.substr(gap)));
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

BatchResult run_batch(std::string_view text, const BatchOptions& options) {
  const std::vector<Record> records = split_records(text);
  std::vector<std::optional<AnalysisReport>> slots(records.size());
  std::vector<std::string> failures(records.size());

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next.fetch_add(1); i < records.size(); i = next.fetch_add(1)) {
      try {
        const Graph g = parse_graph6(records[i].g6);
        slots[i] = analyze(g, records[i].name, options.analysis);
      } catch (const std::exception& e) {
        failures[i] = e.what();
      }
    }
  };

  std::size_t jobs = options.jobs ? options.jobs : std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min(jobs, std::max<std::size_t>(1, records.size()));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }

  BatchResult result;
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (!slots[i]) {
      result.errors.push_back({records[i].line, failures[i]});
      continue;
    }
    AnalysisReport& r = *slots[i];
    if (r.is_ke)
      ++result.ke;
    else if (r.chain && r.chain->chain_holds)
      ++result.chain_holds_non_ke;
    else
      ++result.other;
    result.reports.push_back(std::move(r));
  }
  return result;
}

std::string batch_summary(const BatchResult& result) {
  return "# graphs=" + std::to_string(result.reports.size()) + " ke=" + std::to_string(result.ke) +
         " chain_holds_non_ke=" + std::to_string(result.chain_holds_non_ke) + " other=" +
         std::to_string(result.other) + " malformed=" + std::to_string(result.errors.size());
}

}  // namespace keg
