#include "keg/vertex_set.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace keg {

namespace {

std::size_t word_count(std::size_t universe) {
  return (universe + VertexSet::kWordBits - 1) / VertexSet::kWordBits;
}

void require_same_universe(const VertexSet& a, const VertexSet& b) {
  if (a.universe() != b.universe()) {
    throw std::invalid_argument("VertexSet: universes differ");
  }
}

}  // namespace

VertexSet::VertexSet(std::size_t universe) : universe_(universe), words_(word_count(universe), 0) {}

VertexSet::VertexSet(std::size_t universe, std::initializer_list<Vertex> members)
    : VertexSet(universe) {
  for (Vertex v : members) insert(v);
}

VertexSet::VertexSet(std::size_t universe, std::span<const Vertex> members) : VertexSet(universe) {
  for (Vertex v : members) insert(v);
}

VertexSet VertexSet::full(std::size_t universe) {
  VertexSet s(universe);
  for (auto& w : s.words_) w = ~std::uint64_t{0};
  s.trim();
  return s;
}

void VertexSet::insert(Vertex v) {
  if (v >= universe_) throw std::out_of_range("VertexSet::insert: vertex outside universe");
  words_[v / kWordBits] |= std::uint64_t{1} << (v % kWordBits);
}

void VertexSet::erase(Vertex v) {
  if (v >= universe_) return;
  words_[v / kWordBits] &= ~(std::uint64_t{1} << (v % kWordBits));
}

void VertexSet::clear() noexcept {
  for (auto& w : words_) w = 0;
}

std::size_t VertexSet::size() const noexcept {
  std::size_t total = 0;
  for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool VertexSet::empty() const noexcept {
  for (auto w : words_) {
    if (w != 0) return false;
  }
  return true;
}

std::size_t VertexSet::find_next(std::size_t from) const noexcept {
  if (from >= universe_) return universe_;
  std::size_t wi = from / kWordBits;
  std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from % kWordBits));
  while (true) {
    if (w != 0) return wi * kWordBits + static_cast<std::size_t>(std::countr_zero(w));
    if (++wi == words_.size()) return universe_;
    w = words_[wi];
  }
}

bool VertexSet::is_subset_of(const VertexSet& other) const noexcept {
  if (universe_ != other.universe_) return false;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

bool VertexSet::intersects(const VertexSet& other) const noexcept {
  const std::size_t k = std::min(words_.size(), other.words_.size());
  for (std::size_t i = 0; i < k; ++i) {
    if ((words_[i] & other.words_[i]) != 0) return true;
  }
  return false;
}

std::size_t VertexSet::intersection_size(const VertexSet& other) const noexcept {
  const std::size_t k = std::min(words_.size(), other.words_.size());
  std::size_t total = 0;
  for (std::size_t i = 0; i < k; ++i) {
    total += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
  }
  return total;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  require_same_universe(*this, other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  require_same_universe(*this, other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  require_same_universe(*this, other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

VertexSet VertexSet::complement() const {
  VertexSet out(universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] = ~words_[i];
  out.trim();
  return out;
}

std::vector<Vertex> VertexSet::to_vector() const {
  std::vector<Vertex> out;
  out.reserve(size());
  for (Vertex v : *this) out.push_back(v);
  return out;
}

void VertexSet::trim() noexcept {
  const std::size_t tail = universe_ % kWordBits;
  if (tail != 0 && !words_.empty()) words_.back() &= (std::uint64_t{1} << tail) - 1;
}

bool lex_less(const VertexSet& a, const VertexSet& b) noexcept {
  // Members below the first element of the symmetric difference agree; the
  // sequence holding that element is smaller iff the other one continues.
  const auto wa = a.words();
  const auto wb = b.words();
  const std::size_t k = std::max(wa.size(), wb.size());
  for (std::size_t i = 0; i < k; ++i) {
    const std::uint64_t x = i < wa.size() ? wa[i] : 0;
    const std::uint64_t y = i < wb.size() ? wb[i] : 0;
    const std::uint64_t diff = x ^ y;
    if (diff == 0) continue;
    const std::size_t pos = i * VertexSet::kWordBits + static_cast<std::size_t>(std::countr_zero(diff));
    if ((x >> (pos % VertexSet::kWordBits)) & 1U) {
      return b.find_next(pos + 1) < b.universe();
    }
    return a.find_next(pos + 1) >= a.universe();
  }
  return false;
}

}  // namespace keg
