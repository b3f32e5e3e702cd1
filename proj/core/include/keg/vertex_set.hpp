#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <span>
#include <vector>

namespace keg {

using Vertex = std::uint32_t;

/// A subset of {0, ..., universe-1}, stored as a packed bitset.
///
/// Bits at positions >= universe are always zero, so defaulted equality is
/// set equality (for sets over the same universe).
class VertexSet {
 public:
  static constexpr std::size_t kWordBits = 64;

  class const_iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    const_iterator() = default;
    const_iterator(const VertexSet* set, std::size_t pos) : set_(set), pos_(pos) {}

    Vertex operator*() const { return static_cast<Vertex>(pos_); }
    const_iterator& operator++() {
      pos_ = set_->find_next(pos_ + 1);
      return *this;
    }
    const_iterator operator++(int) {
      auto copy = *this;
      ++*this;
      return copy;
    }
    bool operator==(const const_iterator& other) const { return pos_ == other.pos_; }

   private:
    const VertexSet* set_ = nullptr;
    std::size_t pos_ = 0;
  };

  VertexSet() = default;
  explicit VertexSet(std::size_t universe);
  VertexSet(std::size_t universe, std::initializer_list<Vertex> members);
  VertexSet(std::size_t universe, std::span<const Vertex> members);

  static VertexSet full(std::size_t universe);

  std::size_t universe() const noexcept { return universe_; }

  bool contains(Vertex v) const noexcept {
    return v < universe_ && ((words_[v / kWordBits] >> (v % kWordBits)) & 1U) != 0;
  }
  void insert(Vertex v);
  void erase(Vertex v);
  void clear() noexcept;

  std::size_t size() const noexcept;
  bool empty() const noexcept;

  /// Smallest member >= from, or universe() if there is none.
  std::size_t find_next(std::size_t from) const noexcept;
  std::size_t find_first() const noexcept { return find_next(0); }

  bool is_subset_of(const VertexSet& other) const noexcept;
  bool intersects(const VertexSet& other) const noexcept;
  std::size_t intersection_size(const VertexSet& other) const noexcept;

  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator-=(const VertexSet& other);
  VertexSet complement() const;

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  bool operator==(const VertexSet&) const = default;

  std::vector<Vertex> to_vector() const;
  std::span<const std::uint64_t> words() const noexcept { return words_; }

  const_iterator begin() const { return {this, find_first()}; }
  const_iterator end() const { return {this, universe_}; }

 private:
  void trim() noexcept;

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Compares the ascending member sequences of a and b lexicographically.
bool lex_less(const VertexSet& a, const VertexSet& b) noexcept;

}  // namespace keg
