#include "detail/blossom.hpp"

#include <algorithm>
#include <cstddef>
#include <vector>

namespace keg::detail {

namespace {

// Augmenting-path search with blossom contraction via a base[] array. Each
// phase grows an alternating tree from one exposed root in BFS order; an
// edge between two even vertices of the tree closes a blossom, whose vertices
// are relabelled to the blossom base.
class EdmondsSearch {
 public:
  explicit EdmondsSearch(const std::vector<std::vector<std::uint32_t>>& adj)
      : adj_(adj), n_(adj.size()), mate_(n_, -1), parent_(n_), base_(n_), used_(n_), in_blossom_(n_) {
    queue_.reserve(n_);
  }

  std::vector<std::int32_t> run() {
    // Greedy start in ascending order.
    for (std::size_t v = 0; v < n_; ++v) {
      if (mate_[v] != -1) continue;
      for (std::uint32_t w : adj_[v]) {
        if (mate_[w] == -1) {
          mate_[v] = static_cast<std::int32_t>(w);
          mate_[w] = static_cast<std::int32_t>(v);
          break;
        }
      }
    }
    for (std::size_t root = 0; root < n_; ++root) {
      if (mate_[root] != -1) continue;
      const std::int32_t end = find_path(static_cast<std::int32_t>(root));
      for (std::int32_t v = end; v != -1;) {
        const std::int32_t pv = parent_[v];
        const std::int32_t next = mate_[pv];
        mate_[v] = pv;
        mate_[pv] = v;
        v = next;
      }
    }
    return mate_;
  }

 private:
  std::int32_t lca(std::int32_t a, std::int32_t b) {
    std::vector<bool> seen(n_, false);
    while (true) {
      a = base_[a];
      seen[a] = true;
      if (mate_[a] == -1) break;
      a = parent_[mate_[a]];
    }
    while (true) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[mate_[b]];
    }
  }

  void mark_path(std::int32_t v, std::int32_t b, std::int32_t child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = true;
      in_blossom_[base_[mate_[v]]] = true;
      parent_[v] = child;
      child = mate_[v];
      v = parent_[mate_[v]];
    }
  }

  std::int32_t find_path(std::int32_t root) {
    std::fill(used_.begin(), used_.end(), false);
    std::fill(parent_.begin(), parent_.end(), -1);
    for (std::size_t i = 0; i < n_; ++i) base_[i] = static_cast<std::int32_t>(i);
    used_[root] = true;
    queue_.clear();
    queue_.push_back(root);
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      const std::int32_t v = queue_[head];
      for (std::uint32_t wu : adj_[v]) {
        const auto w = static_cast<std::int32_t>(wu);
        if (base_[v] == base_[w] || mate_[v] == w) continue;
        if (w == root || (mate_[w] != -1 && parent_[mate_[w]] != -1)) {
          const std::int32_t b = lca(v, w);
          std::fill(in_blossom_.begin(), in_blossom_.end(), false);
          mark_path(v, b, w);
          mark_path(w, b, v);
          for (std::size_t i = 0; i < n_; ++i) {
            if (in_blossom_[base_[i]]) {
              base_[i] = b;
              if (!used_[i]) {
                used_[i] = true;
                queue_.push_back(static_cast<std::int32_t>(i));
              }
            }
          }
        } else if (parent_[w] == -1) {
          parent_[w] = v;
          if (mate_[w] == -1) return w;
          used_[mate_[w]] = true;
          queue_.push_back(mate_[w]);
        }
      }
    }
    return -1;
  }

  const std::vector<std::vector<std::uint32_t>>& adj_;
  std::size_t n_;
  std::vector<std::int32_t> mate_;
  std::vector<std::int32_t> parent_;
  std::vector<std::int32_t> base_;
  std::vector<bool> used_;
  std::vector<bool> in_blossom_;
  std::vector<std::int32_t> queue_;
};

}  // namespace

std::vector<std::int32_t> edmonds_matching(const std::vector<std::vector<std::uint32_t>>& adj) {
  return EdmondsSearch(adj).run();
}

}  // namespace keg::detail
