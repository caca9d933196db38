#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

#include "trimetric/error.hpp"
#include "trimetric/graph.hpp"

namespace trimetric {

inline constexpr std::size_t kMaxEnumerationOrder = 7;
inline constexpr std::size_t kMaxTreeEnumerationOrder = 9;

/// Walks every labeled graph on n vertices as a bitmask over the n(n-1)/2
/// vertex pairs in graph6 column order: bit k is the k-th pair of
/// (0,1), (0,2), (1,2), (0,3), ...
///
/// The mask space [0, 2^pairs) is split into `parts` contiguous ranges; the
/// stream for part p only visits its own range, so disjoint parts can be
/// consumed by independent workers and together cover the space exactly once.
class LabeledGraphStream {
 public:
  LabeledGraphStream(std::size_t n, bool connected_only, std::size_t part = 0, std::size_t parts = 1)
      : n_(n), connected_only_(connected_only) {
    if (n < 1) throw InputError("enumeration order must be at least 1");
    if (n > kMaxEnumerationOrder) {
      throw CapError("labeled enumeration is capped at n = 7 (2^(n(n-1)/2) graphs); "
                     "feed larger orders as a graph6 file instead",
                     kMaxEnumerationOrder);
    }
    if (parts == 0 || part >= parts) throw InputError("invalid enumeration partition");
    std::size_t k = 0;
    for (Vertex j = 1; j < n; ++j) {
      for (Vertex i = 0; i < j; ++i, ++k) pairs_[k] = {i, j};
    }
    pair_count_ = k;
    const std::uint64_t total = 1ULL << pair_count_;
    next_ = total * part / parts;
    end_ = total * (part + 1) / parts;
  }

  std::size_t order() const noexcept { return n_; }

  /// Next graph in mask order, or nullopt when the range is exhausted.
  std::optional<Graph> next() {
    std::vector<std::uint64_t> rows;
    if (!next_rows(rows)) return std::nullopt;
    return Graph::from_rows(n_, std::move(rows));
  }

  /// Same as next() but hands back raw adjacency rows and the mask.
  bool next_rows(std::vector<std::uint64_t>& rows, std::uint64_t* mask_out = nullptr) {
    rows.assign(n_, 0);
    while (next_ < end_) {
      const std::uint64_t mask = next_++;
      std::fill(rows.begin(), rows.end(), 0);
      for (std::uint64_t m = mask; m; m &= m - 1) {
        const auto& [i, j] = pairs_[static_cast<std::size_t>(std::countr_zero(m))];
        rows[i] |= 1ULL << j;
        rows[j] |= 1ULL << i;
      }
      if (connected_only_ && !rows_connected(rows)) continue;
      if (mask_out) *mask_out = mask;
      return true;
    }
    return false;
  }

 private:
  bool rows_connected(const std::vector<std::uint64_t>& rows) const {
    const std::uint64_t all = (1ULL << n_) - 1;
    std::uint64_t seen = 1, frontier = 1;
    while (frontier) {
      std::uint64_t reach = 0;
      for (std::uint64_t f = frontier; f; f &= f - 1) reach |= rows[static_cast<std::size_t>(std::countr_zero(f))];
      frontier = reach & ~seen;
      seen |= reach;
    }
    return seen == all;
  }

  std::size_t n_;
  bool connected_only_;
  std::array<std::pair<Vertex, Vertex>, 21> pairs_{};
  std::size_t pair_count_ = 0;
  std::uint64_t next_ = 0;
  std::uint64_t end_ = 0;
};

inline LabeledGraphStream enumerate_labeled_connected(std::size_t n, std::size_t part = 0, std::size_t parts = 1) {
  return LabeledGraphStream(n, true, part, parts);
}

/// Decodes a Prüfer sequence over labels [0, n) into its tree (n = seq.size() + 2).
inline Graph tree_from_prufer(const std::vector<Vertex>& seq) {
  const std::size_t n = seq.size() + 2;
  std::vector<std::size_t> degree(n, 1);
  for (Vertex v : seq) {
    if (v >= n) throw InputError("Prüfer label out of range");
    ++degree[v];
  }
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (Vertex v : seq) {
    Vertex leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    edges.emplace_back(leaf, v);
    --degree[leaf];
    --degree[v];
  }
  Vertex a = 0;
  while (degree[a] != 1) ++a;
  Vertex b = a + 1;
  while (degree[b] != 1) ++b;
  edges.emplace_back(a, b);
  return from_edge_list(n, edges);
}

/// Every labeled tree on n vertices, one per Prüfer sequence in
/// lexicographic order. Partitioned like LabeledGraphStream.
class PruferTreeStream {
 public:
  PruferTreeStream(std::size_t n, std::size_t part = 0, std::size_t parts = 1) : n_(n) {
    if (n < 1) throw InputError("tree order must be at least 1");
    if (n > kMaxTreeEnumerationOrder) {
      throw CapError("labeled tree enumeration is capped at n = 9", kMaxTreeEnumerationOrder);
    }
    if (parts == 0 || part >= parts) throw InputError("invalid enumeration partition");
    std::uint64_t total = 1;
    for (std::size_t i = 2; i < n; ++i) total *= n;
    next_ = total * part / parts;
    end_ = total * (part + 1) / parts;
  }

  std::optional<Graph> next() {
    if (next_ >= end_) return std::nullopt;
    std::uint64_t index = next_++;
    if (n_ == 1) return from_edge_list(1, std::vector<Edge>{});
    std::vector<Vertex> seq(n_ - 2);
    for (std::size_t i = seq.size(); i-- > 0;) {
      seq[i] = static_cast<Vertex>(index % n_);
      index /= n_;
    }
    return tree_from_prufer(seq);
  }

 private:
  std::size_t n_;
  std::uint64_t next_ = 0;
  std::uint64_t end_ = 0;
};

inline PruferTreeStream enumerate_labeled_trees(std::size_t n, std::size_t part = 0, std::size_t parts = 1) {
  return PruferTreeStream(n, part, parts);
}

}  // namespace trimetric
