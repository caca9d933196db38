#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "trimetric/error.hpp"
#include "trimetric/graph.hpp"

namespace trimetric {

using Distance = std::uint16_t;
inline constexpr Distance kUnreachable = std::numeric_limits<Distance>::max();

/// Hop counts from `source`; kUnreachable where no path exists.
inline std::vector<Distance> bfs_distances(const Graph& g, Vertex source) {
  const std::size_t n = g.order();
  if (source >= n) throw InputError("BFS source " + std::to_string(source) + " out of range");
  if (n >= kUnreachable) throw SizeError("order too large for 16-bit distances");
  std::vector<Distance> dist(n, kUnreachable);
  dist[source] = 0;
  if (g.uses_bitset()) {
    std::uint64_t seen = 1ULL << source, frontier = seen;
    for (Distance d = 1; frontier; ++d) {
      std::uint64_t reach = 0;
      for (std::uint64_t f = frontier; f; f &= f - 1) reach |= g.row(static_cast<Vertex>(std::countr_zero(f)));
      frontier = reach & ~seen;
      seen |= frontier;
      for (std::uint64_t f = frontier; f; f &= f - 1) dist[static_cast<std::size_t>(std::countr_zero(f))] = d;
    }
    return dist;
  }
  std::vector<Vertex> queue{source};
  queue.reserve(n);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    g.for_each_neighbor(u, [&](Vertex v) {
      if (dist[v] == kUnreachable) {
        dist[v] = static_cast<Distance>(dist[u] + 1);
        queue.push_back(v);
      }
    });
  }
  return dist;
}

/// All-pairs hop counts, row-major n x n.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;

  explicit DistanceMatrix(const Graph& g) : n_(g.order()), dist_(n_ * n_) {
    for (Vertex s = 0; s < n_; ++s) {
      const auto row = bfs_distances(g, s);
      std::copy(row.begin(), row.end(), dist_.begin() + static_cast<std::ptrdiff_t>(s * n_));
    }
  }

  std::size_t order() const noexcept { return n_; }

  Distance operator()(Vertex u, Vertex v) const noexcept { return dist_[u * n_ + v]; }

  std::span<const Distance> row(Vertex u) const noexcept { return {dist_.data() + u * n_, n_}; }

  bool all_finite() const noexcept {
    return std::find(dist_.begin(), dist_.end(), kUnreachable) == dist_.end();
  }

  /// Per-vertex eccentricity; kUnreachable for every vertex if disconnected.
  std::vector<Distance> eccentricities() const {
    std::vector<Distance> ecc(n_, 0);
    for (Vertex u = 0; u < n_; ++u) {
      const auto r = row(u);
      ecc[u] = *std::max_element(r.begin(), r.end());
    }
    return ecc;
  }

  /// Sum over unordered pairs; only meaningful when all_finite().
  std::uint64_t wiener_index() const noexcept {
    std::uint64_t s = 0;
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex v = u + 1; v < n_; ++v) s += dist_[u * n_ + v];
    return s;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Distance> dist_;
};

inline DistanceMatrix distance_matrix(const Graph& g) { return DistanceMatrix(g); }

}  // namespace trimetric
