#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <istream>
#include <limits>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "trimetric/error.hpp"

namespace trimetric {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

// Largest order stored as per-vertex 64-bit adjacency rows.
inline constexpr std::size_t kBitsetOrder = 64;

/// Simple undirected graph on vertices 0..n-1.
///
/// Orders up to 64 keep one adjacency bitmask per vertex so that adjacency
/// tests and neighbourhood intersections are single word operations; larger
/// orders fall back to sorted neighbour lists. Values are immutable once
/// built and may be shared freely between threads.
class Graph {
 public:
  Graph() = default;

  /// Builds from per-vertex bit rows (n <= 64). Rows must be symmetric and
  /// loop-free; violations raise InputError.
  static Graph from_rows(std::size_t n, std::vector<std::uint64_t> rows) {
    if (n == 0) throw InputError("graph must have at least one vertex");
    if (n > kBitsetOrder) throw InputError("bit rows only supported for n <= 64");
    if (rows.size() != n) throw InputError("row count does not match order");
    const std::uint64_t mask = n == 64 ? ~0ULL : ((1ULL << n) - 1);
    for (std::size_t u = 0; u < n; ++u) {
      if (rows[u] & ~mask) throw InputError("neighbour label out of range");
      if ((rows[u] >> u) & 1ULL) throw InputError("self-loop at vertex " + std::to_string(u));
      for (std::uint64_t r = rows[u]; r; r &= r - 1) {
        const auto v = static_cast<std::size_t>(std::countr_zero(r));
        if (!((rows[v] >> u) & 1ULL)) throw InputError("adjacency is not symmetric");
      }
    }
    Graph g;
    g.n_ = n;
    g.rows_ = std::move(rows);
    return g;
  }

  std::size_t order() const noexcept { return n_; }
  bool uses_bitset() const noexcept { return n_ <= kBitsetOrder; }

  /// Adjacency row of u; only valid when uses_bitset().
  std::uint64_t row(Vertex u) const noexcept { return rows_[u]; }

  /// Mask with the low order() bits set; only valid when uses_bitset().
  std::uint64_t all_mask() const noexcept {
    return n_ == 64 ? ~0ULL : ((1ULL << n_) - 1);
  }

  bool adjacent(Vertex u, Vertex v) const {
    if (uses_bitset()) return (rows_[u] >> v) & 1ULL;
    const auto& l = lists_[u];
    return std::binary_search(l.begin(), l.end(), v);
  }

  std::size_t degree(Vertex u) const {
    if (uses_bitset()) return static_cast<std::size_t>(std::popcount(rows_[u]));
    return lists_[u].size();
  }

  template <typename Fn>
  void for_each_neighbor(Vertex u, Fn&& fn) const {
    if (uses_bitset()) {
      for (std::uint64_t r = rows_[u]; r; r &= r - 1) fn(static_cast<Vertex>(std::countr_zero(r)));
    } else {
      for (Vertex v : lists_[u]) fn(v);
    }
  }

  /// Sorted neighbours of u.
  std::vector<Vertex> neighbors(Vertex u) const {
    std::vector<Vertex> out;
    out.reserve(degree(u));
    for_each_neighbor(u, [&](Vertex v) { out.push_back(v); });
    return out;
  }

  std::size_t edge_count() const {
    std::size_t twice = 0;
    for (Vertex u = 0; u < n_; ++u) twice += degree(u);
    return twice / 2;
  }

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (Vertex u = 0; u < n_; ++u) {
      for_each_neighbor(u, [&](Vertex v) {
        if (u < v) out.emplace_back(u, v);
      });
    }
    return out;
  }

  std::size_t min_degree() const {
    std::size_t d = std::numeric_limits<std::size_t>::max();
    for (Vertex u = 0; u < n_; ++u) d = std::min(d, degree(u));
    return d;
  }

  std::size_t max_degree() const {
    std::size_t d = 0;
    for (Vertex u = 0; u < n_; ++u) d = std::max(d, degree(u));
    return d;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.rows_ == b.rows_ && a.lists_ == b.lists_;
  }

 private:
  friend Graph from_edge_list(std::size_t n, std::span<const Edge> edges);

  std::size_t n_ = 0;
  std::vector<std::uint64_t> rows_;
  std::vector<std::vector<Vertex>> lists_;
};

/// Graph with exactly the given edges (duplicates collapse).
inline Graph from_edge_list(std::size_t n, std::span<const Edge> edges) {
  if (n == 0) throw InputError("graph must have at least one vertex");
  if (n > std::numeric_limits<Vertex>::max()) throw SizeError("order exceeds vertex label range");
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      throw InputError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                       ") has an endpoint outside [0, " + std::to_string(n) + ")");
    }
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
  }
  Graph g;
  g.n_ = n;
  if (n <= kBitsetOrder) {
    g.rows_.assign(n, 0);
    for (const auto& [u, v] : edges) {
      g.rows_[u] |= 1ULL << v;
      g.rows_[v] |= 1ULL << u;
    }
  } else {
    g.lists_.assign(n, {});
    for (const auto& [u, v] : edges) {
      g.lists_[u].push_back(v);
      g.lists_[v].push_back(u);
    }
    for (auto& l : g.lists_) {
      std::sort(l.begin(), l.end());
      l.erase(std::unique(l.begin(), l.end()), l.end());
    }
  }
  return g;
}

inline Graph from_edge_list(std::size_t n, std::initializer_list<Edge> edges) {
  return from_edge_list(n, std::span<const Edge>(edges.begin(), edges.size()));
}

inline Graph from_edge_list(std::size_t n, const std::vector<Edge>& edges) {
  return from_edge_list(n, std::span<const Edge>(edges));
}

inline bool is_connected(const Graph& g) {
  const std::size_t n = g.order();
  if (n == 0) return false;
  if (g.uses_bitset()) {
    std::uint64_t seen = 1, frontier = 1;
    while (frontier) {
      std::uint64_t next = 0;
      for (std::uint64_t f = frontier; f; f &= f - 1) next |= g.row(static_cast<Vertex>(std::countr_zero(f)));
      frontier = next & ~seen;
      seen |= next;
    }
    return seen == g.all_mask();
  }
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const Vertex u = stack.back();
    stack.pop_back();
    g.for_each_neighbor(u, [&](Vertex v) {
      if (!seen[v]) {
        seen[v] = 1;
        ++reached;
        stack.push_back(v);
      }
    });
  }
  return reached == n;
}

inline Graph complement(const Graph& g) {
  const std::size_t n = g.order();
  if (g.uses_bitset()) {
    std::vector<std::uint64_t> rows(n);
    for (Vertex u = 0; u < n; ++u) rows[u] = ~g.row(u) & g.all_mask() & ~(1ULL << u);
    return Graph::from_rows(n, std::move(rows));
  }
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!g.adjacent(u, v)) edges.emplace_back(u, v);
    }
  }
  return from_edge_list(n, edges);
}

// Orders beyond this would make the product's distance matrix unreasonably large.
inline constexpr std::size_t kMaxProductOrder = 1u << 20;

/// Cartesian product; vertex (a, b) has index a * h.order() + b.
inline Graph cartesian_product(const Graph& g, const Graph& h) {
  const std::size_t gn = g.order(), hn = h.order();
  if (gn == 0 || hn == 0) throw InputError("cartesian product of an empty graph");
  if (gn > kMaxProductOrder / hn) throw SizeError("cartesian product order exceeds " + std::to_string(kMaxProductOrder));
  std::vector<Edge> edges;
  for (Vertex a = 0; a < gn; ++a) {
    for (Vertex b = 0; b < hn; ++b) {
      const auto self = static_cast<Vertex>(a * hn + b);
      h.for_each_neighbor(b, [&](Vertex d) {
        if (b < d) edges.emplace_back(self, static_cast<Vertex>(a * hn + d));
      });
      g.for_each_neighbor(a, [&](Vertex c) {
        if (a < c) edges.emplace_back(self, static_cast<Vertex>(c * hn + b));
      });
    }
  }
  return from_edge_list(gn * hn, edges);
}

// Edge-list text: "n m" on the first line, then m lines "u v" (0-based).
inline Graph read_edge_list(std::istream& in) {
  long long n = 0, m = 0;
  if (!(in >> n >> m)) throw InputError("edge list: expected header \"n m\"");
  if (n < 1) throw InputError("edge list: order must be at least 1");
  if (m < 0) throw InputError("edge list: negative edge count");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    long long u = 0, v = 0;
    if (!(in >> u >> v)) throw InputError("edge list: expected " + std::to_string(m) + " edges, got " + std::to_string(i));
    if (u < 0 || v < 0) throw InputError("edge list: negative vertex label");
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return from_edge_list(static_cast<std::size_t>(n), edges);
}

inline Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return read_edge_list(in);
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
  const auto es = g.edges();
  out << g.order() << ' ' << es.size() << '\n';
  for (const auto& [u, v] : es) out << u << ' ' << v << '\n';
}

}  // namespace trimetric
