#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "trimetric/distance.hpp"
#include "trimetric/error.hpp"
#include "trimetric/graph.hpp"

namespace trimetric {

inline constexpr std::size_t kChromaticCap = 20;
inline constexpr std::size_t kConnectivityCap = 16;
inline constexpr std::size_t kHamiltonianCap = 18;
inline constexpr std::size_t kTransitivityCap = 10;

// Three-valued answer for predicates that give up above a size cap.
enum class Tristate { no, yes, unknown };

inline const char* to_string(Tristate t) {
  switch (t) {
    case Tristate::no: return "no";
    case Tristate::yes: return "yes";
    case Tristate::unknown: return "unknown";
  }
  return "unknown";
}

namespace detail {

inline void require_cap(const Graph& g, std::size_t cap, const char* what) {
  if (g.order() > cap) {
    throw CapError(std::string(what) + " is capped at n = " + std::to_string(cap) + ", got n = " +
                       std::to_string(g.order()),
                   cap);
  }
}

// Connectivity of the subgraph induced by `mask` (bitset graphs only).
inline bool subset_connected(const Graph& g, std::uint64_t mask) {
  if (mask == 0) return false;
  std::uint64_t seen = mask & (~mask + 1), frontier = seen;
  while (frontier) {
    std::uint64_t reach = 0;
    for (std::uint64_t f = frontier; f; f &= f - 1) reach |= g.row(static_cast<Vertex>(std::countr_zero(f)));
    reach &= mask;
    frontier = reach & ~seen;
    seen |= reach;
  }
  return seen == mask;
}

}  // namespace detail

/// Length of a shortest cycle, or nullopt for forests.
///
/// A BFS from every root; a non-tree edge (x, y) seen from root r closes a
/// walk of length d(r,x) + d(r,y) + 1, and the minimum of these over all
/// roots is exactly the girth.
inline std::optional<std::size_t> girth(const Graph& g) {
  const std::size_t n = g.order();
  std::size_t best = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(n), parent(n);
  std::vector<Vertex> queue;
  queue.reserve(n);
  for (Vertex root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), std::numeric_limits<std::size_t>::max());
    queue.clear();
    dist[root] = 0;
    parent[root] = n;
    queue.push_back(root);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex x = queue[head];
      if (2 * dist[x] + 1 >= best) break;
      g.for_each_neighbor(x, [&](Vertex y) {
        if (dist[y] == std::numeric_limits<std::size_t>::max()) {
          dist[y] = dist[x] + 1;
          parent[y] = x;
          queue.push_back(y);
        } else if (parent[x] != y) {
          best = std::min(best, dist[x] + dist[y] + 1);
        }
      });
    }
  }
  if (best == std::numeric_limits<std::size_t>::max()) return std::nullopt;
  return best;
}

inline std::size_t leaf_count(const Graph& g) {
  std::size_t l = 0;
  for (Vertex u = 0; u < g.order(); ++u) l += g.degree(u) == 1;
  return l;
}

inline bool is_tree(const Graph& g) { return g.edge_count() + 1 == g.order() && is_connected(g); }

inline bool is_complete(const Graph& g) { return g.edge_count() * 2 == g.order() * (g.order() - 1); }

/// Connected 2-regular graph on n >= 3 vertices.
inline bool is_cycle(const Graph& g) {
  if (g.order() < 3) return false;
  for (Vertex u = 0; u < g.order(); ++u)
    if (g.degree(u) != 2) return false;
  return is_connected(g);
}

/// K_{1,k} for some k >= 1.
inline bool is_star(const Graph& g) {
  if (g.order() < 2 || !is_tree(g)) return false;
  return g.max_degree() + 1 == g.order();
}

inline bool is_bipartite(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<int> side(n, -1);
  std::vector<Vertex> queue;
  queue.reserve(n);
  for (Vertex s = 0; s < n; ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    queue.assign(1, s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex u = queue[head];
      bool ok = true;
      g.for_each_neighbor(u, [&](Vertex v) {
        if (side[v] == -1) {
          side[v] = 1 - side[u];
          queue.push_back(v);
        } else if (side[v] == side[u]) {
          ok = false;
        }
      });
      if (!ok) return false;
    }
  }
  return true;
}

inline bool has_triangle(const Graph& g) {
  for (Vertex u = 0; u < g.order(); ++u) {
    if (g.uses_bitset()) {
      for (std::uint64_t r = g.row(u) & ~((2ULL << u) - 1); r; r &= r - 1) {
        const auto v = static_cast<Vertex>(std::countr_zero(r));
        if (g.row(u) & g.row(v)) return true;
      }
    } else {
      const auto nu = g.neighbors(u);
      for (Vertex v : nu) {
        if (v <= u) continue;
        const auto nv = g.neighbors(v);
        std::vector<Vertex> common;
        std::set_intersection(nu.begin(), nu.end(), nv.begin(), nv.end(), std::back_inserter(common));
        if (!common.empty()) return true;
      }
    }
  }
  return false;
}

/// Tree on n >= 4 vertices with exactly two non-leaf vertices, adjacent to
/// each other (two stars K_{1,n1}, K_{1,n2} with their centres joined).
inline bool is_bistar(const Graph& g) {
  if (g.order() < 4 || !is_tree(g)) return false;
  std::vector<Vertex> inner;
  for (Vertex u = 0; u < g.order(); ++u)
    if (g.degree(u) >= 2) inner.push_back(u);
  return inner.size() == 2 && g.adjacent(inner[0], inner[1]);
}

/// Exact chromatic number: DSATUR greedy bound, then DSATUR-ordered
/// branch and bound.
inline std::size_t chromatic_number(const Graph& g) {
  detail::require_cap(g, kChromaticCap, "chromatic number");
  const std::size_t n = g.order();
  if (n == 0) return 0;
  if (g.edge_count() == 0) return 1;

  std::vector<int> color(n, -1);
  // neighbour_colors[v]: bitmask of colours already used by neighbours of v.
  std::vector<std::uint32_t> neighbour_colors(n, 0);

  auto pick = [&]() {
    int best = -1, best_sat = -1, best_deg = -1;
    for (Vertex v = 0; v < n; ++v) {
      if (color[v] != -1) continue;
      const int sat = std::popcount(neighbour_colors[v]);
      int deg = 0;
      g.for_each_neighbor(v, [&](Vertex w) { deg += color[w] == -1; });
      if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
        best = static_cast<int>(v);
        best_sat = sat;
        best_deg = deg;
      }
    }
    return static_cast<Vertex>(best);
  };

  auto assign = [&](Vertex v, int c) {
    color[v] = c;
    g.for_each_neighbor(v, [&](Vertex w) { neighbour_colors[w] |= 1u << c; });
  };

  // Greedy DSATUR upper bound.
  std::size_t best = 0;
  for (std::size_t step = 0; step < n; ++step) {
    const Vertex v = pick();
    int c = 0;
    while ((neighbour_colors[v] >> c) & 1u) ++c;
    assign(v, c);
    best = std::max(best, static_cast<std::size_t>(c + 1));
  }

  std::fill(color.begin(), color.end(), -1);
  std::fill(neighbour_colors.begin(), neighbour_colors.end(), 0);

  std::function<void(std::size_t, std::size_t)> search = [&](std::size_t colored, std::size_t used) {
    if (used >= best) return;
    if (colored == n) {
      best = used;
      return;
    }
    const Vertex v = pick();
    const auto saved = neighbour_colors;
    for (std::size_t c = 0; c <= used; ++c) {
      if (c == used) {
        if (used + 1 >= best) break;
      } else if ((neighbour_colors[v] >> c) & 1u) {
        continue;
      }
      assign(v, static_cast<int>(c));
      search(colored + 1, std::max(used, c + 1));
      color[v] = -1;
      neighbour_colors = saved;
      if (best <= used) return;
    }
  };
  search(0, 0);
  return best;
}

/// Minimum number of vertices whose removal disconnects g; n - 1 for K_n
/// and 0 for disconnected graphs.
inline std::size_t vertex_connectivity(const Graph& g) {
  detail::require_cap(g, kConnectivityCap, "vertex connectivity");
  const std::size_t n = g.order();
  if (!is_connected(g)) return 0;
  if (is_complete(g)) return n - 1;
  const std::uint64_t all = g.all_mask();
  for (std::size_t k = 1; k + 2 <= n; ++k) {
    // Gosper's hack over k-subsets of n bits.
    std::uint64_t s = (1ULL << k) - 1;
    while (s <= all) {
      if (!detail::subset_connected(g, all & ~s)) return k;
      const std::uint64_t c = s & (~s + 1);
      const std::uint64_t r = s + c;
      s = (((r ^ s) >> 2) / c) | r;
    }
  }
  return n - 1;
}

/// Exact Hamiltonicity by backtracking from vertex 0. Each unvisited vertex
/// must keep two candidate cycle neighbours among the unvisited vertices and
/// the two open path ends, otherwise the branch is cut.
inline bool is_hamiltonian(const Graph& g) {
  detail::require_cap(g, kHamiltonianCap, "Hamiltonicity");
  const std::size_t n = g.order();
  if (n < 3) return false;
  for (Vertex u = 0; u < n; ++u)
    if (g.degree(u) < 2) return false;
  if (!is_connected(g)) return false;
  const std::uint64_t all = g.all_mask();

  std::function<bool(Vertex, std::uint64_t, std::size_t)> extend = [&](Vertex end, std::uint64_t visited,
                                                                      std::size_t length) {
    if (length == n) return g.adjacent(end, 0);
    const std::uint64_t open = (all & ~visited) | (1ULL << end) | 1ULL;
    for (std::uint64_t rest = all & ~visited; rest; rest &= rest - 1) {
      const auto w = static_cast<Vertex>(std::countr_zero(rest));
      if (std::popcount(g.row(w) & open) < 2) return false;
    }
    for (std::uint64_t cand = g.row(end) & ~visited; cand; cand &= cand - 1) {
      const auto w = static_cast<Vertex>(std::countr_zero(cand));
      if (extend(w, visited | (1ULL << w), length + 1)) return true;
    }
    return false;
  };
  return extend(0, 1ULL, 1);
}

/// Exact for n <= 10 by automorphism search (is there an automorphism
/// sending vertex 0 to each other vertex); unknown above the cap.
inline Tristate is_vertex_transitive(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kTransitivityCap) return Tristate::unknown;
  if (n <= 1) return Tristate::yes;
  for (Vertex u = 1; u < n; ++u)
    if (g.degree(u) != g.degree(0)) return Tristate::no;

  // Sorted distance profile is an automorphism invariant.
  const DistanceMatrix dm(g);
  std::vector<std::vector<Distance>> profile(n);
  for (Vertex u = 0; u < n; ++u) {
    const auto r = dm.row(u);
    profile[u].assign(r.begin(), r.end());
    std::sort(profile[u].begin(), profile[u].end());
  }
  for (Vertex u = 1; u < n; ++u)
    if (profile[u] != profile[0]) return Tristate::no;

  std::vector<Vertex> image(n);
  std::function<bool(Vertex, std::uint64_t)> extend = [&](Vertex u, std::uint64_t used) {
    if (u == n) return true;
    for (Vertex c = 0; c < n; ++c) {
      if ((used >> c) & 1ULL) continue;
      bool ok = true;
      for (Vertex w = 0; w < u && ok; ++w) {
        ok = g.adjacent(u, w) == g.adjacent(c, image[w]) && dm(u, w) == dm(c, image[w]);
      }
      if (!ok) continue;
      image[u] = c;
      if (extend(u + 1, used | (1ULL << c))) return true;
    }
    return false;
  };
  for (Vertex t = 1; t < n; ++t) {
    image[0] = t;
    if (!extend(1, 1ULL << t)) return Tristate::no;
  }
  return Tristate::yes;
}

struct SrgParams {
  std::size_t n = 0, k = 0, lambda = 0, mu = 0;
  friend bool operator==(const SrgParams&, const SrgParams&) = default;
};

/// Strongly regular parameters, or nullopt. Complete and edgeless graphs
/// report nullopt since one of lambda / mu is vacuous for them.
inline std::optional<SrgParams> srg_parameters(const Graph& g) {
  const std::size_t n = g.order();
  if (n < 3) return std::nullopt;
  const std::size_t k = g.degree(0);
  for (Vertex u = 1; u < n; ++u)
    if (g.degree(u) != k) return std::nullopt;
  if (k == 0 || k + 1 == n) return std::nullopt;
  auto common = [&](Vertex u, Vertex v) -> std::size_t {
    if (g.uses_bitset()) return static_cast<std::size_t>(std::popcount(g.row(u) & g.row(v)));
    const auto a = g.neighbors(u), b = g.neighbors(v);
    std::vector<Vertex> c;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(c));
    return c.size();
  };
  std::optional<std::size_t> lambda, mu;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const std::size_t c = common(u, v);
      auto& slot = g.adjacent(u, v) ? lambda : mu;
      if (!slot) slot = c;
      else if (*slot != c) return std::nullopt;
    }
  }
  return SrgParams{n, k, *lambda, *mu};
}

struct MetricsSummary {
  std::size_t order = 0;
  std::size_t size = 0;
  std::vector<Distance> ecc;
  std::size_t radius = 0;
  std::size_t diameter = 0;
  std::vector<Vertex> center;
  std::optional<std::size_t> girth;  // nullopt: acyclic
  std::uint64_t wiener = 0;
  std::size_t min_degree = 0;
  std::size_t max_degree = 0;
  std::size_t leaf_count = 0;
  std::optional<std::size_t> chromatic;  // nullopt: above the exact-search cap
  std::optional<std::size_t> kappa;      // nullopt: above the exact-search cap
  bool tree = false;
  bool bipartite = false;
  bool triangle = false;
  bool bistar = false;
  Tristate hamiltonian = Tristate::unknown;
  Tristate vertex_transitive = Tristate::unknown;
  std::optional<SrgParams> srg;
};

inline MetricsSummary metrics_summary(const Graph& g) {
  if (!is_connected(g)) {
    throw MetricsError("graph is disconnected: ecc, radius, diameter, center and wiener are undefined");
  }
  const DistanceMatrix dm(g);
  MetricsSummary s;
  s.order = g.order();
  s.size = g.edge_count();
  s.ecc = dm.eccentricities();
  s.radius = *std::min_element(s.ecc.begin(), s.ecc.end());
  s.diameter = *std::max_element(s.ecc.begin(), s.ecc.end());
  for (Vertex v = 0; v < s.order; ++v)
    if (s.ecc[v] == s.radius) s.center.push_back(v);
  s.girth = girth(g);
  s.wiener = dm.wiener_index();
  s.min_degree = g.min_degree();
  s.max_degree = g.max_degree();
  s.leaf_count = leaf_count(g);
  if (s.order <= kChromaticCap) s.chromatic = chromatic_number(g);
  if (s.order <= kConnectivityCap) s.kappa = vertex_connectivity(g);
  s.tree = s.size + 1 == s.order;
  s.bipartite = is_bipartite(g);
  s.triangle = has_triangle(g);
  s.bistar = is_bistar(g);
  if (s.order <= kHamiltonianCap) s.hamiltonian = is_hamiltonian(g) ? Tristate::yes : Tristate::no;
  s.vertex_transitive = is_vertex_transitive(g);
  s.srg = srg_parameters(g);
  return s;
}

}  // namespace trimetric
