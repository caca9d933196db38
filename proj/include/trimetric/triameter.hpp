#pragma once

#include <algorithm>
#include <array>
#include <numeric>
#include <string>
#include <vector>

#include "trimetric/distance.hpp"
#include "trimetric/error.hpp"
#include "trimetric/graph.hpp"
#include "trimetric/metrics.hpp"

namespace trimetric {

/// tr(G) = max over vertex triples of d(u,v) + d(v,w) + d(u,w), together
/// with one triple attaining it (sorted ascending).
struct TriameterResult {
  std::size_t value = 0;
  std::array<Vertex, 3> witness{};
};

/// d(u,v) + d(v,w) + d(u,w).
inline std::size_t triple_distance(const DistanceMatrix& dm, Vertex u, Vertex v, Vertex w) {
  return std::size_t{dm(u, v)} + dm(v, w) + dm(u, w);
}

namespace detail {

inline void require_triameter_domain(const Graph& g) {
  if (g.order() < 3) {
    throw UndefinedParameterError("triameter needs at least 3 vertices, got " + std::to_string(g.order()));
  }
  if (!is_connected(g)) throw UndefinedParameterError("triameter is undefined for disconnected graphs");
}

inline std::array<Vertex, 3> sorted_triple(Vertex a, Vertex b, Vertex c) {
  std::array<Vertex, 3> t{a, b, c};
  std::sort(t.begin(), t.end());
  return t;
}

}  // namespace detail

/// Exhaustive scan over all C(n,3) triples. The witness is the
/// lexicographically smallest maximising triple.
inline TriameterResult triameter_naive(const Graph& g, const DistanceMatrix& dm) {
  detail::require_triameter_domain(g);
  const auto n = static_cast<Vertex>(g.order());
  TriameterResult best;
  for (Vertex u = 0; u < n; ++u) {
    const auto du = dm.row(u);
    for (Vertex v = u + 1; v < n; ++v) {
      const auto dv = dm.row(v);
      const std::size_t uv = du[v];
      for (Vertex w = v + 1; w < n; ++w) {
        const std::size_t s = uv + du[w] + dv[w];
        if (s > best.value) best = {s, {u, v, w}};
      }
    }
  }
  return best;
}

inline TriameterResult triameter_naive(const Graph& g) {
  detail::require_triameter_domain(g);
  return triameter_naive(g, DistanceMatrix(g));
}

/// Same value as the naive scan, far fewer triples on most graphs.
///
/// d(u,v) + d(v,w) + d(u,w) <= ecc(u) + ecc(v) + ecc(w), so vertices are
/// visited in descending eccentricity and any triple whose eccentricity sum
/// cannot beat the best value found so far is skipped, along with every
/// later triple in the same loop.
inline TriameterResult triameter_pruned(const Graph& g, const DistanceMatrix& dm) {
  detail::require_triameter_domain(g);
  const std::size_t n = g.order();
  const auto ecc = dm.eccentricities();
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return ecc[a] > ecc[b]; });

  // Seed with a diametral pair and its best third vertex; this is already >= 2 diam.
  TriameterResult best;
  {
    const Vertex a = order[0];
    const auto da = dm.row(a);
    const auto b = static_cast<Vertex>(std::max_element(da.begin(), da.end()) - da.begin());
    const auto db = dm.row(b);
    for (Vertex c = 0; c < n; ++c) {
      if (c == a || c == b) continue;
      const std::size_t s = std::size_t{da[b]} + da[c] + db[c];
      if (s > best.value) best = {s, detail::sorted_triple(a, b, c)};
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    const Vertex u = order[i];
    const std::size_t eu = ecc[u];
    if (3 * eu <= best.value) break;
    const auto du = dm.row(u);
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vertex v = order[j];
      const std::size_t ev = ecc[v];
      if (eu + 2 * ev <= best.value) break;
      const auto dv = dm.row(v);
      const std::size_t uv = du[v];
      for (std::size_t k = j + 1; k < n; ++k) {
        const Vertex w = order[k];
        if (eu + ev + ecc[w] <= best.value) break;
        const std::size_t s = uv + du[w] + dv[w];
        if (s > best.value) best = {s, detail::sorted_triple(u, v, w)};
      }
    }
  }
  return best;
}

inline TriameterResult triameter_pruned(const Graph& g) {
  detail::require_triameter_domain(g);
  return triameter_pruned(g, DistanceMatrix(g));
}

/// Trees: some maximising triple consists of leaves, so only leaf triples
/// are scanned, using one BFS per leaf instead of all-pairs distances.
inline TriameterResult triameter_tree(const Graph& t) {
  if (t.order() < 3) {
    throw UndefinedParameterError("triameter needs at least 3 vertices, got " + std::to_string(t.order()));
  }
  if (!is_tree(t)) throw InputError("triameter_tree called on a graph that is not a tree");
  const auto n = static_cast<Vertex>(t.order());
  std::vector<Vertex> leaves;
  for (Vertex u = 0; u < n; ++u)
    if (t.degree(u) == 1) leaves.push_back(u);

  if (leaves.size() == 2) {
    // A path: both ends plus any interior vertex give 2(n - 1).
    Vertex middle = 0;
    while (middle == leaves[0] || middle == leaves[1]) ++middle;
    return {2 * (t.order() - 1), detail::sorted_triple(leaves[0], leaves[1], middle)};
  }

  const std::size_t l = leaves.size();
  std::vector<std::vector<Distance>> rows(l);
  for (std::size_t i = 0; i < l; ++i) rows[i] = bfs_distances(t, leaves[i]);

  TriameterResult best;
  for (std::size_t a = 0; a < l; ++a) {
    for (std::size_t b = a + 1; b < l; ++b) {
      const std::size_t ab = rows[a][leaves[b]];
      for (std::size_t c = b + 1; c < l; ++c) {
        const std::size_t s = ab + rows[a][leaves[c]] + rows[b][leaves[c]];
        if (s > best.value) best = {s, detail::sorted_triple(leaves[a], leaves[b], leaves[c])};
      }
    }
  }
  return best;
}

/// Dispatch: leaf scan for trees, pruned scan otherwise.
inline TriameterResult triameter(const Graph& g) {
  detail::require_triameter_domain(g);
  if (g.edge_count() + 1 == g.order()) return triameter_tree(g);
  return triameter_pruned(g, DistanceMatrix(g));
}

inline TriameterResult triameter(const Graph& g, const DistanceMatrix& dm) {
  detail::require_triameter_domain(g);
  if (g.edge_count() + 1 == g.order()) return triameter_tree(g);
  return triameter_pruned(g, dm);
}

}  // namespace trimetric
