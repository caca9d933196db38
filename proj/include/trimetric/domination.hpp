#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "trimetric/error.hpp"
#include "trimetric/graph.hpp"
#include "trimetric/metrics.hpp"

namespace trimetric {

inline constexpr std::size_t kDominationCap = 20;
inline constexpr std::size_t kMaxLeafSpanningTreeCap = 16;

enum class DominationVariant { plain, connected, total };

inline const char* to_string(DominationVariant v) {
  switch (v) {
    case DominationVariant::plain: return "plain";
    case DominationVariant::connected: return "connected";
    case DominationVariant::total: return "total";
  }
  return "plain";
}

struct DominatingSet {
  std::size_t size = 0;
  std::vector<Vertex> members;  // ascending
};

/// Predicate check for a candidate set, independent of the search.
inline bool is_dominating(const Graph& g, std::uint64_t set, DominationVariant variant) {
  std::uint64_t covered = 0;
  for (std::uint64_t s = set; s; s &= s - 1) {
    const auto v = static_cast<Vertex>(std::countr_zero(s));
    covered |= g.row(v);
    if (variant != DominationVariant::total) covered |= 1ULL << v;
  }
  if (covered != g.all_mask()) return false;
  if (variant == DominationVariant::connected) return detail::subset_connected(g, set);
  return true;
}

/// Exact minimum dominating set of the requested variant.
///
/// Cardinalities are tried in increasing order and, within one cardinality,
/// subsets in lexicographic order of their sorted members, so the returned
/// witness is deterministic. A partial subset is abandoned once even the
/// largest remaining neighbourhoods cannot cover what is still uncovered.
inline DominatingSet domination_number(const Graph& g, DominationVariant variant) {
  detail::require_cap(g, kDominationCap, "domination number");
  if (!is_connected(g)) throw UndefinedParameterError("domination numbers are computed on connected graphs only");
  const std::size_t n = g.order();
  if (n == 1) {
    if (variant == DominationVariant::total) {
      throw UndefinedParameterError("total domination is undefined on K_1 (no vertex has a neighbour)");
    }
    return {1, {0}};
  }

  const std::uint64_t all = g.all_mask();
  std::vector<std::uint64_t> reach(n);
  for (Vertex v = 0; v < n; ++v) {
    reach[v] = g.row(v) | (variant == DominationVariant::total ? 0ULL : (1ULL << v));
  }
  // best_after[i]: largest neighbourhood among vertices i..n-1.
  std::vector<std::size_t> best_after(n + 1, 0);
  for (std::size_t i = n; i-- > 0;) {
    best_after[i] = std::max(best_after[i + 1], static_cast<std::size_t>(std::popcount(reach[i])));
  }

  std::uint64_t found = 0;
  std::function<bool(std::size_t, std::size_t, std::uint64_t, std::uint64_t)> pick =
      [&](std::size_t start, std::size_t remaining, std::uint64_t chosen, std::uint64_t covered) {
        if (remaining == 0) {
          if (covered != all) return false;
          if (variant == DominationVariant::connected && !detail::subset_connected(g, chosen)) return false;
          found = chosen;
          return true;
        }
        for (std::size_t v = start; v + remaining <= n; ++v) {
          const auto missing = static_cast<std::size_t>(std::popcount(all & ~covered));
          if (missing > remaining * best_after[v]) return false;
          if (pick(v + 1, remaining - 1, chosen | (1ULL << v), covered | reach[v])) return true;
        }
        return false;
      };

  for (std::size_t k = 1; k <= n; ++k) {
    if (pick(0, k, 0, 0)) {
      DominatingSet out;
      out.size = k;
      for (std::uint64_t s = found; s; s &= s - 1) out.members.push_back(static_cast<Vertex>(std::countr_zero(s)));
      return out;
    }
  }
  throw UndefinedParameterError("no dominating set of the requested variant exists");
}

struct DominationNumbers {
  DominatingSet gamma;
  DominatingSet gamma_c;
  DominatingSet gamma_t;
};

/// All three variants; requires n >= 2 for the total variant.
inline DominationNumbers domination_numbers(const Graph& g) {
  return {domination_number(g, DominationVariant::plain), domination_number(g, DominationVariant::connected),
          domination_number(g, DominationVariant::total)};
}

/// Maximum number of leaves over spanning trees, through l + gamma_c = n
/// (n >= 3). K_1 has no leaves and K_2 has two.
inline std::size_t spanning_tree_max_leaves(const Graph& g) {
  detail::require_cap(g, kMaxLeafSpanningTreeCap, "max-leaf spanning tree");
  if (!is_connected(g)) throw UndefinedParameterError("spanning trees need a connected graph");
  if (g.order() == 1) return 0;
  if (g.order() == 2) return 2;
  return g.order() - domination_number(g, DominationVariant::connected).size;
}

}  // namespace trimetric
