#pragma once

#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "trimetric/error.hpp"
#include "trimetric/graph.hpp"

namespace trimetric {

enum class FamilyKind { path, cycle, complete, star, bistar, spider, grid, petersen };

struct FamilySpec {
  FamilyKind kind = FamilyKind::path;
  std::vector<std::size_t> params;
};

inline std::string_view family_name(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::path: return "path";
    case FamilyKind::cycle: return "cycle";
    case FamilyKind::complete: return "complete";
    case FamilyKind::star: return "star";
    case FamilyKind::bistar: return "bistar";
    case FamilyKind::spider: return "spider";
    case FamilyKind::grid: return "grid";
    case FamilyKind::petersen: return "petersen";
  }
  return "unknown";
}

inline FamilyKind family_kind(std::string_view name) {
  for (auto k : {FamilyKind::path, FamilyKind::cycle, FamilyKind::complete, FamilyKind::star,
                 FamilyKind::bistar, FamilyKind::spider, FamilyKind::grid, FamilyKind::petersen}) {
    if (family_name(k) == name) return k;
  }
  throw InputError("unknown family \"" + std::string(name) + "\"");
}

inline std::size_t family_arity(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::petersen: return 0;
    case FamilyKind::bistar:
    case FamilyKind::grid: return 2;
    case FamilyKind::spider: return 3;
    default: return 1;
  }
}

/// Parses "kind:p1[,p2[,p3]]", e.g. "bistar:3,4", "grid:4,7", "petersen".
inline FamilySpec parse_family_spec(std::string_view text) {
  const auto colon = text.find(':');
  FamilySpec spec;
  spec.kind = family_kind(text.substr(0, colon));
  if (colon != std::string_view::npos) {
    std::string_view rest = text.substr(colon + 1);
    while (true) {
      const auto comma = rest.find(',');
      const std::string_view tok = rest.substr(0, comma);
      std::size_t value = 0;
      const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
      if (ec != std::errc{} || ptr != tok.data() + tok.size() || tok.empty()) {
        throw InputError("family spec: bad parameter \"" + std::string(tok) + "\"");
      }
      spec.params.push_back(value);
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
  }
  if (spec.params.size() != family_arity(spec.kind)) {
    throw InputError("family " + std::string(family_name(spec.kind)) + " takes " +
                     std::to_string(family_arity(spec.kind)) + " parameter(s)");
  }
  return spec;
}

inline std::string to_string(const FamilySpec& spec) {
  std::string out(family_name(spec.kind));
  for (std::size_t i = 0; i < spec.params.size(); ++i) {
    out += (i == 0 ? ':' : ',');
    out += std::to_string(spec.params[i]);
  }
  return out;
}

inline Graph path_graph(std::size_t n) {
  if (n < 1) throw InputError("path needs n >= 1");
  std::vector<Edge> e;
  for (Vertex i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return from_edge_list(n, e);
}

inline Graph cycle_graph(std::size_t n) {
  if (n < 3) throw InputError("cycle needs n >= 3");
  std::vector<Edge> e;
  for (Vertex i = 0; i < n; ++i) e.emplace_back(i, static_cast<Vertex>((i + 1) % n));
  return from_edge_list(n, e);
}

inline Graph complete_graph(std::size_t n) {
  if (n < 1) throw InputError("complete graph needs n >= 1");
  std::vector<Edge> e;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return from_edge_list(n, e);
}

// K_{1,leaves}: centre 0, leaves 1..leaves.
inline Graph star_graph(std::size_t leaves) {
  if (leaves < 1) throw InputError("star needs at least one leaf");
  std::vector<Edge> e;
  for (Vertex i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return from_edge_list(leaves + 1, e);
}

// Roots 0 and 1; root 0 leaves are 2..n1+1, root 1 leaves follow.
inline Graph bistar_graph(std::size_t n1, std::size_t n2) {
  if (n1 < 1 || n2 < 1) throw InputError("bistar needs n1, n2 >= 1");
  std::vector<Edge> e{{0, 1}};
  Vertex next = 2;
  for (std::size_t i = 0; i < n1; ++i) e.emplace_back(0, next++);
  for (std::size_t i = 0; i < n2; ++i) e.emplace_back(1, next++);
  return from_edge_list(n1 + n2 + 2, e);
}

// Root 0; each leg is a run of consecutive labels walking away from the root.
inline Graph spider_graph(std::size_t k1, std::size_t k2, std::size_t k3) {
  if (k1 < 1 || k2 < 1 || k3 < 1) throw InputError("spider legs must have length >= 1");
  std::vector<Edge> e;
  Vertex next = 1;
  for (std::size_t len : {k1, k2, k3}) {
    Vertex prev = 0;
    for (std::size_t i = 0; i < len; ++i) {
      e.emplace_back(prev, next);
      prev = next++;
    }
  }
  return from_edge_list(k1 + k2 + k3 + 1, e);
}

// Row-major: vertex (r, c) has index r * cols + c.
inline Graph grid_graph(std::size_t rows, std::size_t cols) {
  if (rows < 1 || cols < 1) throw InputError("grid needs m, n >= 1");
  std::vector<Edge> e;
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      const auto v = static_cast<Vertex>(r * cols + c);
      if (c + 1 < cols) e.emplace_back(v, v + 1);
      if (r + 1 < rows) e.emplace_back(v, static_cast<Vertex>(v + cols));
    }
  }
  return from_edge_list(rows * cols, e);
}

// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
inline Graph petersen_graph() {
  std::vector<Edge> e;
  for (Vertex i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(i + 5, (i + 2) % 5 + 5);
  }
  return from_edge_list(10, e);
}

inline Graph generate_family(const FamilySpec& spec) {
  if (spec.params.size() != family_arity(spec.kind)) {
    throw InputError("family " + std::string(family_name(spec.kind)) + " takes " +
                     std::to_string(family_arity(spec.kind)) + " parameter(s)");
  }
  const auto& p = spec.params;
  switch (spec.kind) {
    case FamilyKind::path: return path_graph(p[0]);
    case FamilyKind::cycle: return cycle_graph(p[0]);
    case FamilyKind::complete: return complete_graph(p[0]);
    case FamilyKind::star: return star_graph(p[0]);
    case FamilyKind::bistar: return bistar_graph(p[0], p[1]);
    case FamilyKind::spider: return spider_graph(p[0], p[1], p[2]);
    case FamilyKind::grid: return grid_graph(p[0], p[1]);
    case FamilyKind::petersen: return petersen_graph();
  }
  throw InputError("unknown family");
}

inline Graph generate_family(std::string_view text) { return generate_family(parse_family_spec(text)); }

}  // namespace trimetric
