#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "trimetric/enumerate.hpp"
#include "trimetric/error.hpp"
#include "trimetric/families.hpp"
#include "trimetric/graph6.hpp"
#include "trimetric/theorems.hpp"
#include "trimetric/triameter.hpp"

namespace trimetric {

// Which stream feeds which checks.
enum class TreeStreamPolicy {
  split,       // tree-only checks on the Prüfer stream, the rest on connected graphs
  trees_only,  // every selected check on the Prüfer stream
};

struct ScanOptions {
  std::vector<std::size_t> orders;
  std::vector<std::string> ids;  // empty: whole registry
  std::size_t workers = 1;
  TreeStreamPolicy policy = TreeStreamPolicy::split;
  std::size_t max_witnesses = 20;  // per theorem, smallest graph6 first
};

struct TheoremTally {
  std::string id;
  bool tree_stream = false;
  std::uint64_t graphs = 0;
  std::uint64_t holds = 0;
  std::uint64_t violated = 0;
  std::uint64_t inapplicable = 0;
  std::uint64_t inapplicable_cap = 0;
  std::vector<TheoremReport> witnesses;  // violations, sorted by graph6
};

struct ScanSummary {
  std::vector<std::size_t> orders;
  std::vector<std::string> ids;
  std::uint64_t connected_graphs = 0;
  std::uint64_t trees = 0;
  std::vector<TheoremTally> results;
  std::uint64_t elapsed_ms = 0;

  std::uint64_t graphs_scanned() const noexcept { return connected_graphs + trees; }
  std::uint64_t violations() const noexcept {
    std::uint64_t v = 0;
    for (const auto& r : results) v += r.violated;
    return v;
  }
  const TheoremTally& tally(std::string_view id) const {
    const auto& full = find_theorem(id).id;
    for (const auto& r : results)
      if (r.id == full) return r;
    throw RegistryError("theorem " + full + " was not part of this scan");
  }
};

namespace detail {

// Runs `task(i)` for i in [0, count) on `workers` threads.
template <typename Task>
void run_parallel(std::size_t count, std::size_t workers, Task&& task) {
  workers = std::max<std::size_t>(1, std::min(workers, count));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) task(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr failure;
  std::mutex failure_mutex;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          task(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

inline bool graph6_less(const TheoremReport& a, const TheoremReport& b) {
  if (a.graph6.size() != b.graph6.size()) return a.graph6.size() < b.graph6.size();
  return a.graph6 < b.graph6;
}

inline void keep_smallest(std::vector<TheoremReport>& w, std::size_t limit) {
  std::sort(w.begin(), w.end(), graph6_less);
  w.erase(std::unique(w.begin(), w.end(), [](const auto& a, const auto& b) { return a.graph6 == b.graph6; }),
          w.end());
  if (w.size() > limit) w.resize(limit);
}

inline std::size_t partitions_for(std::size_t n, bool trees, std::size_t workers) {
  if (workers <= 1) return 1;
  const bool big = trees ? n >= 7 : n >= 6;
  return big ? workers * 8 : 1;
}

}  // namespace detail

/// Evaluates the selected checks on every connected labeled graph (and every
/// labeled tree, for tree-only checks) of the given orders. Counts and
/// witness lists do not depend on the worker count.
inline ScanSummary exhaustive_scan(const ScanOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  if (options.workers == 0) throw InputError("workers must be >= 1");
  if (options.orders.empty()) throw InputError("scan needs at least one order");

  std::vector<std::size_t> orders = options.orders;
  std::sort(orders.begin(), orders.end());
  orders.erase(std::unique(orders.begin(), orders.end()), orders.end());

  std::vector<const TheoremCheck*> checks;
  for (const auto& id : options.ids.empty() ? parse_theorem_ids("") : options.ids) checks.push_back(&find_theorem(id));
  std::sort(checks.begin(), checks.end(), [](auto* a, auto* b) { return a->id < b->id; });
  checks.erase(std::unique(checks.begin(), checks.end()), checks.end());

  auto on_trees = [&](const TheoremCheck& c) {
    return options.policy == TreeStreamPolicy::trees_only || c.tree_only;
  };
  const bool need_general = std::any_of(checks.begin(), checks.end(), [&](auto* c) { return !on_trees(*c); });
  const bool need_trees = std::any_of(checks.begin(), checks.end(), [&](auto* c) { return on_trees(*c); });

  // Validate every order against its caps before any work starts.
  for (std::size_t n : orders) {
    if (n < 3) throw InputError("scan orders must be >= 3 (triameter needs three vertices)");
    if (need_general && n > kMaxEnumerationOrder) {
      throw CapError("connected-graph scan is capped at n = 7; got " + std::to_string(n), kMaxEnumerationOrder);
    }
    if (need_trees && n > kMaxTreeEnumerationOrder) {
      throw CapError("tree scan is capped at n = 9; got " + std::to_string(n), kMaxTreeEnumerationOrder);
    }
  }

  struct Task {
    std::size_t n;
    bool trees;
    std::size_t part, parts;
  };
  std::vector<Task> tasks;
  for (std::size_t n : orders) {
    for (bool trees : {false, true}) {
      if (trees ? !need_trees : !need_general) continue;
      const std::size_t parts = detail::partitions_for(n, trees, options.workers);
      for (std::size_t p = 0; p < parts; ++p) tasks.push_back({n, trees, p, parts});
    }
  }

  struct Partial {
    std::uint64_t connected = 0, trees = 0;
    std::vector<TheoremTally> tallies;
  };
  std::vector<Partial> partials(tasks.size());

  detail::run_parallel(tasks.size(), options.workers, [&](std::size_t t) {
    const Task& task = tasks[t];
    Partial& out = partials[t];
    out.tallies.resize(checks.size());
    std::vector<std::size_t> active;
    for (std::size_t i = 0; i < checks.size(); ++i) {
      if (on_trees(*checks[i]) == task.trees) active.push_back(i);
    }
    auto visit = [&](Graph g) {
      Invariants inv(std::move(g));
      for (std::size_t i : active) {
        auto report = evaluate(*checks[i], inv);
        auto& tally = out.tallies[i];
        ++tally.graphs;
        switch (report.status) {
          case CheckStatus::holds: ++tally.holds; break;
          case CheckStatus::inapplicable: ++tally.inapplicable; break;
          case CheckStatus::inapplicable_cap: ++tally.inapplicable_cap; break;
          case CheckStatus::violated:
            ++tally.violated;
            tally.witnesses.push_back(std::move(report));
            if (tally.witnesses.size() > 4 * options.max_witnesses + 64) {
              detail::keep_smallest(tally.witnesses, options.max_witnesses);
            }
            break;
        }
      }
    };
    if (task.trees) {
      auto stream = enumerate_labeled_trees(task.n, task.part, task.parts);
      while (auto g = stream.next()) {
        ++out.trees;
        visit(std::move(*g));
      }
    } else {
      auto stream = enumerate_labeled_connected(task.n, task.part, task.parts);
      while (auto g = stream.next()) {
        ++out.connected;
        visit(std::move(*g));
      }
    }
  });

  ScanSummary summary;
  summary.orders = orders;
  summary.results.resize(checks.size());
  for (std::size_t i = 0; i < checks.size(); ++i) {
    summary.ids.push_back(checks[i]->id);
    summary.results[i].id = checks[i]->id;
    summary.results[i].tree_stream = on_trees(*checks[i]);
  }
  for (auto& p : partials) {
    summary.connected_graphs += p.connected;
    summary.trees += p.trees;
    for (std::size_t i = 0; i < checks.size(); ++i) {
      auto& dst = summary.results[i];
      auto& src = p.tallies[i];
      dst.graphs += src.graphs;
      dst.holds += src.holds;
      dst.violated += src.violated;
      dst.inapplicable += src.inapplicable;
      dst.inapplicable_cap += src.inapplicable_cap;
      for (auto& w : src.witnesses) dst.witnesses.push_back(std::move(w));
    }
  }
  for (auto& r : summary.results) detail::keep_smallest(r.witnesses, options.max_witnesses);
  summary.elapsed_ms = static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count());
  return summary;
}

/// One graph with a connected complement, with both triameters.
struct ComplementPair {
  std::string graph6;
  std::size_t tr = 0, tr_complement = 0;
  std::size_t diam = 0, diam_complement = 0;
  std::size_t sum() const noexcept { return tr + tr_complement; }
  std::size_t product() const noexcept { return tr * tr_complement; }
};

struct NgMember {
  ComplementPair pair;
  bool exceeds_multiplicative = false;  // product > 12(n - 1)
};

struct NgScanResult {
  std::size_t n = 0;
  std::vector<NgMember> members;  // sorted by graph6
  // Extremal values over every labeled graph with G and its complement connected.
  std::uint64_t pairs = 0;
  std::size_t min_sum = 0, max_sum = 0;
  std::size_t min_product = 0, max_product = 0;
  std::size_t max_product_outside_family = 0;
  std::uint64_t additive_violations = 0;        // sum outside [10, 2n + 4]
  std::uint64_t multiplicative_exceptions = 0;  // family members with product > 12(n - 1)
  std::uint64_t multiplicative_violations = 0;  // non-members with product outside [25, 12(n - 1)]

  std::size_t additive_upper() const noexcept { return 2 * n + 4; }
  std::size_t multiplicative_upper() const noexcept { return 12 * (n - 1); }
};

/// Complement-pair scan: every connected labeled graph on n vertices whose
/// complement is also connected, reporting the exception-family members
/// (both diameters 3, both triameters in {7, 8, 9}) and the extremal sums
/// and products.
inline NgScanResult ng_scan(std::size_t n, std::size_t workers = 1) {
  if (n < 5 || n > 7) throw InputError("ng_scan supports n in {5, 6, 7}, got " + std::to_string(n));
  if (workers == 0) throw InputError("workers must be >= 1");
  const std::size_t parts = workers > 1 ? workers * 8 : 1;
  std::vector<NgScanResult> partials(parts);

  detail::run_parallel(parts, workers, [&](std::size_t p) {
    NgScanResult& out = partials[p];
    out.n = n;
    out.min_sum = out.min_product = std::numeric_limits<std::size_t>::max();
    auto stream = enumerate_labeled_connected(n, p, parts);
    while (auto g = stream.next()) {
      const Graph c = complement(*g);
      if (!is_connected(c)) continue;
      const DistanceMatrix dg(*g), dc(c);
      ComplementPair pair;
      pair.tr = triameter(*g, dg).value;
      pair.tr_complement = triameter(c, dc).value;
      const auto eg = dg.eccentricities(), ec = dc.eccentricities();
      pair.diam = *std::max_element(eg.begin(), eg.end());
      pair.diam_complement = *std::max_element(ec.begin(), ec.end());

      ++out.pairs;
      out.min_sum = std::min(out.min_sum, pair.sum());
      out.max_sum = std::max(out.max_sum, pair.sum());
      out.min_product = std::min(out.min_product, pair.product());
      out.max_product = std::max(out.max_product, pair.product());
      if (pair.sum() < 10 || pair.sum() > out.additive_upper()) ++out.additive_violations;

      const auto in_band = [](std::size_t t) { return t >= 7 && t <= 9; };
      const bool member =
          pair.diam == 3 && pair.diam_complement == 3 && in_band(pair.tr) && in_band(pair.tr_complement);
      if (member) {
        pair.graph6 = to_graph6(*g);
        const bool exceeds = pair.product() > out.multiplicative_upper();
        out.multiplicative_exceptions += exceeds;
        out.members.push_back({std::move(pair), exceeds});
      } else {
        out.max_product_outside_family = std::max(out.max_product_outside_family, pair.product());
        if (pair.product() < 25 || pair.product() > out.multiplicative_upper()) ++out.multiplicative_violations;
      }
    }
  });

  NgScanResult result;
  result.n = n;
  result.min_sum = result.min_product = std::numeric_limits<std::size_t>::max();
  for (auto& p : partials) {
    result.pairs += p.pairs;
    result.min_sum = std::min(result.min_sum, p.min_sum);
    result.max_sum = std::max(result.max_sum, p.max_sum);
    result.min_product = std::min(result.min_product, p.min_product);
    result.max_product = std::max(result.max_product, p.max_product);
    result.max_product_outside_family = std::max(result.max_product_outside_family, p.max_product_outside_family);
    result.additive_violations += p.additive_violations;
    result.multiplicative_exceptions += p.multiplicative_exceptions;
    result.multiplicative_violations += p.multiplicative_violations;
    for (auto& m : p.members) result.members.push_back(std::move(m));
  }
  if (result.pairs == 0) result.min_sum = result.min_product = 0;
  std::sort(result.members.begin(), result.members.end(), [](const NgMember& a, const NgMember& b) {
    return a.pair.graph6 < b.pair.graph6;
  });
  return result;
}

struct FamilyRow {
  std::string spec;  // e.g. "grid:4,7"
  std::size_t expected = 0;
  std::size_t computed = 0;
  bool matches() const noexcept { return expected == computed; }
};

struct FamilyTable {
  FamilyKind kind = FamilyKind::path;
  std::vector<FamilyRow> rows;
  std::vector<FamilyRow> mismatches() const {
    std::vector<FamilyRow> out;
    for (const auto& r : rows)
      if (!r.matches()) out.push_back(r);
    return out;
  }
};

/// Closed-form triameter of a family member. Grids use P_m x P_n.
inline std::size_t family_triameter_formula(const FamilySpec& spec) {
  const auto& p = spec.params;
  switch (spec.kind) {
    case FamilyKind::path: return 2 * (p[0] - 1);
    case FamilyKind::cycle: return p[0];
    case FamilyKind::complete: return 3;
    case FamilyKind::star: return p[0] >= 3 ? 6 : 4;
    case FamilyKind::grid: return 2 * (p[0] + p[1] - 2);
    case FamilyKind::spider: return 2 * (p[0] + p[1] + p[2]);
    case FamilyKind::bistar: {
      // two leaves on the larger side plus one across: 2 + 3 + 3
      const std::size_t larger = std::max(p[0], p[1]);
      return larger >= 2 ? 8 : 6;
    }
    case FamilyKind::petersen: return 6;
  }
  return 0;
}

/// Computes tr for each family member with parameters in [from, to] (grids:
/// every m, n in [from, to]) and compares with the closed form.
inline FamilyTable verify_family_formula(FamilyKind kind, std::size_t from, std::size_t to) {
  if (from > to) throw InputError("empty parameter range");
  FamilyTable table;
  table.kind = kind;
  auto add = [&](FamilySpec spec) {
    const Graph g = generate_family(spec);
    table.rows.push_back({to_string(spec), family_triameter_formula(spec), triameter(g).value});
  };
  switch (kind) {
    case FamilyKind::path:
    case FamilyKind::cycle:
    case FamilyKind::complete:
      if (from < 3) throw InputError("path, cycle and complete families need n >= 3");
      for (std::size_t n = from; n <= to; ++n) add({kind, {n}});
      break;
    case FamilyKind::star:
      if (from < 2) throw InputError("star family needs at least 2 leaves");
      for (std::size_t n = from; n <= to; ++n) add({kind, {n}});
      break;
    case FamilyKind::grid:
      if (from < 1) throw InputError("grid family needs m, n >= 1");
      for (std::size_t m = from; m <= to; ++m)
        for (std::size_t n = from; n <= to; ++n)
          if (m * n >= 3) add({kind, {m, n}});
      break;
    case FamilyKind::bistar:
      if (from < 1) throw InputError("bistar family needs n1, n2 >= 1");
      for (std::size_t a = from; a <= to; ++a)
        for (std::size_t b = from; b <= to; ++b) add({kind, {a, b}});
      break;
    case FamilyKind::spider:
      if (from < 1) throw InputError("spider family needs legs >= 1");
      for (std::size_t a = from; a <= to; ++a)
        for (std::size_t b = from; b <= to; ++b)
          for (std::size_t c = from; c <= to; ++c) add({kind, {a, b, c}});
      break;
    case FamilyKind::petersen:
      add({kind, {}});
      break;
  }
  return table;
}

}  // namespace trimetric
