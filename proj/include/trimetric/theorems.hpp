#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "trimetric/distance.hpp"
#include "trimetric/domination.hpp"
#include "trimetric/error.hpp"
#include "trimetric/families.hpp"
#include "trimetric/graph.hpp"
#include "trimetric/graph6.hpp"
#include "trimetric/metrics.hpp"
#include "trimetric/triameter.hpp"

namespace trimetric {

namespace detail {

template <typename T>
class Lazy {
 public:
  template <typename Fn>
  const T& get(Fn&& compute) {
    if (!value_) value_.emplace(compute());
    return *value_;
  }

 private:
  std::optional<T> value_;
};

}  // namespace detail

/// Every invariant a theorem check may ask for, computed on first use and
/// cached. One instance belongs to one graph and one thread.
class Invariants {
 public:
  explicit Invariants(Graph g) : g_(std::move(g)) {}

  const Graph& graph() const noexcept { return g_; }
  long long n() const noexcept { return static_cast<long long>(g_.order()); }

  const std::string& graph6() {
    return graph6_.get([&] { return g_.order() <= kGraph6MaxOrder ? to_graph6(g_) : std::string("-"); });
  }

  const DistanceMatrix& distances() {
    return dm_.get([&] { return DistanceMatrix(g_); });
  }

  long long tr() {
    return tr_.get([&] { return static_cast<long long>(triameter(g_, distances()).value); });
  }

  long long diam() {
    ecc_stats();
    return diam_;
  }
  long long rad() {
    ecc_stats();
    return rad_;
  }

  long long wiener() {
    return wiener_.get([&] { return static_cast<long long>(distances().wiener_index()); });
  }

  const std::optional<std::size_t>& girth() {
    return girth_.get([&] { return trimetric::girth(g_); });
  }

  long long min_degree() const { return static_cast<long long>(g_.min_degree()); }
  long long max_degree() const { return static_cast<long long>(g_.max_degree()); }

  long long leaves() {
    return leaves_.get([&] { return static_cast<long long>(leaf_count(g_)); });
  }

  bool tree() {
    return tree_.get([&] { return is_tree(g_); });
  }
  bool bipartite() {
    return bipartite_.get([&] { return is_bipartite(g_); });
  }
  bool complete() {
    return complete_.get([&] { return is_complete(g_); });
  }
  bool cycle() {
    return cycle_.get([&] { return is_cycle(g_); });
  }
  bool star() {
    return star_.get([&] { return is_star(g_); });
  }
  bool bistar() {
    return bistar_.get([&] { return is_bistar(g_); });
  }

  long long chi() {
    return chi_.get([&] { return static_cast<long long>(chromatic_number(g_)); });
  }
  long long kappa() {
    return kappa_.get([&] { return static_cast<long long>(vertex_connectivity(g_)); });
  }
  long long gamma() {
    return gamma_.get([&] { return static_cast<long long>(domination_number(g_, DominationVariant::plain).size); });
  }
  long long gamma_c() {
    return gamma_c_.get(
        [&] { return static_cast<long long>(domination_number(g_, DominationVariant::connected).size); });
  }
  long long gamma_t() {
    return gamma_t_.get([&] { return static_cast<long long>(domination_number(g_, DominationVariant::total).size); });
  }
  bool hamiltonian() {
    return hamiltonian_.get([&] { return is_hamiltonian(g_); });
  }
  Tristate vertex_transitive() {
    return vt_.get([&] { return is_vertex_transitive(g_); });
  }
  const std::optional<SrgParams>& srg() {
    return srg_.get([&] { return srg_parameters(g_); });
  }

  const Graph& comp() {
    return comp_.get([&] { return complement(g_); });
  }
  bool comp_connected() {
    return comp_connected_.get([&] { return is_connected(comp()); });
  }
  bool comp_triangle() {
    return comp_triangle_.get([&] { return has_triangle(comp()); });
  }
  // Only valid when comp_connected().
  long long comp_tr() {
    return comp_tr_.get([&] { return static_cast<long long>(triameter(comp(), comp_distances()).value); });
  }
  long long comp_diam() {
    return comp_diam_.get([&] {
      const auto e = comp_distances().eccentricities();
      return static_cast<long long>(*std::max_element(e.begin(), e.end()));
    });
  }

  /// Exception family for the multiplicative complement bound: order 5..7,
  /// both diameters 3, both triameters in {7, 8, 9}.
  bool nordhaus_gaddum_exception() {
    if (n() < 5 || n() > 7 || !comp_connected()) return false;
    if (diam() != 3 || comp_diam() != 3) return false;
    const auto in_band = [](long long t) { return t >= 7 && t <= 9; };
    return in_band(tr()) && in_band(comp_tr());
  }

 private:
  void ecc_stats() {
    if (ecc_done_) return;
    const auto e = distances().eccentricities();
    rad_ = *std::min_element(e.begin(), e.end());
    diam_ = *std::max_element(e.begin(), e.end());
    ecc_done_ = true;
  }

  const DistanceMatrix& comp_distances() {
    return comp_dm_.get([&] { return DistanceMatrix(comp()); });
  }

  Graph g_;
  detail::Lazy<std::string> graph6_;
  detail::Lazy<DistanceMatrix> dm_;
  detail::Lazy<long long> tr_, wiener_, leaves_, chi_, kappa_, gamma_, gamma_c_, gamma_t_;
  detail::Lazy<std::optional<std::size_t>> girth_;
  detail::Lazy<bool> tree_, bipartite_, complete_, cycle_, star_, bistar_, hamiltonian_;
  detail::Lazy<Tristate> vt_;
  detail::Lazy<std::optional<SrgParams>> srg_;
  detail::Lazy<Graph> comp_;
  detail::Lazy<DistanceMatrix> comp_dm_;
  detail::Lazy<bool> comp_connected_, comp_triangle_;
  detail::Lazy<long long> comp_tr_, comp_diam_;
  bool ecc_done_ = false;
  long long rad_ = 0, diam_ = 0;
};

enum class CheckStatus { holds, violated, inapplicable, inapplicable_cap };

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::holds: return "holds";
    case CheckStatus::violated: return "violated";
    case CheckStatus::inapplicable: return "inapplicable";
    case CheckStatus::inapplicable_cap: return "inapplicable_cap";
  }
  return "inapplicable";
}

// Numeric values entering a check, keyed by name (sorted for stable output).
using CheckValues = std::map<std::string, long long>;

/// One machine-checkable statement. `applies` encodes the hypotheses;
/// `holds` is evaluated only when they are met. Both may record the values
/// they used.
struct TheoremCheck {
  std::string id;
  std::string statement;
  bool tree_only = false;
  std::function<bool(Invariants&, CheckValues&)> applies;
  std::function<bool(Invariants&, CheckValues&)> holds;
};

struct TheoremReport {
  std::string id;
  CheckStatus status = CheckStatus::inapplicable;
  std::string graph6;
  CheckValues values;
};

namespace detail {

// Products above this order are not built by the additivity checks.
inline constexpr std::size_t kProductCheckCap = 200;
inline constexpr std::size_t kGridCheckCap = 20;

inline std::vector<TheoremCheck> build_registry() {
  std::vector<TheoremCheck> r;
  auto always = [](Invariants&, CheckValues&) { return true; };
  auto tree_only = [](Invariants& x, CheckValues&) { return x.tree(); };

  r.push_back({"T01_DIAMETER_BOUND", "2 diam <= tr <= 3 diam", false, always, [](Invariants& x, CheckValues& v) {
                 v["tr"] = x.tr();
                 v["diam"] = x.diam();
                 return 2 * x.diam() <= x.tr() && x.tr() <= 3 * x.diam();
               }});

  r.push_back({"T02_DENSE", "min degree >= n/2 implies tr <= 6", false,
               [](Invariants& x, CheckValues& v) {
                 v["min_degree"] = x.min_degree();
                 v["n"] = x.n();
                 return 2 * x.min_degree() >= x.n();
               },
               [](Invariants& x, CheckValues& v) {
                 v["tr"] = x.tr();
                 return x.tr() <= 6;
               }});

  r.push_back({"T03_RADIUS_BOUND", "2 rad <= tr <= 6 rad", false, always, [](Invariants& x, CheckValues& v) {
                 v["tr"] = x.tr();
                 v["rad"] = x.rad();
                 return 2 * x.rad() <= x.tr() && x.tr() <= 6 * x.rad();
               }});

  r.push_back({"T04_TREE_RADIUS", "trees: 4 rad - 2 <= tr <= 6 rad", true, tree_only,
               [](Invariants& x, CheckValues& v) {
                 v["tr"] = x.tr();
                 v["rad"] = x.rad();
                 return 4 * x.rad() - 2 <= x.tr() && x.tr() <= 6 * x.rad();
               }});

  r.push_back({"T05_ORDER_EQUALITY", "tr <= 2n - 2, with equality iff a tree with 2 or 3 leaves", false, always,
               [](Invariants& x, CheckValues& v) {
                 const long long bound = 2 * x.n() - 2;
                 const bool extremal_tree = x.tree() && (x.leaves() == 2 || x.leaves() == 3);
                 v["tr"] = x.tr();
                 v["n"] = x.n();
                 v["tree"] = x.tree();
                 v["leaves"] = x.leaves();
                 return x.tr() <= bound && ((x.tr() == bound) == extremal_tree);
               }});

  r.push_back({"T06_TREE_LEAF_BOUND", "trees with l >= 4 leaves: tr <= 2n - 2l + 4", true,
               [](Invariants& x, CheckValues& v) {
                 v["leaves"] = x.leaves();
                 return x.tree() && x.leaves() >= 4;
               },
               [](Invariants& x, CheckValues& v) {
                 v["tr"] = x.tr();
                 v["n"] = x.n();
                 return x.tr() <= 2 * x.n() - 2 * x.leaves() + 4;
               }});

  r.push_back({"T07_FOUR_LEAVES", "trees with tr = 2n - 4 have exactly 4 leaves", true,
               [](Invariants& x, CheckValues& v) {
                 if (!x.tree()) return false;
                 v["tr"] = x.tr();
                 v["n"] = x.n();
                 return x.tr() == 2 * x.n() - 4;
               },
               [](Invariants& x, CheckValues& v) {
                 v["leaves"] = x.leaves();
                 return x.leaves() == 4;
               }});

  r.push_back({"T08_CONNECTED_DOMINATION", "tr <= 2 gamma_c + 4", false, always, [](Invariants& x, CheckValues& v) {
                 v["tr"] = x.tr();
                 v["gamma_c"] = x.gamma_c();
                 return x.tr() <= 2 * x.gamma_c() + 4;
               }});

  r.push_back({"T09_DOMINATION", "tr <= 6 gamma", false, always, [](Invariants& x, CheckValues& v) {
                 v["tr"] = x.tr();
                 v["gamma"] = x.gamma();
                 return x.tr() <= 6 * x.gamma();
               }});

  r.push_back({"T10_TOTAL_DOMINATION", "tr <= 4 gamma_t", false,
               [](Invariants& x, CheckValues&) { return x.n() >= 2; },
               [](Invariants& x, CheckValues& v) {
                 v["tr"] = x.tr();
                 v["gamma_t"] = x.gamma_t();
                 return x.tr() <= 4 * x.gamma_t();
               }});

  r.push_back({"T11_CONNECTIVITY", "tr <= 3(n - 2)/kappa + 3", false,
               [](Invariants& x, CheckValues& v) {
                 v["kappa"] = x.kappa();
                 return x.kappa() >= 1;
               },
               [](Invariants& x, CheckValues& v) {
                 v["tr"] = x.tr();
                 v["n"] = x.n();
                 // tr <= 3(n-2)/k + 3  <=>  k tr <= 3(n-2) + 3k
                 return x.kappa() * x.tr() <= 3 * (x.n() - 2) + 3 * x.kappa();
               }});

  r.push_back({"T12_CHROMATIC_CHAIN",
               "tr + chi <= tr + Delta <= 2n + 1 (equality only for trees with 3 leaves); "
               "odd cycles and complete graphs: tr + Delta < tr + chi <= 2n",
               false, always, [](Invariants& x, CheckValues& v) {
                 const long long tr = x.tr(), chi = x.chi(), delta = x.max_degree(), n = x.n();
                 v["tr"] = tr;
                 v["chi"] = chi;
                 v["max_degree"] = delta;
                 v["n"] = n;
                 const bool odd_cycle = x.cycle() && n % 2 == 1;
                 if (odd_cycle || x.complete()) {
                   v["brooks_exception"] = 1;
                   return tr + delta < tr + chi && tr + chi <= 2 * n;
                 }
                 v["brooks_exception"] = 0;
                 if (!(chi <= delta && tr + delta <= 2 * n + 1)) return false;
                 if (tr + delta == 2 * n + 1) {
                   v["tree"] = x.tree();
                   v["leaves"] = x.leaves();
                   return x.tree() && x.leaves() == 3;
                 }
                 return true;
               }});

  r.push_back({"T13_GIRTH_LOWER", "graphs with cycles: girth <= tr", false,
               [](Invariants& x, CheckValues&) { return x.girth().has_value(); },
               [](Invariants& x, CheckValues& v) {
                 v["girth"] = static_cast<long long>(*x.girth());
                 v["tr"] = x.tr();
                 return v["girth"] <= x.tr();
               }});

  r.push_back({"T14_GIRTH_EQUALITY", "girth = tr iff complete or a cycle", false,
               [](Invariants& x, CheckValues&) { return x.girth().has_value(); },
               [](Invariants& x, CheckValues& v) {
                 const auto g = static_cast<long long>(*x.girth());
                 v["girth"] = g;
                 v["tr"] = x.tr();
                 v["complete"] = x.complete();
                 v["cycle"] = x.cycle();
                 return (g == x.tr()) == (x.complete() || x.cycle());
               }});

  r.push_back({"T15_TREE_LOWER", "trees with l >= 3 leaves: tr >= ceil(4(n - 1)/(l - 1))", true,
               [](Invariants& x, CheckValues& v) {
                 v["leaves"] = x.leaves();
                 return x.tree() && x.leaves() >= 3;
               },
               [](Invariants& x, CheckValues& v) {
                 v["tr"] = x.tr();
                 v["n"] = x.n();
                 // tr integral, so tr >= ceil(q) <=> tr >= q <=> tr (l-1) >= 4(n-1)
                 return x.tr() * (x.leaves() - 1) >= 4 * (x.n() - 1);
               }});

  r.push_back({"T16_WIENER", "tr >= 6 sigma / (n(n - 1))", false, always, [](Invariants& x, CheckValues& v) {
                 v["tr"] = x.tr();
                 v["wiener"] = x.wiener();
                 v["n"] = x.n();
                 return x.n() * (x.n() - 1) * x.tr() >= 6 * x.wiener();
               }});

  r.push_back({"T17_CARTESIAN", "tr(G x H) = tr(G) + tr(H), with H = P_3 and H = K_3", false,
               [](Invariants& x, CheckValues&) {
                 if (x.graph().order() * 3 > kProductCheckCap) {
                   throw CapError("cartesian check capped at order " + std::to_string(kProductCheckCap / 3),
                                  kProductCheckCap / 3);
                 }
                 return true;
               },
               [](Invariants& x, CheckValues& v) {
                 const long long tp = static_cast<long long>(triameter(cartesian_product(x.graph(), path_graph(3))).value);
                 const long long tk =
                     static_cast<long long>(triameter(cartesian_product(x.graph(), complete_graph(3))).value);
                 v["tr"] = x.tr();
                 v["tr_times_p3"] = tp;
                 v["tr_times_k3"] = tk;
                 return tp == x.tr() + 4 && tk == x.tr() + 3;
               }});

  r.push_back({"T18_GRID", "paths P_m: tr(P_m x P_k) = 2(m + k - 2) for 2 <= k <= m", false,
               [](Invariants& x, CheckValues&) {
                 if (!(x.tree() && x.leaves() == 2)) return false;
                 if (x.graph().order() > kGridCheckCap) {
                   throw CapError("grid check capped at m = " + std::to_string(kGridCheckCap), kGridCheckCap);
                 }
                 return true;
               },
               [](Invariants& x, CheckValues& v) {
                 const long long m = x.n();
                 long long mismatches = 0;
                 for (long long k = 2; k <= m; ++k) {
                   const auto grid = cartesian_product(x.graph(), path_graph(static_cast<std::size_t>(k)));
                   if (static_cast<long long>(triameter(grid).value) != 2 * (m + k - 2)) ++mismatches;
                 }
                 v["m"] = m;
                 v["mismatches"] = mismatches;
                 return mismatches == 0;
               }});

  r.push_back({"T19_BIPARTITE_PARITY", "bipartite implies tr even", false,
               [](Invariants& x, CheckValues&) { return x.bipartite(); },
               [](Invariants& x, CheckValues& v) {
                 v["tr"] = x.tr();
                 return x.tr() % 2 == 0;
               }});

  r.push_back({"T20_TREE_COMPLEMENT", "non-star trees, n >= 4: tr(complement) = 6 for bistars, else 5", true,
               [](Invariants& x, CheckValues&) { return x.tree() && x.n() >= 4 && !x.star(); },
               [](Invariants& x, CheckValues& v) {
                 v["bistar"] = x.bistar();
                 v["tr_complement"] = x.comp_tr();
                 return x.comp_tr() == (x.bistar() ? 6 : 5);
               }});

  r.push_back({"T21_HAMILTONIAN", "Hamiltonian implies tr <= n", false,
               [](Invariants& x, CheckValues&) { return x.hamiltonian(); },
               [](Invariants& x, CheckValues& v) {
                 v["tr"] = x.tr();
                 v["n"] = x.n();
                 return x.tr() <= x.n();
               }});

  r.push_back({"T22_VERTEX_TRANSITIVE", "vertex-transitive: 2 rad <= tr <= 3 rad", false,
               [](Invariants& x, CheckValues&) {
                 const Tristate t = x.vertex_transitive();
                 if (t == Tristate::unknown) {
                   throw CapError("vertex transitivity is capped at n = " + std::to_string(kTransitivityCap),
                                  kTransitivityCap);
                 }
                 return t == Tristate::yes;
               },
               [](Invariants& x, CheckValues& v) {
                 v["tr"] = x.tr();
                 v["rad"] = x.rad();
                 return 2 * x.rad() <= x.tr() && x.tr() <= 3 * x.rad();
               }});

  r.push_back({"T23_STRONGLY_REGULAR", "strongly regular: tr = 5 if the complement is triangle-free, else 6", false,
               [](Invariants& x, CheckValues& v) {
                 const auto& p = x.srg();
                 if (!p) return false;
                 v["k"] = static_cast<long long>(p->k);
                 v["lambda"] = static_cast<long long>(p->lambda);
                 v["mu"] = static_cast<long long>(p->mu);
                 return true;
               },
               [](Invariants& x, CheckValues& v) {
                 v["tr"] = x.tr();
                 v["complement_triangle"] = x.comp_triangle();
                 return x.tr() == (x.comp_triangle() ? 6 : 5);
               }});

  r.push_back({"T24_NG_LEMMA_SEVEN", "complement connected and tr >= 7 implies tr(complement) <= 12", false,
               [](Invariants& x, CheckValues& v) {
                 if (!x.comp_connected()) return false;
                 v["tr"] = x.tr();
                 return x.tr() >= 7;
               },
               [](Invariants& x, CheckValues& v) {
                 v["tr_complement"] = x.comp_tr();
                 return x.comp_tr() <= 12;
               }});

  r.push_back({"T25_NG_LEMMA_NINE", "complement connected and tr > 9 implies tr(complement) <= 6", false,
               [](Invariants& x, CheckValues& v) {
                 if (!x.comp_connected()) return false;
                 v["tr"] = x.tr();
                 return x.tr() > 9;
               },
               [](Invariants& x, CheckValues& v) {
                 v["tr_complement"] = x.comp_tr();
                 return x.comp_tr() <= 6;
               }});

  r.push_back({"T26_NG_ADDITIVE", "n >= 4, complement connected: 10 <= tr + tr(complement) <= 2n + 4", false,
               [](Invariants& x, CheckValues&) { return x.n() >= 4 && x.comp_connected(); },
               [](Invariants& x, CheckValues& v) {
                 const long long sum = x.tr() + x.comp_tr();
                 v["tr"] = x.tr();
                 v["tr_complement"] = x.comp_tr();
                 v["sum"] = sum;
                 v["n"] = x.n();
                 return 10 <= sum && sum <= 2 * x.n() + 4;
               }});

  r.push_back({"T27_NG_MULTIPLICATIVE",
               "n >= 4, complement connected, outside the exception family: 25 <= tr * tr(complement) <= 12(n - 1)",
               false,
               [](Invariants& x, CheckValues& v) {
                 if (x.n() < 4 || !x.comp_connected()) return false;
                 if (x.nordhaus_gaddum_exception()) {
                   v["exception_member"] = 1;
                   v["tr"] = x.tr();
                   v["tr_complement"] = x.comp_tr();
                   v["product"] = x.tr() * x.comp_tr();
                   return false;
                 }
                 return true;
               },
               [](Invariants& x, CheckValues& v) {
                 const long long product = x.tr() * x.comp_tr();
                 v["tr"] = x.tr();
                 v["tr_complement"] = x.comp_tr();
                 v["product"] = product;
                 v["n"] = x.n();
                 return 25 <= product && product <= 12 * (x.n() - 1);
               }});
  return r;
}

}  // namespace detail

/// The full registry T01..T27 in id order.
inline const std::vector<TheoremCheck>& theorem_registry() {
  static const std::vector<TheoremCheck> registry = detail::build_registry();
  return registry;
}

/// Looks up a check by full id ("T05_ORDER_EQUALITY") or by its number
/// prefix ("T05").
inline const TheoremCheck& find_theorem(std::string_view id) {
  for (const auto& c : theorem_registry()) {
    if (c.id == id) return c;
    if (id.size() == 3 && std::string_view(c.id).substr(0, 3) == id) return c;
  }
  throw RegistryError("unknown theorem id \"" + std::string(id) + "\"");
}

/// Parses a comma-separated id list; empty text selects the whole registry.
inline std::vector<std::string> parse_theorem_ids(std::string_view text) {
  std::vector<std::string> out;
  if (text.empty()) {
    for (const auto& c : theorem_registry()) out.push_back(c.id);
    return out;
  }
  while (true) {
    const auto comma = text.find(',');
    std::string_view item = text.substr(0, comma);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    out.push_back(find_theorem(item).id);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline TheoremReport evaluate(const TheoremCheck& check, Invariants& inv) {
  TheoremReport report;
  report.id = check.id;
  try {
    if (!check.applies(inv, report.values)) {
      report.status = CheckStatus::inapplicable;
    } else {
      report.status = check.holds(inv, report.values) ? CheckStatus::holds : CheckStatus::violated;
    }
  } catch (const CapError&) {
    report.status = CheckStatus::inapplicable_cap;
  }
  if (report.status == CheckStatus::violated) report.graph6 = inv.graph6();
  return report;
}

namespace detail {

inline void require_checkable(const Graph& g) {
  if (g.order() < 3) throw UndefinedParameterError("theorem checks need n >= 3");
  if (!is_connected(g)) throw UndefinedParameterError("theorem checks need a connected graph");
}

}  // namespace detail

inline TheoremReport check(const Graph& g, std::string_view id) {
  const auto& c = find_theorem(id);
  detail::require_checkable(g);
  Invariants inv(g);
  auto report = evaluate(c, inv);
  report.graph6 = inv.graph6();
  return report;
}

inline std::vector<TheoremReport> check_all(const Graph& g, const std::vector<std::string>& ids = {}) {
  detail::require_checkable(g);
  Invariants inv(g);
  std::vector<TheoremReport> out;
  if (ids.empty()) {
    for (const auto& c : theorem_registry()) out.push_back(evaluate(c, inv));
  } else {
    for (const auto& id : ids) out.push_back(evaluate(find_theorem(id), inv));
  }
  for (auto& r : out) r.graph6 = inv.graph6();
  return out;
}

}  // namespace trimetric
