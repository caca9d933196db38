#include <random>
#include <set>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "trimetric/enumerate.hpp"
#include "trimetric/families.hpp"
#include "trimetric/graph6.hpp"
#include "trimetric/metrics.hpp"
#include "trimetric/report.hpp"
#include "trimetric/scan.hpp"
#include "trimetric/theorems.hpp"
#include "trimetric/triameter.hpp"

namespace trimetric {
namespace {

const TheoremReport& by_id(const std::vector<TheoremReport>& reports, std::string_view prefix) {
  for (const auto& r : reports)
    if (r.id.starts_with(prefix)) return r;
  throw std::runtime_error("missing report");
}

TEST(Registry, IdsAndLookup) {
  const auto& reg = theorem_registry();
  ASSERT_EQ(reg.size(), 27u);
  for (std::size_t i = 0; i < reg.size(); ++i) {
    const std::string prefix = (i + 1 < 10 ? "T0" : "T") + std::to_string(i + 1) + "_";
    EXPECT_TRUE(reg[i].id.starts_with(prefix)) << reg[i].id;
  }
  EXPECT_EQ(find_theorem("T05").id, "T05_ORDER_EQUALITY");
  EXPECT_EQ(find_theorem("T23_STRONGLY_REGULAR").id, "T23_STRONGLY_REGULAR");
  EXPECT_THROW(find_theorem("T99"), RegistryError);
  EXPECT_THROW(check(path_graph(4), "NOPE"), RegistryError);
  EXPECT_EQ(parse_theorem_ids("T19, T01,T19"), (std::vector<std::string>{"T01_DIAMETER_BOUND", "T19_BIPARTITE_PARITY"}));
  EXPECT_EQ(parse_theorem_ids("").size(), 27u);
}

TEST(Check, Examples) {
  const auto p6 = check(path_graph(6), "T05");
  EXPECT_EQ(p6.status, CheckStatus::holds);
  EXPECT_EQ(p6.values.at("tr"), 10);
  EXPECT_EQ(p6.values.at("leaves"), 2);

  const auto pet = check(petersen_graph(), "T22");
  EXPECT_EQ(pet.status, CheckStatus::holds);
  EXPECT_EQ(pet.values.at("rad"), 2);
  EXPECT_EQ(pet.values.at("tr"), 6);

  const auto c5 = check(cycle_graph(5), "T23");
  EXPECT_EQ(c5.status, CheckStatus::holds);
  EXPECT_EQ(c5.values.at("tr"), 5);
  EXPECT_EQ(c5.values.at("complement_triangle"), 0);

  EXPECT_THROW(check(path_graph(2), "T01"), UndefinedParameterError);
  EXPECT_THROW(check(parse_graph6("B?"), "T01"), UndefinedParameterError);
}

TEST(Check, StrongRegularityCounterexample) {
  // C_4 = K_{2,2} is SRG(4,2,0,2) with triangle-free complement 2K_2, but tr = 4.
  const auto c4 = check(cycle_graph(4), "T23");
  EXPECT_EQ(c4.status, CheckStatus::violated);
  EXPECT_EQ(c4.values.at("tr"), 4);
  EXPECT_EQ(c4.graph6, "Cl");
  // The octahedron K_{2,2,2} behaves the same way.
  EXPECT_EQ(check(complement(from_edge_list(6, {{0, 1}, {2, 3}, {4, 5}})), "T23").status, CheckStatus::violated);
  // Petersen complement has triangles and tr = 6.
  EXPECT_EQ(check(petersen_graph(), "T23").status, CheckStatus::holds);
}

TEST(CheckAll, TightnessExamples) {
  const auto k13 = check_all(star_graph(3));
  const auto& t03 = by_id(k13, "T03");
  EXPECT_EQ(t03.status, CheckStatus::holds);
  EXPECT_EQ(t03.values.at("tr"), 6 * t03.values.at("rad"));

  for (std::size_t n = 2; n <= 8; ++n) {
    const auto reports = check_all(cycle_graph(2 * n));
    const auto& r = by_id(reports, "T03");
    EXPECT_EQ(r.values.at("tr"), 2 * r.values.at("rad"));
  }

  const auto p4 = check_all(path_graph(4));
  const auto& t26 = by_id(p4, "T26");
  EXPECT_EQ(t26.status, CheckStatus::holds);
  EXPECT_EQ(t26.values.at("sum"), 12);
  EXPECT_EQ(by_id(p4, "T27").values.at("product"), 36);

  const auto c4 = check_all(cycle_graph(4));
  const auto& t16 = by_id(c4, "T16");
  EXPECT_EQ(t16.values.at("wiener"), 8);
  EXPECT_EQ(t16.values.at("n") * (t16.values.at("n") - 1) * t16.values.at("tr"), 6 * t16.values.at("wiener"));
}

TEST(CheckAll, ApplicabilityIsNeverVacuous) {
  const auto reports = check_all(cycle_graph(6));
  EXPECT_EQ(by_id(reports, "T04").status, CheckStatus::inapplicable);
  EXPECT_EQ(by_id(reports, "T20").status, CheckStatus::inapplicable);
  EXPECT_EQ(by_id(reports, "T18").status, CheckStatus::inapplicable);
  EXPECT_EQ(check(star_graph(4), "T20").status, CheckStatus::inapplicable);
  EXPECT_EQ(check(path_graph(5), "T13").status, CheckStatus::inapplicable);
}

TEST(CheckAll, CapsYieldInapplicableCap) {
  const auto reports = check_all(cycle_graph(25));
  EXPECT_EQ(by_id(reports, "T08").status, CheckStatus::inapplicable_cap);
  EXPECT_EQ(by_id(reports, "T22").status, CheckStatus::inapplicable_cap);
  EXPECT_EQ(by_id(reports, "T01").status, CheckStatus::holds);
  EXPECT_EQ(check(path_graph(21), "T18").status, CheckStatus::inapplicable_cap);
  EXPECT_EQ(check(path_graph(20), "T18").status, CheckStatus::holds);
}

TEST(Theorems, OrderEqualityBothDirections) {
  for (std::size_t n = 3; n <= 6; ++n) {
    auto s = enumerate_labeled_connected(n);
    while (auto g = s.next()) {
      const bool extremal = triameter(*g).value == 2 * n - 2;
      const bool tree23 = is_tree(*g) && (leaf_count(*g) == 2 || leaf_count(*g) == 3);
      ASSERT_EQ(extremal, tree23) << to_graph6(*g);
    }
  }
}

TEST(Theorems, GirthEqualityBothDirections) {
  for (std::size_t n = 3; n <= 6; ++n) {
    auto s = enumerate_labeled_connected(n);
    while (auto g = s.next()) {
      const auto gi = girth(*g);
      if (!gi) continue;
      ASSERT_EQ(*gi == triameter(*g).value, is_cycle(*g) || is_complete(*g)) << to_graph6(*g);
    }
  }
}

TEST(Theorems, CartesianAdditivityOnSmallFactors) {
  std::vector<Graph> factors;
  for (std::size_t n = 3; n <= 5; ++n) {
    factors.push_back(path_graph(n));
    factors.push_back(cycle_graph(n));
    factors.push_back(star_graph(n - 1));
  }
  std::mt19937_64 rng(41);
  for (int i = 0; i < 6; ++i) factors.push_back(oracle::random_connected(3 + i % 3, 0.4, rng));
  for (const auto& g : factors)
    for (const auto& h : factors)
      ASSERT_EQ(triameter(cartesian_product(g, h)).value, triameter(g).value + triameter(h).value)
          << to_graph6(g) << " x " << to_graph6(h);
}

TEST(Theorems, TreeComplementsAreFiveOrSix) {
  for (std::size_t n = 4; n <= 7; ++n) {
    auto s = enumerate_labeled_trees(n);
    while (auto t = s.next()) {
      if (is_star(*t)) continue;
      ASSERT_EQ(triameter(complement(*t)).value, is_bistar(*t) ? 6u : 5u) << to_graph6(*t);
    }
  }
}

TEST(Scan, OrderFourOnlyPathsHaveConnectedComplements) {
  ScanOptions opts;
  opts.orders = {4};
  opts.ids = {"T26_NG_ADDITIVE"};
  const auto summary = exhaustive_scan(opts);
  EXPECT_EQ(summary.connected_graphs, 38u);
  const auto& t = summary.tally("T26_NG_ADDITIVE");
  EXPECT_EQ(t.holds, 12u);  // the 4!/2 labeled copies of P_4
  EXPECT_EQ(t.violated, 0u);
  auto s = enumerate_labeled_connected(4);
  while (auto g = s.next()) {
    if (!is_connected(complement(*g))) continue;
    EXPECT_EQ(oracle::canonical_graph6(*g), oracle::canonical_graph6(path_graph(4)));
    EXPECT_EQ(triameter(*g).value + triameter(complement(*g)).value, 12u);
  }
}

TEST(Scan, OrderFiveIsomorphismClasses) {
  // Eight classes have G and its complement connected; C_5 and the bull are
  // self-complementary, so they form five complementary pairs.
  std::set<std::string> classes, pairs;
  auto s = enumerate_labeled_connected(5);
  while (auto g = s.next()) {
    const Graph c = complement(*g);
    if (!is_connected(c)) continue;
    const auto a = oracle::canonical_graph6(*g), b = oracle::canonical_graph6(c);
    classes.insert(a);
    pairs.insert(std::min(a, b) + "|" + std::max(a, b));
    const std::size_t sum = triameter(*g).value + triameter(c).value;
    ASSERT_GE(sum, 10u);
    ASSERT_LE(sum, 14u);
  }
  EXPECT_EQ(classes.size(), 8u);
  EXPECT_EQ(pairs.size(), 5u);
}

TEST(Scan, DeterministicAcrossWorkerCounts) {
  ScanOptions opts;
  opts.orders = {4, 5, 6};
  opts.ids = parse_theorem_ids("T01,T05,T14,T20,T23");
  opts.workers = 1;
  const auto one = render(exhaustive_scan(opts), ReportFormat::json, false);
  opts.workers = 4;
  const auto four = render(exhaustive_scan(opts), ReportFormat::json, false);
  EXPECT_EQ(one, four);
}

TEST(Scan, CountsAndCapErrors) {
  ScanOptions opts;
  opts.orders = {3, 4, 5};
  opts.ids = {"T01_DIAMETER_BOUND", "T04_TREE_RADIUS"};
  const auto s = exhaustive_scan(opts);
  EXPECT_EQ(s.connected_graphs, 4u + 38u + 728u);
  EXPECT_EQ(s.trees, 3u + 16u + 125u);
  EXPECT_EQ(s.tally("T04_TREE_RADIUS").graphs, s.trees);
  EXPECT_EQ(s.tally("T01_DIAMETER_BOUND").graphs, s.connected_graphs);

  opts.orders = {8};
  EXPECT_THROW(exhaustive_scan(opts), CapError);
  opts.policy = TreeStreamPolicy::trees_only;
  opts.orders = {10};
  EXPECT_THROW(exhaustive_scan(opts), CapError);
  opts.orders = {2};
  EXPECT_THROW(exhaustive_scan(opts), InputError);
}

TEST(Scan, WitnessesAreSortedAndTruncated) {
  ScanOptions opts;
  opts.orders = {4, 5, 6};
  opts.ids = {"T23_STRONGLY_REGULAR"};
  opts.max_witnesses = 5;
  const auto s = exhaustive_scan(opts);
  const auto& t = s.tally("T23_STRONGLY_REGULAR");
  EXPECT_EQ(t.violated, 18u);  // 3 labeled C_4 and 15 labeled octahedra
  ASSERT_EQ(t.witnesses.size(), 5u);
  EXPECT_EQ(t.witnesses.front().graph6, "C]");
  for (std::size_t i = 1; i < t.witnesses.size(); ++i) {
    const auto& a = t.witnesses[i - 1].graph6;
    const auto& b = t.witnesses[i].graph6;
    EXPECT_TRUE(a.size() < b.size() || (a.size() == b.size() && a < b));
  }
}

TEST(NgScan, OrderSix) {
  const auto r = ng_scan(6);
  EXPECT_LE(r.max_sum, r.additive_upper());
  EXPECT_EQ(r.additive_violations, 0u);
  EXPECT_EQ(r.multiplicative_violations, 0u);
  EXPECT_GE(r.multiplicative_exceptions, 1u);
  bool found = false;
  for (const auto& m : r.members) {
    EXPECT_EQ(m.pair.diam, 3u);
    EXPECT_EQ(m.pair.diam_complement, 3u);
    if (m.pair.tr == 8 && m.pair.tr_complement == 8) {
      EXPECT_TRUE(m.exceeds_multiplicative);
      found = true;
    }
  }
  EXPECT_TRUE(found);
  EXPECT_EQ(render(ng_scan(6, 3), ReportFormat::csv), render(r, ReportFormat::csv));
  EXPECT_THROW(ng_scan(4), InputError);
  EXPECT_THROW(ng_scan(8), InputError);
}

TEST(Families, FormulasMatch) {
  for (auto kind : {FamilyKind::path, FamilyKind::cycle, FamilyKind::complete}) {
    EXPECT_TRUE(verify_family_formula(kind, 3, 40).mismatches().empty()) << family_name(kind);
  }
  EXPECT_TRUE(verify_family_formula(FamilyKind::grid, 1, 8).mismatches().empty());
  EXPECT_TRUE(verify_family_formula(FamilyKind::star, 2, 20).mismatches().empty());
  EXPECT_TRUE(verify_family_formula(FamilyKind::bistar, 1, 6).mismatches().empty());
  EXPECT_TRUE(verify_family_formula(FamilyKind::spider, 1, 5).mismatches().empty());
  EXPECT_TRUE(verify_family_formula(FamilyKind::petersen, 0, 0).mismatches().empty());
  EXPECT_THROW(verify_family_formula(FamilyKind::path, 2, 5), InputError);
}

}  // namespace
}  // namespace trimetric
