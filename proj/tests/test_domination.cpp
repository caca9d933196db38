#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "trimetric/domination.hpp"
#include "trimetric/enumerate.hpp"
#include "trimetric/families.hpp"
#include "trimetric/graph6.hpp"

namespace trimetric {
namespace {

std::uint64_t mask_of(const std::vector<Vertex>& members) {
  std::uint64_t m = 0;
  for (Vertex v : members) m |= 1ULL << v;
  return m;
}

oracle::Dom to_oracle(DominationVariant v) {
  switch (v) {
    case DominationVariant::plain: return oracle::Dom::plain;
    case DominationVariant::connected: return oracle::Dom::connected;
    case DominationVariant::total: return oracle::Dom::total;
  }
  return oracle::Dom::plain;
}

TEST(Domination, Examples) {
  for (std::size_t k = 1; k <= 8; ++k) {
    const auto d = domination_number(star_graph(k), DominationVariant::plain);
    EXPECT_EQ(d.size, 1u);
    EXPECT_EQ(d.members, (std::vector<Vertex>{0}));
  }
  EXPECT_EQ(domination_number(cycle_graph(6), DominationVariant::plain).size, 2u);
  EXPECT_EQ(domination_number(path_graph(4), DominationVariant::total).size, 2u);
  EXPECT_EQ(domination_number(path_graph(4), DominationVariant::connected).size, 2u);
  EXPECT_EQ(domination_number(petersen_graph(), DominationVariant::plain).size, 3u);
  EXPECT_EQ(domination_number(petersen_graph(), DominationVariant::total).size, 4u);
  const auto all = domination_numbers(cycle_graph(7));
  EXPECT_EQ(all.gamma.size, 3u);
  EXPECT_EQ(all.gamma_c.size, 5u);
  EXPECT_EQ(all.gamma_t.size, 4u);
}

TEST(Domination, Errors) {
  EXPECT_EQ(domination_number(complete_graph(1), DominationVariant::plain).size, 1u);
  EXPECT_EQ(domination_number(complete_graph(1), DominationVariant::connected).size, 1u);
  EXPECT_THROW(domination_number(complete_graph(1), DominationVariant::total), UndefinedParameterError);
  EXPECT_THROW(domination_number(parse_graph6("B?"), DominationVariant::plain), UndefinedParameterError);
  EXPECT_THROW(domination_number(path_graph(21), DominationVariant::plain), CapError);
}

TEST(Domination, MatchesPowerSetOracle) {
  for (std::size_t n = 2; n <= 6; ++n) {
    auto stream = enumerate_labeled_connected(n);
    while (auto g = stream.next()) {
      for (auto variant : {DominationVariant::plain, DominationVariant::connected, DominationVariant::total}) {
        const auto d = domination_number(*g, variant);
        ASSERT_EQ(d.size, oracle::brute_domination(*g, to_oracle(variant))) << to_graph6(*g);
        ASSERT_EQ(d.members.size(), d.size);
        ASSERT_TRUE(oracle::dominates(*g, d.members, to_oracle(variant)));
        ASSERT_TRUE(is_dominating(*g, mask_of(d.members), variant));
      }
    }
  }
}

TEST(Domination, RandomGraphsUpToTwelve) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = oracle::random_connected(7 + trial % 6, 0.2, rng);
    const auto all = domination_numbers(g);
    const std::size_t gamma = all.gamma.size, gamma_c = all.gamma_c.size, gamma_t = all.gamma_t.size;
    ASSERT_EQ(gamma, oracle::brute_domination(g, oracle::Dom::plain));
    ASSERT_EQ(gamma_c, oracle::brute_domination(g, oracle::Dom::connected));
    ASSERT_EQ(gamma_t, oracle::brute_domination(g, oracle::Dom::total));
    // Standard chain between the three parameters.
    ASSERT_LE(gamma, gamma_t);
    ASSERT_LE(gamma_t, std::max<std::size_t>(gamma_c, 2));
    ASSERT_LE(gamma_c, 3 * gamma - 2);
    ASSERT_LE(gamma_c, 2 * gamma_t - 2);
  }
}

TEST(SpanningTree, MaxLeavesMatchesEdgeSubsetOracle) {
  EXPECT_EQ(spanning_tree_max_leaves(complete_graph(1)), 0u);
  EXPECT_EQ(spanning_tree_max_leaves(complete_graph(2)), 2u);
  EXPECT_EQ(spanning_tree_max_leaves(complete_graph(5)), 4u);
  EXPECT_EQ(spanning_tree_max_leaves(cycle_graph(6)), 2u);
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 80; ++trial) {
    const Graph g = oracle::random_connected(3 + trial % 5, 0.4, rng);
    ASSERT_EQ(spanning_tree_max_leaves(g), oracle::brute_max_leaf_spanning_tree(g)) << to_graph6(g);
  }
  EXPECT_THROW(spanning_tree_max_leaves(path_graph(17)), CapError);
}

}  // namespace
}  // namespace trimetric
