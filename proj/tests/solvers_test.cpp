#include <gtest/gtest.h>

#include "turan/cliques.hpp"
#include "turan/generators.hpp"
#include "turan/oracles.hpp"
#include "turan/solvers.hpp"

namespace turan {
namespace {

void expect_consistent_kr_free(const Graph& g, int r, const SolveResult& res) {
  EXPECT_EQ(res.witness_edges.size(), res.value);
  EXPECT_TRUE(oracle::is_kr_free_subgraph(g, res.witness_edges, r));
}

void expect_consistent_partite(const Graph& g, const SolveResult& res) {
  ASSERT_TRUE(res.witness_cut.has_value());
  EXPECT_EQ(cut_edges(g, *res.witness_cut), res.value);
}

TEST(Oracles, LiteralSubsetEnumerationOnCompleteGraphs) {
  EXPECT_EQ(oracle::subset_max_kr_free(Graph::complete(5), 3), 6u);
  EXPECT_EQ(oracle::subset_max_kr_free(Graph::complete(5), 4), 8u);
  EXPECT_EQ(oracle::brute_max_partite(Graph::complete(5), 2).value, 6u);
  EXPECT_EQ(oracle::brute_max_partite(Graph::complete(5), 3).value, 8u);
}

TEST(Oracles, ExhaustiveSearchAgreesWithSubsetEnumeration) {
  for (std::uint64_t k = 0; k < 40; ++k) {
    Graph g = sample_gnp(7, 0.45, derive_seed(5, k));
    if (g.size() > 16) continue;
    for (int r : {3, 4}) EXPECT_EQ(oracle::brute_max_kr_free(g, r), oracle::subset_max_kr_free(g, r));
  }
}

TEST(MaxKrFree, NamedInstances) {
  auto c5 = max_kr_free(cycle_graph(5), 3);
  EXPECT_EQ(c5.value, 5u);
  expect_consistent_kr_free(cycle_graph(5), 3, c5);

  auto k5 = max_kr_free(Graph::complete(5), 3);
  EXPECT_EQ(k5.value, 6u);
  EXPECT_TRUE(k5.optimal);
  expect_consistent_kr_free(Graph::complete(5), 3, k5);

  EXPECT_EQ(max_kr_free(Graph::complete(5), 4).value, 8u);
  EXPECT_EQ(max_kr_free(Graph(4), 3).value, 0u);
  EXPECT_THROW(max_kr_free(Graph::complete(3), 2), PreconditionError);
}

TEST(MaxPartite, NamedInstances) {
  auto c5 = max_partite(cycle_graph(5), 2);
  EXPECT_EQ(c5.value, 4u);
  expect_consistent_partite(cycle_graph(5), c5);
  EXPECT_EQ(max_partite(Graph::complete(5), 2).value, 6u);
  Graph g = sample_gnp(6, 0.5, 3);
  EXPECT_EQ(max_partite(g, 6).value, g.size());
  EXPECT_EQ(max_partite(g, 9).value, g.size());
  EXPECT_EQ(max_partite(g, 1).value, 0u);
  EXPECT_THROW(max_partite(g, 0), PreconditionError);
}

TEST(TuranGap, NamedInstances) {
  auto k6 = turan_gap(Graph::complete(6), 3);
  EXPECT_EQ(k6.gap(), std::optional<std::size_t>(0));
  auto c5 = turan_gap(cycle_graph(5), 3);
  EXPECT_EQ(c5.t(), 5u);
  EXPECT_EQ(c5.b(), 4u);
  EXPECT_EQ(c5.gap(), std::optional<std::size_t>(1));
  auto empty = turan_gap(Graph(5), 3);
  EXPECT_EQ(empty.t(), 0u);
  EXPECT_EQ(empty.b(), 0u);
  EXPECT_EQ(empty.gap(), std::optional<std::size_t>(0));
}

TEST(Solvers, AgreeWithBruteForce) {
  for (std::uint64_t k = 0; k < 60; ++k) {
    Rng rng(derive_seed(77, k));
    int n = 4 + static_cast<int>(rng.below(6));
    double p = std::array{0.3, 0.5, 0.7}[k % 3];
    int r = 3 + static_cast<int>(k / 3 % 2);
    Graph g = sample_gnp(n, p, rng());
    auto t = max_kr_free(g, r);
    auto b = max_partite(g, r - 1);
    EXPECT_EQ(t.value, oracle::brute_max_kr_free(g, r));
    EXPECT_EQ(b.value, oracle::brute_max_partite(g, r - 1).value);
    expect_consistent_kr_free(g, r, t);
    expect_consistent_partite(g, b);
    EXPECT_GE(t.value, b.value);
    EXPECT_GE((r - 1) * b.value, (r - 2) * g.size());
  }
}

TEST(Solvers, SingleEdgeDeletionMovesValuesByAtMostOne) {
  for (std::uint64_t k = 0; k < 30; ++k) {
    Graph g = sample_gnp(9, 0.6, derive_seed(8, k));
    if (g.size() == 0) continue;
    Rng rng(k);
    Edge e = g.edges()[rng.below(g.size())];
    Graph h = g.without_edge(e);
    for (int r : {3, 4}) {
      auto tg = max_kr_free(g, r).value, th = max_kr_free(h, r).value;
      auto bg = max_partite(g, r - 1).value, bh = max_partite(h, r - 1).value;
      EXPECT_TRUE(tg == th || tg == th + 1);
      EXPECT_TRUE(bg == bh || bg == bh + 1);
    }
  }
}

TEST(Solvers, BudgetExhaustionIsReported) {
  Graph g = sample_gnp(14, 0.7, 4);
  auto t = max_kr_free(g, 3, SolveOptions{.node_limit = 3});
  EXPECT_FALSE(t.optimal);
  EXPECT_TRUE(t.time_budget_hit);
  expect_consistent_kr_free(g, 3, t);
  auto b = max_partite(g, 2, SolveOptions{.node_limit = 3});
  EXPECT_FALSE(b.optimal);
  expect_consistent_partite(g, b);
  auto gap = turan_gap(g, 3, SolveOptions{.node_limit = 3});
  EXPECT_FALSE(gap.gap().has_value());
}

TEST(AllOptimaPartite, NamedInstances) {
  EXPECT_TRUE(all_max_kr_free_partite(Graph::complete(5), 3));
  EXPECT_FALSE(all_max_kr_free_partite(cycle_graph(5), 3));
  EXPECT_TRUE(all_max_kr_free_partite(cycle_graph(6), 3));
  // K_r-free input: the only optimum is the graph itself.
  EXPECT_FALSE(all_max_kr_free_partite(cycle_graph(7), 3));
  EXPECT_THROW(all_max_kr_free_partite(Graph::complete(10), 3), GuardError);
}

TEST(AllOptimaPartite, EnumerationMatchesExhaustiveSearch) {
  auto k5 = enumerate_max_kr_free(Graph::complete(5), 3);
  // Triangle-free 6-edge subgraphs of K_5 are the K_{2,3}'s: C(5,2) = 10.
  EXPECT_EQ(k5.size(), 10u);
  for (std::uint64_t k = 0; k < 25; ++k) {
    Graph g = sample_gnp(7, 0.55, derive_seed(31, k));
    for (int r : {3, 4}) {
      auto fast = enumerate_max_kr_free(g, r);
      auto slow = oracle::exhaustive_max_kr_free(g, r, true);
      EXPECT_EQ(fast, slow.maximizers);
    }
  }
}

TEST(TuranEquality, CompleteGraphs) {
  for (int r : {3, 4, 5})
    for (int n = 3; n <= 8; ++n) {
      auto gap = turan_gap(Graph::complete(n), r);
      EXPECT_EQ(gap.gap(), std::optional<std::size_t>(0)) << "n=" << n << " r=" << r;
    }
}

}  // namespace
}  // namespace turan
