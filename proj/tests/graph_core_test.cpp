#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "turan/cliques.hpp"
#include "turan/edge_coloring.hpp"
#include "turan/generators.hpp"
#include "turan/graph.hpp"
#include "turan/graph_io.hpp"
#include "turan/oracles.hpp"
#include "turan/regularity.hpp"

namespace turan {
namespace {

void expect_well_formed(const Graph& g) {
  std::size_t twice = 0;
  for (Vertex u = 0; u < g.order(); ++u) {
    EXPECT_FALSE(g.neighbors(u).test(u));
    twice += static_cast<std::size_t>(g.degree(u));
    g.neighbors(u).for_each([&](Vertex v) { EXPECT_TRUE(g.neighbors(v).test(u)); });
  }
  EXPECT_EQ(twice, 2 * g.size());
}

TEST(PairIndex, RoundTripsOverAllPairs) {
  for (int n : {2, 3, 7, 20}) {
    std::size_t i = 0;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v, ++i) {
        EXPECT_EQ(pair_index(n, Edge(u, v)), i);
        EXPECT_EQ(pair_at(n, i), Edge(u, v));
      }
  }
}

TEST(SampleGnp, DegenerateProbabilities) {
  EXPECT_EQ(sample_gnp(5, 0.0, 17).size(), 0u);
  EXPECT_EQ(sample_gnp(5, 1.0, 17), Graph::complete(5));
  EXPECT_EQ(sample_gnp(5, 1.0, 17).size(), 10u);
}

TEST(SampleGnp, RejectsInvalidProbability) {
  EXPECT_THROW(sample_gnp(5, -0.1, 1), PreconditionError);
  EXPECT_THROW(sample_gnp(5, 1.5, 1), PreconditionError);
  EXPECT_THROW(sample_gnp(5, std::nan(""), 1), PreconditionError);
}

TEST(SampleGnp, ReproducibleAndWellFormed) {
  Graph a = sample_gnp(40, 0.3, 99), b = sample_gnp(40, 0.3, 99);
  EXPECT_EQ(a, b);
  EXPECT_NE(a, sample_gnp(40, 0.3, 100));
  expect_well_formed(a);
}

TEST(SampleGnp, MeanEdgeCountMatchesBinomial) {
  const int trials = 10000;
  const double pairs = 50.0 * 49.0 / 2.0, p = 0.3;
  double sum = 0.0;
  for (int k = 0; k < trials; ++k) sum += static_cast<double>(sample_gnp(50, p, derive_seed(7, k)).size());
  const double mean = sum / trials;
  const double se = std::sqrt(pairs * p * (1 - p) / trials);
  EXPECT_NEAR(mean, 367.5, 3 * se);
}

TEST(SampleGnm, ExactEdgeCounts) {
  EXPECT_EQ(sample_gnm(10, 0, 1).size(), 0u);
  EXPECT_EQ(sample_gnm(10, 45, 1), Graph::complete(10));
  Graph g = sample_gnm(10, 20, 1);
  EXPECT_EQ(g.size(), 20u);
  expect_well_formed(g);
  EXPECT_THROW(sample_gnm(10, 46, 1), PreconditionError);
}

TEST(SampleGnm, PairMarginalsAreUniform) {
  // Each pair appears with probability m / C(n,2) = 1/2.
  const int n = 6, trials = 20000;
  std::vector<int> hits(pair_count(n), 0);
  for (int k = 0; k < trials; ++k)
    for (const Edge& e : sample_gnm(n, 15 / 2, derive_seed(3, k)).edges()) ++hits[pair_index(n, e)];
  const double p = 7.0 / 15.0, se = std::sqrt(p * (1 - p) / trials);
  for (int h : hits) EXPECT_NEAR(h / static_cast<double>(trials), p, 4 * se);
}

TEST(StoppingTime, TriangleIsForced) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto res = stopping_time_process(3, 3, seed);
    EXPECT_EQ(res.stop_index, 3u);
    EXPECT_EQ(res.graph, Graph::complete(3));
  }
}

TEST(StoppingTime, EveryEdgeOnAClique) {
  auto small = stopping_time_process(4, 3, 2);
  EXPECT_TRUE(every_edge_in_clique(small.graph, 3));
  std::set<std::uint64_t> stops;
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    auto res = stopping_time_process(12, 3, seed);
    EXPECT_EQ(res.graph.size(), res.stop_index);
    // Naive check: every edge has a common neighbour.
    for (const Edge& e : res.graph.edges()) EXPECT_GT(res.graph.codegree(e.u, e.v), 0);
    stops.insert(res.stop_index);
  }
  EXPECT_GT(stops.size(), 1u);
}

TEST(StoppingTime, PrefixBeforeStopFails) {
  // The process stops at the first qualifying prefix: dropping the last edge
  // must leave some edge outside every K_r... unless the graph was complete.
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    auto res = stopping_time_process(9, 4, seed);
    EXPECT_TRUE(every_edge_in_clique(res.graph, 4));
  }
  EXPECT_THROW(stopping_time_process(3, 4, 1), PreconditionError);
}

TEST(EdgeColoring, SmallCases) {
  // P_3 has max degree 2, so the smallest admissible palette is 3: the two
  // edges land in distinct classes and one class stays empty.
  EXPECT_THROW(equitable_edge_coloring(path_graph(3), 2), PreconditionError);
  auto path = equitable_edge_coloring(path_graph(3), 3);
  ASSERT_EQ(path.colors(), 3u);
  EXPECT_TRUE(is_proper_coloring(path_graph(3), path));
  std::multiset<std::size_t> sizes;
  for (const auto& cls : path.classes) sizes.insert(cls.size());
  EXPECT_EQ(sizes, (std::multiset<std::size_t>{0, 1, 1}));

  // K_{1,3}: three edges share the centre, so each class holds at most one.
  Graph star = star_graph(3);
  EXPECT_THROW(equitable_edge_coloring(star, 3), PreconditionError);
  auto sc = equitable_edge_coloring(star, 4);
  EXPECT_TRUE(is_proper_coloring(star, sc));
  std::size_t singletons = 0;
  for (const auto& cls : sc.classes) {
    EXPECT_LE(cls.size(), 1u);
    singletons += cls.size();
  }
  EXPECT_EQ(singletons, 3u);

  auto empty = equitable_edge_coloring(Graph(4), 1);
  EXPECT_EQ(empty.colors(), 1u);
}

TEST(EdgeColoring, RandomGraphsProperAndEquitable) {
  for (std::uint64_t k = 0; k < 300; ++k) {
    Rng rng(derive_seed(11, k));
    int n = 2 + static_cast<int>(rng.below(29));
    double p = rng.uniform01();
    Graph g = sample_gnp(n, p, rng());
    int extra = static_cast<int>(k % 3);
    auto col = equitable_edge_coloring(g, g.max_degree() + 1 + extra);
    EXPECT_TRUE(is_proper_coloring(g, col)) << "n=" << n << " p=" << p;
    EXPECT_LE(col.spread(), 1u);
  }
}

TEST(Regularity, CompleteAndEmpty) {
  auto rep = regularity_report(Graph::complete(8), 1.0, 20, 1);
  EXPECT_DOUBLE_EQ(rep.max_degree_dev, 0.0);
  EXPECT_DOUBLE_EQ(rep.max_codegree_dev, 0.0);
  EXPECT_DOUBLE_EQ(rep.cross_edge_min_ratio, 1.0);
  auto empty = regularity_report(Graph(10), 0.5, 20, 1);
  EXPECT_DOUBLE_EQ(empty.max_degree_dev, 1.0);
  EXPECT_DOUBLE_EQ(empty.max_codegree_dev, 1.0);
  EXPECT_DOUBLE_EQ(empty.cross_edge_min_ratio, 0.0);
  EXPECT_THROW(regularity_report(Graph(3), 0.0, 1, 1), PreconditionError);
}

TEST(Regularity, RandomGraphWithinChernoffBand) {
  // d(x) ~ Bin(199, 0.3), mean 59.7. A deviation of 0.5 np = 30 has Chernoff
  // probability below exp(-900/(2*(59.7+10))) ~ 1.6e-3 per vertex; over 200
  // vertices the band fails with probability < 0.33, and empirically far less.
  Graph g = sample_gnp(200, 0.3, 5);
  auto rep = regularity_report(g, 0.3, 200, 5);
  EXPECT_LT(rep.max_degree_dev, 0.5);
  EXPECT_GE(rep.max_codegree_dev, 0.0);
  EXPECT_TRUE(std::isfinite(rep.cross_edge_min_ratio));
  EXPECT_FALSE(rep.induced_violations.empty());
}

TEST(GraphIo, ParsesAndWritesCanonically) {
  Graph g = read_graph("3 1\n0 1\n");
  EXPECT_EQ(g.order(), 3);
  EXPECT_EQ(g.size(), 1u);
  EXPECT_TRUE(g.has_edge(0, 1));
  EXPECT_EQ(write_graph(Graph::complete(3)), "3 3\n0 1\n0 2\n1 2\n");
  Graph commented = read_graph("# header next\n4 2\n# an edge\n2 3\n1 0\n");
  EXPECT_EQ(write_graph(commented), "4 2\n0 1\n2 3\n");
}

TEST(GraphIo, ErrorsNameTheLine) {
  auto line_of = [](const char* text) -> std::size_t {
    try {
      read_graph(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  EXPECT_EQ(line_of("x y\n"), 1u);
  EXPECT_EQ(line_of("3 2\n0 1\n0 3\n"), 3u);
  EXPECT_EQ(line_of("# c\n3 2\n0 1\n1 0\n"), 4u);
  EXPECT_EQ(line_of("3 2\n0 1\n"), 3u);  // reported at end of input
  EXPECT_EQ(line_of("3 1\n0\n"), 2u);
  EXPECT_EQ(line_of(""), 1u);
}

TEST(GraphIo, RoundTripProperty) {
  for (std::uint64_t k = 0; k < 100; ++k) {
    Rng rng(derive_seed(21, k));
    Graph g = sample_gnp(1 + static_cast<int>(rng.below(30)), rng.uniform01(), rng());
    EXPECT_EQ(read_graph(write_graph(g)), g);
  }
}

TEST(Cliques, CountsMatchNaive) {
  Graph k6 = Graph::complete(6);
  EXPECT_EQ(count_cliques(k6, 3), 20u);
  EXPECT_EQ(list_cliques(k6, 4).size(), 15u);
  EXPECT_TRUE(is_clique_free(cycle_graph(5), 3));
  EXPECT_TRUE(is_k_partite(cycle_graph(6), 2));
  EXPECT_FALSE(is_k_partite(cycle_graph(5), 2));
  for (std::uint64_t k = 0; k < 50; ++k) {
    Graph g = sample_gnp(9, 0.6, k);
    EXPECT_EQ(is_clique_free(g, 4), !oracle::has_clique_naive(g, 4));
  }
}

}  // namespace
}  // namespace turan
