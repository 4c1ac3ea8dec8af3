#include <gtest/gtest.h>

#include <cmath>

#include "turan/generators.hpp"
#include "turan/oracles.hpp"
#include "turan/rooted.hpp"

namespace turan {
namespace {

RootedGraph rooted_clique(int r, int roots) {
  std::vector<Vertex> rs;
  for (int i = 0; i < roots; ++i) rs.push_back(i);
  return RootedGraph(r, rs, Graph::complete(r).edges());
}

TEST(RootedGraph, TextFormRoundTrip) {
  auto tri = RootedGraph::parse("3; 0; 0-1 0-2 1-2");
  EXPECT_EQ(tri.v_h(), 2);
  EXPECT_EQ(tri.e_h(), 3);
  EXPECT_EQ(RootedGraph::parse(tri.to_string()), tri);
  auto h = RootedGraph::parse("4;0,3;0-1,1-2,2-3,0-3");
  EXPECT_EQ(h.e_h(), 3);  // 0-3 joins two roots
  EXPECT_THROW(RootedGraph::parse("3; 0"), ParseError);
  EXPECT_THROW(RootedGraph::parse("3; 0; 0-5"), ParseError);
  EXPECT_THROW(RootedGraph::parse("3; 0 0; 0-1"), ParseError);
  EXPECT_THROW(RootedGraph::parse("3; 0; 1-1"), ParseError);
  EXPECT_THROW(RootedGraph::parse("x; 0; 0-1"), ParseError);
}

TEST(Density, HandValues) {
  EXPECT_EQ(density(RootedGraph::parse("2; 0; 0-1")), Rational(1));
  EXPECT_EQ(density(rooted_clique(3, 1)), Rational(3, 2));
  EXPECT_EQ(density(h_ij(5, 2, 4)), Rational(3));
  EXPECT_THROW(density(RootedGraph::parse("2; 0 1; 0-1")), PreconditionError);
}

TEST(Balance, RootedCliquesAreStrictlyBalanced) {
  for (int r = 2; r <= 7; ++r)
    for (int s = 1; s < r; ++s) {
      auto h = rooted_clique(r, s);
      EXPECT_TRUE(is_strictly_balanced(h)) << r << " " << s;
      EXPECT_TRUE(is_balanced(h));
    }
  EXPECT_TRUE(is_strictly_balanced(RootedGraph::parse("2; 0; 0-1")));
}

TEST(Balance, DetectsDenseSubpatterns) {
  // A pendant path hanging off a rooted K_4: the K_4 part is denser.
  auto h = RootedGraph::parse("6; 0; 0-1 0-2 0-3 1-2 1-3 2-3 3-4 4-5");
  EXPECT_FALSE(is_balanced(h));
  EXPECT_FALSE(is_strictly_balanced(h));
  // An isolated non-root vertex lowers density, so the rest is denser.
  EXPECT_FALSE(is_balanced(RootedGraph::parse("3; 0; 0-1")));
  EXPECT_THROW(is_balanced(rooted_clique(13, 1)), GuardError);
}

TEST(Balance, HijFamily) {
  for (int r = 3; r <= 8; ++r)
    for (int j = 2; j <= r - 1; ++j)
      for (int i = 1; i < j; ++i) {
        auto h = h_ij(r, i, j);
        if (h.v_h() == 0) {
          EXPECT_EQ(std::make_pair(i, j), std::make_pair(1, 2));
          continue;
        }
        const bool strict = is_strictly_balanced(h);
        EXPECT_TRUE(is_balanced(h)) << i << "," << j;
        EXPECT_EQ(strict, !(i == 2 && j == 4)) << i << "," << j;
        if (strict) {
          EXPECT_TRUE(is_balanced(h));
        }
        if (auto gap = balance_gap(h)) {
          EXPECT_EQ(*gap > 0, strict) << i << "," << j;
        }
      }
}

TEST(Hij, VertexAndEdgeCounts) {
  EXPECT_EQ(varsigma(2, 3), 3);
  for (int r = 3; r <= 8; ++r) {
    EXPECT_EQ(varsigma(r - 2, r - 1), (r - 1) * (r - 2) / 2);
    for (int j = 2; j <= r - 1; ++j)
      for (int i = 1; i < j; ++i) {
        auto h = h_ij(r, i, j);
        EXPECT_EQ(h.v_h(), j - 2);
        EXPECT_EQ(h.e_h(), varsigma(i, j) + j - 3);
        // Everything except u_j u_k for i <= k < j.
        for (int k = 1; k < j; ++k)
          EXPECT_EQ(std::binary_search(h.edges().begin(), h.edges().end(), Edge(k, j)), k < i);
      }
  }
  EXPECT_THROW(h_ij(5, 3, 3), PreconditionError);
  EXPECT_THROW(h_ij(5, 2, 5), PreconditionError);
  EXPECT_NEAR(s_ij(10, 0.5, 2, 3), 3.125, 1e-12);
}

TEST(Hij, PrefixDensities) {
  for (int r = 4; r <= 8; ++r)
    for (int j = 3; j <= r - 1; ++j)
      for (int i = 1; i < j; ++i) {
        auto h = h_ij(r, i, j);
        for (int k = 1; k < j; ++k) {
          if (k == 1 && i == 1) continue;
          std::vector<Vertex> keep;
          for (int t = 1; t <= k; ++t) keep.push_back(t);
          auto sub = h.induced(keep);
          Rational expected = k < i ? Rational(k + 5, 2) : Rational(k * k + k + 2 * i - 4, 2 * (k - 1));
          EXPECT_EQ(density(sub), expected) << i << "," << j << " k=" << k;
        }
      }
}

TEST(CountCopies, HandCounts) {
  Graph g = sample_gnp(9, 0.5, 4);
  auto edge = RootedGraph::parse("2; 0; 0-1");
  for (Vertex x = 0; x < 9; ++x) EXPECT_EQ(count_copies(edge, g, {x}), static_cast<std::uint64_t>(g.degree(x)));
  auto tri = rooted_clique(3, 1);
  for (Vertex x = 0; x < 4; ++x) EXPECT_EQ(count_copies(tri, Graph::complete(4), {x}), 6u);
  auto two = rooted_clique(3, 2);
  EXPECT_EQ(count_copies(two, Graph::complete(4), {1, 1}), 0u);
  EXPECT_THROW(count_copies(two, Graph::complete(4), {1}), PreconditionError);
  EXPECT_THROW(count_copies(two, Graph::complete(4), {1, 7}), PreconditionError);
}

TEST(CountCopies, MatchesInjectionScan) {
  int mismatches = 0;
  for (std::uint64_t k = 0; k < 60; ++k) {
    Rng rng(derive_seed(77, k));
    const int n = 6 + static_cast<int>(rng.below(4));
    Graph g = sample_gnp(n, 0.55, rng.split(0).key());
    const int r = 4 + static_cast<int>(rng.below(3));
    const int j = 2 + static_cast<int>(rng.below(static_cast<std::uint64_t>(r - 2)));
    const int i = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(j - 1)));
    auto h = h_ij(r, i, j);
    if (h.v_h() > 5) continue;
    std::vector<Vertex> anchors = {static_cast<Vertex>(rng.below(n)), static_cast<Vertex>(rng.below(n)),
                                   static_cast<Vertex>(rng.below(n))};
    mismatches += count_copies(h, g, anchors) != oracle::count_copies_naive(h, g, anchors);
  }
  EXPECT_EQ(mismatches, 0);
}

TEST(ExpectationProfile, TriangleAndShapes) {
  auto tri = rooted_clique(3, 1);
  auto prof = expectation_profile(tri, 20, 0.3);
  EXPECT_NEAR(prof.e0_exact, 19 * 18 * std::pow(0.3, 3), 1e-12);
  EXPECT_NEAR(prof.e0, 400 * std::pow(0.3, 3), 1e-12);
  ASSERT_FALSE(prof.shapes.empty());
  EXPECT_EQ(prof.shapes.front().e_l, 0);
  EXPECT_NEAR(prof.shapes.front().bound, prof.e0, 1e-12);
  // Shapes of the one-rooted triangle with fewer than 3 edges:
  // empty, root edge, middle edge, cherry at the root, path root-x-y.
  EXPECT_EQ(prof.shapes.size(), 5u);
}

TEST(ExpectationProfile, BalancedCapHolds) {
  for (int r = 4; r <= 6; ++r)
    for (int j = 3; j <= r - 1; ++j)
      for (int i = 1; i < j; ++i) {
        auto h = h_ij(r, i, j);
        if (h.e_h() > kProfileMaxFreeEdges) continue;
        for (double n : {30.0, 200.0})
          for (double p : {0.1, 0.5}) {
            auto prof = expectation_profile(h, n, p);
            for (const auto& s : prof.shapes) EXPECT_LE(s.bound, s.balanced_cap * (1 + 1e-12)) << s.shape;
          }
      }
}

TEST(ExpectationProfile, ExactOverAsymptoticTendsToOne) {
  auto h = h_ij(6, 2, 5);
  double prev = 0;
  for (double n : {50.0, 100.0, 200.0}) {
    auto prof = expectation_profile(h, n, 0.4);
    double ratio = prof.e0_exact / prof.e0;
    EXPECT_LT(ratio, 1.0);
    EXPECT_GT(ratio, prev);
    double s = 3, v = h.v_h();
    EXPECT_GT(ratio, 1 - (s + v) * v / n);
    prev = ratio;
  }
}

}  // namespace
}  // namespace turan
