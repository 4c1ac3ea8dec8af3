#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "turan/constants.hpp"
#include "turan/counting.hpp"
#include "turan/delta_bar.hpp"
#include "turan/generators.hpp"
#include "turan/oracles.hpp"

namespace turan {
namespace {

VertexSet set_of(int n, std::initializer_list<Vertex> vs) { return VertexSet(n, vs); }

TEST(Kappa, SmallHandCounts) {
  Graph k5 = Graph::complete(5);
  EXPECT_EQ(kappa(k5, 4, {KappaArg::tuple({0, 1})}), 3u);

  Graph k6 = Graph::complete(6);
  std::vector<Vertex> a2 = {2, 3}, a3 = {4, 5};
  EXPECT_EQ(kappa(k6, 4, {KappaArg::tuple({0, 1}), KappaArg::vertices(a2), KappaArg::vertices(a3)}), 4u);

  // Pairs inside a block are never required, so xy alone is satisfied for r = 2.
  EXPECT_EQ(kappa(Graph(4), 2, {KappaArg::tuple({0, 1})}), 1u);
  EXPECT_EQ(kappa(Graph(4), 3, {KappaArg::tuple({0, 1})}), 0u);
  EXPECT_EQ(kappa(Graph(4), 3, {}), 0u);
  EXPECT_EQ(kappa(k5, 3, {}), 10u);
}

TEST(Kappa, RejectsBadArguments) {
  Graph k5 = Graph::complete(5);
  EXPECT_THROW(kappa(k5, 2, {KappaArg::tuple({0, 1, 2})}), PreconditionError);
  EXPECT_THROW(kappa(k5, 4, {KappaArg::subsets(2, {{0, 1}, {1, 0}})}), PreconditionError);
  EXPECT_THROW(kappa(k5, 4, {KappaArg::subsets(2, {{0, 1, 2}})}), PreconditionError);
  EXPECT_THROW(kappa(k5, 4, {KappaArg::tuple({0, 9})}), PreconditionError);
}

TEST(KrMinusFamily, MatchesKappaOnCompleteGraph) {
  Graph k6 = Graph::complete(6);
  std::vector<VertexSet> blocks = {set_of(6, {2, 3}), set_of(6, {4, 5})};
  auto fam = kr_minus_family(k6, Edge(0, 1), blocks);
  ASSERT_EQ(fam.size(), 4u);
  for (const auto& k : fam) {
    EXPECT_EQ(k.size(), 5u);
    EXPECT_TRUE(std::find(k.begin(), k.end(), Edge(0, 1)) == k.end());
  }
  std::vector<VertexSet> overlapping = {set_of(6, {1, 3})};
  EXPECT_THROW(kr_minus_family(k6, Edge(0, 1), overlapping), PreconditionError);
}

TEST(Tau, HandCounts) {
  Graph k33 = complete_multipartite(std::vector<int>{3, 3});
  EXPECT_EQ(tau(k33, {set_of(6, {0, 1, 2}), set_of(6, {3, 4, 5})}), 9u);
  EXPECT_EQ(tau(k33, {set_of(6, {0, 1, 2}), VertexSet(6)}), 0u);
  Graph k5 = Graph::complete(5);
  VertexSet c = set_of(5, {2, 3, 4});
  // Repeated identical sets count ordered distinct choices.
  EXPECT_EQ(tau(k5, {set_of(5, {0}), c, c}), 6u);
  EXPECT_THROW(tau(k5, {set_of(5, {0, 2}), c}), PreconditionError);
}

TEST(Sigma, HandCounts) {
  EXPECT_EQ(sigma(Graph::complete(4), EdgeList{Edge(0, 1)}, 4), 1u);
  EXPECT_EQ(sigma(Graph::complete(6), EdgeList{}, 4), 0u);
  EXPECT_THROW(sigma(Graph::complete(4), EdgeList{Edge(0, 1)}, 3), PreconditionError);
  // The missing pair xy is allowed to be absent.
  Graph g = Graph::complete(4).without_edge(Edge(0, 1));
  EXPECT_EQ(sigma(g, EdgeList{Edge(0, 1)}, 4), 1u);
  EXPECT_EQ(sigma(g.without_edge(Edge(2, 3)), EdgeList{Edge(0, 1)}, 4), 0u);
}

std::vector<VertexSet> random_disjoint_blocks(int n, int count, Rng& rng, std::vector<Vertex> excluded) {
  std::vector<int> owner(static_cast<std::size_t>(n), -1);
  for (Vertex v : excluded) owner[static_cast<std::size_t>(v)] = -2;
  std::vector<VertexSet> blocks(static_cast<std::size_t>(count), VertexSet(n));
  for (Vertex v = 0; v < n; ++v) {
    if (owner[static_cast<std::size_t>(v)] == -2) continue;
    auto b = rng.below(static_cast<std::uint64_t>(count + 1));
    if (b < static_cast<std::uint64_t>(count)) blocks[b].set(v);
  }
  return blocks;
}

TEST(CountingOracles, RandomInstancesAgreeWithNaiveEnumeration) {
  int mismatches = 0;
  for (std::uint64_t k = 0; k < 100; ++k) {
    Rng rng(derive_seed(91, k));
    const int n = 5 + static_cast<int>(rng.below(8));
    const int r = 4 + static_cast<int>(rng.below(2));
    const double p = 0.4 + 0.5 * rng.uniform01();
    Graph g = sample_gnp(n, p, rng.split(1).key());

    Edge xy(0, 1);
    auto blocks = random_disjoint_blocks(n, r - 2, rng, {0, 1});
    std::vector<KappaArg> args = {KappaArg::tuple({0, 1})};
    for (const auto& b : blocks) args.push_back(KappaArg::vertices(b));
    const auto kv = kappa(g, r, args);
    mismatches += kv != oracle::kappa_naive(g, r, args);
    mismatches += kr_minus_family(g, xy, blocks).size() != kv;

    EdgeList pairs;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (rng.bernoulli(0.15)) pairs.emplace_back(u, v);
    std::vector<KappaArg> mixed = {KappaArg::pairs(pairs), KappaArg::vertices(blocks[0])};
    mismatches += kappa(g, r, mixed) != oracle::kappa_naive(g, r, mixed);
    mismatches += sigma(g, pairs, r) != oracle::sigma_naive(g, pairs, r);

    auto tsets = random_disjoint_blocks(n, r - 1, rng, {});
    if (r == 5) tsets.back() = tsets[tsets.size() - 2];
    mismatches += tau(g, tsets) != oracle::tau_naive(g, tsets);
  }
  EXPECT_EQ(mismatches, 0);
}

TEST(Kappa, MonotoneUnderEdgeAddition) {
  for (std::uint64_t k = 0; k < 30; ++k) {
    Graph g = sample_gnp(9, 0.5, derive_seed(17, k));
    std::vector<Vertex> rest = {2, 3, 4, 5, 6, 7, 8};
    std::vector<KappaArg> args = {KappaArg::tuple({0, 1}), KappaArg::vertices(rest)};
    auto before = kappa(g, 4, args);
    for (Vertex u = 0; u < 9; ++u)
      for (Vertex v = u + 1; v < 9; ++v)
        if (!g.has_edge(u, v)) {
          EXPECT_GE(kappa(g.with_edge(Edge(u, v)), 4, args), before);
          goto next;
        }
  next:;
  }
}

TEST(Kappa, NeighbourhoodSumEqualsTau) {
  for (std::uint64_t k = 0; k < 40; ++k) {
    Rng rng(derive_seed(23, k));
    const int n = 10;
    const int r = 4 + static_cast<int>(k % 2);
    Graph g = sample_gnp(n, 0.6, rng.split(0).key());
    const Vertex x = 0;
    auto blocks = random_disjoint_blocks(n, r - 1, rng, {x});
    const VertexSet& q = blocks[0];
    std::uint64_t lhs = 0;
    (q & g.neighbors(x)).for_each([&](Vertex y) {
      std::vector<KappaArg> args = {KappaArg::tuple({x, y})};
      for (std::size_t i = 1; i < blocks.size(); ++i) args.push_back(KappaArg::vertices(blocks[i]));
      lhs += kappa(g, r, args);
    });
    std::vector<VertexSet> nbhd;
    for (const auto& b : blocks) nbhd.push_back(b & g.neighbors(x));
    EXPECT_EQ(lhs, tau(g, nbhd));
  }
}

TEST(Constants, DirectFormulas) {
  EXPECT_NEAR(lambda_r(10, 0.5, 4), 3.125, 1e-12);
  EXPECT_NEAR(lambda_r(100, 0.1, 3), 1.0, 1e-12);
  EXPECT_NEAR(lambda_r(7, 1.0, 5), 343.0, 1e-9);
  EXPECT_NEAR(threshold_p(1000, 4, 1), 0.0929, 1e-3);
  EXPECT_NEAR(threshold_p(100, 3, 1), 0.2146, 1e-3);
  for (double n : {50.0, 1e3, 1e6})
    EXPECT_NEAR(threshold_p(n, 3, 2.5), 2.5 * std::sqrt(std::log(n) / n), 1e-12);
  EXPECT_NEAR(sigma_cap(100, 0.2, 4, 0.1) / 1.33e6, 1.0, 5e-3);
  EXPECT_NEAR(sigma_cap(100, 0.2, 4, 0.1), 24 * 4 * std::log(4.0) * 16 * 625, 1e-6);
}

TEST(Constants, SigmaCapRegimeCrossover) {
  for (int r : {4, 5, 6})
    for (double n : {100.0, 1e4}) {
      const double cross = std::pow(n, -2.0 / (r + 2));
      for (double f : {0.5, 0.9, 1.1, 2.0}) {
        const double p = cross * f;
        if (p > 1) continue;
        EXPECT_EQ(sigma_cap_second_regime(n, p, r, 1.0), p < cross) << r << " " << n << " " << f;
      }
    }
  // For r = 3 and zeta = 1 the two branches coincide.
  EXPECT_NEAR(sigma_cap(500, 0.2, 3, 1.0), 24 * 3 * std::log(3.0) * 8 / 0.2, 1e-6);
  // Linear in zeta^{-(r-2)} in the second regime.
  const double base = sigma_cap(1e4, 0.05, 4, 0.5);
  EXPECT_TRUE(sigma_cap_second_regime(1e4, 0.05, 4, 0.5));
  EXPECT_NEAR(sigma_cap(1e4, 0.05, 4, 0.25) / base, 4.0, 1e-9);
}

TEST(Constants, RationalAbc) {
  auto k4 = abc_constants(4);
  EXPECT_EQ(k4.a, Rational(0));
  EXPECT_EQ(k4.b, Rational(2, 9));
  EXPECT_EQ(k4.c, Rational(1, 9));
  EXPECT_EQ(k4.gamma_max, rpow(Rational(1, 9) / 70, 2) / 2);
  EXPECT_NEAR(to_double(k4.gamma_max), 1.26e-6, 0.01e-6);
  auto k5 = abc_constants(5);
  EXPECT_EQ(k5.a, Rational(1, 4));
  EXPECT_EQ(k5.b, Rational(5, 16));
  EXPECT_EQ(k5.c, Rational(9, 32));
  for (int r = 4; r <= 64; ++r) {
    auto k = abc_constants(r);
    EXPECT_LT(k.a, k.b) << r;
    EXPECT_LT(k.b, Rational(1, 2)) << r;
    EXPECT_GT(k.gamma_max, 0) << r;
  }
  EXPECT_THROW(abc_constants(3), PreconditionError);
}

TEST(Constants, ParamSetDefaults) {
  ParamInput in;
  in.n = 200;
  in.r = 4;
  in.p = 0.3;
  ParamSet s = make_params(in);
  ASSERT_TRUE(s.abc.has_value());
  EXPECT_DOUBLE_EQ(s.gamma, to_double(s.abc->gamma_max) / 2);
  EXPECT_NEAR(std::pow(s.zeta, 2), 2 * s.gamma, 1e-15);
  EXPECT_EQ(s.abc->c, (s.abc->a + s.abc->b) / 2);
  in.r = 3;
  EXPECT_THROW(make_params(in), PreconditionError);
  in.gamma = 0.1;
  EXPECT_NEAR(make_params(in).zeta, 0.2, 1e-15);
}

TEST(DeltaBar, SinglePairAtOrderRIsDiagonalOnly) {
  for (int r : {3, 4, 5}) {
    auto d = delta_bar_kr_minus(r, 0.5, r, EdgeList{Edge(0, 1)});
    EXPECT_EQ(d.family_size, 1u);
    EXPECT_EQ(d.intersecting_pairs, 1u);
    EXPECT_NEAR(d.exact, std::pow(0.5, choose2(r) - 1), 1e-15);
  }
}

TEST(DeltaBar, ExponentIdentityOnSampledPairs) {
  Rng rng(5);
  const int n = 9, r = 4;
  for (int t = 0; t < 200; ++t) {
    auto pick = [&](std::vector<Vertex>& z, Edge& xy) {
      std::vector<Vertex> all(n);
      std::iota(all.begin(), all.end(), 0);
      std::shuffle(all.begin(), all.end(), rng);
      xy = Edge(all[0], all[1]);
      z.assign(all.begin() + 2, all.begin() + r);
    };
    std::vector<Vertex> z1, z2;
    Edge e1, e2;
    pick(z1, e1);
    pick(z2, e2);
    auto k = kr_minus_pattern(e1, z1), l = kr_minus_pattern(e2, z2);
    EdgeList inter, uni;
    std::set_intersection(k.begin(), k.end(), l.begin(), l.end(), std::back_inserter(inter));
    std::set_union(k.begin(), k.end(), l.begin(), l.end(), std::back_inserter(uni));
    EXPECT_EQ(static_cast<long long>(uni.size()), r * r - r - 2 - static_cast<long long>(inter.size()));
  }
}

TEST(DeltaBar, ExactNeverExceedsClosedForm) {
  int checked = 0;
  for (std::uint64_t k = 0; k < 30; ++k) {
    Rng rng(derive_seed(303, k));
    const int n = 5 + static_cast<int>(rng.below(6));
    const int r = 3 + static_cast<int>(rng.below(2));
    const double p = 0.05 + 0.9 * rng.uniform01();
    EdgeList pairs;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (rng.bernoulli(0.2)) pairs.emplace_back(u, v);
    if (pairs.empty()) pairs.emplace_back(0, 1);
    auto d = delta_bar_kr_minus(n, p, r, pairs);
    EXPECT_LE(d.exact, d.closed_form_bound) << n << " " << r << " " << p;
    ++checked;
  }
  EXPECT_EQ(checked, 30);
  EXPECT_THROW(delta_bar_kr_minus(13, 0.5, 4, EdgeList{Edge(0, 1)}), GuardError);
}

}  // namespace
}  // namespace turan
