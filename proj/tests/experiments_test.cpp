#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "turan/experiments.hpp"
#include "turan/oracles.hpp"
#include "turan/serialize.hpp"

using namespace turan;

namespace {

// Reference estimator: trials visited in a shuffled order, tallied serially.
SweepRow permuted_estimate(int n, int r, double p, std::uint64_t trials, std::uint64_t seed, std::uint64_t shuffle_seed) {
  std::vector<std::uint64_t> order(trials);
  std::iota(order.begin(), order.end(), 0);
  std::mt19937_64 gen(shuffle_seed);
  std::shuffle(order.begin(), order.end(), gen);
  std::uint64_t eq = 0;
  for (auto k : order) {
    const Graph g = sample_gnp(n, p, derive_seed(seed, k));
    eq += oracle::brute_max_kr_free(g, r) == oracle::brute_max_partite(g, r - 1).value;
  }
  SweepRow row;
  row.equality_count = eq;
  return row;
}

}  // namespace

TEST(Experiments, EstimateMatchesPermutedBruteForce) {
  const auto row = estimate_equality_prob(8, 3, 0.5, 60, 77);
  EXPECT_EQ(row.trials, 60u);
  EXPECT_EQ(row.unresolved_count, 0u);
  EXPECT_EQ(row.equality_count, permuted_estimate(8, 3, 0.5, 60, 77, 1).equality_count);
  EXPECT_EQ(row.equality_count, permuted_estimate(8, 3, 0.5, 60, 77, 99).equality_count);
  EXPECT_DOUBLE_EQ(row.equality_rate, row.equality_count / 60.0);
}

TEST(Experiments, ThreadCountDoesNotChangeResults) {
  ExperimentConfig cfg;
  cfg.n = 9;
  cfg.r = 3;
  cfg.p_grid = {0.3, 0.6, 0.9};
  cfg.trials = 600;
  cfg.master_seed = 5;
  EXPECT_EQ(sweep(cfg, 1), sweep(cfg, 4));
}

TEST(Experiments, EndpointsAreCertain) {
  for (double p : {0.0, 1.0}) {
    auto row = estimate_equality_prob(8, 4, p, 20, 3);
    EXPECT_EQ(row.equality_count, 20u);
    EXPECT_EQ(row.stderr_, 0.0);
  }
}

TEST(Experiments, BudgetExhaustionIsReportedNotCounted) {
  SolveOptions tight{1};
  EXPECT_THROW(estimate_equality_prob(12, 3, 0.6, 5, 1, tight), std::runtime_error);
}

TEST(Experiments, ConfigValidation) {
  ExperimentConfig cfg;
  cfg.p_grid = {0.2, 0.2};
  EXPECT_THROW(cfg.validate(), PreconditionError);
  cfg.p_grid = {0.5, 0.2};
  EXPECT_THROW(cfg.validate(), PreconditionError);
  cfg.p_grid = {0.2, 1.5};
  EXPECT_THROW(cfg.validate(), PreconditionError);
  cfg.p_grid = {0.2, 0.5};
  cfg.trials = 0;
  EXPECT_THROW(cfg.validate(), PreconditionError);
  cfg.trials = 1;
  EXPECT_NO_THROW(cfg.validate());
  cfg.p_grid.clear();
  EXPECT_THROW(cfg.validate(), PreconditionError);
}

TEST(Experiments, CsvRoundTrip) {
  std::vector<SweepRow> rows(2);
  rows[0] = {7, 3, 0.1, 10, 9, 1, 1.0, 0.0, 42};
  rows[1] = {7, 3, 0.30000000000000004, 10, 3, 0, 0.3, std::sqrt(0.21 / 10), 42};
  std::stringstream ss;
  write_sweep_csv(ss, rows);
  std::string first;
  std::getline(std::stringstream(ss.str()), first);
  EXPECT_EQ(first, "n,r,p,trials,equality_count,unresolved_count,equality_rate,stderr,seed");
  EXPECT_EQ(parse_sweep_csv(ss), rows);
}

TEST(Experiments, CsvRejectsMalformedRows) {
  std::stringstream bad_header("n,r,p\n");
  EXPECT_THROW(parse_sweep_csv(bad_header), ParseError);
  std::stringstream short_row(std::string(kSweepCsvHeader) + "\n1,2,3\n");
  try {
    parse_sweep_csv(short_row);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  std::stringstream overcount(std::string(kSweepCsvHeader) + "\n5,3,0.5,4,3,2,1,0,1\n");
  EXPECT_THROW(parse_sweep_csv(overcount), ParseError);
}

TEST(Experiments, BisectEdgeCases) {
  auto same = bisect_threshold(8, 3, 0.5, 10, 1, 0.4, 0.4, 5);
  EXPECT_EQ(same.p_estimate, 0.4);
  EXPECT_EQ(same.iterations, 0);
  EXPECT_TRUE(same.evaluations.empty());
  // Equality rate is 1 at both ends, so nothing is bracketed.
  EXPECT_THROW(bisect_threshold(8, 3, 0.5, 10, 1, 0.0, 1.0, 5), PreconditionError);
  EXPECT_THROW(bisect_threshold(8, 3, 0.5, 10, 1, 0.6, 0.4, 5), PreconditionError);
}

TEST(Experiments, BisectNarrowsTheBracket) {
  // Past the sparse regime the rate rises toward 1 as p -> 1.
  const auto lo = estimate_equality_prob(10, 3, 0.45, 200, 11).equality_rate;
  const auto hi = estimate_equality_prob(10, 3, 0.95, 200, 11).equality_rate;
  ASSERT_LT(lo, hi);
  const double target = 0.5 * (lo + hi);
  auto res = bisect_threshold(10, 3, target, 200, 11, 0.45, 0.95, 4);
  EXPECT_EQ(res.iterations, 4);
  EXPECT_DOUBLE_EQ(res.width, 0.5 / 16);
  EXPECT_GE(res.p_estimate, 0.45);
  EXPECT_LE(res.p_estimate, 0.95);
  EXPECT_GT(res.reference_p, 0);
}

TEST(Experiments, WilsonInterval) {
  auto [lo, hi] = wilson_interval(0, 100);
  EXPECT_EQ(lo, 0.0);
  EXPECT_NEAR(hi, 0.037, 1e-3);
  auto [a, b] = wilson_interval(50, 100);
  EXPECT_NEAR(a, 0.4038, 1e-3);
  EXPECT_NEAR(b, 0.5962, 1e-3);
}

TEST(Experiments, StoppingTimeWitnessesVerify) {
  auto rep = stopping_time_study(12, 3, 150, 9, {}, 1, 3);
  EXPECT_EQ(rep.unresolved, 0u);
  for (const auto& w : rep.witnesses) {
    EXPECT_TRUE(w.verified);
    EXPECT_GT(w.t, w.b);
    EXPECT_EQ(w.t, oracle::brute_max_kr_free(w.graph, 3));
  }
  EXPECT_LE(rep.ci.first, rep.failure_rate);
  EXPECT_GE(rep.ci.second, rep.failure_rate);
}

TEST(Experiments, GapCertificateRejectsBadWitness) {
  const Graph k4 = Graph::complete(4);
  EXPECT_FALSE(verify_gap_witness(k4, 3, k4.edges(), 4));  // contains triangles
  const Graph c5 = cycle_graph(5);
  EXPECT_TRUE(verify_gap_witness(c5, 3, c5.edges(), 4));
  EXPECT_FALSE(verify_gap_witness(c5, 3, c5.edges(), 5));
}

TEST(Experiments, CutConjStudyIsDeterministic) {
  auto a = cutconj_study(9, 0.5, 40, 3, 1);
  auto b = cutconj_study(9, 0.5, 40, 3, 3);
  EXPECT_EQ(a.stats, b.stats);
  EXPECT_EQ(a.above_threshold, b.above_threshold);
  for (double s : a.stats) {
    EXPECT_GE(s, 0.0);
    EXPECT_LE(s, 1.0);
  }
}

TEST(Serialize, ConfigRoundTrip) {
  ExperimentConfig c;
  c.n = 11;
  c.r = 4;
  c.p_grid = {0.25, 0.5};
  c.trials = 33;
  c.master_seed = 9;
  c.solver_budget = 1000;
  c.alpha = 0.2;
  auto back = config_from_json(to_json(c));
  EXPECT_EQ(back.n, 11);
  EXPECT_EQ(back.r, 4);
  EXPECT_EQ(back.p_grid, c.p_grid);
  EXPECT_EQ(back.trials, 33u);
  EXPECT_EQ(back.solver_budget, c.solver_budget);
  EXPECT_EQ(back.alpha, c.alpha);
  EXPECT_FALSE(back.delta.has_value());
}

TEST(Serialize, ConfigRejectsUnknownAndInvalid) {
  EXPECT_THROW(config_from_json(Json::parse(R"({"n": 5, "p": 0.5, "trails": 3})")), ParseError);
  EXPECT_THROW(config_from_json(Json::parse(R"({"n": 5, "p": "half"})")), ParseError);
  EXPECT_THROW(config_from_json(Json::parse(R"({"n": 5, "p_grid": [0.5, 0.1]})")), PreconditionError);
}

TEST(Serialize, TailFamilyForms) {
  auto flat = tail_family_from_json(Json::parse(R"({"ground_size": 4, "events": [[0,1],[2,3]]})"));
  EXPECT_TRUE(flat.is_flat());
  EXPECT_EQ(flat.events.size(), 2u);
  auto nested = tail_family_from_json(Json::parse(R"({"ground_size": 4, "events": [[[0],[1,2]],[[3]]]})"));
  EXPECT_FALSE(nested.is_flat());
  EXPECT_EQ(nested.events[0].size(), 2u);
  EXPECT_EQ(to_json(nested), Json::parse(R"({"ground_size": 4, "events": [[[0],[1,2]],[[3]]]})"));
  EXPECT_THROW(tail_family_from_json(Json::parse(R"({"ground_size": 2, "events": [[0,5]]})")), PreconditionError);
  EXPECT_THROW(tail_family_from_json(Json::parse(R"({"events": []})")), ParseError);
}

TEST(Serialize, ResultShapes) {
  const Graph c5 = cycle_graph(5);
  auto j = to_json(turan_gap(c5, 3));
  EXPECT_EQ(j["t"], 5);
  EXPECT_EQ(j["b"], 4);
  EXPECT_EQ(j["gap"], 1);
  const std::vector<Vertex> pinned{0};
  auto fam = enumerate_balanced_cuts(6, 3, 0.2, pinned);
  auto fj = to_json(fam);
  EXPECT_EQ(fj["delta"]["exact"], "1/5");
  EXPECT_EQ(fj["X"], Json::array({0}));
  auto rj = to_json(rigidity_analysis(Graph::complete(6), fam, 0.2));
  EXPECT_TRUE(rj.contains("rigid"));
}

TEST(Experiments, DenseInstanceRerunInPermutedOrder) {
  const auto row = estimate_equality_prob(14, 3, 0.85, 200, 1);
  std::vector<std::uint64_t> order(200);
  std::iota(order.begin(), order.end(), 0);
  std::reverse(order.begin(), order.end());
  std::rotate(order.begin(), order.begin() + 37, order.end());
  std::uint64_t eq = 0, unresolved = 0;
  for (auto k : order) {
    auto outcome = equality_trial(14, 3, 0.85, 1, k);
    eq += outcome == TrialOutcome::equal;
    unresolved += outcome == TrialOutcome::unresolved;
  }
  EXPECT_EQ(row.equality_count, eq);
  EXPECT_EQ(row.unresolved_count, unresolved);
  EXPECT_DOUBLE_EQ(row.equality_rate, static_cast<double>(eq) / static_cast<double>(200 - unresolved));
}

TEST(Experiments, BisectIsReproducible) {
  const double lo = estimate_equality_prob(9, 3, 0.45, 150, 4).equality_rate;
  const double hi = estimate_equality_prob(9, 3, 0.95, 150, 4).equality_rate;
  ASSERT_LT(lo, hi);
  const double target = 0.5 * (lo + hi);
  auto a = bisect_threshold(9, 3, target, 150, 4, 0.45, 0.95, 3);
  auto b = bisect_threshold(9, 3, target, 150, 4, 0.45, 0.95, 3);
  EXPECT_EQ(a.p_estimate, b.p_estimate);
  EXPECT_EQ(a.evaluations, b.evaluations);
  EXPECT_EQ(bisect_threshold(9, 3, 0.5, 10, 1, 1.0, 1.0, 3).p_estimate, 1.0);
}

TEST(Experiments, StoppingAtOrderRIsTheClique) {
  auto rep = stopping_time_study(4, 4, 20, 2);
  EXPECT_EQ(rep.failures, 0u);
  EXPECT_EQ(rep.ci.first, 0.0);
}

TEST(Experiments, CutConjDegenerateProbabilities) {
  auto empty = cutconj_study(8, 0.0, 10, 1);
  for (double s : empty.stats) EXPECT_EQ(s, 0.0);
  auto edge = cutconj_study(2, 1.0, 5, 1);
  for (double s : edge.stats) EXPECT_EQ(s, 1.0);
}
