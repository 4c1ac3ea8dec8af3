#pragma once

// Seeded batch experiments over G(n,p). Trial k of any study draws its graph
// from derive_seed(seed, k); every grid point of a sweep reuses the same
// master seed, so neighbouring rows are driven by the same uniforms.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "turan/constants.hpp"
#include "turan/cut_analysis.hpp"
#include "turan/error.hpp"
#include "turan/generators.hpp"
#include "turan/graph_io.hpp"
#include "turan/oracles.hpp"
#include "turan/parallel.hpp"
#include "turan/rng.hpp"
#include "turan/solvers.hpp"

namespace turan {

struct ExperimentConfig {
  int n = 10;
  int r = 3;
  std::vector<double> p_grid;
  std::optional<double> p;
  std::uint64_t trials = 100;
  std::uint64_t master_seed = 1;
  std::optional<std::uint64_t> solver_budget;  // node limit per solve
  std::optional<double> delta;
  std::optional<double> alpha;
  std::optional<double> gamma;
  std::string output;  // empty: standard output

  /// The grid to sweep: p_grid, or the single p.
  std::vector<double> grid() const {
    if (!p_grid.empty()) return p_grid;
    if (p) return {*p};
    return {};
  }

  void validate() const {
    detail::require(n >= 1, "config: n >= 1");
    detail::require(r >= 3, "config: r >= 3");
    detail::require(trials >= 1, "config: trials >= 1");
    const auto g = grid();
    detail::require(!g.empty(), "config: give p or p_grid");
    for (std::size_t i = 0; i < g.size(); ++i) {
      detail::require(g[i] >= 0 && g[i] <= 1, "config: grid values must lie in [0,1]");
      detail::require(i == 0 || g[i] > g[i - 1], "config: grid must be strictly increasing");
    }
  }

  SolveOptions solve_options() const { return SolveOptions{solver_budget}; }
};

enum class TrialOutcome { equal, gap, unresolved };

inline TrialOutcome equality_trial(int n, int r, double p, std::uint64_t seed, std::uint64_t k, SolveOptions opts = {}) {
  const Graph g = sample_gnp(n, p, derive_seed(seed, k));
  const auto tg = turan_gap(g, r, opts);
  if (!tg.resolved()) return TrialOutcome::unresolved;
  return *tg.gap() == 0 ? TrialOutcome::equal : TrialOutcome::gap;
}

struct SweepRow {
  int n = 0;
  int r = 0;
  double p = 0;
  std::uint64_t trials = 0;
  std::uint64_t equality_count = 0;
  std::uint64_t unresolved_count = 0;
  double equality_rate = 0;  // equality_count / (trials - unresolved_count)
  double stderr_ = 0;
  std::uint64_t seed = 0;

  std::uint64_t failures() const { return trials - equality_count - unresolved_count; }
  friend bool operator==(const SweepRow&, const SweepRow&) = default;
};

namespace detail {
struct OutcomeCounts {
  std::uint64_t equal = 0, unresolved = 0;
  OutcomeCounts operator+(const OutcomeCounts& o) const { return {equal + o.equal, unresolved + o.unresolved}; }
};
}  // namespace detail

/// Pr(t_r = b_r) on G(n,p) with a binomial standard error. Budget-hit
/// trials are excluded from the rate and reported in unresolved_count.
inline SweepRow estimate_equality_prob(int n, int r, double p, std::uint64_t trials, std::uint64_t seed,
                                       SolveOptions opts = {}, unsigned threads = 1) {
  detail::require(trials >= 1, "estimate_equality_prob: trials >= 1");
  detail::require(p >= 0 && p <= 1, "estimate_equality_prob: p in [0,1]");
  auto counts = parallel_reduce(trials, threads, detail::OutcomeCounts{}, [&](std::uint64_t k) {
    switch (equality_trial(n, r, p, seed, k, opts)) {
      case TrialOutcome::equal: return detail::OutcomeCounts{1, 0};
      case TrialOutcome::unresolved: return detail::OutcomeCounts{0, 1};
      default: return detail::OutcomeCounts{};
    }
  }, [](detail::OutcomeCounts a, const detail::OutcomeCounts& b) { return a + b; });
  if (counts.unresolved == trials)
    throw std::runtime_error("estimate_equality_prob: every trial exhausted the solver budget");
  SweepRow row;
  row.n = n;
  row.r = r;
  row.p = p;
  row.trials = trials;
  row.equality_count = counts.equal;
  row.unresolved_count = counts.unresolved;
  const double resolved = static_cast<double>(trials - counts.unresolved);
  row.equality_rate = static_cast<double>(counts.equal) / resolved;
  row.stderr_ = std::sqrt(row.equality_rate * (1 - row.equality_rate) / resolved);
  row.seed = seed;
  return row;
}

inline std::vector<SweepRow> sweep(const ExperimentConfig& cfg, unsigned threads = 1) {
  cfg.validate();
  std::vector<SweepRow> rows;
  for (double p : cfg.grid())
    rows.push_back(estimate_equality_prob(cfg.n, cfg.r, p, cfg.trials, cfg.master_seed, cfg.solve_options(), threads));
  return rows;
}

inline constexpr const char* kSweepCsvHeader = "n,r,p,trials,equality_count,unresolved_count,equality_rate,stderr,seed";

/// Shortest decimal that reads back as the same double.
inline std::string format_real(double x) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, end);
}

inline void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << kSweepCsvHeader << '\n';
  for (const auto& r : rows)
    out << r.n << ',' << r.r << ',' << format_real(r.p) << ',' << r.trials << ',' << r.equality_count << ','
        << r.unresolved_count << ',' << format_real(r.equality_rate) << ',' << format_real(r.stderr_) << ','
        << r.seed << '\n';
}

inline std::vector<SweepRow> parse_sweep_csv(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  if (!std::getline(in, line)) throw ParseError(1, "empty CSV");
  ++line_no;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kSweepCsvHeader) throw ParseError(1, "unexpected CSV header");
  std::vector<SweepRow> rows;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string_view> cells;
    std::string_view rest(line);
    for (std::size_t pos; (pos = rest.find(',')) != std::string_view::npos; rest.remove_prefix(pos + 1))
      cells.push_back(rest.substr(0, pos));
    cells.push_back(rest);
    if (cells.size() != 9) throw ParseError(line_no, "expected 9 fields");
    auto u64 = [&](std::string_view s) {
      std::uint64_t v = 0;
      auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
      if (ec != std::errc() || p != s.data() + s.size()) throw ParseError(line_no, "bad integer '" + std::string(s) + "'");
      return v;
    };
    auto real = [&](std::string_view s) {
      double v = 0;
      auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
      if (ec != std::errc() || p != s.data() + s.size()) throw ParseError(line_no, "bad number '" + std::string(s) + "'");
      return v;
    };
    SweepRow r;
    r.n = static_cast<int>(u64(cells[0]));
    r.r = static_cast<int>(u64(cells[1]));
    r.p = real(cells[2]);
    r.trials = u64(cells[3]);
    r.equality_count = u64(cells[4]);
    r.unresolved_count = u64(cells[5]);
    r.equality_rate = real(cells[6]);
    r.stderr_ = real(cells[7]);
    r.seed = u64(cells[8]);
    if (r.equality_count + r.unresolved_count > r.trials) throw ParseError(line_no, "counts exceed trials");
    rows.push_back(r);
  }
  return rows;
}

struct BisectResult {
  double p_estimate = 0;
  double lo = 0;
  double hi = 0;
  double width = 0;
  int iterations = 0;
  double reference_p = 0;  // threshold formula with C = 1, for comparison only
  std::vector<SweepRow> evaluations;
};

/// Bisects [lo, hi] for the p where the equality rate crosses `target`,
/// assuming rate(lo) < target <= rate(hi) and a near-monotone rate between.
/// The rate is not monotone over all of [0,1] (it is 1 for very sparse
/// graphs), so callers pick lo above that regime.
inline BisectResult bisect_threshold(int n, int r, double target, std::uint64_t trials, std::uint64_t seed,
                                     double lo, double hi, int max_iters, SolveOptions opts = {}, unsigned threads = 1) {
  detail::require(target > 0 && target < 1, "bisect_threshold: target in (0,1)");
  detail::require(0 <= lo && lo <= hi && hi <= 1, "bisect_threshold: need 0 <= lo <= hi <= 1");
  detail::require(max_iters >= 0, "bisect_threshold: max_iters >= 0");
  BisectResult out;
  out.reference_p = n >= 3 ? threshold_p(n, r, 1.0) : 0;
  out.lo = lo;
  out.hi = hi;
  if (lo == hi) {
    out.p_estimate = lo;
    return out;
  }
  auto rate = [&](double p) {
    out.evaluations.push_back(estimate_equality_prob(n, r, p, trials, seed, opts, threads));
    return out.evaluations.back().equality_rate;
  };
  const double at_lo = rate(lo), at_hi = rate(hi);
  if (!(at_lo < target) || !(at_hi >= target))
    throw PreconditionError("bisect_threshold: [lo, hi] does not bracket the target rate (rate(lo) = " +
                            format_real(at_lo) + ", rate(hi) = " + format_real(at_hi) + ")");
  for (; out.iterations < max_iters; ++out.iterations) {
    const double mid = 0.5 * (out.lo + out.hi);
    if (rate(mid) < target) out.lo = mid;
    else out.hi = mid;
  }
  out.p_estimate = 0.5 * (out.lo + out.hi);
  out.width = out.hi - out.lo;
  return out;
}

/// Wilson score interval for k successes in m trials.
inline std::pair<double, double> wilson_interval(std::uint64_t k, std::uint64_t m, double z = 1.96) {
  detail::require(m > 0 && k <= m, "wilson_interval: need 0 <= k <= m, m > 0");
  const double n = static_cast<double>(m), ph = static_cast<double>(k) / n, z2 = z * z;
  const double centre = (ph + z2 / (2 * n)) / (1 + z2 / n);
  const double half = z * std::sqrt(ph * (1 - ph) / n + z2 / (4 * n * n)) / (1 + z2 / n);
  return {std::max(0.0, centre - half), std::min(1.0, centre + half)};
}

struct StoppingWitness {
  std::uint64_t trial = 0;
  Graph graph{1};
  std::size_t t = 0;
  std::size_t b = 0;
  EdgeList kr_free_witness;
  bool verified = false;  // independent recheck that t > b
};

struct StoppingReport {
  int n = 0;
  int r = 0;
  std::uint64_t trials = 0;
  std::uint64_t failures = 0;
  std::uint64_t unresolved = 0;
  double failure_rate = 0;
  std::pair<double, double> ci;  // Wilson 95%
  std::vector<StoppingWitness> witnesses;
  std::size_t max_witnesses = 0;
};

/// Recheck a claimed failure without the solvers: the witness is a K_r-free
/// subgraph by direct scan, and b_r is recomputed by brute force over all
/// (r-1)-colourings.
inline bool verify_gap_witness(const Graph& g, int r, const EdgeList& kr_free, std::size_t claimed_b) {
  if (!oracle::is_kr_free_subgraph(g, kr_free, r)) return false;
  const std::size_t b = oracle::brute_max_partite(g, r - 1).value;
  return b == claimed_b && kr_free.size() > b;
}

inline StoppingReport stopping_time_study(int n, int r, std::uint64_t trials, std::uint64_t seed, SolveOptions opts = {},
                                          unsigned threads = 1, std::size_t max_witnesses = 5) {
  detail::require(trials >= 1, "stopping_time_study: trials >= 1");
  struct Result {
    TrialOutcome outcome = TrialOutcome::equal;
    std::optional<StoppingWitness> witness;
  };
  auto results = parallel_map(trials, threads, [&](std::uint64_t k) {
    auto run = stopping_time_process(n, r, derive_seed(seed, k));
    auto tg = turan_gap(run.graph, r, opts);
    Result res;
    if (!tg.resolved()) {
      res.outcome = TrialOutcome::unresolved;
    } else if (*tg.gap() > 0) {
      res.outcome = TrialOutcome::gap;
      StoppingWitness w;
      w.trial = k;
      w.graph = run.graph;
      w.t = tg.t();
      w.b = tg.b();
      w.kr_free_witness = tg.kr_free.witness_edges;
      res.witness = std::move(w);
    }
    return res;
  });
  StoppingReport rep;
  rep.n = n;
  rep.r = r;
  rep.trials = trials;
  rep.max_witnesses = max_witnesses;
  for (auto& res : results) {
    if (res.outcome == TrialOutcome::unresolved) ++rep.unresolved;
    if (res.outcome != TrialOutcome::gap) continue;
    ++rep.failures;
    if (rep.witnesses.size() < max_witnesses) {
      res.witness->verified = verify_gap_witness(res.witness->graph, r, res.witness->kr_free_witness, res.witness->b);
      rep.witnesses.push_back(std::move(*res.witness));
    }
  }
  const std::uint64_t resolved = trials - rep.unresolved;
  if (resolved > 0) {
    rep.failure_rate = static_cast<double>(rep.failures) / static_cast<double>(resolved);
    rep.ci = wilson_interval(rep.failures, resolved);
  }
  return rep;
}

struct CutConjReport {
  int n = 0;
  double p = 0;
  std::uint64_t trials = 0;
  std::vector<double> stats;  // per trial, in trial order
  double mean = 0;
  double max = 0;
  std::uint64_t above_threshold = 0;  // stat > 0.51
  double fraction_above = 0;
  std::pair<double, double> ci;
};

inline CutConjReport cutconj_study(int n, double p, std::uint64_t trials, std::uint64_t seed, unsigned threads = 1) {
  detail::require(trials >= 1, "cutconj_study: trials >= 1");
  CutConjReport rep;
  rep.n = n;
  rep.p = p;
  rep.trials = trials;
  rep.stats = parallel_map(trials, threads, [&](std::uint64_t k) {
    return cut_conjecture_stat(sample_gnp(n, p, derive_seed(seed, k)));
  });
  for (double s : rep.stats) {
    rep.mean += s;
    rep.max = std::max(rep.max, s);
    rep.above_threshold += s > 0.51;
  }
  rep.mean /= static_cast<double>(trials);
  rep.fraction_above = static_cast<double>(rep.above_threshold) / static_cast<double>(trials);
  rep.ci = wilson_interval(rep.above_threshold, trials);
  return rep;
}

}  // namespace turan
