// turanlab: command-line front end for the Turan-number experiments.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "turan/acceptance.hpp"
#include "turan/constants.hpp"
#include "turan/experiments.hpp"
#include "turan/generators.hpp"
#include "turan/graph_io.hpp"
#include "turan/serialize.hpp"
#include "turan/solvers.hpp"
#include "turan/tail_bounds.hpp"

namespace {

using namespace turan;

struct Globals {
  std::uint64_t seed = 1;
  bool seed_given = false;
  unsigned threads = 1;
  bool json = false;
  std::string config;
};

void print_json(const Json& j) { std::cout << j.dump(2) << '\n'; }

Graph load_graph(const std::string& path) {
  if (path == "-") return read_graph(std::cin);
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_graph(in);
}

std::optional<std::uint64_t> budget_or_none(std::uint64_t b) {
  if (b == 0) return std::nullopt;
  return b;
}

// Experiment settings shared by sweep/bisect/stoptime: a config file supplies
// defaults and explicit flags override it.
struct StudyArgs {
  int n = 10;
  int r = 3;
  std::uint64_t trials = 100;
  std::uint64_t budget = 0;
  std::vector<double> p_grid;
  std::optional<double> p;
  std::string output;
};

ExperimentConfig resolve(const Globals& g, const StudyArgs& a, const CLI::App& sub) {
  ExperimentConfig c;
  if (!g.config.empty()) c = load_config(g.config);
  auto given = [&](const char* name) {
    const auto* opt = sub.get_option_no_throw(name);
    return opt != nullptr && opt->count() > 0;
  };
  if (given("--n") || g.config.empty()) c.n = a.n;
  if (given("--r") || g.config.empty()) c.r = a.r;
  if (given("--trials") || g.config.empty()) c.trials = a.trials;
  if (given("--budget")) c.solver_budget = budget_or_none(a.budget);
  if (given("--p-grid")) {
    c.p_grid = a.p_grid;
    c.p.reset();
  }
  if (given("--p")) {
    c.p = a.p;
    c.p_grid.clear();
  }
  if (given("--output")) c.output = a.output;
  if (g.seed_given || g.config.empty()) c.master_seed = g.seed;
  return c;
}

void add_study_options(CLI::App* sub, StudyArgs& a, bool with_grid) {
  sub->add_option("--n", a.n, "number of vertices");
  sub->add_option("--r", a.r, "clique order r (r >= 3)");
  sub->add_option("--trials", a.trials, "trials per point");
  sub->add_option("--budget", a.budget, "solver node limit per solve (0 = none)");
  if (with_grid) {
    sub->add_option("--p-grid", a.p_grid, "strictly increasing edge probabilities")->delimiter(',');
    sub->add_option("--p", a.p, "single edge probability");
    sub->add_option("-o,--output", a.output, "CSV output path (default: stdout)");
  }
}

int run(int argc, char** argv) {
  CLI::App app{"Exact Turan-number and partite-number experiments on G(n,p)"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--seed", g.seed, "master seed")->each([&](const std::string&) { g.seed_given = true; });
  app.add_option("--threads", g.threads, "worker threads (0 = all cores); results do not depend on it");
  app.add_flag("--json", g.json, "emit JSON instead of text");
  app.add_option("--config", g.config, "JSON experiment config (ExperimentConfig field names)");

  // sample
  auto* sample = app.add_subcommand("sample", "draw a random graph and print it as an edge list");
  int s_n = 10;
  double s_p = 0.5;
  std::optional<std::uint64_t> s_m;
  sample->add_option("--n", s_n, "number of vertices")->required();
  sample->add_option("--p", s_p, "edge probability (G(n,p))");
  sample->add_option("--m", s_m, "exact edge count (G(n,m)) instead of --p");

  // solve
  auto* solve = app.add_subcommand("solve", "compute t_r and b_r of a graph");
  std::string v_graph = "-";
  int v_r = 3;
  std::uint64_t v_budget = 0;
  solve->add_option("graph", v_graph, "edge-list file, '-' for stdin");
  solve->add_option("--r", v_r, "clique order r")->required();
  solve->add_option("--budget", v_budget, "solver node limit (0 = none)");

  // sweep / bisect / stoptime
  auto* sweep_cmd = app.add_subcommand("sweep", "estimate Pr(t_r = b_r) over a grid of p");
  StudyArgs sw;
  add_study_options(sweep_cmd, sw, true);

  auto* bisect = app.add_subcommand("bisect", "bisect for the p where the equality rate reaches a target");
  StudyArgs bi;
  double b_target = 0.5, b_lo = 0.5, b_hi = 1.0;
  int b_iters = 6;
  add_study_options(bisect, bi, false);
  bisect->add_option("--target", b_target, "target equality rate in (0,1)");
  bisect->add_option("--lo", b_lo, "lower end, above the sparse trivial-equality regime");
  bisect->add_option("--hi", b_hi, "upper end");
  bisect->add_option("--iters", b_iters, "bisection steps");

  auto* stoptime = app.add_subcommand("stoptime", "run the clique stopping-time process and look for t_r > b_r");
  StudyArgs st;
  std::size_t st_witnesses = 3;
  add_study_options(stoptime, st, false);
  stoptime->add_option("--witnesses", st_witnesses, "failure witnesses to print");

  auto* cutconj = app.add_subcommand("cutconj", "distribution of the max-cut intersection statistic");
  int c_n = 12;
  double c_p = 0.5;
  std::uint64_t c_trials = 100;
  cutconj->add_option("--n", c_n, "number of vertices (<= 24)");
  cutconj->add_option("--p", c_p, "edge probability");
  cutconj->add_option("--trials", c_trials, "trials");

  // bounds
  auto* bounds = app.add_subcommand("bounds", "lower-tail bounds for a family, or the derived parameter set");
  std::string t_family;
  std::vector<int> t_clique;
  double t_p = 0.5;
  std::vector<double> t_fractions{0.25, 0.5, 0.75};
  std::uint64_t t_trials = 0;
  bool t_params = false;
  int t_n = 100, t_r = 4;
  double t_C = 1.0;
  std::optional<double> t_gamma;
  double t_delta = 0.1, t_alpha = 0.2;
  bounds->add_option("--family", t_family, "tail family JSON file {ground_size, events}");
  bounds->add_option("--clique", t_clique, "n,s: the K_s-copies family of K_n")->delimiter(',')->expected(2);
  bounds->add_option("--p", t_p, "edge/element probability");
  bounds->add_option("--t", t_fractions, "deviations as fractions of mu")->delimiter(',');
  bounds->add_option("--trials", t_trials, "also estimate Pr(X <= mu - t) by Monte Carlo");
  bounds->add_flag("--params", t_params, "print the parameter set for (n, r, p) instead");
  bounds->add_option("--n", t_n, "with --params: n");
  bounds->add_option("--r", t_r, "with --params: r");
  bounds->add_option("--C", t_C, "with --params: threshold constant C");
  bounds->add_option("--gamma", t_gamma, "with --params: gamma (default gamma_max/2)");
  bounds->add_option("--delta", t_delta, "with --params: delta");
  bounds->add_option("--alpha", t_alpha, "with --params: alpha");

  auto* verify = app.add_subcommand("verify", "run acceptance criteria by id (default: all)");
  std::vector<std::string> suites;
  verify->add_option("suites", suites, "criterion ids: complete oracle observation hij constants janson trw "
                                       "deltabar counting rigidity coloring endpoints stoptime all");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }
  const unsigned threads = resolve_threads(g.threads);

  if (*sample) {
    const Graph graph = s_m ? sample_gnm(s_n, *s_m, g.seed) : sample_gnp(s_n, s_p, g.seed);
    if (g.json) print_json({{"n", graph.order()}, {"m", graph.size()}, {"seed", g.seed}, {"edges", edges_json(graph.edges())}});
    else std::cout << write_graph(graph);
    return 0;
  }

  if (*solve) {
    const Graph graph = load_graph(v_graph);
    const auto tg = turan_gap(graph, v_r, SolveOptions{budget_or_none(v_budget)});
    if (g.json) {
      print_json(to_json(tg));
    } else {
      std::cout << "n=" << graph.order() << " m=" << graph.size() << " r=" << v_r << '\n'
                << "t_r=" << tg.t() << (tg.kr_free.optimal ? "" : " (budget hit, lower bound)") << '\n'
                << "b_r=" << tg.b() << (tg.partite.optimal ? "" : " (budget hit, lower bound)") << '\n';
      if (auto gap = tg.gap()) std::cout << "gap=" << *gap << (*gap == 0 ? " (equal)" : "") << '\n';
      else std::cout << "gap=unresolved\n";
    }
    return tg.resolved() ? 0 : 3;
  }

  if (*sweep_cmd) {
    const auto cfg = resolve(g, sw, *sweep_cmd);
    const auto rows = sweep(cfg, threads);
    if (g.json) {
      Json j{{"config", to_json(cfg)}, {"rows", Json::array()}};
      for (const auto& r : rows) j["rows"].push_back(to_json(r));
      print_json(j);
    } else if (cfg.output.empty()) {
      write_sweep_csv(std::cout, rows);
    } else {
      std::ofstream out(cfg.output);
      if (!out) throw std::runtime_error("cannot write " + cfg.output);
      write_sweep_csv(out, rows);
      std::cerr << rows.size() << " rows written to " << cfg.output << '\n';
    }
    return 0;
  }

  if (*bisect) {
    const auto cfg = resolve(g, bi, *bisect);
    const auto res = bisect_threshold(cfg.n, cfg.r, b_target, cfg.trials, cfg.master_seed, b_lo, b_hi, b_iters,
                                      cfg.solve_options(), threads);
    if (g.json) {
      Json evals = Json::array();
      for (const auto& r : res.evaluations) evals.push_back(to_json(r));
      print_json({{"p_estimate", res.p_estimate},
                  {"bracket", {res.lo, res.hi}},
                  {"width", res.width},
                  {"iterations", res.iterations},
                  {"reference_p", res.reference_p},
                  {"evaluations", evals}});
    } else {
      for (const auto& r : res.evaluations)
        std::cout << "p=" << format_real(r.p) << " rate=" << format_real(r.equality_rate) << '\n';
      std::cout << "estimate p=" << format_real(res.p_estimate) << " bracket [" << format_real(res.lo) << ", "
                << format_real(res.hi) << "] width " << format_real(res.width) << '\n'
                << "reference threshold formula (C=1): " << format_real(res.reference_p) << '\n';
    }
    return 0;
  }

  if (*stoptime) {
    const auto cfg = resolve(g, st, *stoptime);
    const auto rep = stopping_time_study(cfg.n, cfg.r, cfg.trials, cfg.master_seed, cfg.solve_options(), threads,
                                         st_witnesses);
    if (g.json) {
      print_json(to_json(rep));
    } else {
      std::cout << "n=" << rep.n << " r=" << rep.r << " trials=" << rep.trials << '\n'
                << "failures=" << rep.failures << " unresolved=" << rep.unresolved
                << " rate=" << format_real(rep.failure_rate) << " 95% CI [" << rep.ci.first << ", " << rep.ci.second
                << "]\n";
      for (const auto& w : rep.witnesses)
        std::cout << "trial " << w.trial << ": t=" << w.t << " b=" << w.b
                  << (w.verified ? " (re-verified)" : " (VERIFICATION FAILED)") << '\n'
                  << write_graph(w.graph);
    }
    for (const auto& w : rep.witnesses)
      if (!w.verified) return 1;
    return 0;
  }

  if (*cutconj) {
    const auto rep = cutconj_study(c_n, c_p, c_trials, g.seed, threads);
    if (g.json) {
      print_json({{"n", rep.n}, {"p", rep.p}, {"trials", rep.trials}, {"mean", rep.mean}, {"max", rep.max},
                  {"above_0.51", rep.above_threshold}, {"fraction_above", rep.fraction_above},
                  {"ci95", {rep.ci.first, rep.ci.second}}, {"stats", rep.stats}});
    } else {
      std::cout << "n=" << rep.n << " p=" << format_real(rep.p) << " trials=" << rep.trials << '\n'
                << "mean=" << rep.mean << " max=" << rep.max << '\n'
                << "fraction > 0.51: " << rep.fraction_above << " 95% CI [" << rep.ci.first << ", " << rep.ci.second
                << "]\n";
    }
    return 0;
  }

  if (*bounds) {
    if (t_params) {
      const auto ps = make_params(ParamInput{t_n, t_r, t_p, t_C, t_delta, t_gamma, t_alpha});
      if (g.json) {
        print_json(to_json(ps));
      } else {
        const Json j = to_json(ps);
        for (const auto& [k, v] : j.items())
          std::cout << k << " = " << (v.is_object() ? v.at("exact").get<std::string>() : v.dump()) << '\n';
      }
      return 0;
    }
    TailFamily fam;
    if (!t_family.empty()) fam = tail_family_from_json(read_json_file(t_family));
    else if (t_clique.size() == 2) fam = clique_family(t_clique[0], t_clique[1]);
    else throw PreconditionError("bounds: give --family, --clique n,s or --params");
    const auto s = family_stats(fam, t_p);
    Json rows = Json::array();
    for (double f : t_fractions) {
      const double t = f * s.mu;
      Json row{{"fraction", f}, {"t", t}, {"janson", janson_bound(s.input(t))}, {"trw", trw_bound(s.input(t))}};
      if (t_trials > 0) {
        const auto e = empirical_lower_tail(fam, t_p, t, t_trials, g.seed, threads);
        row["empirical"] = e.estimate;
        row["stderr"] = e.std_error;
      }
      rows.push_back(row);
    }
    Json j{{"events", fam.event_count()}, {"ground_size", fam.ground_size}, {"p", t_p},
           {"mu", s.mu}, {"delta_bar", s.delta_bar}, {"theta_bar", s.theta_bar},
           {"gamma_overlap", s.gamma_overlap}, {"theta_fallback", s.theta_fallback}, {"tail", rows}};
    if (g.json) {
      print_json(j);
    } else {
      std::cout << "events=" << fam.event_count() << " mu=" << s.mu << " delta_bar=" << s.delta_bar
                << " theta_bar=" << s.theta_bar << (s.theta_fallback ? " (fallback)" : "") << '\n';
      for (const auto& row : rows) {
        std::cout << "t=" << row["t"].get<double>() << " janson<=" << row["janson"].get<double>()
                  << " trw<=" << row["trw"].get<double>();
        if (row.contains("empirical"))
          std::cout << " empirical=" << row["empirical"].get<double>() << " (se " << row["stderr"].get<double>() << ")";
        std::cout << '\n';
      }
    }
    return 0;
  }

  if (*verify) {
    for (const auto& id : suites)
      if (!acceptance::known_id(id)) throw PreconditionError("verify: unknown suite '" + id + "'");
    const auto results = acceptance::run(suites, threads, g.json ? nullptr : &std::cout);
    int failed = 0;
    for (const auto& r : results) failed += !r.outcome.passed;
    if (g.json) {
      Json j = Json::array();
      for (const auto& r : results)
        j.push_back({{"criterion", r.number}, {"id", r.id}, {"passed", r.outcome.passed},
                     {"flagged", r.outcome.flagged}, {"detail", r.outcome.detail}, {"seconds", r.seconds}});
      print_json(j);
    }
    return failed == 0 ? 0 : 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "turanlab: " << e.what() << '\n';
    return 2;
  }
}
