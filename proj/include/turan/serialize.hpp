#pragma once

// JSON views of result types, plus loaders for experiment configs and tail
// families. Rationals are written as "num/den" strings next to a double.

#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "turan/constants.hpp"
#include "turan/cut_analysis.hpp"
#include "turan/error.hpp"
#include "turan/experiments.hpp"
#include "turan/solvers.hpp"
#include "turan/tail_bounds.hpp"

namespace turan {

using Json = nlohmann::ordered_json;

inline Json rational_json(const Rational& q) {
  return Json{{"exact", q.str()}, {"value", to_double(q)}};
}

inline Json edges_json(const EdgeList& edges) {
  Json a = Json::array();
  for (const Edge& e : edges) a.push_back({e.u, e.v});
  return a;
}

inline Json cut_json(const Cut& c) { return c.parts(); }

inline Json to_json(const SolveResult& s) {
  Json j{{"value", s.value}, {"optimal", s.optimal}, {"nodes_explored", s.nodes_explored},
         {"time_budget_hit", s.time_budget_hit}};
  if (!s.witness_edges.empty()) j["witness_edges"] = edges_json(s.witness_edges);
  if (s.witness_cut) j["witness_cut"] = cut_json(*s.witness_cut);
  return j;
}

inline Json to_json(const TuranGap& g) {
  Json j{{"t", g.t()}, {"b", g.b()}, {"resolved", g.resolved()}};
  if (auto gap = g.gap()) j["gap"] = *gap;
  else j["gap"] = nullptr;
  j["kr_free"] = to_json(g.kr_free);
  j["partite"] = to_json(g.partite);
  return j;
}

inline Json to_json(const RigidityReport& r) {
  Json cuts = Json::array();
  for (const Cut& c : r.max_cuts) cuts.push_back(cut_json(c));
  Json j{{"max_value", r.max_value},           {"max_cut_count", r.max_cuts.size()},
         {"max_cuts", cuts},                   {"equivalent_pairs", r.equivalent_pairs},
         {"required_pairs", rational_json(r.required_pairs)}, {"rigid", r.rigid},
         {"components", r.components}};
  j["core"] = r.core ? Json(*r.core) : Json(nullptr);
  if (!r.diagnostic.empty()) j["diagnostic"] = r.diagnostic;
  return j;
}

inline Json to_json(const ParamSet& p) {
  Json j{{"n", p.n},         {"r", p.r},           {"p", p.p},         {"C", p.C},
         {"delta", p.delta}, {"gamma", p.gamma},   {"alpha", p.alpha}, {"zeta", p.zeta},
         {"lambda", p.lambda}, {"sigma", p.sigma}, {"threshold", p.threshold}};
  if (p.abc) {
    j["a"] = rational_json(p.abc->a);
    j["b"] = rational_json(p.abc->b);
    j["c"] = rational_json(p.abc->c);
    j["gamma_max"] = rational_json(p.abc->gamma_max);
  }
  return j;
}

inline Json to_json(const CutFamily& f) {
  return Json{{"n", f.n}, {"r", f.r}, {"delta", rational_json(f.delta)}, {"X", f.pinned},
              {"size", f.members.size()}};
}

inline Json to_json(const SweepRow& r) {
  return Json{{"n", r.n},
              {"r", r.r},
              {"p", r.p},
              {"trials", r.trials},
              {"equality_count", r.equality_count},
              {"unresolved_count", r.unresolved_count},
              {"equality_rate", r.equality_rate},
              {"stderr", r.stderr_},
              {"seed", r.seed}};
}

inline Json to_json(const ExperimentConfig& c) {
  Json j{{"n", c.n}, {"r", c.r}, {"p_grid", c.p_grid}, {"trials", c.trials}, {"master_seed", c.master_seed}};
  if (c.p) j["p"] = *c.p;
  if (c.solver_budget) j["solver_budget"] = *c.solver_budget;
  if (c.delta) j["delta"] = *c.delta;
  if (c.alpha) j["alpha"] = *c.alpha;
  if (c.gamma) j["gamma"] = *c.gamma;
  if (!c.output.empty()) j["output"] = c.output;
  return j;
}

/// Reads the fields of ExperimentConfig by name; unknown keys are rejected
/// so that a misspelled field does not silently fall back to a default.
inline ExperimentConfig config_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError(1, "config: expected a JSON object");
  static const std::vector<std::string> known{"n",     "r",     "p_grid", "p",     "trials", "master_seed",
                                              "solver_budget", "delta", "alpha", "gamma", "output"};
  for (auto it = j.begin(); it != j.end(); ++it)
    if (std::find(known.begin(), known.end(), it.key()) == known.end())
      throw ParseError(1, "config: unknown field '" + it.key() + "'");
  ExperimentConfig c;
  try {
    if (j.contains("n")) c.n = j.at("n").get<int>();
    if (j.contains("r")) c.r = j.at("r").get<int>();
    if (j.contains("p_grid")) c.p_grid = j.at("p_grid").get<std::vector<double>>();
    if (j.contains("p")) c.p = j.at("p").get<double>();
    if (j.contains("trials")) c.trials = j.at("trials").get<std::uint64_t>();
    if (j.contains("master_seed")) c.master_seed = j.at("master_seed").get<std::uint64_t>();
    if (j.contains("solver_budget") && !j.at("solver_budget").is_null())
      c.solver_budget = j.at("solver_budget").get<std::uint64_t>();
    if (j.contains("delta")) c.delta = j.at("delta").get<double>();
    if (j.contains("alpha")) c.alpha = j.at("alpha").get<double>();
    if (j.contains("gamma")) c.gamma = j.at("gamma").get<double>();
    if (j.contains("output")) c.output = j.at("output").get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(1, std::string("config: ") + e.what());
  }
  c.validate();
  return c;
}

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(1, std::string(path) + ": " + e.what());
  }
}

inline ExperimentConfig load_config(const std::string& path) { return config_from_json(read_json_file(path)); }

/// {"ground_size": N, "events": [...]}. Each event is either a list of
/// ground elements (one set) or a list of such lists (a disjunction).
inline TailFamily tail_family_from_json(const Json& j) {
  try {
    TailFamily f;
    f.ground_size = j.at("ground_size").get<int>();
    for (const Json& ev : j.at("events")) {
      if (!ev.is_array()) throw ParseError(1, "tail family: each event must be an array");
      if (!ev.empty() && ev.front().is_array()) f.events.push_back(ev.get<std::vector<std::vector<int>>>());
      else f.events.push_back({ev.get<std::vector<int>>()});
    }
    f.validate();
    return f;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(1, std::string("tail family: ") + e.what());
  }
}

inline Json to_json(const TailFamily& f) {
  Json ev = Json::array();
  for (const auto& e : f.events) ev.push_back(f.is_flat() ? Json(e.front()) : Json(e));
  return Json{{"ground_size", f.ground_size}, {"events", ev}};
}

inline Json to_json(const StoppingReport& s) {
  Json w = Json::array();
  for (const auto& x : s.witnesses)
    w.push_back({{"trial", x.trial}, {"t", x.t}, {"b", x.b}, {"verified", x.verified},
                 {"edges", edges_json(x.graph.edges())}});
  return Json{{"n", s.n},
              {"r", s.r},
              {"trials", s.trials},
              {"failures", s.failures},
              {"unresolved", s.unresolved},
              {"failure_rate", s.failure_rate},
              {"ci95", {s.ci.first, s.ci.second}},
              {"witnesses", w}};
}

}  // namespace turan
