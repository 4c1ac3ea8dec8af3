#pragma once

// Balanced cut families, defects, bad pairs and vertices, rigidity and crit.
// Thresholds given as doubles are read through decimal(), so 0.1 means 1/10
// and every comparison below is exact.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "turan/constants.hpp"
#include "turan/counting.hpp"
#include "turan/cut.hpp"
#include "turan/error.hpp"
#include "turan/graph.hpp"
#include "turan/rational.hpp"
#include "turan/solvers.hpp"

namespace turan {

struct CutFamily {
  int n = 0;
  int r = 0;
  Rational delta;
  std::vector<Vertex> pinned;  // X, forced into A_1
  std::vector<Cut> members;
};

inline constexpr int kBalancedCutMaxOrder = 14;

/// Every block size s satisfies (1-delta) n/(r-1) < s < (1+delta) n/(r-1).
inline bool is_balanced_cut(const Cut& cut, const Rational& delta) {
  const Rational mean(cut.order(), cut.blocks());
  for (const auto& part : cut.parts()) {
    const Rational s(static_cast<long long>(part.size()));
    if (!(s > (1 - delta) * mean && s < (1 + delta) * mean)) return false;
  }
  return true;
}

/// All ordered balanced (r-1)-cuts with X inside A_1, ordered lexicographically
/// by the block index of vertex 0, 1, ...
inline CutFamily enumerate_balanced_cuts(int n, int r, const Rational& delta, std::span<const Vertex> pinned) {
  detail::require(n >= 1, "enumerate_balanced_cuts: n >= 1");
  detail::require(r >= 2, "enumerate_balanced_cuts: r >= 2");
  detail::require(delta >= 0, "enumerate_balanced_cuts: delta >= 0");
  detail::guard(n <= kBalancedCutMaxOrder, "enumerate_balanced_cuts: realized families need n <= 14");
  CutFamily fam;
  fam.n = n;
  fam.r = r;
  fam.delta = delta;
  fam.pinned.assign(pinned.begin(), pinned.end());
  std::sort(fam.pinned.begin(), fam.pinned.end());
  fam.pinned.erase(std::unique(fam.pinned.begin(), fam.pinned.end()), fam.pinned.end());
  std::vector<bool> forced(static_cast<std::size_t>(n), false);
  for (Vertex x : fam.pinned) {
    detail::require(x >= 0 && x < n, "enumerate_balanced_cuts: pinned vertex out of range");
    forced[static_cast<std::size_t>(x)] = true;
  }
  const int k = r - 1;
  const Rational mean(n, k);
  // Integer size window: lo <= s <= hi.
  long long lo = 0, hi = n;
  while (!(Rational(lo) > (1 - delta) * mean) && lo <= n) ++lo;
  while (!(Rational(hi) < (1 + delta) * mean) && hi >= 0) --hi;
  if (lo > hi) return fam;
  std::vector<int> owner(static_cast<std::size_t>(n), 0);
  std::vector<long long> size(static_cast<std::size_t>(k), 0);
  auto rec = [&](auto& self, int v) -> void {
    if (v == n) {
      for (long long s : size)
        if (s < lo) return;
      fam.members.push_back(Cut::from_assignment(owner, k));
      return;
    }
    long long deficit = 0;
    for (long long s : size) deficit += std::max(0LL, lo - s);
    if (deficit > n - v) return;
    for (int b = 0; b < (forced[static_cast<std::size_t>(v)] ? 1 : k); ++b) {
      if (size[static_cast<std::size_t>(b)] == hi) continue;
      owner[static_cast<std::size_t>(v)] = b;
      ++size[static_cast<std::size_t>(b)];
      self(self, v + 1);
      --size[static_cast<std::size_t>(b)];
    }
  };
  rec(rec, 0);
  return fam;
}

inline CutFamily enumerate_balanced_cuts(int n, int r, double delta, std::span<const Vertex> pinned = {}) {
  return enumerate_balanced_cuts(n, r, decimal(delta), pinned);
}

/// b(C, G): the largest cut in the family.
inline std::size_t family_max(const Graph& g, const CutFamily& family) {
  detail::require(!family.members.empty(), "family_max: empty family");
  std::size_t best = 0;
  for (const Cut& c : family.members) best = std::max(best, cut_edges(g, c));
  return best;
}

/// b_r(G) - |Pi_G|, with b_r from the exact partite solver.
inline std::size_t defect(const Graph& g, const Cut& cut) {
  auto b = max_partite(g, cut.blocks());
  return b.value - cut_edges(g, cut);
}

/// b(C, G) - |Pi_G| for a member of the family.
inline std::size_t defect(const Graph& g, const Cut& cut, const CutFamily& family) {
  detail::require(!family.members.empty(), "defect: empty family");
  detail::require(std::find(family.members.begin(), family.members.end(), cut) != family.members.end(),
                  "defect: cut is not a member of the family");
  return family_max(g, family) - cut_edges(g, cut);
}

/// gamma Lambda_r(n, p) as an exact rational.
inline Rational kappa_threshold(int n, int r, double gamma, double p) {
  return decimal(gamma) * rpow(Rational(n), static_cast<unsigned>(r - 2)) *
         rpow(decimal(p), static_cast<unsigned>(choose2(r) - 1));
}

/// kappa_G(xy, A_2, ..., A_{r-1}).
inline std::uint64_t pair_completions(const Graph& g, const Cut& cut, Vertex x, Vertex y) {
  std::vector<KappaArg> args = {KappaArg::tuple({x, y})};
  for (int i = 1; i < cut.blocks(); ++i) args.push_back(KappaArg::vertices(cut.part(i)));
  return kappa(g, cut.clique_order(), args);
}

/// Q_G(Pi): pairs inside A_1, adjacent or not, with fewer than gamma Lambda_r completions.
inline EdgeList bad_pairs(const Graph& g, const Cut& cut, double gamma, double p) {
  detail::require(gamma > 0, "bad_pairs: gamma > 0");
  detail::require(p >= 0 && p <= 1, "bad_pairs: p in [0,1]");
  detail::require(cut.order() == g.order(), "bad_pairs: cut over a different vertex count");
  const Rational limit = kappa_threshold(g.order(), cut.clique_order(), gamma, p);
  const auto& a1 = cut.part(0);
  EdgeList out;
  for (std::size_t i = 0; i < a1.size(); ++i)
    for (std::size_t j = i + 1; j < a1.size(); ++j)
      if (Rational(static_cast<long long>(pair_completions(g, cut, a1[i], a1[j]))) < limit)
        out.emplace_back(a1[i], a1[j]);
  return out;
}

/// Vertices x of A_1 with D_Pi(x) < c_r n^2 p^2.
inline std::vector<Vertex> bad_vertices(const Graph& g, const Cut& cut, double p, int r) {
  detail::require(p > 0 && p <= 1, "bad_vertices: p in (0,1]");
  detail::require(r == cut.clique_order(), "bad_vertices: r does not match the cut");
  detail::require(cut.order() == g.order(), "bad_vertices: cut over a different vertex count");
  const Rational pr = decimal(p);
  const Rational limit = abc_constants(r).c * g.order() * g.order() * pr * pr;
  std::vector<Vertex> out;
  for (Vertex x : cut.part(0))
    if (Rational(static_cast<long long>(d_pi(g, cut, x))) < limit) out.push_back(x);
  return out;
}

struct RigidityReport {
  std::size_t max_value = 0;
  std::vector<Cut> max_cuts;
  std::uint64_t equivalent_pairs = 0;
  Rational required_pairs;  // (1-alpha) n^2 / (2(r-1))
  bool rigid = false;
  std::optional<std::vector<std::vector<Vertex>>> core;
  std::vector<std::vector<Vertex>> components;
  std::string diagnostic;  // empty, or why a rigid family has no core
};

inline std::vector<Cut> max_cuts(const Graph& g, const CutFamily& family) {
  const std::size_t best = family_max(g, family);
  std::vector<Cut> out;
  for (const Cut& c : family.members)
    if (cut_edges(g, c) == best) out.push_back(c);
  std::sort(out.begin(), out.end());
  return out;
}

inline RigidityReport rigidity_analysis(const Graph& g, const CutFamily& family, const Rational& alpha) {
  if (family.members.empty()) throw PreconditionError("undefined rigidity: empty cut family");
  detail::require(family.n == g.order(), "rigidity_analysis: family over a different vertex count");
  RigidityReport rep;
  rep.max_value = family_max(g, family);
  rep.max_cuts = max_cuts(g, family);
  const int n = g.order();
  // x == y iff they share a block in every max cut: group by the signature.
  std::vector<std::vector<int>> signature(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v)
    for (const Cut& c : rep.max_cuts) signature[static_cast<std::size_t>(v)].push_back(c.part_of(v));
  std::vector<bool> placed(static_cast<std::size_t>(n), false);
  for (Vertex v = 0; v < n; ++v) {
    if (placed[static_cast<std::size_t>(v)]) continue;
    std::vector<Vertex> comp;
    for (Vertex w = v; w < n; ++w)
      if (!placed[static_cast<std::size_t>(w)] && signature[static_cast<std::size_t>(w)] == signature[static_cast<std::size_t>(v)]) {
        placed[static_cast<std::size_t>(w)] = true;
        comp.push_back(w);
      }
    rep.equivalent_pairs += static_cast<std::uint64_t>(choose2(static_cast<long long>(comp.size())));
    rep.components.push_back(std::move(comp));
  }
  const int r = family.r;
  rep.required_pairs = (1 - alpha) * n * n / (2 * (r - 1));
  rep.rigid = Rational(static_cast<long long>(rep.equivalent_pairs)) >= rep.required_pairs;
  if (rep.rigid) {
    std::vector<std::vector<Vertex>> big;
    for (const auto& comp : rep.components)
      if (static_cast<long long>(comp.size()) * r > n) big.push_back(comp);
    if (static_cast<int>(big.size()) == r - 1) {
      rep.core = std::move(big);
    } else {
      rep.diagnostic = "parameter mismatch (alpha, delta): rigid, but " + std::to_string(big.size()) +
                       " components exceed n/r where " + std::to_string(r - 1) + " are needed";
    }
  }
  return rep;
}

inline RigidityReport rigidity_analysis(const Graph& g, const CutFamily& family, double alpha) {
  return rigidity_analysis(g, family, decimal(alpha));
}

/// crit(G): edges of G in ext(Pi) for every max cut Pi of the family.
inline EdgeList crit(const Graph& g, const CutFamily& family) {
  auto best = max_cuts(g, family);
  EdgeList out;
  for (const Edge& e : g.edges())
    if (std::all_of(best.begin(), best.end(), [&](const Cut& c) { return c.crosses(e); })) out.push_back(e);
  return out;
}

/// Edges whose deletion lowers b(C, G).
inline EdgeList crit_by_deletion(const Graph& g, const CutFamily& family) {
  const std::size_t b = family_max(g, family);
  EdgeList out;
  for (const Edge& e : g.edges())
    if (family_max(g.without_edge(e), family) < b) out.push_back(e);
  return out;
}

inline constexpr int kMaxCutBruteForceOrder = 24;

struct OrdinaryMaxCuts {
  std::size_t value = 0;
  std::vector<std::uint32_t> sides;  // bit v set iff v is on the side without vertex 0
};

/// Every maximum 2-cut, by a Gray-code walk over the 2^{n-1} bipartitions.
inline OrdinaryMaxCuts all_ordinary_max_cuts(const Graph& g) {
  const int n = g.order();
  detail::guard(n <= kMaxCutBruteForceOrder, "all_ordinary_max_cuts: n <= 24");
  std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
  for (const Edge& e : g.edges()) {
    adj[static_cast<std::size_t>(e.u)] |= 1u << e.v;
    adj[static_cast<std::size_t>(e.v)] |= 1u << e.u;
  }
  OrdinaryMaxCuts out;
  std::uint32_t side = 0;
  long long value = 0;
  out.sides.push_back(0);
  const std::uint64_t steps = std::uint64_t{1} << (n - 1);
  for (std::uint64_t i = 1; i < steps; ++i) {
    const int v = std::countr_zero(i) + 1;  // vertex 0 never moves
    const std::uint32_t bit = 1u << v;
    const int same = std::popcount(adj[static_cast<std::size_t>(v)] & ((side & bit) ? side : ~side));
    const int other = std::popcount(adj[static_cast<std::size_t>(v)]) - same;
    value += same - other;
    side ^= bit;
    if (static_cast<std::size_t>(value) > out.value) {
      out.value = static_cast<std::size_t>(value);
      out.sides.clear();
    }
    if (static_cast<std::size_t>(value) == out.value) out.sides.push_back(side);
  }
  std::sort(out.sides.begin(), out.sides.end());
  return out;
}

/// max over max cuts and vertices x of (crossing edges at x) / d(x); isolated vertices score 0.
inline double cut_conjecture_stat(const Graph& g) {
  auto cuts = all_ordinary_max_cuts(g);
  const int n = g.order();
  double best = 0;
  for (std::uint32_t side : cuts.sides)
    for (Vertex x = 0; x < n; ++x) {
      const int d = g.degree(x);
      if (d == 0) continue;
      int crossing = 0;
      g.neighbors(x).for_each([&](Vertex y) { crossing += ((side >> x) & 1u) != ((side >> y) & 1u); });
      best = std::max(best, static_cast<double>(crossing) / d);
    }
  return best;
}

}  // namespace turan
