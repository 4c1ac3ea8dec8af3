#pragma once

// Completion counts for K_r and K_r^- patterns.
//
// kappa_H(X_1, ..., X_s) counts choices of pairwise disjoint Y_i in X_i
// (X_i a collection of a_i-subsets) together with an (r - sum a_i)-set Z
// outside the Y's, such that every pair of Y_1 u ... u Y_s u Z is an edge of
// H except pairs lying inside a single Y_i. Blocks are chosen left to right;
// the running common neighbourhood of everything chosen so far is both the
// admissible region for the next block and the candidate set for Z.

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "turan/cliques.hpp"
#include "turan/error.hpp"
#include "turan/graph.hpp"

namespace turan {

/// One argument of kappa: a duplicate-free collection of `arity`-subsets.
struct KappaArg {
  int arity = 1;
  std::vector<std::vector<Vertex>> members;

  /// A single explicit set {x_1, ..., x_a}.
  static KappaArg tuple(std::vector<Vertex> vertices) {
    KappaArg a;
    a.arity = static_cast<int>(vertices.size());
    a.members.push_back(std::move(vertices));
    return a;
  }
  /// A vertex set, read as its 1-subsets.
  static KappaArg vertices(std::span<const Vertex> vs) {
    KappaArg a;
    a.arity = 1;
    for (Vertex v : vs) a.members.push_back({v});
    return a;
  }
  static KappaArg vertices(const VertexSet& vs) { return vertices(vs.members()); }
  /// A pair set, read as 2-subsets.
  static KappaArg pairs(std::span<const Edge> ps) {
    KappaArg a;
    a.arity = 2;
    for (const Edge& e : ps) a.members.push_back({e.u, e.v});
    return a;
  }
  static KappaArg subsets(int arity, std::vector<std::vector<Vertex>> members) {
    KappaArg a;
    a.arity = arity;
    a.members = std::move(members);
    return a;
  }
};

namespace detail {

inline void validate_kappa_args(int n, int r, std::span<const KappaArg> args) {
  int total = 0;
  for (const KappaArg& a : args) {
    require(a.arity >= 1, "kappa: argument arity must be positive");
    total += a.arity;
    std::vector<std::vector<Vertex>> seen;
    for (auto m : a.members) {
      require(static_cast<int>(m.size()) == a.arity, "kappa: member size differs from argument arity");
      std::sort(m.begin(), m.end());
      require(std::adjacent_find(m.begin(), m.end()) == m.end(), "kappa: repeated vertex inside a member");
      for (Vertex v : m) require(v >= 0 && v < n, "kappa: vertex out of range");
      seen.push_back(std::move(m));
    }
    std::sort(seen.begin(), seen.end());
    require(std::adjacent_find(seen.begin(), seen.end()) == seen.end(), "kappa: collection has duplicate members");
  }
  require(total <= r, "kappa: argument arities sum to more than r");
}

}  // namespace detail

inline std::uint64_t kappa(const Graph& h, int r, std::span<const KappaArg> args) {
  detail::validate_kappa_args(h.order(), r, args);
  int total = 0;
  for (const KappaArg& a : args) total += a.arity;
  const int free_size = r - total;
  // Memo of common neighbourhoods, one per depth.
  std::vector<VertexSet> common(args.size() + 1);
  common[0] = VertexSet::full(h.order());
  std::vector<VertexSet> used(args.size() + 1, VertexSet(h.order()));
  std::uint64_t count = 0;
  auto rec = [&](auto& self, std::size_t depth) -> void {
    if (depth == args.size()) {
      count += count_cliques(h, common[depth], free_size);
      return;
    }
    for (const auto& member : args[depth].members) {
      bool ok = true;
      for (Vertex y : member) {
        ok = ok && !used[depth].test(y) && common[depth].test(y);
      }
      if (!ok) continue;
      common[depth + 1] = common[depth];
      used[depth + 1] = used[depth];
      for (Vertex y : member) {
        common[depth + 1] &= h.neighbors(y);
        used[depth + 1].set(y);
      }
      // Members of one block are removed from the region even when adjacent.
      common[depth + 1].subtract(used[depth + 1]);
      self(self, depth + 1);
    }
  };
  rec(rec, 0);
  return count;
}

inline std::uint64_t kappa(const Graph& h, int r, std::initializer_list<KappaArg> args) {
  return kappa(h, r, std::span<const KappaArg>(args.begin(), args.size()));
}

/// The K_r^- copies counted by kappa(xy, A_2, ..., A_{r-1}) with r =
/// blocks.size() + 2: each is C({x,y} u {a_2..a_{r-1}}, 2) minus {xy}.
inline std::vector<EdgeList> kr_minus_family(const Graph& g, Edge xy, std::span<const VertexSet> blocks) {
  const int n = g.order();
  detail::require(xy.u != xy.v && xy.u >= 0 && xy.v < n, "kr_minus_family: invalid pair");
  VertexSet seen(n);
  seen.set(xy.u);
  seen.set(xy.v);
  for (const VertexSet& b : blocks) {
    detail::require(b.capacity() == n, "kr_minus_family: block over a different vertex set");
    detail::require(!b.intersects(seen), "kr_minus_family: blocks must be disjoint from each other and from {x,y}");
    seen |= b;
  }
  std::vector<EdgeList> out;
  std::vector<Vertex> pick;
  VertexSet region = g.neighbors(xy.u) & g.neighbors(xy.v);
  auto rec = [&](auto& self, std::size_t depth, const VertexSet& allowed) -> void {
    if (depth == blocks.size()) {
      std::vector<Vertex> all = {xy.u, xy.v};
      all.insert(all.end(), pick.begin(), pick.end());
      EdgeList copy;
      for (std::size_t a = 0; a < all.size(); ++a)
        for (std::size_t b = a + 1; b < all.size(); ++b)
          if (!(a == 0 && b == 1)) copy.emplace_back(all[a], all[b]);
      std::sort(copy.begin(), copy.end());
      out.push_back(std::move(copy));
      return;
    }
    VertexSet cand = allowed & blocks[depth];
    cand.for_each([&](Vertex v) {
      pick.push_back(v);
      self(self, depth + 1, allowed & g.neighbors(v));
      pick.pop_back();
    });
  };
  rec(rec, 0, region);
  return out;
}

/// Ordered choices of distinct x_i in S_i spanning a clique. Sets must be
/// pairwise disjoint, except that a set may be repeated verbatim (the
/// tau(A, B, C, ..., C) shorthand).
inline std::uint64_t tau(const Graph& g, std::span<const VertexSet> sets) {
  for (std::size_t i = 0; i < sets.size(); ++i) {
    detail::require(sets[i].capacity() == g.order(), "tau: set over a different vertex set");
    for (std::size_t j = i + 1; j < sets.size(); ++j)
      detail::require(sets[i] == sets[j] || !sets[i].intersects(sets[j]),
                      "tau: sets must be pairwise disjoint or identical");
  }
  std::uint64_t count = 0;
  auto rec = [&](auto& self, std::size_t depth, const VertexSet& allowed) -> void {
    if (depth == sets.size()) {
      ++count;
      return;
    }
    VertexSet cand = allowed & sets[depth];
    cand.for_each([&](Vertex v) { self(self, depth + 1, allowed & g.neighbors(v)); });
  };
  rec(rec, 0, VertexSet::full(g.order()));
  return count;
}

inline std::uint64_t tau(const Graph& g, std::initializer_list<VertexSet> sets) {
  return tau(g, std::span<const VertexSet>(sets.begin(), sets.size()));
}

/// sigma(R): pairs uv of G for which some xy in R, disjoint from {u,v}, and
/// some (r-4)-set W complete a K_r minus the pair xy.
inline std::uint64_t sigma(const Graph& g, std::span<const Edge> pairs, int r) {
  detail::require(r >= 4, "sigma: r >= 4");
  std::uint64_t count = 0;
  for (const Edge& uv : g.edges()) {
    const VertexSet both = g.neighbors(uv.u) & g.neighbors(uv.v);
    for (const Edge& xy : pairs) {
      if (xy.u == uv.u || xy.u == uv.v || xy.v == uv.u || xy.v == uv.v) continue;
      if (!both.test(xy.u) || !both.test(xy.v)) continue;
      VertexSet rest = both & g.neighbors(xy.u) & g.neighbors(xy.v);
      if (count_cliques(g, rest, r - 4) > 0) {
        ++count;
        break;
      }
    }
  }
  return count;
}

}  // namespace turan
