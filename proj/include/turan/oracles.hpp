#pragma once

// Reference implementations used only to check the optimized routines. They
// share no search code with solvers.hpp or counting.hpp.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "turan/counting.hpp"
#include "turan/cut.hpp"
#include "turan/graph.hpp"
#include "turan/rooted.hpp"

namespace turan::oracle {

inline bool has_clique_naive(const Graph& g, int s) {
  const int n = g.order();
  std::vector<Vertex> pick;
  auto rec = [&](auto& self, Vertex from) -> bool {
    if (static_cast<int>(pick.size()) == s) return true;
    for (Vertex v = from; v < n; ++v) {
      bool ok = true;
      for (Vertex u : pick) ok = ok && g.has_edge(u, v);
      if (!ok) continue;
      pick.push_back(v);
      if (self(self, v + 1)) return true;
      pick.pop_back();
    }
    return false;
  };
  return rec(rec, 0);
}

/// Maximum k-cut by enumerating all k^(n-1) assignments (vertex 0 in part 0).
struct PartiteOptimum {
  std::size_t value = 0;
  std::vector<std::vector<int>> maximizers;  // every optimal assignment with part_of[0] == 0
};

inline PartiteOptimum brute_max_partite(const Graph& g, int k, bool keep_all = false) {
  const int n = g.order();
  const EdgeList edges = g.edges();
  std::vector<int> part(static_cast<std::size_t>(n), 0);
  PartiteOptimum best;
  bool first = true;
  while (true) {
    std::size_t value = 0;
    for (const Edge& e : edges) value += part[e.u] != part[e.v] ? 1 : 0;
    if (first || value > best.value) {
      best.value = value;
      best.maximizers.clear();
      first = false;
      best.maximizers.push_back(part);
    } else if (keep_all && value == best.value) {
      best.maximizers.push_back(part);
    }
    int i = 1;
    while (i < n && part[i] == k - 1) part[i++] = 0;
    if (i >= n) break;
    ++part[i];
  }
  if (!keep_all) best.maximizers.resize(1);
  return best;
}

/// Literal enumeration of all 2^|G| edge subsets; |G| <= 24.
inline std::size_t subset_max_kr_free(const Graph& g, int r) {
  const EdgeList edges = g.edges();
  detail::guard(edges.size() <= 24, "subset_max_kr_free: at most 24 edges");
  std::size_t best = 0;
  for (std::uint64_t mask = 0; mask < (1ULL << edges.size()); ++mask) {
    std::size_t size = static_cast<std::size_t>(std::popcount(mask));
    if (size <= best) continue;
    GraphBuilder b(g.order());
    for (std::size_t i = 0; i < edges.size(); ++i)
      if (mask >> i & 1) b.add_edge(edges[i].u, edges[i].v);
    if (!has_clique_naive(b.view(), r)) best = size;
  }
  return best;
}

/// Exhaustive include/exclude search over edges with the counting bound
/// only; starts from the brute-force (r-1)-cut as incumbent.
struct KrFreeOptima {
  std::size_t value = 0;
  std::vector<EdgeList> maximizers;  // filled when keep_all
};

inline KrFreeOptima exhaustive_max_kr_free(const Graph& g, int r, bool keep_all = false) {
  const int n = g.order();
  detail::guard(n <= 32, "exhaustive_max_kr_free: at most 32 vertices");
  const EdgeList edges = g.edges();
  std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);  // kept edges only
  KrFreeOptima out;
  out.value = keep_all ? 0 : brute_max_partite(g, r - 1).value;
  std::size_t kept = 0;
  EdgeList stack;

  // Is there an s-clique inside `cand` in the kept subgraph?
  auto has_clique_in = [&](auto& self, std::uint32_t cand, int s) -> bool {
    if (s == 0) return true;
    while (std::popcount(cand) >= s) {
      const int v = std::countr_zero(cand);
      cand &= cand - 1;
      if (self(self, cand & adj[static_cast<std::size_t>(v)], s - 1)) return true;
    }
    return false;
  };

  auto rec = [&](auto& self, std::size_t idx) -> void {
    const std::size_t remaining = edges.size() - idx;
    if (keep_all ? kept + remaining < out.value : kept + remaining <= out.value) return;
    if (idx == edges.size()) {
      if (kept > out.value) {
        out.value = kept;
        out.maximizers.clear();
      }
      if (keep_all) out.maximizers.push_back(stack);
      return;
    }
    const Edge& e = edges[idx];
    const std::uint32_t common = adj[static_cast<std::size_t>(e.u)] & adj[static_cast<std::size_t>(e.v)];
    if (!has_clique_in(has_clique_in, common, r - 2)) {
      adj[static_cast<std::size_t>(e.u)] |= 1u << e.v;
      adj[static_cast<std::size_t>(e.v)] |= 1u << e.u;
      ++kept;
      stack.push_back(e);
      self(self, idx + 1);
      stack.pop_back();
      --kept;
      adj[static_cast<std::size_t>(e.u)] &= ~(1u << e.v);
      adj[static_cast<std::size_t>(e.v)] &= ~(1u << e.u);
    }
    self(self, idx + 1);
  };
  rec(rec, 0);
  std::sort(out.maximizers.begin(), out.maximizers.end());
  return out;
}

inline std::size_t brute_max_kr_free(const Graph& g, int r) { return exhaustive_max_kr_free(g, r).value; }

/// Rechecks that a claimed K_r-free subgraph of g really is one.
inline bool is_kr_free_subgraph(const Graph& g, const EdgeList& f, int r) {
  GraphBuilder b(g.order());
  for (const Edge& e : f) {
    if (!g.has_edge(e)) return false;
    if (!b.add_edge(e.u, e.v)) return false;
  }
  return !has_clique_naive(b.view(), r);
}


namespace enumerate {

template <class F>
void for_each_subset(const std::vector<Vertex>& pool, int size, F&& emit) {
  std::vector<Vertex> pick;
  auto rec = [&](auto& self, std::size_t from) -> void {
    if (static_cast<int>(pick.size()) == size) {
      emit(pick);
      return;
    }
    for (std::size_t i = from; i < pool.size(); ++i) {
      pick.push_back(pool[i]);
      self(self, i + 1);
      pick.pop_back();
    }
  };
  rec(rec, 0);
}

}  // namespace enumerate

/// Literal kappa: every Y tuple from the cartesian product, every Z subset.
inline std::uint64_t kappa_naive(const Graph& g, int r, const std::vector<KappaArg>& args) {
  int total = 0;
  for (const auto& a : args) total += a.arity;
  if (total > r) throw PreconditionError("kappa_naive: arity");
  std::uint64_t count = 0;
  std::vector<const std::vector<Vertex>*> ys(args.size());
  auto rec = [&](auto& self, std::size_t depth) -> void {
    if (depth == args.size()) {
      std::vector<int> block(static_cast<std::size_t>(g.order()), -1);
      for (std::size_t i = 0; i < ys.size(); ++i)
        for (Vertex v : *ys[i]) {
          if (block[static_cast<std::size_t>(v)] != -1) return;
          block[static_cast<std::size_t>(v)] = static_cast<int>(i);
        }
      std::vector<Vertex> pool;
      for (Vertex v = 0; v < g.order(); ++v)
        if (block[static_cast<std::size_t>(v)] == -1) pool.push_back(v);
      enumerate::for_each_subset(pool, r - total, [&](const std::vector<Vertex>& z) {
        std::vector<std::pair<Vertex, int>> all;
        for (std::size_t i = 0; i < ys.size(); ++i)
          for (Vertex v : *ys[i]) all.emplace_back(v, static_cast<int>(i));
        for (Vertex v : z) all.emplace_back(v, -1);
        for (std::size_t a = 0; a < all.size(); ++a)
          for (std::size_t b = a + 1; b < all.size(); ++b) {
            if (all[a].second != -1 && all[a].second == all[b].second) continue;
            if (!g.has_edge(all[a].first, all[b].first)) return;
          }
        ++count;
      });
      return;
    }
    for (const auto& m : args[depth].members) {
      ys[depth] = &m;
      self(self, depth + 1);
    }
  };
  rec(rec, 0);
  return count;
}

/// Literal tau: cartesian product of the sets, keep distinct cliques.
inline std::uint64_t tau_naive(const Graph& g, const std::vector<VertexSet>& sets) {
  std::uint64_t count = 0;
  std::vector<Vertex> pick;
  auto rec = [&](auto& self, std::size_t depth) -> void {
    if (depth == sets.size()) {
      for (std::size_t a = 0; a < pick.size(); ++a)
        for (std::size_t b = a + 1; b < pick.size(); ++b)
          if (pick[a] == pick[b] || !g.has_edge(pick[a], pick[b])) return;
      ++count;
      return;
    }
    for (Vertex v : sets[depth].members()) {
      pick.push_back(v);
      self(self, depth + 1);
      pick.pop_back();
    }
  };
  rec(rec, 0);
  return count;
}

/// Literal sigma: every pair uv, every xy in R, every W.
inline std::uint64_t sigma_naive(const Graph& g, const EdgeList& pairs, int r) {
  std::uint64_t count = 0;
  const int n = g.order();
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      bool hit = false;
      for (const Edge& xy : pairs) {
        if (hit) break;
        std::vector<Vertex> base = {xy.u, xy.v, u, v};
        std::sort(base.begin(), base.end());
        if (std::adjacent_find(base.begin(), base.end()) != base.end()) continue;
        std::vector<Vertex> pool;
        for (Vertex w = 0; w < n; ++w)
          if (!std::binary_search(base.begin(), base.end(), w)) pool.push_back(w);
        enumerate::for_each_subset(pool, r - 4, [&](const std::vector<Vertex>& w) {
          if (hit) return;
          std::vector<Vertex> all = {xy.u, xy.v, u, v};
          all.insert(all.end(), w.begin(), w.end());
          for (std::size_t a = 0; a < all.size(); ++a)
            for (std::size_t b = a + 1; b < all.size(); ++b)
              if (!(a == 0 && b == 1) && !g.has_edge(all[a], all[b])) return;
          hit = true;
        });
      }
      if (hit) ++count;
    }
  return count;
}


/// Rooted copies by scanning every injection of the non-roots, with no pruning.
inline std::uint64_t count_copies_naive(const RootedGraph& h, const Graph& g, const std::vector<Vertex>& anchors) {
  std::vector<Vertex> sorted = anchors;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return 0;
  std::vector<Vertex> image(static_cast<std::size_t>(h.vertex_count()), -1);
  for (std::size_t i = 0; i < anchors.size(); ++i) image[static_cast<std::size_t>(h.roots()[i])] = anchors[i];
  std::uint64_t count = 0;
  const auto& free = h.non_roots();
  auto rec = [&](auto& self, std::size_t depth) -> void {
    if (depth == free.size()) {
      for (const Edge& e : h.free_edges())
        if (!g.has_edge(image[static_cast<std::size_t>(e.u)], image[static_cast<std::size_t>(e.v)])) return;
      ++count;
      return;
    }
    for (Vertex x = 0; x < g.order(); ++x) {
      if (std::find(image.begin(), image.end(), x) != image.end()) continue;
      image[static_cast<std::size_t>(free[depth])] = x;
      self(self, depth + 1);
      image[static_cast<std::size_t>(free[depth])] = -1;
    }
  };
  rec(rec, 0);
  return count;
}

}  // namespace turan::oracle
