#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "turan/graph.hpp"

namespace turan {

namespace detail {

template <class F>
void extend_cliques(const Graph& g, std::vector<Vertex>& current, VertexSet candidates, int remaining, F& emit) {
  if (remaining == 0) {
    emit(static_cast<const std::vector<Vertex>&>(current));
    return;
  }
  for (Vertex v = candidates.first(); v != -1; v = candidates.next(v)) {
    if (candidates.count() < remaining) return;
    candidates.reset(v);
    current.push_back(v);
    extend_cliques(g, current, candidates & g.neighbors(v), remaining - 1, emit);
    current.pop_back();
  }
}

inline std::uint64_t count_cliques_in(const Graph& g, VertexSet candidates, int size) {
  if (size == 0) return 1;
  if (size == 1) return static_cast<std::uint64_t>(candidates.count());
  std::uint64_t total = 0;
  for (Vertex v = candidates.first(); v != -1; v = candidates.next(v)) {
    candidates.reset(v);
    if (candidates.count() < size - 1) break;
    total += count_cliques_in(g, candidates & g.neighbors(v), size - 1);
  }
  return total;
}

}  // namespace detail

/// Calls emit(vertices) for every s-clique whose vertices all lie in `within`,
/// each clique once, with vertices ascending; cliques appear in lexicographic order.
template <class F>
void for_each_clique_in(const Graph& g, const VertexSet& within, int s, F&& emit) {
  std::vector<Vertex> current;
  current.reserve(static_cast<std::size_t>(s));
  detail::extend_cliques(g, current, within, s, emit);
}

template <class F>
void for_each_clique(const Graph& g, int s, F&& emit) {
  for_each_clique_in(g, VertexSet::full(g.order()), s, emit);
}

/// Number of s-cliques of g contained in `within`.
inline std::uint64_t count_cliques(const Graph& g, const VertexSet& within, int s) {
  return detail::count_cliques_in(g, within, s);
}

inline std::uint64_t count_cliques(const Graph& g, int s) {
  return count_cliques(g, VertexSet::full(g.order()), s);
}

/// All K_s copies, vertex lists ascending, in lexicographic order.
inline std::vector<std::vector<Vertex>> list_cliques(const Graph& g, int s) {
  std::vector<std::vector<Vertex>> out;
  for_each_clique(g, s, [&](const std::vector<Vertex>& c) { out.push_back(c); });
  return out;
}

inline bool edge_in_clique(const Graph& g, Edge e, int s) {
  if (!g.has_edge(e)) return false;
  VertexSet common = g.neighbors(e.u) & g.neighbors(e.v);
  return count_cliques(g, common, s - 2) > 0;
}

/// True when every edge of g lies in a copy of K_s (vacuous for edgeless g).
inline bool every_edge_in_clique(const Graph& g, int s) {
  for (const Edge& e : g.edges())
    if (!edge_in_clique(g, e, s)) return false;
  return true;
}

inline bool is_clique_free(const Graph& g, int s) { return count_cliques(g, s) == 0; }

/// Proper (parts)-coloring by backtracking; true iff g is `parts`-partite.
inline bool is_k_partite(const Graph& g, int parts) {
  const int n = g.order();
  if (parts >= n) return true;
  std::vector<int> color(static_cast<std::size_t>(n), -1);
  std::vector<Vertex> order(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) order[v] = v;
  std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
    int da = g.degree(a), db = g.degree(b);
    return da != db ? da > db : a < b;
  });
  auto rec = [&](auto& self, std::size_t idx, int used) -> bool {
    if (idx == order.size()) return true;
    Vertex v = order[idx];
    int limit = std::min(parts, used + 1);
    for (int c = 0; c < limit; ++c) {
      bool ok = true;
      g.neighbors(v).for_each([&](Vertex w) {
        if (color[w] == c) ok = false;
      });
      if (!ok) continue;
      color[v] = c;
      if (self(self, idx + 1, std::max(used, c + 1))) return true;
      color[v] = -1;
    }
    return false;
  };
  return rec(rec, 0, 0);
}

}  // namespace turan
