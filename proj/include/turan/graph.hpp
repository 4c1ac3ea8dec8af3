#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "turan/error.hpp"
#include "turan/vertex_set.hpp"

namespace turan {

/// Unordered vertex pair, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  constexpr Edge() = default;
  constexpr Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

using EdgeList = std::vector<Edge>;

/// Index of pair {u,v} (u<v) in lexicographic order of C([n],2).
constexpr std::size_t pair_index(int n, Edge e) {
  const auto u = static_cast<std::size_t>(e.u), v = static_cast<std::size_t>(e.v);
  const auto nn = static_cast<std::size_t>(n);
  return u * (2 * nn - u - 1) / 2 + (v - u - 1);
}

constexpr std::size_t pair_count(int n) {
  return static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
}

/// Inverse of pair_index.
inline Edge pair_at(int n, std::size_t index) {
  Vertex u = 0;
  std::size_t row = static_cast<std::size_t>(n - 1);
  while (index >= row) {
    index -= row;
    ++u;
    --row;
  }
  return Edge(u, u + 1 + static_cast<Vertex>(index));
}

/// Simple undirected graph on 0..n-1 with bitset adjacency rows. Immutable
/// once built; use GraphBuilder or from_edges.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : n_(n), rows_(static_cast<std::size_t>(n), VertexSet(n)) {
    detail::require(n >= 1, "graph: n must be at least 1");
  }

  /// Rejects loops, duplicates and out-of-range endpoints.
  static Graph from_edges(int n, std::span<const Edge> edges);

  static Graph complete(int n) {
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v) g.insert(Edge(u, v));
    return g;
  }

  int order() const noexcept { return n_; }
  std::size_t size() const noexcept { return edge_count_; }

  bool has_edge(Vertex u, Vertex v) const { return u != v && rows_[u].test(v); }
  bool has_edge(Edge e) const { return has_edge(e.u, e.v); }

  const VertexSet& neighbors(Vertex u) const { return rows_[u]; }
  int degree(Vertex u) const { return rows_[u].count(); }
  int codegree(Vertex u, Vertex v) const { return rows_[u].intersection_count(rows_[v]); }
  int degree_into(Vertex u, const VertexSet& part) const { return rows_[u].intersection_count(part); }

  int max_degree() const {
    int d = 0;
    for (Vertex u = 0; u < n_; ++u) d = std::max(d, degree(u));
    return d;
  }

  /// Edges in canonical lexicographic order.
  EdgeList edges() const {
    EdgeList out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < n_; ++u)
      rows_[u].for_each([&](Vertex v) {
        if (v > u) out.emplace_back(u, v);
      });
    return out;
  }

  /// |H[A]|.
  std::size_t edges_within(const VertexSet& a) const {
    std::size_t twice = 0;
    a.for_each([&](Vertex u) { twice += static_cast<std::size_t>(rows_[u].intersection_count(a)); });
    return twice / 2;
  }

  /// |nabla(S,T)| for disjoint S, T.
  std::size_t edges_between(const VertexSet& s, const VertexSet& t) const {
    std::size_t c = 0;
    s.for_each([&](Vertex u) { c += static_cast<std::size_t>(rows_[u].intersection_count(t)); });
    return c;
  }

  Graph without_edge(Edge e) const {
    Graph g = *this;
    if (g.has_edge(e)) {
      g.rows_[e.u].reset(e.v);
      g.rows_[e.v].reset(e.u);
      --g.edge_count_;
    }
    return g;
  }

  Graph with_edge(Edge e) const {
    detail::require(e.u != e.v && e.v < n_ && e.u >= 0, "with_edge: invalid pair");
    Graph g = *this;
    g.insert(e);
    return g;
  }

  /// Spanning subgraph with the given edges (which must belong to this graph).
  Graph spanning_subgraph(std::span<const Edge> keep) const {
    Graph g(n_);
    for (const Edge& e : keep) {
      detail::require(has_edge(e), "spanning_subgraph: edge not in graph");
      g.insert(e);
    }
    return g;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edge_count_ == b.edge_count_ && a.rows_ == b.rows_;
  }

 private:
  friend class GraphBuilder;

  bool insert(Edge e) {
    if (rows_[e.u].test(e.v)) return false;
    rows_[e.u].set(e.v);
    rows_[e.v].set(e.u);
    ++edge_count_;
    return true;
  }

  int n_ = 0;
  std::vector<VertexSet> rows_;
  std::size_t edge_count_ = 0;
};

class GraphBuilder {
 public:
  explicit GraphBuilder(int n) : g_(n) {}

  /// Returns false if the edge was already present.
  bool add_edge(Vertex u, Vertex v) {
    detail::require(u != v, "graph: self-loop");
    detail::require(u >= 0 && v >= 0 && u < g_.n_ && v < g_.n_, "graph: vertex out of range");
    return g_.insert(Edge(u, v));
  }
  bool has_edge(Vertex u, Vertex v) const { return g_.has_edge(u, v); }
  const Graph& view() const noexcept { return g_; }
  Graph build() && { return std::move(g_); }
  Graph build() const& { return g_; }

 private:
  Graph g_;
};

inline Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  GraphBuilder b(n);
  for (const Edge& e : edges)
    detail::require(b.add_edge(e.u, e.v), "graph: duplicate edge");
  return std::move(b).build();
}

inline Graph cycle_graph(int n) {
  detail::require(n >= 3, "cycle_graph: n >= 3");
  GraphBuilder b(n);
  for (Vertex i = 0; i < n; ++i) b.add_edge(i, (i + 1) % n);
  return std::move(b).build();
}

inline Graph path_graph(int n) {
  GraphBuilder b(n);
  for (Vertex i = 0; i + 1 < n; ++i) b.add_edge(i, i + 1);
  return std::move(b).build();
}

inline Graph star_graph(int leaves) {
  GraphBuilder b(leaves + 1);
  for (Vertex i = 1; i <= leaves; ++i) b.add_edge(0, i);
  return std::move(b).build();
}

/// Complete multipartite graph; part i holds consecutive vertices.
inline Graph complete_multipartite(std::span<const int> part_sizes) {
  int n = 0;
  std::vector<int> part_of;
  for (std::size_t i = 0; i < part_sizes.size(); ++i)
    for (int k = 0; k < part_sizes[i]; ++k) part_of.push_back(static_cast<int>(i)), ++n;
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (part_of[u] != part_of[v]) b.add_edge(u, v);
  return std::move(b).build();
}

}  // namespace turan
