#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <vector>

#include "turan/error.hpp"
#include "turan/graph.hpp"

namespace turan {

/// Ordered partition (A_1, ..., A_k) of 0..n-1. Blocks may be empty; A_1 =
/// part(0) is the distinguished block.
class Cut {
 public:
  Cut() = default;

  static Cut from_parts(int n, std::vector<std::vector<Vertex>> parts) {
    detail::require(!parts.empty(), "cut: at least one block");
    std::vector<int> owner(static_cast<std::size_t>(n), -1);
    for (std::size_t i = 0; i < parts.size(); ++i) {
      std::sort(parts[i].begin(), parts[i].end());
      for (Vertex v : parts[i]) {
        detail::require(v >= 0 && v < n, "cut: vertex out of range");
        detail::require(owner[v] < 0, "cut: blocks overlap");
        owner[v] = static_cast<int>(i);
      }
    }
    for (int o : owner) detail::require(o >= 0, "cut: blocks do not cover the vertex set");
    Cut c;
    c.parts_ = std::move(parts);
    c.owner_ = std::move(owner);
    return c;
  }

  /// part_of[v] in 0..k-1.
  static Cut from_assignment(std::span<const int> part_of, int k) {
    detail::require(k >= 1, "cut: at least one block");
    std::vector<std::vector<Vertex>> parts(static_cast<std::size_t>(k));
    for (std::size_t v = 0; v < part_of.size(); ++v) {
      detail::require(part_of[v] >= 0 && part_of[v] < k, "cut: part index out of range");
      parts[part_of[v]].push_back(static_cast<Vertex>(v));
    }
    return from_parts(static_cast<int>(part_of.size()), std::move(parts));
  }

  int order() const noexcept { return static_cast<int>(owner_.size()); }
  int blocks() const noexcept { return static_cast<int>(parts_.size()); }
  /// r such that this is an (r-1)-cut.
  int clique_order() const noexcept { return blocks() + 1; }

  const std::vector<Vertex>& part(int i) const { return parts_[i]; }
  const std::vector<std::vector<Vertex>>& parts() const noexcept { return parts_; }
  int part_of(Vertex v) const { return owner_[v]; }

  VertexSet part_set(int i) const {
    VertexSet s(order());
    for (Vertex v : parts_[i]) s.set(v);
    return s;
  }

  /// Pair lies in ext(Pi) (meets two distinct blocks).
  bool crosses(Edge e) const { return owner_[e.u] != owner_[e.v]; }

  friend bool operator==(const Cut& a, const Cut& b) { return a.parts_ == b.parts_; }
  friend bool operator<(const Cut& a, const Cut& b) { return a.parts_ < b.parts_; }

 private:
  std::vector<std::vector<Vertex>> parts_;
  std::vector<int> owner_;
};

/// |Pi_G|: edges of g meeting two distinct blocks.
inline std::size_t cut_edges(const Graph& g, const Cut& cut) {
  detail::require(cut.order() == g.order(), "cut_edges: cut is over a different vertex count");
  std::size_t c = 0;
  for (Vertex u = 0; u < g.order(); ++u)
    g.neighbors(u).for_each([&](Vertex v) {
      if (v > u && cut.part_of(u) != cut.part_of(v)) ++c;
    });
  return c;
}

inline std::size_t cut_edges(std::span<const Edge> edges, const Cut& cut) {
  std::size_t c = 0;
  for (const Edge& e : edges) c += cut.crosses(e) ? 1 : 0;
  return c;
}

/// (r-1)|F[A_1]| + |F intersect ext(Pi)|.
inline std::size_t phi(std::span<const Edge> f, const Cut& cut) {
  const std::size_t r = static_cast<std::size_t>(cut.clique_order());
  std::size_t inside_first = 0, crossing = 0;
  for (const Edge& e : f) {
    detail::require(e.v < cut.order() && e.u != e.v, "phi: pair outside the cut's vertex set");
    if (cut.crosses(e)) ++crossing;
    else if (cut.part_of(e.u) == 0) ++inside_first;
  }
  return (r - 1) * inside_first + crossing;
}

/// sum_{i<j} d_{A_i}(x) d_{A_j}(x).
inline std::size_t d_pi(const Graph& g, const Cut& cut, Vertex x) {
  detail::require(x >= 0 && x < g.order(), "d_pi: vertex out of range");
  std::vector<std::size_t> deg(static_cast<std::size_t>(cut.blocks()), 0);
  g.neighbors(x).for_each([&](Vertex y) { ++deg[cut.part_of(y)]; });
  std::size_t total = 0;
  for (std::size_t i = 0; i < deg.size(); ++i)
    for (std::size_t j = i + 1; j < deg.size(); ++j) total += deg[i] * deg[j];
  return total;
}

}  // namespace turan
