#pragma once

// Equitable proper edge colouring with m >= Delta+1 colours: a Misra-Gries
// (Delta+1)-colouring from Boost.Graph, then class sizes are levelled by
// swapping colours along alternating paths, which preserves properness.

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/edge_coloring.hpp>
#include <boost/graph/properties.hpp>

#include <algorithm>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <vector>

#include "turan/graph.hpp"

namespace turan {

struct EdgeColoring {
  std::vector<EdgeList> classes;

  std::size_t colors() const noexcept { return classes.size(); }
  std::size_t spread() const {
    if (classes.empty()) return 0;
    auto [lo, hi] = std::minmax_element(classes.begin(), classes.end(),
                                        [](const EdgeList& a, const EdgeList& b) { return a.size() < b.size(); });
    return hi->size() - lo->size();
  }
};

/// Every edge of g appears in exactly one class and no class has two edges at a vertex.
inline bool is_proper_coloring(const Graph& g, const EdgeColoring& coloring) {
  std::vector<int> seen_edge(pair_count(g.order()), 0);
  for (const EdgeList& cls : coloring.classes) {
    std::vector<char> touched(static_cast<std::size_t>(g.order()), 0);
    for (const Edge& e : cls) {
      if (!g.has_edge(e)) return false;
      if (touched[e.u] || touched[e.v]) return false;
      touched[e.u] = touched[e.v] = 1;
      ++seen_edge[pair_index(g.order(), e)];
    }
  }
  for (const Edge& e : g.edges())
    if (seen_edge[pair_index(g.order(), e)] != 1) return false;
  std::size_t total = 0;
  for (const EdgeList& cls : coloring.classes) total += cls.size();
  return total == g.size();
}

namespace detail {

// Swap colours a and b on one alternating path with one more a-edge than
// b-edges. Such a path exists whenever |class a| > |class b|.
inline void shift_one_edge(int n, std::vector<int>& color_of, const EdgeList& edges, int a, int b) {
  std::vector<int> at_a(static_cast<std::size_t>(n), -1), at_b(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (color_of[i] == a) at_a[edges[i].u] = at_a[edges[i].v] = static_cast<int>(i);
    if (color_of[i] == b) at_b[edges[i].u] = at_b[edges[i].v] = static_cast<int>(i);
  }
  std::vector<char> visited(edges.size(), 0);
  for (Vertex start = 0; start < n; ++start) {
    // Path endpoints: exactly one incident edge of colour a or b, and it is an a-edge.
    if (at_a[start] < 0 || at_b[start] >= 0 || visited[at_a[start]]) continue;
    std::vector<int> path;
    Vertex cur = start;
    int want = a;
    while (true) {
      int idx = want == a ? at_a[cur] : at_b[cur];
      if (idx < 0 || visited[idx]) break;
      visited[idx] = 1;
      path.push_back(idx);
      cur = edges[idx].u == cur ? edges[idx].v : edges[idx].u;
      want = want == a ? b : a;
    }
    if (path.size() % 2 == 1) {
      for (int idx : path) color_of[idx] = color_of[idx] == a ? b : a;
      return;
    }
  }
  throw std::logic_error("equitable_edge_coloring: no augmenting alternating path");
}

}  // namespace detail

inline EdgeColoring equitable_edge_coloring(const Graph& g, int m) {
  detail::require(m >= g.max_degree() + 1, "equitable_edge_coloring: need m >= max degree + 1");
  const EdgeList edges = g.edges();
  std::vector<int> color_of(edges.size(), 0);

  if (!edges.empty()) {
    using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS, boost::no_property,
                                             boost::property<boost::edge_index_t, std::size_t>>;
    BoostGraph bg(static_cast<std::size_t>(g.order()));
    for (std::size_t i = 0; i < edges.size(); ++i) boost::add_edge(edges[i].u, edges[i].v, i, bg);
    std::vector<std::size_t> colors(edges.size());
    auto map = boost::make_iterator_property_map(colors.begin(), boost::get(boost::edge_index, bg));
    boost::edge_coloring(bg, map);
    for (std::size_t i = 0; i < edges.size(); ++i) color_of[i] = static_cast<int>(colors[i]);
  }

  std::vector<std::size_t> sizes(static_cast<std::size_t>(m), 0);
  for (int c : color_of) {
    if (c >= m) throw std::logic_error("equitable_edge_coloring: base colouring used too many colours");
    ++sizes[c];
  }
  while (true) {
    auto hi = std::max_element(sizes.begin(), sizes.end());
    auto lo = std::min_element(sizes.begin(), sizes.end());
    if (*hi - *lo <= 1) break;
    const int a = static_cast<int>(hi - sizes.begin()), b = static_cast<int>(lo - sizes.begin());
    detail::shift_one_edge(g.order(), color_of, edges, a, b);
    --sizes[a];
    ++sizes[b];
  }

  EdgeColoring out;
  out.classes.resize(static_cast<std::size_t>(m));
  for (std::size_t i = 0; i < edges.size(); ++i) out.classes[color_of[i]].push_back(edges[i]);
  return out;
}

}  // namespace turan
