#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <vector>

#include "turan/graph.hpp"
#include "turan/rng.hpp"

namespace turan {

struct InducedDeviation {
  int set_size = 0;
  double max_abs_deviation = 0.0;  // max over samples of ||G[X]| - |X|^2 p / 2|
  std::uint64_t samples = 0;
};

struct RegularityReport {
  double max_degree_dev = 0.0;    // max_x |d(x) - (n-1)p| / ((n-1)p)
  double max_codegree_dev = 0.0;  // max_{x<y} |d(x,y) - (n-2)p^2| / ((n-2)p^2)
  std::vector<InducedDeviation> induced_violations;  // one entry per sampled |X|
  double cross_edge_min_ratio = std::numeric_limits<double>::infinity();  // min |nabla(S,T)|/(|S||T|p)
};

namespace detail {

inline VertexSet random_subset(int n, int size, Rng& rng, const VertexSet* exclude = nullptr) {
  std::vector<Vertex> pool;
  for (Vertex v = 0; v < n; ++v)
    if (!exclude || !exclude->test(v)) pool.push_back(v);
  VertexSet s(n);
  for (int k = 0; k < size; ++k) {
    auto j = static_cast<std::size_t>(k) + rng.below(pool.size() - static_cast<std::size_t>(k));
    std::swap(pool[k], pool[j]);
    s.set(pool[k]);
  }
  return s;
}

}  // namespace detail

/// Degrees and codegrees are audited exactly against their expectations
/// (n-1)p and (n-2)p^2; induced and cross-edge counts over `samples` random
/// vertex subsets.
inline RegularityReport regularity_report(const Graph& g, double p, std::uint64_t samples, std::uint64_t seed) {
  detail::require(p > 0.0 && p <= 1.0, "regularity_report: p must lie in (0,1]");
  const int n = g.order();
  RegularityReport rep;
  const double np = (n - 1) * p, np2 = (n - 2) * p * p;
  for (Vertex x = 0; x < n && n >= 2; ++x) {
    rep.max_degree_dev = std::max(rep.max_degree_dev, std::abs(g.degree(x) - np) / np);
    for (Vertex y = x + 1; y < n && n >= 3; ++y)
      rep.max_codegree_dev = std::max(rep.max_codegree_dev, std::abs(g.codegree(x, y) - np2) / np2);
  }

  Rng rng(seed);
  std::map<int, InducedDeviation> by_size;
  for (std::uint64_t s = 0; s < samples && n >= 2; ++s) {
    int size = 2 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - 1)));
    VertexSet x = detail::random_subset(n, size, rng);
    double dev = std::abs(static_cast<double>(g.edges_within(x)) - size * static_cast<double>(size) * p / 2.0);
    auto& entry = by_size[size];
    entry.set_size = size;
    entry.max_abs_deviation = std::max(entry.max_abs_deviation, dev);
    ++entry.samples;

    int ssize = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - 1)));
    VertexSet sset = detail::random_subset(n, ssize, rng);
    int tsize = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - ssize)));
    VertexSet tset = detail::random_subset(n, tsize, rng, &sset);
    double ratio = static_cast<double>(g.edges_between(sset, tset)) / (static_cast<double>(ssize) * tsize * p);
    rep.cross_edge_min_ratio = std::min(rep.cross_edge_min_ratio, ratio);
  }
  for (auto& [size, entry] : by_size) rep.induced_violations.push_back(entry);
  if (!std::isfinite(rep.cross_edge_min_ratio)) rep.cross_edge_min_ratio = 0.0;
  return rep;
}

}  // namespace turan
