#pragma once

#include <cmath>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "turan/cliques.hpp"
#include "turan/graph.hpp"
#include "turan/rng.hpp"

namespace turan {

/// G(n,p): pairs visited in lexicographic order, pair present iff the next
/// uniform draw is below p.
inline Graph sample_gnp(int n, double p, std::uint64_t seed) {
  detail::require(n >= 1, "sample_gnp: n >= 1");
  detail::require(p >= 0.0 && p <= 1.0, "sample_gnp: p must lie in [0,1]");
  Rng rng(seed);
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rng.bernoulli(p)) b.add_edge(u, v);
  return std::move(b).build();
}

/// Lazily-materialized uniform permutation of 0..size-1 (partial Fisher-Yates
/// with a sparse swap table, memory proportional to the prefix drawn).
class LazyPermutation {
 public:
  LazyPermutation(std::uint64_t size, Rng rng) : size_(size), rng_(rng) {}

  std::uint64_t drawn() const noexcept { return next_; }
  bool exhausted() const noexcept { return next_ == size_; }

  std::uint64_t next() {
    const std::uint64_t i = next_++;
    const std::uint64_t j = i + rng_.below(size_ - i);
    const std::uint64_t vi = value_at(i), vj = value_at(j);
    swapped_[j] = vi;
    swapped_.erase(i);
    return vj;
  }

 private:
  std::uint64_t value_at(std::uint64_t k) const {
    auto it = swapped_.find(k);
    return it == swapped_.end() ? k : it->second;
  }

  std::uint64_t size_;
  Rng rng_;
  std::uint64_t next_ = 0;
  std::unordered_map<std::uint64_t, std::uint64_t> swapped_;
};

/// G(n,M): uniform M-subset of pairs.
inline Graph sample_gnm(int n, std::uint64_t m, std::uint64_t seed) {
  detail::require(n >= 1, "sample_gnm: n >= 1");
  detail::require(m <= pair_count(n), "sample_gnm: m exceeds C(n,2)");
  LazyPermutation perm(pair_count(n), Rng(seed));
  GraphBuilder b(n);
  for (std::uint64_t i = 0; i < m; ++i) {
    Edge e = pair_at(n, static_cast<std::size_t>(perm.next()));
    b.add_edge(e.u, e.v);
  }
  return std::move(b).build();
}

struct StoppingTimeResult {
  Graph graph;
  std::uint64_t stop_index = 0;  // number of edges added
};

/// Adds uniformly random new edges one at a time and stops at the first
/// (nonempty) prefix in which every present edge lies in a K_r.
inline StoppingTimeResult stopping_time_process(int n, int r, std::uint64_t seed) {
  detail::require(r >= 3, "stopping_time_process: r >= 3");
  detail::require(n >= r, "stopping_time_process: n >= r");
  const std::size_t total = pair_count(n);
  LazyPermutation perm(total, Rng(seed));
  GraphBuilder b(n);
  std::vector<char> covered(total, 0);
  std::size_t uncovered = 0;
  auto cover = [&](Edge e) {
    char& flag = covered[pair_index(n, e)];
    if (!flag) {
      flag = 1;
      --uncovered;
    }
  };
  while (!perm.exhausted()) {
    Edge e = pair_at(n, static_cast<std::size_t>(perm.next()));
    b.add_edge(e.u, e.v);
    ++uncovered;
    const Graph& g = b.view();
    VertexSet common = g.neighbors(e.u) & g.neighbors(e.v);
    for_each_clique_in(g, common, r - 2, [&](const std::vector<Vertex>& rest) {
      std::vector<Vertex> all = rest;
      all.push_back(e.u);
      all.push_back(e.v);
      for (std::size_t a = 0; a < all.size(); ++a)
        for (std::size_t c = a + 1; c < all.size(); ++c) cover(Edge(all[a], all[c]));
    });
    if (uncovered == 0) break;
  }
  return {std::move(b).build(), perm.drawn()};
}

}  // namespace turan
