#pragma once

// Rooted pattern graphs. A pattern has vertices 0..k-1, an ordered sequence
// of distinct roots and an edge list. Only edges with at least one non-root
// end (the set E') count towards e_H; v_H is the number of non-roots.
//
// Text form "k; r_1 r_2 ...; u-v u-v ...", for example "3; 0; 0-1 0-2 1-2"
// is a triangle rooted at one vertex.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "turan/error.hpp"
#include "turan/graph.hpp"
#include "turan/graph_io.hpp"
#include "turan/rational.hpp"

namespace turan {

class RootedGraph {
 public:
  RootedGraph(int vertices, std::vector<Vertex> roots, EdgeList edges)
      : k_(vertices), roots_(std::move(roots)), edges_(std::move(edges)) {
    detail::require(k_ >= 1, "RootedGraph: at least one vertex");
    is_root_.assign(static_cast<std::size_t>(k_), false);
    for (Vertex v : roots_) {
      detail::require(v >= 0 && v < k_, "RootedGraph: root out of range");
      detail::require(!is_root_[static_cast<std::size_t>(v)], "RootedGraph: repeated root");
      is_root_[static_cast<std::size_t>(v)] = true;
    }
    for (const Edge& e : edges_) {
      detail::require(e.u != e.v, "RootedGraph: loop");
      detail::require(e.u >= 0 && e.v < k_, "RootedGraph: edge endpoint out of range");
    }
    std::sort(edges_.begin(), edges_.end());
    detail::require(std::adjacent_find(edges_.begin(), edges_.end()) == edges_.end(), "RootedGraph: repeated edge");
    for (const Edge& e : edges_)
      if (!is_root(e.u) || !is_root(e.v)) free_edges_.push_back(e);
    for (Vertex v = 0; v < k_; ++v)
      if (!is_root(v)) non_roots_.push_back(v);
  }

  static RootedGraph parse(std::string_view text) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i)
      if (i == text.size() || text[i] == ';') {
        fields.push_back(text.substr(start, i - start));
        start = i + 1;
      }
    if (fields.size() != 3) throw ParseError(1, "pattern needs \"vertices; roots; edges\"");
    auto ints = [](std::string_view field, const char* what) {
      std::vector<long long> out;
      std::string cleaned(field);
      std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
      for (auto tok : detail::split_ws(cleaned)) {
        long long v = 0;
        if (!detail::parse_int(tok, v)) throw ParseError(1, std::string("bad ") + what + " token '" + std::string(tok) + "'");
        out.push_back(v);
      }
      return out;
    };
    auto count = ints(fields[0], "vertex count");
    if (count.size() != 1 || count[0] < 1 || count[0] > 64) throw ParseError(1, "vertex count must be one integer in [1, 64]");
    std::vector<Vertex> roots;
    for (long long v : ints(fields[1], "root")) roots.push_back(static_cast<Vertex>(v));
    EdgeList edges;
    std::string cleaned(fields[2]);
    std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
    for (auto tok : detail::split_ws(cleaned)) {
      auto dash = tok.find('-');
      long long a = 0, b = 0;
      if (dash == std::string_view::npos || !detail::parse_int(tok.substr(0, dash), a) ||
          !detail::parse_int(tok.substr(dash + 1), b))
        throw ParseError(1, "bad edge token '" + std::string(tok) + "', expected u-v");
      if (a == b) throw ParseError(1, "loop in pattern");
      edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
    }
    try {
      return RootedGraph(static_cast<int>(count[0]), std::move(roots), std::move(edges));
    } catch (const PreconditionError& e) {
      throw ParseError(1, e.what());
    }
  }

  std::string to_string() const {
    std::ostringstream out;
    out << k_ << ";";
    for (Vertex v : roots_) out << ' ' << v;
    out << ";";
    for (const Edge& e : edges_) out << ' ' << e.u << '-' << e.v;
    return out.str();
  }

  int vertex_count() const noexcept { return k_; }
  const std::vector<Vertex>& roots() const noexcept { return roots_; }
  const EdgeList& edges() const noexcept { return edges_; }
  const EdgeList& free_edges() const noexcept { return free_edges_; }
  const std::vector<Vertex>& non_roots() const noexcept { return non_roots_; }
  bool is_root(Vertex v) const { return is_root_[static_cast<std::size_t>(v)]; }
  int v_h() const noexcept { return static_cast<int>(non_roots_.size()); }
  int e_h() const noexcept { return static_cast<int>(free_edges_.size()); }

  /// The rooted subgraph induced by the roots and `keep` (relabelled in increasing order).
  RootedGraph induced(std::span<const Vertex> keep) const {
    std::vector<int> label(static_cast<std::size_t>(k_), -1);
    std::vector<Vertex> kept;
    for (Vertex v = 0; v < k_; ++v)
      if (is_root(v) || std::find(keep.begin(), keep.end(), v) != keep.end()) kept.push_back(v);
    for (std::size_t i = 0; i < kept.size(); ++i) label[static_cast<std::size_t>(kept[i])] = static_cast<int>(i);
    std::vector<Vertex> roots;
    for (Vertex r : roots_) roots.push_back(label[static_cast<std::size_t>(r)]);
    EdgeList edges;
    for (const Edge& e : edges_) {
      int a = label[static_cast<std::size_t>(e.u)], b = label[static_cast<std::size_t>(e.v)];
      if (a >= 0 && b >= 0) edges.emplace_back(a, b);
    }
    return RootedGraph(static_cast<int>(kept.size()), std::move(roots), std::move(edges));
  }

  friend bool operator==(const RootedGraph&, const RootedGraph&) = default;

 private:
  int k_;
  std::vector<Vertex> roots_;
  EdgeList edges_;
  std::vector<bool> is_root_;
  EdgeList free_edges_;
  std::vector<Vertex> non_roots_;
};

inline constexpr int kRootedBalanceMaxVertices = 12;

inline Rational density(const RootedGraph& h) {
  detail::require(h.v_h() > 0, "density: pattern has no non-root vertex");
  return Rational(h.e_h(), h.v_h());
}

namespace detail {

/// Calls f(|W|, e'(W)) for every nonempty set W of non-roots, where e'(W)
/// counts E' edges inside W u roots.
template <class F>
void for_each_nonroot_subset(const RootedGraph& h, F&& f) {
  const int v = h.v_h();
  std::vector<int> index(static_cast<std::size_t>(h.vertex_count()), -1);
  for (int i = 0; i < v; ++i) index[static_cast<std::size_t>(h.non_roots()[static_cast<std::size_t>(i)])] = i;
  std::vector<std::uint32_t> need;
  for (const Edge& e : h.free_edges()) {
    std::uint32_t m = 0;
    if (index[static_cast<std::size_t>(e.u)] >= 0) m |= 1u << index[static_cast<std::size_t>(e.u)];
    if (index[static_cast<std::size_t>(e.v)] >= 0) m |= 1u << index[static_cast<std::size_t>(e.v)];
    need.push_back(m);
  }
  for (std::uint32_t w = 1; w < (1u << v); ++w) {
    int e = 0;
    for (std::uint32_t m : need) e += (m & ~w) == 0;
    f(std::popcount(w), e, w == (1u << v) - 1);
  }
}

}  // namespace detail

/// rho(H') <= rho(H) for every root-preserving subgraph H' with v_{H'} > 0.
inline bool is_balanced(const RootedGraph& h) {
  detail::require(h.v_h() > 0, "is_balanced: pattern has no non-root vertex");
  detail::guard(h.vertex_count() <= kRootedBalanceMaxVertices, "is_balanced: pattern larger than 12 vertices");
  const long long e = h.e_h(), v = h.v_h();
  bool ok = true;
  detail::for_each_nonroot_subset(h, [&](int vw, int ew, bool) { ok = ok && ew * v <= e * vw; });
  return ok;
}

/// Balanced, with strict inequality for every subgraph whose E' differs from E'(H).
inline bool is_strictly_balanced(const RootedGraph& h) {
  detail::require(h.v_h() > 0, "is_strictly_balanced: pattern has no non-root vertex");
  detail::guard(h.vertex_count() <= kRootedBalanceMaxVertices, "is_strictly_balanced: pattern larger than 12 vertices");
  const long long e = h.e_h(), v = h.v_h();
  bool ok = true;
  detail::for_each_nonroot_subset(h, [&](int vw, int ew, bool) {
    if (ew == e) {
      ok = ok && ew * v <= e * vw;
    } else {
      ok = ok && ew * v < e * vw;
    }
  });
  // Proper edge subsets of the full vertex set have density below rho automatically.
  return ok;
}

/// min over edge sets L with 0 < e_L < e_H of v_L - v_H e_L / e_H; positive
/// exactly for strictly balanced patterns. Empty when e_H < 2.
inline std::optional<Rational> balance_gap(const RootedGraph& h) {
  detail::require(h.v_h() > 0, "balance_gap: pattern has no non-root vertex");
  detail::guard(h.vertex_count() <= kRootedBalanceMaxVertices, "balance_gap: pattern larger than 12 vertices");
  const long long e = h.e_h(), v = h.v_h();
  if (e < 2) return std::nullopt;
  Rational best = Rational(v, e);  // all non-roots, e_H - 1 edges
  detail::for_each_nonroot_subset(h, [&](int vw, int ew, bool full) {
    if (full || ew == 0) return;
    Rational slack = Rational(vw) - Rational(v * ew, e);
    if (slack < best) best = slack;
  });
  return best;
}

/// N(H, G; anchors): injections of V(H) into V(G) that send the roots to the
/// anchors in order and every E' edge to an edge of G.
inline std::uint64_t count_copies(const RootedGraph& h, const Graph& g, std::span<const Vertex> anchors) {
  detail::require(anchors.size() == h.roots().size(), "count_copies: one anchor per root");
  for (Vertex a : anchors) detail::require(a >= 0 && a < g.order(), "count_copies: anchor out of range");
  std::vector<Vertex> sorted(anchors.begin(), anchors.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return 0;

  const int k = h.vertex_count();
  std::vector<Vertex> image(static_cast<std::size_t>(k), -1);
  VertexSet used(g.order());
  for (std::size_t i = 0; i < anchors.size(); ++i) {
    image[static_cast<std::size_t>(h.roots()[i])] = anchors[i];
    used.set(anchors[i]);
  }
  std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(k));
  for (const Edge& e : h.free_edges()) {
    adj[static_cast<std::size_t>(e.u)].push_back(e.v);
    adj[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  // Map non-roots in an order where each vertex sees as many mapped neighbours as possible.
  std::vector<Vertex> order;
  std::vector<bool> placed(static_cast<std::size_t>(k), false);
  for (Vertex r : h.roots()) placed[static_cast<std::size_t>(r)] = true;
  for (int step = 0; step < h.v_h(); ++step) {
    Vertex pick = -1;
    int best = -1;
    for (Vertex u : h.non_roots()) {
      if (placed[static_cast<std::size_t>(u)]) continue;
      int seen = 0;
      for (Vertex w : adj[static_cast<std::size_t>(u)]) seen += placed[static_cast<std::size_t>(w)];
      if (seen > best) best = seen, pick = u;
    }
    placed[static_cast<std::size_t>(pick)] = true;
    order.push_back(pick);
  }
  std::uint64_t count = 0;
  auto rec = [&](auto& self, std::size_t depth) -> void {
    if (depth == order.size()) {
      ++count;
      return;
    }
    const Vertex u = order[depth];
    VertexSet cand = VertexSet::full(g.order());
    cand.subtract(used);
    for (Vertex w : adj[static_cast<std::size_t>(u)])
      if (image[static_cast<std::size_t>(w)] >= 0) cand &= g.neighbors(image[static_cast<std::size_t>(w)]);
    cand.for_each([&](Vertex x) {
      image[static_cast<std::size_t>(u)] = x;
      used.set(x);
      self(self, depth + 1);
      used.reset(x);
    });
    image[static_cast<std::size_t>(u)] = -1;
  };
  rec(rec, 0);
  return count;
}

inline std::uint64_t count_copies(const RootedGraph& h, const Graph& g, std::initializer_list<Vertex> anchors) {
  return count_copies(h, g, std::span<const Vertex>(anchors.begin(), anchors.size()));
}

struct ShapeBound {
  std::string shape;  // canonical rooted form of H_L, in the pattern text form
  int v_l = 0;
  int e_l = 0;
  double bound = 0;         // (v_H)_{v_L} n^{v_H-v_L} p^{e_H-e_L}
  double balanced_cap = 0;  // (v_H)_{v_L} (n^{v_H} p^{e_H})^{1 - e_L/e_H}
};

struct ExpectationProfile {
  double e0 = 0;        // n^{v_H} p^{e_H}
  double e0_exact = 0;  // (n-s)_{v_H} p^{e_H}
  std::vector<ShapeBound> shapes;
};

inline constexpr int kProfileMaxFreeEdges = 14;

namespace detail {

/// Canonical text of the rooted graph with the given roots and edge list,
/// minimizing the relabelled edge list over permutations of non-roots that
/// respect a degree-and-root-adjacency invariant.
inline std::string canonical_rooted_shape(const std::vector<Vertex>& roots, const EdgeList& edges) {
  std::vector<Vertex> others;
  for (const Edge& e : edges)
    for (Vertex x : {e.u, e.v})
      if (std::find(roots.begin(), roots.end(), x) == roots.end() &&
          std::find(others.begin(), others.end(), x) == others.end())
        others.push_back(x);
  auto invariant = [&](Vertex x) {
    std::vector<int> key(roots.size() + 1, 0);
    for (const Edge& e : edges) {
      if (e.u != x && e.v != x) continue;
      Vertex y = e.u == x ? e.v : e.u;
      auto it = std::find(roots.begin(), roots.end(), y);
      if (it != roots.end()) ++key[static_cast<std::size_t>(it - roots.begin())];
      ++key.back();
    }
    return key;
  };
  std::sort(others.begin(), others.end(), [&](Vertex a, Vertex b) {
    auto ka = invariant(a), kb = invariant(b);
    return ka != kb ? ka < kb : a < b;
  });
  std::vector<std::pair<std::size_t, std::size_t>> classes;
  for (std::size_t i = 0; i < others.size();) {
    std::size_t j = i;
    while (j < others.size() && invariant(others[j]) == invariant(others[i])) ++j;
    classes.emplace_back(i, j);
    i = j;
  }
  std::map<Vertex, int> label;
  for (std::size_t i = 0; i < roots.size(); ++i) label[roots[i]] = static_cast<int>(i);
  EdgeList best;
  bool have = false;
  auto evaluate = [&] {
    for (std::size_t i = 0; i < others.size(); ++i) label[others[i]] = static_cast<int>(roots.size() + i);
    EdgeList relabelled;
    for (const Edge& e : edges) relabelled.emplace_back(label[e.u], label[e.v]);
    std::sort(relabelled.begin(), relabelled.end());
    if (!have || relabelled < best) best = std::move(relabelled), have = true;
  };
  auto rec = [&](auto& self, std::size_t c) -> void {
    if (c == classes.size()) {
      evaluate();
      return;
    }
    auto [lo, hi] = classes[c];
    std::sort(others.begin() + static_cast<std::ptrdiff_t>(lo), others.begin() + static_cast<std::ptrdiff_t>(hi));
    do {
      self(self, c + 1);
    } while (std::next_permutation(others.begin() + static_cast<std::ptrdiff_t>(lo),
                                   others.begin() + static_cast<std::ptrdiff_t>(hi)));
  };
  rec(rec, 0);
  std::vector<Vertex> canon_roots(roots.size());
  for (std::size_t i = 0; i < roots.size(); ++i) canon_roots[i] = static_cast<Vertex>(i);
  return RootedGraph(static_cast<int>(roots.size() + others.size()), canon_roots, best).to_string();
}

inline double falling(double a, int k) {
  double out = 1;
  for (int i = 0; i < k; ++i) out *= a - i;
  return out;
}

}  // namespace detail

/// E_0 and, for every rooted isomorphism type of an edge set L inside E'(H)
/// with e_L < e_H, the bound on E_L.
inline ExpectationProfile expectation_profile(const RootedGraph& h, double n, double p) {
  detail::require(p >= 0 && p <= 1, "expectation_profile: p in [0,1]");
  detail::require(n >= h.vertex_count(), "expectation_profile: n below pattern order");
  detail::guard(h.e_h() <= kProfileMaxFreeEdges, "expectation_profile: more than 14 free edges");
  const int v = h.v_h(), e = h.e_h();
  const int s = static_cast<int>(h.roots().size());
  ExpectationProfile prof;
  prof.e0 = std::pow(n, v) * std::pow(p, e);
  prof.e0_exact = detail::falling(n - s, v) * std::pow(p, e);
  std::map<std::string, ShapeBound> shapes;
  const auto& fe = h.free_edges();
  for (std::uint32_t mask = 0; mask < (1u << e) - 1; ++mask) {
    EdgeList l;
    for (int i = 0; i < e; ++i)
      if (mask >> i & 1u) l.push_back(fe[static_cast<std::size_t>(i)]);
    std::string key = detail::canonical_rooted_shape(h.roots(), l);
    if (shapes.count(key)) continue;
    ShapeBound b;
    b.shape = key;
    b.e_l = static_cast<int>(l.size());
    std::vector<Vertex> touched;
    for (const Edge& x : l)
      for (Vertex y : {x.u, x.v})
        if (!h.is_root(y)) touched.push_back(y);
    std::sort(touched.begin(), touched.end());
    b.v_l = static_cast<int>(std::unique(touched.begin(), touched.end()) - touched.begin());
    const double zz = detail::falling(v, b.v_l);
    b.bound = zz * std::pow(n, v - b.v_l) * std::pow(p, e - b.e_l);
    b.balanced_cap = zz * std::pow(prof.e0, 1.0 - static_cast<double>(b.e_l) / e);
    shapes.emplace(key, b);
  }
  for (auto& [k, b] : shapes) prof.shapes.push_back(b);
  std::sort(prof.shapes.begin(), prof.shapes.end(), [](const ShapeBound& a, const ShapeBound& b) {
    return std::tie(a.e_l, a.v_l, a.shape) < std::tie(b.e_l, b.v_l, b.shape);
  });
  return prof;
}

/// Reverse-lexicographic index of (i, j) among pairs 1 <= i < j: C(j-1, 2) + i.
inline int varsigma(int i, int j) {
  detail::require(1 <= i && i < j, "varsigma: need 1 <= i < j");
  return (j - 1) * (j - 2) / 2 + i;
}

/// H_ij on u_0..u_j: u_0 joined to every u_k, plus u_k u_l for (k,l) before (i,j); roots (u_0, u_i, u_j).
inline RootedGraph h_ij(int r, int i, int j) {
  detail::require(1 <= i && i < j && j <= r - 1, "h_ij: need 1 <= i < j <= r-1");
  EdgeList edges;
  for (int k = 1; k <= j; ++k) edges.emplace_back(0, k);
  const int limit = varsigma(i, j);
  for (int l = 2; l <= j; ++l)
    for (int k = 1; k < l; ++k)
      if (varsigma(k, l) < limit) edges.emplace_back(k, l);
  return RootedGraph(j + 1, {0, i, j}, std::move(edges));
}

/// S_ij = n^{j-1} p^{varsigma(i,j)+j-1}.
inline double s_ij(double n, double p, int i, int j) {
  return std::pow(n, j - 1) * std::pow(p, varsigma(i, j) + j - 1);
}

}  // namespace turan
