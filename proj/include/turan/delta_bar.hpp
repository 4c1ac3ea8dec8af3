#pragma once

// Exact second-moment sum for the K_r^- family generated by a pair set R,
// next to the closed-form upper bound obtained by classifying intersecting
// pairs (K, L) by a = |e_K n e_L| and b = |V(K) n V(L)|.

#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "turan/constants.hpp"
#include "turan/error.hpp"
#include "turan/graph.hpp"

namespace turan {

/// K(xy, Z) = C({x,y} u Z, 2) minus {xy}, in canonical edge order.
inline EdgeList kr_minus_pattern(Edge xy, std::span<const Vertex> z) {
  std::vector<Vertex> all = {xy.u, xy.v};
  all.insert(all.end(), z.begin(), z.end());
  EdgeList out;
  for (std::size_t a = 0; a < all.size(); ++a)
    for (std::size_t b = a + 1; b < all.size(); ++b) {
      Edge e(all[a], all[b]);
      if (e != xy) out.push_back(e);
    }
  std::sort(out.begin(), out.end());
  return out;
}

struct DeltaBar {
  double exact = 0;
  double closed_form_bound = 0;
  std::uint64_t family_size = 0;
  std::uint64_t intersecting_pairs = 0;  // ordered, diagonal included
};

inline constexpr int kDeltaBarMaxOrder = 12;

/// Closed form |R| n^{2r-4} p^{r^2-r-2} [sum_{b=3}^r n^{2-b} p^{1-C(b,2)}
///   + B (|R| + Delta_R n) sum_{b=2}^r n^{-b} p^{-C(b,2)}] with B = r!.
inline double delta_bar_bound(double n, double p, int r, std::size_t r_size, int r_max_degree) {
  detail::require(p > 0 && p <= 1, "delta_bar_bound: p in (0,1]");
  double factorial = 1;
  for (int i = 2; i <= r; ++i) factorial *= i;
  double first = 0, second = 0;
  for (int b = 3; b <= r; ++b) first += std::pow(n, 2 - b) * std::pow(p, static_cast<double>(1 - choose2(b)));
  for (int b = 2; b <= r; ++b) second += std::pow(n, -b) * std::pow(p, static_cast<double>(-choose2(b)));
  const double rs = static_cast<double>(r_size);
  return rs * std::pow(n, 2 * r - 4) * std::pow(p, static_cast<double>(r * r - r - 2)) *
         (first + factorial * (rs + r_max_degree * n) * second);
}

inline DeltaBar delta_bar_kr_minus(int n, double p, int r, std::span<const Edge> pairs) {
  detail::require(r >= 3, "delta_bar_kr_minus: r >= 3");
  detail::require(n >= r, "delta_bar_kr_minus: n >= r");
  detail::require(p > 0 && p <= 1, "delta_bar_kr_minus: p in (0,1]");
  detail::guard(n <= kDeltaBarMaxOrder, "delta_bar_kr_minus: exact mode limited to n <= 12");
  std::vector<Edge> rs(pairs.begin(), pairs.end());
  std::sort(rs.begin(), rs.end());
  detail::require(std::adjacent_find(rs.begin(), rs.end()) == rs.end(), "delta_bar_kr_minus: repeated pair in R");
  std::vector<int> deg(static_cast<std::size_t>(n), 0);
  for (const Edge& e : rs) {
    detail::require(e.u >= 0 && e.v < n && e.u != e.v, "delta_bar_kr_minus: invalid pair");
    ++deg[static_cast<std::size_t>(e.u)];
    ++deg[static_cast<std::size_t>(e.v)];
  }

  using Mask = std::array<std::uint64_t, 2>;  // C(12,2) = 66 pair slots
  std::vector<Mask> family;
  std::vector<Vertex> z;
  for (const Edge& xy : rs) {
    std::vector<Vertex> rest;
    for (Vertex v = 0; v < n; ++v)
      if (v != xy.u && v != xy.v) rest.push_back(v);
    auto rec = [&](auto& self, std::size_t from) -> void {
      if (static_cast<int>(z.size()) == r - 2) {
        Mask m{0, 0};
        for (const Edge& e : kr_minus_pattern(xy, z)) {
          auto idx = pair_index(n, e);
          m[idx / 64] |= std::uint64_t{1} << (idx % 64);
        }
        family.push_back(m);
        return;
      }
      for (std::size_t i = from; i < rest.size(); ++i) {
        z.push_back(rest[i]);
        self(self, i + 1);
        z.pop_back();
      }
    };
    rec(rec, 0);
  }

  const int pattern = static_cast<int>(choose2(r)) - 1;
  std::vector<std::uint64_t> by_union(static_cast<std::size_t>(2 * pattern + 1), 0);
  for (const Mask& k : family)
    for (const Mask& l : family) {
      const int common = std::popcount(k[0] & l[0]) + std::popcount(k[1] & l[1]);
      if (common == 0) continue;
      ++by_union[static_cast<std::size_t>(2 * pattern - common)];
    }

  DeltaBar out;
  out.family_size = family.size();
  for (std::size_t u = 0; u < by_union.size(); ++u) {
    out.intersecting_pairs += by_union[u];
    if (by_union[u]) out.exact += static_cast<double>(by_union[u]) * std::pow(p, static_cast<double>(u));
  }
  const int max_deg = rs.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
  out.closed_form_bound = delta_bar_bound(n, p, r, rs.size(), max_deg);
  return out;
}

}  // namespace turan
