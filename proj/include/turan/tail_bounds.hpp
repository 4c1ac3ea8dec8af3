#pragma once

// Tail bound evaluators and the exact and Monte-Carlo machinery to check
// them. A TailFamily lists subsets A_ij of a ground set {0..g-1}; the event
// B_ij is "every element of A_ij is present" in the p-random subset, B_i is
// the union over j, and X counts the i whose B_i occurs. Two events are
// dependent when their sets intersect, and every event depends on itself.

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "turan/cliques.hpp"
#include "turan/error.hpp"
#include "turan/graph.hpp"
#include "turan/generators.hpp"
#include "turan/parallel.hpp"
#include "turan/rng.hpp"

namespace turan {

// ---- closed-form bounds ----------------------------------------------------

inline double chernoff_upper(double mu, double lambda) {
  detail::require(mu > 0 && lambda >= 0, "chernoff_upper: need mu > 0 and lambda >= 0");
  return std::exp(-lambda * lambda / (2 * (mu + lambda / 3)));
}

inline double chernoff_lower(double mu, double lambda) {
  detail::require(mu > 0 && lambda >= 0, "chernoff_lower: need mu > 0 and lambda >= 0");
  return std::exp(-lambda * lambda / (2 * mu));
}

/// Pr(xi >= psi + lambda) <= exp(-eta lambda / (4z)) for weights in [0, z] and E xi <= psi.
inline double weighted_bernoulli_bound(double psi, double lambda, double eta, double z) {
  detail::require(eta >= 0 && eta <= 1, "weighted_bernoulli_bound: eta in [0,1]");
  detail::require(lambda >= eta * psi, "weighted_bernoulli_bound: lambda >= eta psi");
  detail::require(z > 0, "weighted_bernoulli_bound: z > 0");
  return std::exp(-eta * lambda / (4 * z));
}

struct TailBoundInput {
  double mu = 0;
  double delta_bar = 0;
  double theta_bar = 0;
  double gamma_overlap = 0;
  double t = 0;
};

inline double janson_bound(const TailBoundInput& in) {
  detail::require(in.t >= 0 && in.t <= in.mu, "janson_bound: t in [0, mu]");
  detail::require(in.delta_bar > 0, "janson_bound: delta_bar > 0");
  return std::exp(-in.t * in.t / (2 * in.delta_bar));
}

/// (1+x) log(1+x) - x, continuous at x = -1.
inline double phi_rw(double x) {
  detail::require(x >= -1, "phi_rw: x >= -1");
  if (x == -1) return 1;
  return (1 + x) * std::log1p(x) - x;
}

inline double trw_bound(const TailBoundInput& in, bool refined = false) {
  detail::require(in.gamma_overlap >= 0, "trw_bound: gamma_overlap >= 0");
  detail::require(in.t >= in.gamma_overlap && in.t <= in.mu, "trw_bound: t in [gamma_overlap, mu]");
  detail::require(in.theta_bar > 0, "trw_bound: theta_bar > 0");
  if (!refined) {
    const double s = in.t - in.gamma_overlap;
    return std::exp(-s * s / (2 * in.theta_bar));
  }
  detail::require(in.mu > 0, "trw_bound: refined form needs mu > 0");
  return std::exp(-phi_rw((in.gamma_overlap - in.t) / in.mu) * in.mu * in.mu / in.theta_bar);
}

// ---- families ---------------------------------------------------------------

struct TailFamily {
  int ground_size = 0;
  std::vector<std::vector<std::vector<int>>> events;  // events[i][j] = A_ij

  /// One j per i: the setting of the plain lower-tail inequality.
  static TailFamily flat(int ground_size, std::vector<std::vector<int>> sets) {
    TailFamily f;
    f.ground_size = ground_size;
    for (auto& s : sets) f.events.push_back({std::move(s)});
    f.validate();
    return f;
  }

  bool is_flat() const {
    return std::all_of(events.begin(), events.end(), [](const auto& e) { return e.size() == 1; });
  }

  std::size_t event_count() const {
    std::size_t c = 0;
    for (const auto& e : events) c += e.size();
    return c;
  }

  void validate() {
    detail::require(ground_size >= 0, "TailFamily: negative ground size");
    for (auto& group : events) {
      detail::require(!group.empty(), "TailFamily: an outer event needs at least one inner event");
      for (auto& a : group) {
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
        for (int x : a) detail::require(x >= 0 && x < ground_size, "TailFamily: element outside the ground set");
      }
    }
  }
};

/// All K_s copies of K_n as sets of pair indices.
inline TailFamily clique_family(int n, int s) {
  std::vector<std::vector<int>> sets;
  for_each_clique(Graph::complete(n), s, [&](const std::vector<Vertex>& c) {
    std::vector<int> pairs;
    for (std::size_t a = 0; a < c.size(); ++a)
      for (std::size_t b = a + 1; b < c.size(); ++b) pairs.push_back(static_cast<int>(pair_index(n, Edge(c[a], c[b]))));
    sets.push_back(std::move(pairs));
  });
  return TailFamily::flat(static_cast<int>(pair_count(n)), std::move(sets));
}

/// Outer index: a pair xy of `pairs`; inner index: Z in C(V minus {x,y}, r-2);
/// A_ij = K(xy, Z). X then counts pairs with at least one K_r^- completion.
inline TailFamily extension_family(int n, int r, std::span<const Edge> pairs) {
  detail::require(r >= 3 && n >= r, "extension_family: need 3 <= r <= n");
  TailFamily f;
  f.ground_size = static_cast<int>(pair_count(n));
  for (const Edge& xy : pairs) {
    std::vector<std::vector<int>> group;
    VertexSet rest = VertexSet::full(n);
    rest.reset(xy.u);
    rest.reset(xy.v);
    for_each_clique_in(Graph::complete(n), rest, r - 2, [&](const std::vector<Vertex>& z) {
      std::vector<Vertex> all = {xy.u, xy.v};
      all.insert(all.end(), z.begin(), z.end());
      std::vector<int> set;
      for (std::size_t a = 0; a < all.size(); ++a)
        for (std::size_t b = a + 1; b < all.size(); ++b)
          if (!(a == 0 && b == 1)) set.push_back(static_cast<int>(pair_index(n, Edge(all[a], all[b]))));
      group.push_back(std::move(set));
    });
    f.events.push_back(std::move(group));
  }
  f.validate();
  return f;
}

struct FamilyStats {
  double mu = 0;
  double delta_bar = 0;
  double theta_bar = 0;
  double gamma_overlap = 0;
  bool theta_fallback = false;  // theta_bar was replaced by delta_bar

  TailBoundInput input(double t) const { return {mu, delta_bar, theta_bar, gamma_overlap, t}; }
};

inline constexpr std::size_t kFamilyMaxEvents = 5000;
inline constexpr std::size_t kThetaMaxNeighbourhood = 16;

namespace detail {

inline std::size_t union_size(const std::vector<int>& a, const std::vector<int>& b) {
  std::size_t common = 0;
  for (std::size_t i = 0, j = 0; i < a.size() && j < b.size();) {
    if (a[i] == b[j]) ++common, ++i, ++j;
    else if (a[i] < b[j]) ++i;
    else ++j;
  }
  return a.size() + b.size() - common;
}

inline bool sets_meet(const std::vector<int>& a, const std::vector<int>& b) {
  for (std::size_t i = 0, j = 0; i < a.size() && j < b.size();) {
    if (a[i] == b[j]) return true;
    if (a[i] < b[j]) ++i;
    else ++j;
  }
  return false;
}

}  // namespace detail

/// mu, Delta-bar and gamma_overlap exactly; Theta-bar by inclusion-exclusion
/// over each dependent block of an outer index, or Delta-bar when some block
/// has more than 16 members.
inline FamilyStats family_stats(const TailFamily& f, double p) {
  detail::require(p >= 0 && p <= 1, "family_stats: p in [0,1]");
  detail::guard(f.event_count() <= kFamilyMaxEvents, "family_stats: more than 5000 events");
  auto pp = [&](std::size_t k) { return std::pow(p, static_cast<double>(k)); };
  FamilyStats s;
  struct Ref {
    std::size_t i, j;
  };
  std::vector<Ref> flat;
  for (std::size_t i = 0; i < f.events.size(); ++i)
    for (std::size_t j = 0; j < f.events[i].size(); ++j) flat.push_back({i, j});
  auto set = [&](const Ref& r) -> const std::vector<int>& { return f.events[r.i][r.j]; };

  for (const Ref& a : flat) s.mu += pp(set(a).size());
  for (std::size_t i = 0; i < f.events.size(); ++i)
    for (std::size_t j = 0; j < f.events[i].size(); ++j)
      for (std::size_t k = j + 1; k < f.events[i].size(); ++k)
        s.gamma_overlap += pp(detail::union_size(f.events[i][j], f.events[i][k]));

  bool feasible = true;
  for (std::size_t x = 0; x < flat.size(); ++x) {
    const auto& ax = set(flat[x]);
    // Dependent partners of (i,j), grouped by their outer index k.
    std::map<std::size_t, std::vector<std::size_t>> by_outer;
    for (std::size_t y = 0; y < flat.size(); ++y) {
      const auto& ay = set(flat[y]);
      if (x == y || detail::sets_meet(ax, ay)) {
        s.delta_bar += pp(detail::union_size(ax, ay));
        by_outer[flat[y].i].push_back(y);
      }
    }
    if (!feasible) continue;
    for (const auto& [k, members] : by_outer) {
      if (members.size() > kThetaMaxNeighbourhood) {
        feasible = false;
        break;
      }
      // Pr(B_ij and union_l B_kl) = sum over nonempty S of (-1)^{|S|+1} p^{|A_ij u A_S|}.
      const std::uint32_t top = 1u << members.size();
      double prob = 0;
      for (std::uint32_t mask = 1; mask < top; ++mask) {
        std::vector<int> u = ax;
        for (std::size_t b = 0; b < members.size(); ++b)
          if (mask >> b & 1u) {
            const auto& am = set(flat[members[b]]);
            std::vector<int> merged;
            std::set_union(u.begin(), u.end(), am.begin(), am.end(), std::back_inserter(merged));
            u = std::move(merged);
          }
        prob += (std::popcount(mask) % 2 ? 1.0 : -1.0) * pp(u.size());
      }
      s.theta_bar += prob;
    }
  }
  if (!feasible) {
    s.theta_bar = s.delta_bar;
    s.theta_fallback = true;
  }
  return s;
}

// ---- sampling ---------------------------------------------------------------

inline std::vector<bool> sample_ground(int ground_size, double p, Rng& rng) {
  std::vector<bool> present(static_cast<std::size_t>(ground_size));
  for (int x = 0; x < ground_size; ++x) present[static_cast<std::size_t>(x)] = rng.bernoulli(p);
  return present;
}

inline std::size_t count_satisfied(const TailFamily& f, const std::vector<bool>& present) {
  std::size_t x = 0;
  for (const auto& group : f.events) {
    bool any = false;
    for (const auto& a : group) {
      if (std::all_of(a.begin(), a.end(), [&](int e) { return present[static_cast<std::size_t>(e)]; })) {
        any = true;
        break;
      }
    }
    x += any;
  }
  return x;
}

struct Estimate {
  double estimate = 0;
  double std_error = 0;
  std::uint64_t trials = 0;
};

inline Estimate binomial_estimate(std::uint64_t hits, std::uint64_t trials) {
  detail::require(trials > 0, "estimate: trials must be positive");
  Estimate e;
  e.trials = trials;
  e.estimate = static_cast<double>(hits) / static_cast<double>(trials);
  e.std_error = std::sqrt(e.estimate * (1 - e.estimate) / static_cast<double>(trials));
  return e;
}

inline constexpr int kTailMaxGround = 4096;

/// Monte-Carlo Pr(X <= mu - t), trial k drawn from derive_seed(seed, k).
inline Estimate empirical_lower_tail(const TailFamily& f, double p, double t, std::uint64_t trials, std::uint64_t seed,
                                     unsigned threads = 1) {
  detail::require(trials > 0, "empirical_lower_tail: trials must be positive");
  detail::guard(f.ground_size <= kTailMaxGround && f.event_count() <= kFamilyMaxEvents,
                "empirical_lower_tail: family too large");
  const double limit = family_stats(f, p).mu - t;
  auto hits = parallel_reduce(trials, threads, std::uint64_t{0}, [&](std::uint64_t k) -> std::uint64_t {
    Rng rng(derive_seed(seed, k));
    return static_cast<double>(count_satisfied(f, sample_ground(f.ground_size, p, rng))) <= limit;
  }, [](std::uint64_t a, std::uint64_t b) { return a + b; });
  return binomial_estimate(hits, trials);
}

inline constexpr int kExhaustiveMaxGround = 20;

/// Pr(X <= mu - t) by summing over all 2^g outcomes.
inline double exhaustive_lower_tail(const TailFamily& f, double p, double t) {
  detail::guard(f.ground_size <= kExhaustiveMaxGround, "exhaustive_lower_tail: ground set above 20");
  const double limit = family_stats(f, p).mu - t;
  const int g = f.ground_size;
  double total = 0;
  std::vector<bool> present(static_cast<std::size_t>(g));
  for (std::uint32_t mask = 0; mask < (1u << g); ++mask) {
    for (int x = 0; x < g; ++x) present[static_cast<std::size_t>(x)] = mask >> x & 1u;
    if (static_cast<double>(count_satisfied(f, present)) <= limit) {
      const int k = std::popcount(mask);
      total += std::pow(p, k) * std::pow(1 - p, g - k);
    }
  }
  return total;
}

// ---- graph-event catalog ----------------------------------------------------

enum class Monotonicity { increasing, decreasing };

struct GraphEvent {
  std::string id;
  Monotonicity direction;
  std::function<bool(const Graph&)> holds;
};

/// Catalog ids: "edges<=K", "edges>=K", "has_clique:S" (S >= 2),
/// "has_triangle", "triangle_free", "connected", "has_isolated",
/// "max_degree<=K".
inline GraphEvent catalog_event(std::string_view id) {
  auto number = [&](std::string_view prefix) -> std::optional<long long> {
    if (id.substr(0, prefix.size()) != prefix) return std::nullopt;
    long long v = 0;
    auto rest = id.substr(prefix.size());
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), v);
    if (ec != std::errc() || ptr != rest.data() + rest.size() || rest.empty() || v < 0)
      throw PreconditionError("catalog event '" + std::string(id) + "': bad number");
    return v;
  };
  const std::string name(id);
  if (auto k = number("edges<=")) return {name, Monotonicity::decreasing, [k = *k](const Graph& g) { return static_cast<long long>(g.size()) <= k; }};
  if (auto k = number("edges>=")) return {name, Monotonicity::increasing, [k = *k](const Graph& g) { return static_cast<long long>(g.size()) >= k; }};
  if (auto k = number("max_degree<=")) return {name, Monotonicity::decreasing, [k = *k](const Graph& g) { return g.max_degree() <= k; }};
  if (auto s = number("has_clique:")) {
    detail::require(*s >= 2, "catalog event has_clique:S needs S >= 2");
    return {name, Monotonicity::increasing, [s = static_cast<int>(*s)](const Graph& g) { return count_cliques(g, s) > 0; }};
  }
  if (id == "has_triangle") return {name, Monotonicity::increasing, [](const Graph& g) { return count_cliques(g, 3) > 0; }};
  if (id == "triangle_free") return {name, Monotonicity::decreasing, [](const Graph& g) { return count_cliques(g, 3) == 0; }};
  if (id == "has_isolated") return {name, Monotonicity::decreasing, [](const Graph& g) {
    for (Vertex v = 0; v < g.order(); ++v)
      if (g.degree(v) == 0) return true;
    return false;
  }};
  if (id == "connected") return {name, Monotonicity::increasing, [](const Graph& g) {
    VertexSet seen(g.order());
    std::vector<Vertex> stack = {0};
    seen.set(0);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      VertexSet fresh = g.neighbors(v) - seen;
      fresh.for_each([&](Vertex w) { seen.set(w); stack.push_back(w); });
    }
    return seen.count() == g.order();
  }};
  throw PreconditionError("unknown catalog event '" + name + "'");
}

struct CovarianceEstimate {
  double covariance = 0;
  double std_error = 0;
  std::uint64_t trials = 0;
};

namespace detail {
struct Moments {
  double f = 0, g = 0, fg = 0, f2 = 0, g2 = 0, f2g = 0, fg2 = 0, f2g2 = 0;
  Moments operator+(const Moments& o) const {
    return {f + o.f, g + o.g, fg + o.fg, f2 + o.f2, g2 + o.g2, f2g + o.f2g, fg2 + o.fg2, f2g2 + o.f2g2};
  }
};
}  // namespace detail

/// Monte-Carlo Cov(1_f, 1_g) on G(n,p). The standard error is that of the
/// plug-in estimator, from the sample variance of (f - mean f)(g - mean g).
inline CovarianceEstimate covariance_estimate(const GraphEvent& f, const GraphEvent& g, int n, double p,
                                              std::uint64_t trials, std::uint64_t seed, unsigned threads = 1) {
  detail::require(trials > 1, "covariance_estimate: need at least two trials");
  auto m = parallel_reduce(trials, threads, detail::Moments{}, [&](std::uint64_t k) {
    Graph h = sample_gnp(n, p, derive_seed(seed, k));
    const double a = f.holds(h), b = g.holds(h);
    return detail::Moments{a, b, a * b, a * a, b * b, a * a * b, a * b * b, a * a * b * b};
  }, [](detail::Moments x, const detail::Moments& y) { return x + y; });
  const double t = static_cast<double>(trials);
  const double mf = m.f / t, mg = m.g / t;
  CovarianceEstimate out;
  out.trials = trials;
  out.covariance = m.fg / t - mf * mg;
  // E[((f-mf)(g-mg))^2] expanded in raw moments.
  const double second = (m.f2g2 - 2 * mg * m.f2g - 2 * mf * m.fg2 + mg * mg * m.f2 + mf * mf * m.g2 +
                         4 * mf * mg * m.fg - 2 * mf * mg * mg * m.f - 2 * mf * mf * mg * m.g) / t +
                        mf * mf * mg * mg;
  const double var = std::max(0.0, second - out.covariance * out.covariance);
  out.std_error = std::sqrt(var / (t - 1));
  return out;
}

/// Catalog pair "F,G": F must be decreasing and G increasing (negative correlation),
/// or both of the same direction (positive correlation).
inline std::pair<GraphEvent, GraphEvent> catalog_pair(std::string_view spec) {
  auto comma = spec.find(',');
  detail::require(comma != std::string_view::npos, "catalog pair must look like \"F,G\"");
  return {catalog_event(spec.substr(0, comma)), catalog_event(spec.substr(comma + 1))};
}

inline CovarianceEstimate harris_covariance_check(std::string_view spec, int n, double p, std::uint64_t trials,
                                                  std::uint64_t seed, unsigned threads = 1) {
  auto [f, g] = catalog_pair(spec);
  return covariance_estimate(f, g, n, p, trials, seed, threads);
}

inline constexpr int kExhaustiveGraphMaxOrder = 6;

/// Calls visit(graph, probability) for all 2^{C(n,2)} graphs on n vertices, with G(n,p) weights.
template <class F>
void for_each_labelled_graph(int n, double p, F&& visit) {
  detail::guard(n <= kExhaustiveGraphMaxOrder, "exhaustive graph enumeration limited to n <= 6");
  const int m = static_cast<int>(pair_count(n));
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    GraphBuilder b(n);
    for (int i = 0; i < m; ++i)
      if (mask >> i & 1u) {
        Edge e = pair_at(n, static_cast<std::size_t>(i));
        b.add_edge(e.u, e.v);
      }
    const int k = std::popcount(mask);
    visit(b.build(), std::pow(p, k) * std::pow(1 - p, m - k));
  }
}

inline double exact_covariance(const GraphEvent& f, const GraphEvent& g, int n, double p) {
  double pf = 0, pg = 0, pfg = 0;
  for_each_labelled_graph(n, p, [&](const Graph& h, double w) {
    const bool a = f.holds(h), b = g.holds(h);
    pf += a * w;
    pg += b * w;
    pfg += (a && b) * w;
  });
  return pfg - pf * pg;
}

struct TwoModelReport {
  std::string event;
  int n = 0;
  double p = 0;
  std::uint64_t m = 0;
  Estimate gnp;
  Estimate gnm;
  double difference = 0;  // |gnp - gnm|
};

/// The event under G(n,p) and under G(n,M) with M = round(p C(n,2)).
inline TwoModelReport two_model_compare(std::string_view event, int n, double p, std::uint64_t trials,
                                        std::uint64_t seed, unsigned threads = 1) {
  detail::require(p >= 0 && p <= 1, "two_model_compare: p in [0,1]");
  GraphEvent ev = catalog_event(event);
  TwoModelReport rep;
  rep.event = ev.id;
  rep.n = n;
  rep.p = p;
  rep.m = static_cast<std::uint64_t>(std::llround(p * static_cast<double>(pair_count(n))));
  auto count = [&](auto&& sampler, std::uint64_t stream) {
    return parallel_reduce(trials, threads, std::uint64_t{0}, [&](std::uint64_t k) -> std::uint64_t {
      return ev.holds(sampler(derive_seed(derive_seed(seed, stream), k)));
    }, [](std::uint64_t a, std::uint64_t b) { return a + b; });
  };
  rep.gnp = binomial_estimate(count([&](std::uint64_t s) { return sample_gnp(n, p, s); }, 0), trials);
  rep.gnm = binomial_estimate(count([&](std::uint64_t s) { return sample_gnm(n, rep.m, s); }, 1), trials);
  rep.difference = std::abs(rep.gnp.estimate - rep.gnm.estimate);
  return rep;
}

/// Exact probabilities of the event under G(n,p) and G(n,M) by enumeration.
inline std::pair<double, double> exact_two_model(std::string_view event, int n, double p) {
  GraphEvent ev = catalog_event(event);
  const auto m = static_cast<std::size_t>(std::llround(p * static_cast<double>(pair_count(n))));
  double gnp = 0;
  std::uint64_t with_m = 0, hits_m = 0;
  for_each_labelled_graph(n, p, [&](const Graph& h, double w) {
    const bool a = ev.holds(h);
    gnp += a * w;
    if (h.size() == m) {
      ++with_m;
      hits_m += a;
    }
  });
  return {gnp, static_cast<double>(hits_m) / static_cast<double>(with_m)};
}

}  // namespace turan
