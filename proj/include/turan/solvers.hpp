#pragma once

// Exact extremal solvers.
//
// t_r(G): G minus a minimum set of edges meeting every K_r copy. Branch and
// bound over the copy hypergraph: branch on the unhit copy with the fewest
// allowed edges (choose edge i, forbid edges 1..i-1), bound by a greedy
// packing of unhit copies that are disjoint on their allowed edges.
//
// b_r(G): max (r-1)-cut. Vertices are assigned in degree order; a vertex may
// only open the next unused part, so the first vertex always lands in part 1.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "turan/cliques.hpp"
#include "turan/cut.hpp"
#include "turan/graph.hpp"

namespace turan {

struct SolveResult {
  std::size_t value = 0;
  EdgeList witness_edges;         // max_kr_free: the K_r-free subgraph
  std::optional<Cut> witness_cut;  // max_partite: the partition
  bool optimal = true;
  std::uint64_t nodes_explored = 0;
  bool time_budget_hit = false;   // node budget exhausted
};

struct SolveOptions {
  std::optional<std::uint64_t> node_limit;
};

namespace detail {

class HittingSetSolver {
 public:
  HittingSetSolver(const Graph& g, int r, SolveOptions options) : g_(g), options_(options) {
    edges_ = g.edges();
    std::vector<int> id(pair_count(g.order()), -1);
    for (std::size_t i = 0; i < edges_.size(); ++i) id[pair_index(g.order(), edges_[i])] = static_cast<int>(i);
    for_each_clique(g, r, [&](const std::vector<Vertex>& c) {
      std::vector<int> ids;
      for (std::size_t a = 0; a < c.size(); ++a)
        for (std::size_t b = a + 1; b < c.size(); ++b) ids.push_back(id[pair_index(g.order(), Edge(c[a], c[b]))]);
      copies_.push_back(std::move(ids));
    });
    copies_of_.resize(edges_.size());
    for (std::size_t c = 0; c < copies_.size(); ++c)
      for (int e : copies_[c]) copies_of_[e].push_back(static_cast<int>(c));
    hits_.assign(copies_.size(), 0);
    allowed_.assign(copies_.size(), static_cast<int>(copies_.empty() ? 0 : copies_[0].size()));
    chosen_.assign(edges_.size(), 0);
    forbidden_.assign(edges_.size(), 0);
    mark_.assign(edges_.size(), 0);
  }

  std::size_t copy_count() const noexcept { return copies_.size(); }

  /// Seeds the incumbent with a known hitting set.
  void offer_incumbent(const std::vector<int>& hitting) {
    if (!best_ || hitting.size() < best_->size()) best_ = hitting;
  }

  void solve_one() {
    if (!best_) offer_incumbent(greedy());
    enumerate_all_ = false;
    std::vector<int> stack;
    search(stack);
  }

  /// Every minimum hitting set, given that `minimum` is the optimum size.
  std::vector<std::vector<int>> solve_all(std::size_t minimum) {
    enumerate_all_ = true;
    target_ = minimum;
    all_.clear();
    std::vector<int> stack;
    search(stack);
    return all_;
  }

  const std::vector<int>& best() const { return *best_; }
  const EdgeList& edges() const noexcept { return edges_; }
  std::uint64_t nodes() const noexcept { return nodes_; }
  bool budget_hit() const noexcept { return budget_hit_; }

 private:
  std::vector<int> greedy() const {
    std::vector<char> hit(copies_.size(), 0);
    std::vector<int> score(edges_.size(), 0);
    for (std::size_t e = 0; e < edges_.size(); ++e) score[e] = static_cast<int>(copies_of_[e].size());
    std::vector<int> out;
    std::size_t remaining = copies_.size();
    while (remaining > 0) {
      int e = static_cast<int>(std::max_element(score.begin(), score.end()) - score.begin());
      out.push_back(e);
      for (int c : copies_of_[e]) {
        if (hit[c]) continue;
        hit[c] = 1;
        --remaining;
        for (int f : copies_[c]) --score[f];
      }
    }
    return out;
  }

  void choose(int e, int delta) {
    chosen_[e] += delta;
    for (int c : copies_of_[e]) hits_[c] += delta;
  }
  void forbid(int e, int delta) {
    forbidden_[e] += delta;
    for (int c : copies_of_[e]) allowed_[c] -= delta;
  }

  // Greedy packing of unhit copies, disjoint on allowed edges. Returns -1 if
  // some unhit copy has no allowed edge left.
  int packing_bound(int& branch_copy) {
    order_.clear();
    branch_copy = -1;
    int fewest = 1 << 30;
    for (std::size_t c = 0; c < copies_.size(); ++c) {
      if (hits_[c]) continue;
      if (allowed_[c] == 0) return -1;
      order_.push_back(static_cast<int>(c));
      if (allowed_[c] < fewest) fewest = allowed_[c], branch_copy = static_cast<int>(c);
    }
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) { return allowed_[a] < allowed_[b]; });
    ++stamp_;
    int packed = 0;
    for (int c : order_) {
      bool free = true;
      for (int e : copies_[c])
        if (!forbidden_[e] && mark_[e] == stamp_) {
          free = false;
          break;
        }
      if (!free) continue;
      ++packed;
      for (int e : copies_[c])
        if (!forbidden_[e]) mark_[e] = stamp_;
    }
    return packed;
  }

  void search(std::vector<int>& stack) {
    if (budget_hit_) return;
    if (options_.node_limit && nodes_ >= *options_.node_limit) {
      budget_hit_ = true;
      return;
    }
    ++nodes_;
    int branch_copy = -1;
    const int lb = packing_bound(branch_copy);
    if (lb < 0) return;
    const std::size_t depth = stack.size();
    if (enumerate_all_) {
      if (depth + static_cast<std::size_t>(lb) > target_) return;
    } else if (depth + static_cast<std::size_t>(lb) >= best_->size()) {
      if (branch_copy >= 0 || depth >= best_->size()) return;
    }
    if (branch_copy < 0) {
      if (enumerate_all_) {
        if (depth == target_) {
          std::vector<int> found = stack;
          std::sort(found.begin(), found.end());
          all_.push_back(std::move(found));
        }
      } else if (depth < best_->size()) {
        best_ = stack;
      }
      return;
    }
    std::vector<int> options;
    for (int e : copies_[branch_copy])
      if (!forbidden_[e]) options.push_back(e);
    std::size_t done = 0;
    for (int e : options) {
      choose(e, +1);
      stack.push_back(e);
      search(stack);
      stack.pop_back();
      choose(e, -1);
      forbid(e, +1);
      ++done;
      if (budget_hit_) break;
    }
    for (std::size_t i = 0; i < done; ++i) forbid(options[i], -1);
  }

  const Graph& g_;
  SolveOptions options_;
  EdgeList edges_;
  std::vector<std::vector<int>> copies_;
  std::vector<std::vector<int>> copies_of_;
  std::vector<int> hits_, allowed_, chosen_, forbidden_, mark_, order_;
  int stamp_ = 0;
  std::optional<std::vector<int>> best_;
  bool enumerate_all_ = false;
  std::size_t target_ = 0;
  std::vector<std::vector<int>> all_;
  std::uint64_t nodes_ = 0;
  bool budget_hit_ = false;
};

inline EdgeList complement_in(const EdgeList& edges, const std::vector<int>& removed) {
  std::vector<char> drop(edges.size(), 0);
  for (int e : removed) drop[e] = 1;
  EdgeList keep;
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (!drop[i]) keep.push_back(edges[i]);
  return keep;
}

inline SolveResult max_kr_free_impl(const Graph& g, int r, SolveOptions options, const std::optional<Cut>& hint) {
  detail::require(r >= 3, "max_kr_free: r >= 3");
  HittingSetSolver solver(g, r, options);
  SolveResult out;
  if (hint) {
    // Edges inside the hint's blocks form a hitting set when it has r-1 blocks.
    std::vector<int> inside;
    for (std::size_t i = 0; i < solver.edges().size(); ++i)
      if (!hint->crosses(solver.edges()[i])) inside.push_back(static_cast<int>(i));
    solver.offer_incumbent(inside);
  }
  solver.solve_one();
  out.witness_edges = complement_in(solver.edges(), solver.best());
  out.value = out.witness_edges.size();
  out.nodes_explored = solver.nodes();
  out.time_budget_hit = solver.budget_hit();
  out.optimal = !solver.budget_hit();
  return out;
}

class PartiteSolver {
 public:
  PartiteSolver(const Graph& g, int k, SolveOptions options) : g_(g), k_(k), options_(options) {
    const int n = g.order();
    order_.resize(static_cast<std::size_t>(n));
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    part_.assign(static_cast<std::size_t>(n), -1);
    into_.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(k), 0));
    assigned_deg_.assign(static_cast<std::size_t>(n), 0);
  }

  void solve() {
    greedy();
    unassigned_edges_ = g_.size();
    search(0, 0, 0);
  }

  std::size_t best_value() const noexcept { return best_value_; }
  const std::vector<int>& best_assignment() const noexcept { return best_; }
  std::uint64_t nodes() const noexcept { return nodes_; }
  bool budget_hit() const noexcept { return budget_hit_; }

 private:
  void greedy() {
    std::vector<int> part(static_cast<std::size_t>(g_.order()), -1);
    std::size_t value = 0;
    for (Vertex v : order_) {
      std::vector<int> cnt(static_cast<std::size_t>(k_), 0);
      g_.neighbors(v).for_each([&](Vertex w) {
        if (part[w] >= 0) ++cnt[part[w]];
      });
      int bestp = static_cast<int>(std::min_element(cnt.begin(), cnt.end()) - cnt.begin());
      part[v] = bestp;
      int assigned = std::accumulate(cnt.begin(), cnt.end(), 0);
      value += static_cast<std::size_t>(assigned - cnt[bestp]);
    }
    best_ = part;
    best_value_ = value;
  }

  void assign(Vertex v, int p, int delta) {
    g_.neighbors(v).for_each([&](Vertex w) {
      into_[w][p] += delta;
      assigned_deg_[w] += delta;
    });
  }

  void search(std::size_t idx, std::size_t value, int used) {
    if (budget_hit_) return;
    if (options_.node_limit && nodes_ >= *options_.node_limit) {
      budget_hit_ = true;
      return;
    }
    ++nodes_;
    if (idx == order_.size()) {
      if (value > best_value_ || best_.empty()) {
        best_value_ = value;
        best_ = part_;
      }
      return;
    }
    // Bound: every unassigned vertex sends its assigned-neighbour edges to its
    // best part, and every edge between unassigned vertices is cut.
    std::size_t bound = value + unassigned_edges_;
    for (std::size_t j = idx; j < order_.size(); ++j) {
      Vertex w = order_[j];
      int worst = *std::min_element(into_[w].begin(), into_[w].end());
      bound += static_cast<std::size_t>(assigned_deg_[w] - worst);
    }
    if (bound <= best_value_) return;

    Vertex v = order_[idx];
    const int limit = std::min(k_, used + 1);
    // Try parts in order of fewest already-assigned neighbours.
    std::vector<int> parts(static_cast<std::size_t>(limit));
    std::iota(parts.begin(), parts.end(), 0);
    std::stable_sort(parts.begin(), parts.end(), [&](int a, int b) { return into_[v][a] < into_[v][b]; });
    const std::size_t unassigned_nbrs = static_cast<std::size_t>(g_.degree(v) - assigned_deg_[v]);
    for (int p : parts) {
      const std::size_t gain = static_cast<std::size_t>(assigned_deg_[v] - into_[v][p]);
      part_[v] = p;
      assign(v, p, +1);
      unassigned_edges_ -= unassigned_nbrs;
      search(idx + 1, value + gain, std::max(used, p + 1));
      unassigned_edges_ += unassigned_nbrs;
      assign(v, p, -1);
      part_[v] = -1;
      if (budget_hit_) return;
    }
  }

  const Graph& g_;
  int k_;
  SolveOptions options_;
  std::vector<Vertex> order_;
  std::vector<int> part_;
  std::vector<std::vector<int>> into_;
  std::vector<int> assigned_deg_;
  std::size_t unassigned_edges_ = 0;
  std::vector<int> best_;
  std::size_t best_value_ = 0;
  std::uint64_t nodes_ = 0;
  bool budget_hit_ = false;
};

}  // namespace detail

/// t_r(G) with a K_r-free witness subgraph.
inline SolveResult max_kr_free(const Graph& g, int r, SolveOptions options = {}) {
  return detail::max_kr_free_impl(g, r, options, std::nullopt);
}

/// Running record of every exact max_partite answer against the bound
/// b(G) >= (k-1)|G|/k, which any maximum k-cut satisfies.
struct PartiteAudit {
  std::atomic<std::uint64_t> solved{0};
  std::atomic<std::uint64_t> violations{0};

  void record(std::size_t value, std::size_t edges, int k) {
    ++solved;
    if (static_cast<std::uint64_t>(value) * static_cast<std::uint64_t>(k) <
        static_cast<std::uint64_t>(edges) * static_cast<std::uint64_t>(k - 1))
      ++violations;
  }
};

inline PartiteAudit& partite_audit() {
  static PartiteAudit audit;
  return audit;
}

/// b(G) for k parts: the maximum k-cut, with its partition.
inline SolveResult max_partite(const Graph& g, int k, SolveOptions options = {}) {
  detail::require(k >= 1, "max_partite: k >= 1");
  const int n = g.order();
  SolveResult out;
  if (k >= n) {
    std::vector<int> part(static_cast<std::size_t>(n));
    std::iota(part.begin(), part.end(), 0);
    out.value = g.size();
    out.witness_cut = Cut::from_assignment(part, k);
    out.witness_edges = g.edges();
    partite_audit().record(out.value, g.size(), k);
    return out;
  }
  detail::PartiteSolver solver(g, k, options);
  solver.solve();
  out.witness_cut = Cut::from_assignment(solver.best_assignment(), k);
  out.value = solver.best_value();
  for (const Edge& e : g.edges())
    if (out.witness_cut->crosses(e)) out.witness_edges.push_back(e);
  out.nodes_explored = solver.nodes();
  out.time_budget_hit = solver.budget_hit();
  out.optimal = !solver.budget_hit();
  if (out.optimal) partite_audit().record(out.value, g.size(), k);
  return out;
}

struct TuranGap {
  SolveResult kr_free;  // t_r
  SolveResult partite;  // b_r
  bool resolved() const noexcept { return kr_free.optimal && partite.optimal; }
  std::size_t t() const noexcept { return kr_free.value; }
  std::size_t b() const noexcept { return partite.value; }
  /// t - b, only when both sides are exact.
  std::optional<std::size_t> gap() const {
    if (!resolved()) return std::nullopt;
    return kr_free.value - partite.value;
  }
};

/// Both sides exactly; the partite witness seeds the K_r-free search.
inline TuranGap turan_gap(const Graph& g, int r, SolveOptions options = {}) {
  detail::require(r >= 3, "turan_gap: r >= 3");
  TuranGap out;
  out.partite = max_partite(g, r - 1, options);
  out.kr_free = detail::max_kr_free_impl(g, r, options, out.partite.witness_cut);
  return out;
}

struct OptimaOptions {
  std::size_t edge_limit = 40;
  SolveOptions solve;
};

/// Every maximum K_r-free subgraph of g (edge lists, canonically sorted).
inline std::vector<EdgeList> enumerate_max_kr_free(const Graph& g, int r, OptimaOptions options = {}) {
  detail::require(r >= 3, "enumerate_max_kr_free: r >= 3");
  detail::guard(g.size() <= options.edge_limit, "enumerate_max_kr_free: graph has more edges than the enumeration limit");
  detail::HittingSetSolver solver(g, r, options.solve);
  solver.solve_one();
  detail::require(!solver.budget_hit(), "enumerate_max_kr_free: node budget exhausted");
  detail::HittingSetSolver enumerator(g, r, options.solve);
  auto all = enumerator.solve_all(solver.best().size());
  std::vector<EdgeList> out;
  for (const auto& hs : all) out.push_back(detail::complement_in(enumerator.edges(), hs));
  std::sort(out.begin(), out.end());
  return out;
}

/// True iff every maximum K_r-free subgraph of g is (r-1)-partite.
inline bool all_max_kr_free_partite(const Graph& g, int r, OptimaOptions options = {}) {
  for (const EdgeList& f : enumerate_max_kr_free(g, r, options))
    if (!is_k_partite(Graph::from_edges(g.order(), f), r - 1)) return false;
  return true;
}

}  // namespace turan
