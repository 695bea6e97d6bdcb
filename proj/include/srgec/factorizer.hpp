#pragma once

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdint>
#include <iterator>
#include <limits>
#include <numeric>
#include <mutex>
#include <optional>
#include <span>
#include <stdexcept>
#include <thread>
#include <utility>
#include <vector>

#include "srgec/error.hpp"
#include "srgec/families.hpp"
#include "srgec/graph.hpp"
#include "srgec/matching.hpp"
#include "srgec/rng.hpp"

namespace srgec {

// Ordered perfect matchings partitioning the edge set of a regular graph.
struct Factorization {
  std::vector<Matching> factors;

  std::size_t size() const { return factors.size(); }
  friend bool operator==(const Factorization&, const Factorization&) = default;
};

// color[i] is the color of g.edges()[i], in 0..colors-1.
struct EdgeColoring {
  int colors = 0;
  std::vector<int> color;

  friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;
};

// Full check: k = degree factors, each a perfect matching of g, pairwise
// disjoint, covering every edge.
inline bool verify_factorization(const Graph& g, const Factorization& f) {
  const auto k = is_regular(g);
  if (!k || f.size() != static_cast<std::size_t>(*k)) return false;
  std::vector<char> used(g.size(), 0);
  for (const Matching& m : f.factors) {
    if (!is_perfect_matching_of(g, m)) return false;
    for (const Edge& e : m.edges) {
      const long i = g.edge_index(e.a, e.b);
      if (i < 0 || used[static_cast<std::size_t>(i)]++) return false;
    }
  }
  return std::all_of(used.begin(), used.end(), [](char u) { return u == 1; });
}

inline bool verify_edge_coloring(const Graph& g, const EdgeColoring& c) {
  if (c.color.size() != g.size() || c.colors < 0) return false;
  std::vector<std::vector<char>> at(static_cast<std::size_t>(g.order()),
                                    std::vector<char>(static_cast<std::size_t>(c.colors), 0));
  for (std::size_t i = 0; i < g.size(); ++i) {
    const int col = c.color[i];
    if (col < 0 || col >= c.colors) return false;
    const Edge e = g.edges()[i];
    if (at[static_cast<std::size_t>(e.a)][static_cast<std::size_t>(col)]++ ||
        at[static_cast<std::size_t>(e.b)][static_cast<std::size_t>(col)]++)
      return false;
  }
  return true;
}

inline Factorization coloring_to_factorization(const Graph& g, const EdgeColoring& c) {
  Factorization f;
  f.factors.resize(static_cast<std::size_t>(c.colors));
  for (std::size_t i = 0; i < g.size(); ++i) f.factors[static_cast<std::size_t>(c.color[i])].edges.push_back(g.edges()[i]);
  return f;
}

inline EdgeColoring factorization_to_coloring(const Graph& g, const Factorization& f) {
  EdgeColoring c{static_cast<int>(f.size()), std::vector<int>(g.size(), -1)};
  for (std::size_t i = 0; i < f.size(); ++i)
    for (const Edge& e : f.factors[i].edges) {
      const long idx = g.edge_index(e.a, e.b);
      if (idx >= 0) c.color[static_cast<std::size_t>(idx)] = static_cast<int>(i);
    }
  return c;
}

// --- randomized heuristic -------------------------------------------------

struct SearchConfig {
  std::uint64_t seed = 0;
  int max_restarts = 100;
  std::optional<long long> max_draws_per_pass;  // default n*k
  long long time_budget_ms = 60000;
  int parallel_width = 1;

  void validate() const {
    if (max_restarts <= 0 || time_budget_ms <= 0 || parallel_width <= 0 ||
        (max_draws_per_pass && *max_draws_per_pass <= 0))
      throw Error(ErrorKind::InvalidInput, "search budgets must be positive");
  }
};

struct HeuristicOutcome {
  std::optional<Factorization> factorization;
  std::uint64_t seed = 0;  // seed of the winning (or first) search
  int passes = 0;          // passes run, summed over searches
  int best_depth = 0;      // most factors extracted in any pass
  long long elapsed_ms = 0;

  bool exhausted() const { return !factorization.has_value(); }
};

namespace detail {

inline void normalize(Factorization& f) {
  for (auto& m : f.factors) std::sort(m.edges.begin(), m.edges.end());
}

struct SearchTally {
  std::optional<Factorization> found;
  int passes = 0;
  int best_depth = 0;
};

// Restarts always begin from the full graph.
inline SearchTally heuristic_search(const AdjacencyLists& adj, int k, std::uint64_t seed, const SearchConfig& cfg,
                                    std::size_t max_draws, std::chrono::steady_clock::time_point deadline,
                                    const std::atomic<bool>& stop) {
  SearchTally tally;
  Rng rng(seed);
  for (int pass = 0; pass < cfg.max_restarts; ++pass) {
    if (stop.load(std::memory_order_relaxed) || std::chrono::steady_clock::now() >= deadline) break;
    ++tally.passes;
    AdjacencyLists rest;
    auto factors = greedy_pass(adj, rng, max_draws, &rest);
    tally.best_depth = std::max(tally.best_depth, static_cast<int>(factors.size()));
    if (static_cast<int>(factors.size()) == k && !has_edges(rest)) {
      tally.found = Factorization{std::move(factors)};
      break;
    }
  }
  return tally;
}

}  // namespace detail

// Repeatedly extracts random perfect matchings until none is left; restarts
// from scratch while edges remain. With parallel_width w, searches with seeds
// seed+0 .. seed+w-1 race and the first success wins.
inline HeuristicOutcome heuristic_factorize(const Graph& g, const SearchConfig& cfg = {}) {
  cfg.validate();
  const auto k = is_regular(g);
  if (!k || g.order() % 2 != 0 || g.order() < 2)
    throw Error(ErrorKind::Precondition, "heuristic needs a regular graph of even order >= 2");
  const auto start = std::chrono::steady_clock::now();
  const auto deadline = start + std::chrono::milliseconds(cfg.time_budget_ms);
  const auto max_draws = static_cast<std::size_t>(
      cfg.max_draws_per_pass.value_or(static_cast<long long>(g.order()) * std::max(*k, 1)));
  const auto adj = detail::adjacency_of(g);

  HeuristicOutcome out;
  out.seed = cfg.seed;
  std::atomic<bool> stop{false};
  if (cfg.parallel_width == 1) {
    auto tally = detail::heuristic_search(adj, *k, cfg.seed, cfg, max_draws, deadline, stop);
    out.factorization = std::move(tally.found);
    out.passes = tally.passes;
    out.best_depth = tally.best_depth;
  } else {
    std::mutex mu;
    std::vector<std::thread> workers;
    for (int w = 0; w < cfg.parallel_width; ++w) {
      workers.emplace_back([&, w] {
        const std::uint64_t seed = derive_seed(cfg.seed, static_cast<std::uint64_t>(w));
        auto tally = detail::heuristic_search(adj, *k, seed, cfg, max_draws, deadline, stop);
        std::lock_guard lock(mu);
        out.passes += tally.passes;
        out.best_depth = std::max(out.best_depth, tally.best_depth);
        if (tally.found && !out.factorization) {
          out.factorization = std::move(tally.found);
          out.seed = seed;
          stop.store(true);
        }
      });
    }
    for (auto& t : workers) t.join();
  }
  if (out.factorization) {
    detail::normalize(*out.factorization);
    if (!verify_factorization(g, *out.factorization))
      throw std::logic_error("heuristic produced an invalid factorization");
  }
  out.elapsed_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return out;
}

// --- constructive routes --------------------------------------------------

namespace detail {

inline bool is_bipartition(const Graph& g, const VertexPartition& halves) {
  if (halves.classes.size() != 2 || !covers_exactly(halves, g.order())) return false;
  std::vector<int> side(static_cast<std::size_t>(g.order()));
  for (Vertex v : halves.classes[1]) side[static_cast<std::size_t>(v)] = 1;
  return std::all_of(g.edges().begin(), g.edges().end(), [&](const Edge& e) {
    return side[static_cast<std::size_t>(e.a)] != side[static_cast<std::size_t>(e.b)];
  });
}

inline Matching relabel(const Matching& local, std::span<const Vertex> to_parent) {
  Matching m;
  for (const Edge& e : local.edges)
    m.edges.push_back(make_edge(to_parent[static_cast<std::size_t>(e.a)], to_parent[static_cast<std::size_t>(e.b)]));
  std::sort(m.edges.begin(), m.edges.end());
  return m;
}

inline Matching merge(const Matching& x, const Matching& y) {
  Matching m;
  std::merge(x.edges.begin(), x.edges.end(), y.edges.begin(), y.edges.end(), std::back_inserter(m.edges));
  return m;
}

inline Graph edge_subgraph(int n, const std::vector<Edge>& edges) { return Graph(n, edges); }

}  // namespace detail

// Konig: peel perfect matchings off a d-regular bipartite graph.
inline Factorization bipartite_regular_factorize(const Graph& g, const VertexPartition& halves) {
  const auto d = is_regular(g);
  if (!d || *d < 1 || !detail::is_bipartition(g, halves) ||
      halves.classes[0].size() != halves.classes[1].size())
    throw Error(ErrorKind::Precondition, "graph is not regular bipartite of positive degree across the halves");
  auto adj = detail::adjacency_of(g);
  Factorization f;
  for (int i = 0; i < *d; ++i) {
    Matching m = detail::max_matching_adj(adj);
    if (2 * m.size() != static_cast<std::size_t>(g.order()))
      throw std::logic_error("regular bipartite graph without a perfect matching");
    detail::remove_matching(adj, m);
    f.factors.push_back(std::move(m));
  }
  return f;
}

// Circle method: vertex v-1 is fixed; round i pairs (i, v-1) and
// (i+j, i-j) mod (v-1) for j = 1 .. v/2-1.
inline Factorization round_robin(int v) {
  if (v < 2 || v % 2 != 0) throw Error(ErrorKind::Precondition, "round robin needs an even v >= 2");
  const int r = v - 1;
  Factorization f;
  for (int i = 0; i < r; ++i) {
    Matching m;
    m.edges.push_back(make_edge(i, r));
    for (int j = 1; j < v / 2; ++j) m.edges.push_back(make_edge((i + j) % r, ((i - j) % r + r) % r));
    std::sort(m.edges.begin(), m.edges.end());
    f.factors.push_back(std::move(m));
  }
  return f;
}

namespace detail {

struct HalvesSplit {
  std::vector<Edge> inner;
  std::vector<Edge> cross;
};

inline HalvesSplit split_edges(const Graph& g, const std::vector<Vertex>& v1) {
  std::vector<char> side(static_cast<std::size_t>(g.order()), 1);
  for (Vertex v : v1) side[static_cast<std::size_t>(v)] = 0;
  HalvesSplit s;
  for (const Edge& e : g.edges())
    (side[static_cast<std::size_t>(e.a)] == side[static_cast<std::size_t>(e.b)] ? s.inner : s.cross).push_back(e);
  return s;
}

inline std::vector<Vertex> other_half(int n, std::span<const Vertex> v1) {
  std::vector<char> in(static_cast<std::size_t>(n), 0);
  for (Vertex v : v1) {
    if (v < 0 || v >= n) throw Error(ErrorKind::InvalidVertex, "vertex " + std::to_string(v) + " out of range");
    in[static_cast<std::size_t>(v)] = 1;
  }
  std::vector<Vertex> rest;
  for (Vertex v = 0; v < n; ++v)
    if (!in[static_cast<std::size_t>(v)]) rest.push_back(v);
  return rest;
}

// Factors of the cross graph (edges between the halves); empty if none.
inline std::vector<Matching> factor_cross(int n, const std::vector<Edge>& cross, const std::vector<Vertex>& v1,
                                          const std::vector<Vertex>& v2) {
  if (cross.empty()) return {};
  return bipartite_regular_factorize(Graph(n, cross), VertexPartition{{v1, v2}, PartitionKind::Bipartition}).factors;
}

}  // namespace detail

// Inner factors pair up f1[i] with f2[i]; the cross graph is factorized by
// Konig. f1 and f2 use the local labels of subgraph_on(g, halves.classes[0|1]).
inline Factorization lemma22_compose(const Graph& g, const VertexPartition& halves, const Factorization& f1,
                                     const Factorization& f2) {
  const auto k = is_regular(g);
  if (!k || !is_connected(g) || halves.classes.size() != 2 || !covers_exactly(halves, g.order()) ||
      2 * halves.classes[0].size() != static_cast<std::size_t>(g.order()))
    throw Error(ErrorKind::Precondition, "need a connected regular graph split into equal halves");
  const auto& v1 = halves.classes[0];
  const auto& v2 = halves.classes[1];
  const auto h1 = subgraph_on(g, v1);
  const auto h2 = subgraph_on(g, v2);
  if (!verify_factorization(h1.graph, f1) || !verify_factorization(h2.graph, f2) || f1.size() != f2.size())
    throw Error(ErrorKind::Precondition, "half factorizations do not match the induced halves");

  Factorization out;
  for (std::size_t i = 0; i < f1.size(); ++i)
    out.factors.push_back(
        detail::merge(detail::relabel(f1.factors[i], h1.to_parent), detail::relabel(f2.factors[i], h2.to_parent)));
  for (auto& m : detail::factor_cross(g.order(), detail::split_edges(g, v1).cross, v1, v2))
    out.factors.push_back(std::move(m));
  return out;
}

// Both halves cliques or both cocliques. The odd clique case transfers a
// canonical coloring of K_h across a cross perfect matching F: color c covers
// local pairs i+j = 2c (mod h) in both halves and the F-edge at index c.
inline Factorization lemma22_clique_or_coclique(const Graph& g, std::span<const Vertex> v1_in) {
  const auto k = is_regular(g);
  const int n = g.order();
  if (!k || n % 2 != 0 || !is_connected(g) || 2 * v1_in.size() != static_cast<std::size_t>(n))
    throw Error(ErrorKind::Precondition, "need a connected regular graph of even order and a half-size subset");
  std::vector<Vertex> v1(v1_in.begin(), v1_in.end());
  std::vector<Vertex> v2 = detail::other_half(n, v1);
  if (v2.size() != v1.size()) throw Error(ErrorKind::InvalidVertex, "repeated vertex in subset");
  const int h = static_cast<int>(v1.size());

  if (is_coclique(g, v1)) {
    if (!is_coclique(g, v2)) throw Error(ErrorKind::Precondition, "complementary half is not a coclique");
    return bipartite_regular_factorize(g, VertexPartition{{v1, v2}, PartitionKind::Bipartition});
  }
  if (!is_clique(g, v1) || !is_clique(g, v2))
    throw Error(ErrorKind::Precondition, "halves are neither both cliques nor both cocliques");

  if (h % 2 == 0) {
    const Factorization inner = round_robin(h);
    return lemma22_compose(g, VertexPartition{{v1, v2}, PartitionKind::Halves}, inner, inner);
  }

  const auto split = detail::split_edges(g, v1);
  const Matching f = detail::max_matching_adj(detail::adjacency_of(Graph(n, split.cross)));
  if (2 * f.size() != static_cast<std::size_t>(n))
    throw std::logic_error("cross graph without a perfect matching");
  std::vector<Vertex> partner(static_cast<std::size_t>(n), -1);
  for (const Edge& e : f.edges) {
    partner[static_cast<std::size_t>(e.a)] = e.b;
    partner[static_cast<std::size_t>(e.b)] = e.a;
  }
  // V2 is relabeled through F so local index i in V2 is F(v1[i]).
  std::vector<Vertex> v2_via_f;
  for (Vertex u : v1) v2_via_f.push_back(partner[static_cast<std::size_t>(u)]);

  const int inv2 = (h + 1) / 2;
  Factorization out;
  for (int c = 0; c < h; ++c) {
    Matching m;
    for (int i = 0; i < h; ++i)
      for (int j = i + 1; j < h; ++j)
        if (((i + j) * inv2) % h == c) {
          m.edges.push_back(make_edge(v1[static_cast<std::size_t>(i)], v1[static_cast<std::size_t>(j)]));
          m.edges.push_back(
              make_edge(v2_via_f[static_cast<std::size_t>(i)], v2_via_f[static_cast<std::size_t>(j)]));
        }
    m.edges.push_back(make_edge(v1[static_cast<std::size_t>(c)], v2_via_f[static_cast<std::size_t>(c)]));
    std::sort(m.edges.begin(), m.edges.end());
    out.factors.push_back(std::move(m));
  }
  std::vector<Edge> rest;
  std::set_difference(split.cross.begin(), split.cross.end(), f.edges.begin(), f.edges.end(),
                      std::back_inserter(rest));
  for (auto& m : detail::factor_cross(n, rest, v1, v2)) out.factors.push_back(std::move(m));
  return out;
}

namespace detail {

// Validates a Hoffman coloring (equal cocliques, constant cross degree) and
// returns the number of neighbors each vertex has in every other class.
inline int hoffman_cross_degree(const Graph& g, const VertexPartition& classes) {
  const auto k = is_regular(g);
  const std::size_t parts = classes.classes.size();
  if (!k || parts < 2 || !covers_exactly(classes, g.order()))
    throw Error(ErrorKind::NotHoffman, "classes must partition the vertices of a regular graph");
  std::vector<std::size_t> cls_of(static_cast<std::size_t>(g.order()));
  for (std::size_t c = 0; c < parts; ++c) {
    if (classes.classes[c].size() != classes.classes[0].size())
      throw Error(ErrorKind::NotHoffman, "classes differ in size");
    if (!is_coclique(g, classes.classes[c])) throw Error(ErrorKind::NotHoffman, "class is not a coclique");
    for (Vertex v : classes.classes[c]) cls_of[static_cast<std::size_t>(v)] = c;
  }
  if (*k % static_cast<int>(parts - 1) != 0) throw Error(ErrorKind::NotHoffman, "degree not divisible by classes-1");
  const int per = *k / static_cast<int>(parts - 1);
  std::vector<int> count(parts);
  for (Vertex v = 0; v < g.order(); ++v) {
    std::fill(count.begin(), count.end(), 0);
    for (Vertex w : g.neighbors(v)) ++count[cls_of[static_cast<std::size_t>(w)]];
    for (std::size_t c = 0; c < parts; ++c)
      if (c != cls_of[static_cast<std::size_t>(v)] && count[c] != per)
        throw Error(ErrorKind::NotHoffman, "vertex " + std::to_string(v) + " has the wrong number of neighbors in a class");
  }
  return per;
}

// Edges of g between the paired classes of one round-robin round.
inline std::vector<Edge> round_edges(const Graph& g, const VertexPartition& classes, const Matching& round,
                                     std::vector<Vertex>& side_a, std::vector<Vertex>& side_b) {
  std::vector<int> cls_of(static_cast<std::size_t>(g.order()));
  for (std::size_t c = 0; c < classes.classes.size(); ++c)
    for (Vertex v : classes.classes[c]) cls_of[static_cast<std::size_t>(v)] = static_cast<int>(c);
  std::vector<int> mate(classes.classes.size(), -1);
  side_a.clear();
  side_b.clear();
  for (const Edge& e : round.edges) {
    mate[static_cast<std::size_t>(e.a)] = e.b;
    mate[static_cast<std::size_t>(e.b)] = e.a;
    side_a.insert(side_a.end(), classes.classes[static_cast<std::size_t>(e.a)].begin(),
                  classes.classes[static_cast<std::size_t>(e.a)].end());
    side_b.insert(side_b.end(), classes.classes[static_cast<std::size_t>(e.b)].begin(),
                  classes.classes[static_cast<std::size_t>(e.b)].end());
  }
  std::vector<Edge> out;
  for (const Edge& e : g.edges())
    if (mate[static_cast<std::size_t>(cls_of[static_cast<std::size_t>(e.a)])] ==
        cls_of[static_cast<std::size_t>(e.b)])
      out.push_back(e);
  return out;
}

}  // namespace detail

// A 1-factorization of K_{2t} schedules the class pairs; each round is a
// disjoint union of regular bipartite graphs, factorized by Konig.
inline Factorization hoffman_factorize(const Graph& g, const VertexPartition& classes) {
  const int per = detail::hoffman_cross_degree(g, classes);
  if (classes.classes.size() % 2 != 0) throw Error(ErrorKind::NotHoffman, "odd number of color classes");
  if (per < 1) throw Error(ErrorKind::Precondition, "degree must be positive");
  Factorization out;
  std::vector<Vertex> a, b;
  for (const Matching& round : round_robin(static_cast<int>(classes.classes.size())).factors) {
    const auto edges = detail::round_edges(g, classes, round, a, b);
    for (auto& m : detail::factor_cross(g.order(), edges, a, b)) out.factors.push_back(std::move(m));
  }
  return out;
}

// Factorizes complement(g). The first round's cross graphs together with the
// class cliques form t graphs on S_a + S_b covered by the clique case of
// lemma22_clique_or_coclique; the other rounds are regular bipartite.
inline Factorization hoffman_complement_factorize(const Graph& g, const VertexPartition& classes) {
  const int per = detail::hoffman_cross_degree(g, classes);
  if (classes.classes.size() % 2 != 0) throw Error(ErrorKind::NotHoffman, "odd number of color classes");
  const int size = static_cast<int>(classes.classes[0].size());
  const int cross = size - per;
  const Graph h = complement(g);
  if (cross < 1) {
    // complement(g) is a disjoint union of K_size: class 1 iff size is even.
    if (size % 2 != 0)
      throw Error(ErrorKind::DisjointCliques,
                  "complement is a disjoint union of cliques of odd order " + std::to_string(size));
    const Factorization clique = round_robin(size);
    Factorization out;
    for (const Matching& local : clique.factors) {
      Matching m;
      for (const auto& cls : classes.classes) m = detail::merge(m, detail::relabel(local, cls));
      out.factors.push_back(std::move(m));
    }
    return out;
  }
  const Factorization rounds = round_robin(static_cast<int>(classes.classes.size()));

  Factorization out;
  out.factors.resize(static_cast<std::size_t>(size - 1 + cross));
  for (const Edge& pair : rounds.factors[0].edges) {
    std::vector<Vertex> piece = classes.classes[static_cast<std::size_t>(pair.a)];
    const auto& other = classes.classes[static_cast<std::size_t>(pair.b)];
    piece.insert(piece.end(), other.begin(), other.end());
    const auto sub = subgraph_on(h, piece);
    std::vector<Vertex> local_v1(static_cast<std::size_t>(size));
    std::iota(local_v1.begin(), local_v1.end(), 0);
    const Factorization part = lemma22_clique_or_coclique(sub.graph, local_v1);
    for (std::size_t i = 0; i < part.size(); ++i)
      out.factors[i] = detail::merge(out.factors[i], detail::relabel(part.factors[i], sub.to_parent));
  }
  std::vector<Vertex> a, b;
  for (std::size_t r = 1; r < rounds.size(); ++r) {
    const auto edges = detail::round_edges(h, classes, rounds.factors[r], a, b);
    for (auto& m : detail::factor_cross(h.order(), edges, a, b)) out.factors.push_back(std::move(m));
  }
  return out;
}

struct HoffmanView {
  Graph complement;
  VertexPartition classes;
};

// A spread of g (clique classes) is a Hoffman coloring of complement(g).
inline HoffmanView spread_to_hoffman(const Graph& g, const VertexPartition& spread) {
  if (!covers_exactly(spread, g.order())) throw Error(ErrorKind::NotSpread, "classes do not partition the vertices");
  for (const auto& cls : spread.classes)
    if (!is_clique(g, cls)) throw Error(ErrorKind::NotSpread, "class does not induce a clique");
  HoffmanView view{complement(g), VertexPartition{spread.classes, PartitionKind::HoffmanColoring}};
  detail::hoffman_cross_degree(view.complement, view.classes);
  return view;
}

// --- exact decider --------------------------------------------------------

enum class ExactOutcome { Colorable, NotColorable, BudgetExceeded };

inline std::string_view to_string(ExactOutcome o) {
  switch (o) {
    case ExactOutcome::Colorable: return "colorable";
    case ExactOutcome::NotColorable: return "notcolorable";
    case ExactOutcome::BudgetExceeded: return "budgetexceeded";
  }
  return "?";
}

struct ExactResult {
  ExactOutcome outcome = ExactOutcome::BudgetExceeded;
  std::optional<EdgeColoring> coloring;
  std::uint64_t nodes = 0;
};

inline constexpr std::uint64_t kDefaultNodeBudget = 100'000'000;

namespace detail {

class EdgeColorSearch {
 public:
  EdgeColorSearch(const Graph& g, int colors, std::uint64_t budget)
      : g_(g), colors_(colors), budget_(budget), color_(g.size(), -1), mask_(static_cast<std::size_t>(g.order()), 0) {}

  ExactResult run() {
    ExactResult res;
    const bool found = search(0, 0);
    res.nodes = nodes_;
    if (aborted_) {
      res.outcome = ExactOutcome::BudgetExceeded;
    } else if (found) {
      res.outcome = ExactOutcome::Colorable;
      res.coloring = EdgeColoring{colors_, color_};
    } else {
      res.outcome = ExactOutcome::NotColorable;
    }
    return res;
  }

 private:
  std::uint64_t blocked(const Edge& e) const {
    return mask_[static_cast<std::size_t>(e.a)] | mask_[static_cast<std::size_t>(e.b)];
  }

  // Colors in use are exactly 0..used-1; a new color enters as index `used`.
  bool search(std::size_t colored, int used) {
    if (colored == g_.size()) return true;
    std::size_t best = g_.size();
    int best_free = colors_ + 1;
    for (std::size_t i = 0; i < g_.size(); ++i) {
      if (color_[i] >= 0) continue;
      const int free = colors_ - std::popcount(blocked(g_.edges()[i]));
      if (free < best_free) {
        best_free = free;
        best = i;
        if (free == 0) return false;
      }
    }
    const Edge e = g_.edges()[best];
    const std::uint64_t busy = blocked(e);
    const int limit = std::min(colors_ - 1, used);
    for (int c = 0; c <= limit; ++c) {
      if (busy >> c & 1u) continue;
      if (++nodes_ > budget_) {
        aborted_ = true;
        return false;
      }
      color_[best] = c;
      mask_[static_cast<std::size_t>(e.a)] |= std::uint64_t{1} << c;
      mask_[static_cast<std::size_t>(e.b)] |= std::uint64_t{1} << c;
      if (search(colored + 1, std::max(used, c + 1))) return true;
      mask_[static_cast<std::size_t>(e.a)] &= ~(std::uint64_t{1} << c);
      mask_[static_cast<std::size_t>(e.b)] &= ~(std::uint64_t{1} << c);
      color_[best] = -1;
      if (aborted_) return false;
    }
    return false;
  }

  const Graph& g_;
  int colors_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
  std::vector<int> color_;
  std::vector<std::uint64_t> mask_;
};

}  // namespace detail

// Complete backtracking over edges, most constrained first, with colors
// introduced in increasing order. NotColorable proves chi' > colors.
inline ExactResult exact_chromatic_index(const Graph& g, int colors, std::uint64_t node_budget = kDefaultNodeBudget) {
  if (colors < max_degree(g)) throw Error(ErrorKind::Precondition, "colors below maximum degree");
  if (colors > 64) throw Error(ErrorKind::Unsupported, "exact search supports at most 64 colors");
  return detail::EdgeColorSearch(g, colors, node_budget).run();
}

}  // namespace srgec
