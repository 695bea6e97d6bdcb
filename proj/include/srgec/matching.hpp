#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <span>
#include <vector>

#include "srgec/graph.hpp"
#include "srgec/rng.hpp"

namespace srgec {

struct Matching {
  std::vector<Edge> edges;  // normal form, sorted

  std::size_t size() const { return edges.size(); }
  friend bool operator==(const Matching&, const Matching&) = default;
};

using AdjacencyLists = std::vector<std::vector<Vertex>>;

namespace detail {

// Edmonds' blossom algorithm (BFS with blossom contraction via bases).
// Roots are tried in `order`; neighbors are scanned in list order, so the
// caller controls every tie-break.
class Blossom {
 public:
  explicit Blossom(const AdjacencyLists& adj)
      : adj_(adj), n_(static_cast<int>(adj.size())), mate_(adj.size(), -1) {}

  const std::vector<Vertex>& run(std::span<const Vertex> order) {
    for (Vertex v : order) {
      if (mate_[idx(v)] != -1) continue;
      for (Vertex w : adj_[idx(v)])
        if (mate_[idx(w)] == -1) {
          mate_[idx(v)] = w;
          mate_[idx(w)] = v;
          break;
        }
    }
    for (Vertex root : order) {
      if (mate_[idx(root)] != -1) continue;
      const Vertex end = find_path(root);
      if (end != -1) augment(end);
    }
    return mate_;
  }

 private:
  static std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

  Vertex lca(Vertex a, Vertex b) {
    std::fill(seen_.begin(), seen_.end(), 0);
    for (;;) {
      a = base_[idx(a)];
      seen_[idx(a)] = 1;
      if (mate_[idx(a)] == -1) break;
      a = parent_[idx(mate_[idx(a)])];
    }
    for (;;) {
      b = base_[idx(b)];
      if (seen_[idx(b)]) return b;
      b = parent_[idx(mate_[idx(b)])];
    }
  }

  void mark_path(Vertex v, Vertex b, Vertex child) {
    while (base_[idx(v)] != b) {
      in_blossom_[idx(base_[idx(v)])] = 1;
      in_blossom_[idx(base_[idx(mate_[idx(v)])])] = 1;
      parent_[idx(v)] = child;
      child = mate_[idx(v)];
      v = parent_[idx(mate_[idx(v)])];
    }
  }

  Vertex find_path(Vertex root) {
    used_.assign(idx(n_), 0);
    parent_.assign(idx(n_), -1);
    base_.resize(idx(n_));
    seen_.resize(idx(n_));
    std::iota(base_.begin(), base_.end(), 0);
    queue_.clear();
    used_[idx(root)] = 1;
    queue_.push_back(root);
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      const Vertex v = queue_[head];
      for (Vertex to : adj_[idx(v)]) {
        if (base_[idx(v)] == base_[idx(to)] || mate_[idx(v)] == to) continue;
        if (to == root || (mate_[idx(to)] != -1 && parent_[idx(mate_[idx(to)])] != -1)) {
          const Vertex cur = lca(v, to);
          in_blossom_.assign(idx(n_), 0);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (Vertex i = 0; i < n_; ++i)
            if (in_blossom_[idx(base_[idx(i)])]) {
              base_[idx(i)] = cur;
              if (!used_[idx(i)]) {
                used_[idx(i)] = 1;
                queue_.push_back(i);
              }
            }
        } else if (parent_[idx(to)] == -1) {
          parent_[idx(to)] = v;
          if (mate_[idx(to)] == -1) return to;
          used_[idx(mate_[idx(to)])] = 1;
          queue_.push_back(mate_[idx(to)]);
        }
      }
    }
    return -1;
  }

  void augment(Vertex v) {
    while (v != -1) {
      const Vertex pv = parent_[idx(v)];
      const Vertex next = mate_[idx(pv)];
      mate_[idx(v)] = pv;
      mate_[idx(pv)] = v;
      v = next;
    }
  }

  const AdjacencyLists& adj_;
  int n_;
  std::vector<Vertex> mate_, parent_, base_, queue_;
  std::vector<char> used_, in_blossom_, seen_;
};

inline Matching mates_to_matching(const std::vector<Vertex>& mate) {
  Matching m;
  for (Vertex v = 0; v < static_cast<Vertex>(mate.size()); ++v)
    if (mate[static_cast<std::size_t>(v)] > v) m.edges.push_back({v, mate[static_cast<std::size_t>(v)]});
  return m;
}

inline AdjacencyLists adjacency_of(const Graph& g) {
  AdjacencyLists adj(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) adj[static_cast<std::size_t>(v)] = g.neighbors(v);
  return adj;
}

inline Matching max_matching_adj(const AdjacencyLists& adj) {
  std::vector<Vertex> order(adj.size());
  std::iota(order.begin(), order.end(), 0);
  return mates_to_matching(Blossom(adj).run(order));
}

// Maximum matching after shuffling the root order and each adjacency list.
inline Matching max_matching_adj(AdjacencyLists adj, Rng& rng) {
  std::vector<Vertex> order(adj.size());
  std::iota(order.begin(), order.end(), 0);
  rng.shuffle(std::span<Vertex>(order));
  for (auto& list : adj) rng.shuffle(std::span<Vertex>(list));
  return mates_to_matching(Blossom(adj).run(order));
}

}  // namespace detail

inline Matching maximum_matching(const Graph& g) { return detail::max_matching_adj(detail::adjacency_of(g)); }

inline Matching maximum_matching(const Graph& g, Rng& rng) {
  return detail::max_matching_adj(detail::adjacency_of(g), rng);
}

inline bool is_matching_of(const Graph& g, const Matching& m) {
  std::vector<char> covered(static_cast<std::size_t>(g.order()), 0);
  for (const Edge& e : m.edges) {
    if (e.a < 0 || e.b >= g.order() || e.a >= e.b || !g.adjacent(e.a, e.b)) return false;
    if (covered[static_cast<std::size_t>(e.a)]++ || covered[static_cast<std::size_t>(e.b)]++) return false;
  }
  return std::is_sorted(m.edges.begin(), m.edges.end());
}

inline bool is_perfect_matching_of(const Graph& g, const Matching& m) {
  return is_matching_of(g, m) && 2 * m.size() == static_cast<std::size_t>(g.order());
}

inline bool has_perfect_matching(const Graph& g) {
  return g.order() % 2 == 0 && 2 * maximum_matching(g).size() == static_cast<std::size_t>(g.order());
}

// Tutte-Berge witness U from the Gallai-Edmonds decomposition: D is the set
// of vertices missed by some maximum matching, U = N(D) \ D. Then
// odd_components(G - U) - |U| equals the deficiency n - 2*nu(G).
inline std::vector<Vertex> tutte_berge_witness(const Graph& g) {
  const auto adj = detail::adjacency_of(g);
  const std::size_t nu = detail::max_matching_adj(adj).size();
  std::vector<char> in_d(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v = 0; v < g.order(); ++v) {
    AdjacencyLists minus = adj;
    minus[static_cast<std::size_t>(v)].clear();
    for (Vertex w : adj[static_cast<std::size_t>(v)]) std::erase(minus[static_cast<std::size_t>(w)], v);
    in_d[static_cast<std::size_t>(v)] = detail::max_matching_adj(minus).size() == nu;
  }
  std::vector<Vertex> u;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (in_d[static_cast<std::size_t>(v)]) continue;
    const auto& nb = g.neighbors(v);
    if (std::any_of(nb.begin(), nb.end(), [&](Vertex w) { return in_d[static_cast<std::size_t>(w)] != 0; }))
      u.push_back(v);
  }
  return u;
}

// Number of odd-order components of g - removed.
inline int odd_components_without(const Graph& g, std::span<const Vertex> removed) {
  std::vector<char> gone(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v : removed) gone[static_cast<std::size_t>(v)] = 1;
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  int odd = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (gone[static_cast<std::size_t>(s)] || seen[static_cast<std::size_t>(s)]) continue;
    int size = 0;
    seen[static_cast<std::size_t>(s)] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      ++size;
      for (Vertex w : g.neighbors(v))
        if (!gone[static_cast<std::size_t>(w)] && !seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          stack.push_back(w);
        }
    }
    odd += size % 2;
  }
  return odd;
}

namespace detail {

inline std::optional<Matching> random_perfect_matching_adj(const AdjacencyLists& adj, Rng& rng) {
  if (adj.size() % 2 != 0) return std::nullopt;
  Matching m = max_matching_adj(adj, rng);
  if (2 * m.size() != adj.size()) return std::nullopt;
  return m;
}

}  // namespace detail

// A perfect matching found by the blossom search over a shuffled vertex and
// adjacency order; deterministic for a given (graph, rng state).
inline std::optional<Matching> random_perfect_matching(const Graph& g, Rng& rng) {
  return detail::random_perfect_matching_adj(detail::adjacency_of(g), rng);
}

namespace detail {

inline void remove_matching(AdjacencyLists& adj, const Matching& m) {
  for (const Edge& e : m.edges) {
    std::erase(adj[static_cast<std::size_t>(e.a)], e.b);
    std::erase(adj[static_cast<std::size_t>(e.b)], e.a);
  }
}

inline bool has_edges(const AdjacencyLists& adj) {
  return std::any_of(adj.begin(), adj.end(), [](const auto& l) { return !l.empty(); });
}

// One greedy pass: extract random perfect matchings until none remains.
// At most `max_draws` matchings are drawn.
inline std::vector<Matching> greedy_pass(AdjacencyLists adj, Rng& rng, std::size_t max_draws, AdjacencyLists* rest) {
  std::vector<Matching> out;
  while (out.size() < max_draws && has_edges(adj)) {
    auto pm = random_perfect_matching_adj(adj, rng);
    if (!pm) break;
    remove_matching(adj, *pm);
    out.push_back(std::move(*pm));
  }
  if (rest) *rest = std::move(adj);
  return out;
}

}  // namespace detail

inline std::vector<Matching> disjoint_pm_greedy(const Graph& g, Rng& rng) {
  return detail::greedy_pass(detail::adjacency_of(g), rng, g.size() + 1, nullptr);
}

}  // namespace srgec
