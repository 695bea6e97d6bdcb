#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "srgec/error.hpp"

namespace srgec {

using Vertex = int;

// Undirected edge in normal form a < b.
struct Edge {
  Vertex a = 0;
  Vertex b = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
  friend bool operator==(const Edge&, const Edge&) = default;
};

inline Edge make_edge(Vertex u, Vertex v) { return u < v ? Edge{u, v} : Edge{v, u}; }

struct SrgParams {
  long long n = 0;
  long long k = 0;
  long long lambda = 0;
  long long mu = 0;

  friend bool operator==(const SrgParams&, const SrgParams&) = default;

  // 0 < k < n-1 and nonnegative lambda, mu.
  bool in_range() const { return k > 0 && k < n - 1 && lambda >= 0 && mu >= 0; }
  bool degenerate() const { return !in_range(); }
  bool counting_identity() const { return k * (k - lambda - 1) == (n - k - 1) * mu; }

  std::string str() const {
    return "(" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(lambda) + "," +
           std::to_string(mu) + ")";
  }
};

// Immutable simple graph on vertices 0..n-1. Adjacency is held both as a
// packed bit matrix and as a sorted edge list; neighbor lists are sorted.
class Graph {
 public:
  Graph() = default;

  // Builds from an arbitrary pair list: pairs are normalized, deduplicated and
  // sorted. Throws InvalidEdge for out-of-range endpoints, LoopRejected for (v,v).
  Graph(int n, std::span<const std::pair<Vertex, Vertex>> pairs) : n_(n) {
    if (n < 0) throw Error(ErrorKind::InvalidInput, "negative vertex count");
    init_storage();
    for (auto [u, v] : pairs) {
      if (u < 0 || v < 0 || u >= n || v >= n)
        throw Error(ErrorKind::InvalidEdge,
                    "edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
      if (u == v) throw Error(ErrorKind::LoopRejected, "loop at vertex " + std::to_string(u));
      set_bit(u, v);
      set_bit(v, u);
    }
    finish();
  }

  Graph(int n, std::span<const Edge> edges) : n_(n) {
    if (n < 0) throw Error(ErrorKind::InvalidInput, "negative vertex count");
    init_storage();
    for (const Edge& e : edges) {
      if (e.a < 0 || e.b < 0 || e.a >= n || e.b >= n)
        throw Error(ErrorKind::InvalidEdge,
                    "edge (" + std::to_string(e.a) + "," + std::to_string(e.b) + ") out of range");
      if (e.a == e.b) throw Error(ErrorKind::LoopRejected, "loop at vertex " + std::to_string(e.a));
      set_bit(e.a, e.b);
      set_bit(e.b, e.a);
    }
    finish();
  }

  // Builds from an adjacency predicate evaluated on every pair u < v.
  template <typename Pred>
  static Graph from_predicate(int n, Pred&& adjacent) {
    Graph g;
    g.n_ = n;
    g.init_storage();
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (adjacent(u, v)) {
          g.set_bit(u, v);
          g.set_bit(v, u);
        }
    g.finish();
    return g;
  }

  int order() const { return n_; }
  std::size_t size() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return nbrs_[static_cast<std::size_t>(v)]; }
  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }

  bool adjacent(Vertex u, Vertex v) const {
    return (row(u)[static_cast<std::size_t>(v) / 64] >> (static_cast<unsigned>(v) % 64)) & 1u;
  }

  int common_neighbors(Vertex u, Vertex v) const {
    const std::uint64_t* ru = row(u);
    const std::uint64_t* rv = row(v);
    int count = 0;
    for (std::size_t w = 0; w < words_; ++w) count += std::popcount(ru[w] & rv[w]);
    return count;
  }

  // Index of edge (a,b) in edges(), or -1.
  long edge_index(Vertex u, Vertex v) const {
    const Edge e = make_edge(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) return -1;
    return static_cast<long>(it - edges_.begin());
  }

  friend bool operator==(const Graph& x, const Graph& y) {
    return x.n_ == y.n_ && x.edges_ == y.edges_;
  }

 private:
  const std::uint64_t* row(Vertex v) const { return bits_.data() + static_cast<std::size_t>(v) * words_; }

  void init_storage() {
    words_ = (static_cast<std::size_t>(n_) + 63) / 64;
    bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
  }

  void set_bit(Vertex u, Vertex v) {
    bits_[static_cast<std::size_t>(u) * words_ + static_cast<std::size_t>(v) / 64] |=
        std::uint64_t{1} << (static_cast<unsigned>(v) % 64);
  }

  void finish() {
    nbrs_.assign(static_cast<std::size_t>(n_), {});
    edges_.clear();
    for (Vertex u = 0; u < n_; ++u) {
      const std::uint64_t* r = row(u);
      for (std::size_t w = 0; w < words_; ++w) {
        std::uint64_t word = r[w];
        while (word) {
          const Vertex v = static_cast<Vertex>(w * 64 + static_cast<std::size_t>(std::countr_zero(word)));
          word &= word - 1;
          nbrs_[static_cast<std::size_t>(u)].push_back(v);
          if (u < v) edges_.push_back({u, v});
        }
      }
    }
  }

  int n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
  std::vector<std::vector<Vertex>> nbrs_;
  std::vector<Edge> edges_;
};

inline Graph build_graph(int n, std::span<const std::pair<Vertex, Vertex>> pairs) { return Graph(n, pairs); }

inline Graph build_graph(int n, std::initializer_list<std::pair<Vertex, Vertex>> pairs) {
  return Graph(n, std::span<const std::pair<Vertex, Vertex>>(pairs.begin(), pairs.size()));
}

inline Graph complete_graph(int n) {
  return Graph::from_predicate(n, [](Vertex, Vertex) { return true; });
}

inline Graph cycle_graph(int n) {
  return Graph::from_predicate(n, [n](Vertex u, Vertex v) { return v - u == 1 || (u == 0 && v == n - 1 && n > 2); });
}

inline Graph path_graph(int n) {
  return Graph::from_predicate(n, [](Vertex u, Vertex v) { return v - u == 1; });
}

inline Graph complement(const Graph& g) {
  return Graph::from_predicate(g.order(), [&g](Vertex u, Vertex v) { return !g.adjacent(u, v); });
}

// Common degree, or nullopt when g is not regular (or empty).
inline std::optional<int> is_regular(const Graph& g) {
  if (g.order() == 0) return std::nullopt;
  const int k = g.degree(0);
  for (Vertex v = 1; v < g.order(); ++v)
    if (g.degree(v) != k) return std::nullopt;
  return k;
}

inline int max_degree(const Graph& g) {
  int d = 0;
  for (Vertex v = 0; v < g.order(); ++v) d = std::max(d, g.degree(v));
  return d;
}

// Exhaustive pair scan over common-neighbor counts.
inline std::optional<SrgParams> recognize_srg(const Graph& g) {
  const auto k = is_regular(g);
  const int n = g.order();
  if (!k || *k <= 0 || *k >= n - 1) return std::nullopt;
  std::optional<int> lambda, mu;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const int c = g.common_neighbors(u, v);
      auto& slot = g.adjacent(u, v) ? lambda : mu;
      if (!slot) slot = c;
      else if (*slot != c) return std::nullopt;
    }
  }
  // 0 < k < n-1 guarantees both an edge and a non-edge.
  return SrgParams{n, *k, *lambda, *mu};
}

inline std::vector<int> connected_components(const Graph& g) {
  std::vector<int> comp(static_cast<std::size_t>(g.order()), -1);
  int count = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (comp[static_cast<std::size_t>(s)] >= 0) continue;
    comp[static_cast<std::size_t>(s)] = count;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(u))
        if (comp[static_cast<std::size_t>(w)] < 0) {
          comp[static_cast<std::size_t>(w)] = count;
          stack.push_back(w);
        }
    }
    ++count;
  }
  return comp;
}

inline bool is_connected(const Graph& g) {
  const auto comp = connected_components(g);
  return std::all_of(comp.begin(), comp.end(), [](int c) { return c == 0; });
}

struct InducedSubgraph {
  Graph graph;
  // to_parent[i] is the original label of local vertex i.
  std::vector<Vertex> to_parent;
};

// Induced subgraph; local vertex i corresponds to vertices[i].
inline InducedSubgraph subgraph_on(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v : vertices) {
    if (v < 0 || v >= g.order())
      throw Error(ErrorKind::InvalidVertex, "vertex " + std::to_string(v) + " out of range");
    if (seen[static_cast<std::size_t>(v)])
      throw Error(ErrorKind::InvalidVertex, "vertex " + std::to_string(v) + " listed twice");
    seen[static_cast<std::size_t>(v)] = 1;
  }
  std::vector<Vertex> map(vertices.begin(), vertices.end());
  Graph sub = Graph::from_predicate(static_cast<int>(map.size()), [&](Vertex i, Vertex j) {
    return g.adjacent(map[static_cast<std::size_t>(i)], map[static_cast<std::size_t>(j)]);
  });
  return {std::move(sub), std::move(map)};
}

inline bool is_clique(const Graph& g, std::span<const Vertex> vs) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (!g.adjacent(vs[i], vs[j])) return false;
  return true;
}

inline bool is_coclique(const Graph& g, std::span<const Vertex> vs) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (g.adjacent(vs[i], vs[j])) return false;
  return true;
}

}  // namespace srgec
