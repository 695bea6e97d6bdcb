#pragma once

#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "srgec/certificate.hpp"
#include "srgec/factorizer.hpp"
#include "srgec/families.hpp"
#include "srgec/graph.hpp"
#include "srgec/graph6.hpp"

namespace srgec {

enum class Verdict { Class1, Class2, Inconclusive, Refused };

inline std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Class1: return "class1";
    case Verdict::Class2: return "class2";
    case Verdict::Inconclusive: return "inconclusive";
    case Verdict::Refused: return "refused";
  }
  return "?";
}

enum class MethodPreference { Auto, Heuristic, Constructive };

struct ClassifyOptions {
  MethodPreference preference = MethodPreference::Auto;
  std::size_t exact_edge_threshold = 40;
  std::uint64_t exact_node_budget = kDefaultNodeBudget;
};

struct ClassifyResult {
  Verdict verdict = Verdict::Inconclusive;
  std::optional<Certificate> certificate;
  std::string reason;
  std::optional<HeuristicOutcome> heuristic;
};

namespace detail {

inline long long elapsed_ms(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - since).count();
}

// Constructive factorization from attached structure, if one applies.
inline std::optional<std::pair<Method, Factorization>> constructive_route(const Graph& g, int k,
                                                                           const std::optional<VertexPartition>& meta) {
  if (k == g.order() - 1) return std::pair{Method::RoundRobin, round_robin(g.order())};
  if (!meta) return std::nullopt;
  try {
    switch (meta->kind) {
      case PartitionKind::Spread: {
        if (meta->classes.size() % 2 != 0) return std::nullopt;
        const HoffmanView view = spread_to_hoffman(g, *meta);
        return std::pair{Method::HoffmanComplement, hoffman_complement_factorize(view.complement, view.classes)};
      }
      case PartitionKind::HoffmanColoring:
        return std::pair{Method::Hoffman, hoffman_factorize(g, *meta)};
      case PartitionKind::Bipartition:
        return std::pair{Method::Konig, bipartite_regular_factorize(g, *meta)};
      case PartitionKind::Halves:
        if (meta->classes.size() != 2) return std::nullopt;
        return std::pair{Method::Lemma22, lemma22_clique_or_coclique(g, meta->classes[0])};
    }
  } catch (const Error&) {
    // Structure does not support a construction; fall back to search.
  }
  return std::nullopt;
}

inline std::vector<Matching> coloring_classes(const Graph& g, const EdgeColoring& c) {
  return coloring_to_factorization(g, c).factors;
}

}  // namespace detail

// Pipeline: constructive routes when structure is known, then the randomized
// heuristic, then (small graphs only) the exact decider at k and k+1 colors.
// Class 2 is only reported after a completed NotColorable search.
inline ClassifyResult classify(const Graph& g, const SearchConfig& cfg,
                               const std::optional<VertexPartition>& meta = std::nullopt,
                               const ClassifyOptions& opts = {}) {
  const auto start = std::chrono::steady_clock::now();
  ClassifyResult res;
  const auto k = is_regular(g);
  if (g.order() == 0 || g.order() % 2 != 0) {
    res.verdict = Verdict::Refused;
    res.reason = "odd order: a regular graph of odd order has no 1-factorization";
    return res;
  }
  if (!k) {
    res.verdict = Verdict::Refused;
    res.reason = "not regular";
    return res;
  }
  if (!is_connected(g)) {
    res.verdict = Verdict::Refused;
    res.reason = "disconnected";
    return res;
  }

  Certificate cert;
  cert.graph6 = to_graph6(g);
  cert.n = g.order();
  cert.k = *k;

  auto emit_class1 = [&](Method method, Factorization f, std::optional<std::uint64_t> seed) {
    if (!verify_factorization(g, f)) throw std::logic_error("route produced an invalid factorization");
    cert.graph_class = 1;
    cert.method = method;
    cert.seed = seed;
    cert.factors = std::move(f.factors);
    cert.wall_ms = detail::elapsed_ms(start);
    res.verdict = Verdict::Class1;
    res.certificate = cert;
    return res;
  };

  if (opts.preference != MethodPreference::Heuristic) {
    if (auto route = detail::constructive_route(g, *k, meta)) return emit_class1(route->first, route->second, {});
    if (opts.preference == MethodPreference::Constructive) {
      res.reason = "no constructive route applies";
      return res;
    }
  }

  HeuristicOutcome h = heuristic_factorize(g, cfg);
  res.heuristic = h;
  if (h.factorization) return emit_class1(Method::Heuristic, std::move(*h.factorization), h.seed);

  if (g.size() > opts.exact_edge_threshold) {
    res.reason = "heuristic exhausted after " + std::to_string(h.passes) + " passes (best depth " +
                 std::to_string(h.best_depth) + "); graph above exact threshold";
    return res;
  }
  const ExactResult at_k = exact_chromatic_index(g, *k, opts.exact_node_budget);
  if (at_k.outcome == ExactOutcome::Colorable) {
    Factorization f = coloring_to_factorization(g, *at_k.coloring);
    return emit_class1(Method::Exact, std::move(f), {});
  }
  if (at_k.outcome == ExactOutcome::BudgetExceeded) {
    res.reason = "exact search at k colors exceeded the node budget";
    return res;
  }
  const ExactResult at_k1 = exact_chromatic_index(g, *k + 1, opts.exact_node_budget);
  if (at_k1.outcome != ExactOutcome::Colorable) {
    res.reason = "no (k+1)-coloring witness found";
    return res;
  }
  cert.graph_class = 2;
  cert.method = Method::Exact;
  cert.exact = ExactAttestation{*k, ExactOutcome::NotColorable, at_k.nodes};
  cert.witness = detail::coloring_classes(g, *at_k1.coloring);
  cert.wall_ms = detail::elapsed_ms(start);
  res.verdict = Verdict::Class2;
  res.certificate = std::move(cert);
  return res;
}

// --- structure sidecar ----------------------------------------------------

// A graph file F may carry structure in F.meta (partition text format).
inline std::string meta_path(const std::string& graph_path) { return graph_path + ".meta"; }

inline std::optional<VertexPartition> load_meta(const std::string& graph_path) {
  std::ifstream in(meta_path(graph_path));
  if (!in) return std::nullopt;
  return read_partition(in);
}

// --- batch ----------------------------------------------------------------

struct BatchEntry {
  std::string path;
  std::size_t index = 0;  // position of the graph within its file
  Verdict verdict = Verdict::Inconclusive;
  std::string detail;
  std::string cert_path;
  bool error = false;
};

struct BatchSummary {
  std::vector<BatchEntry> entries;
  int class1 = 0;
  int class2 = 0;
  int inconclusive = 0;
  int refused = 0;
  int errors = 0;
  long long wall_ms = 0;

  int exit_status() const { return inconclusive + refused + errors > 0 ? 1 : 0; }

  std::string str() const {
    std::ostringstream out;
    for (const auto& e : entries)
      out << e.path << '#' << e.index << ' ' << (e.error ? "error" : to_string(e.verdict))
          << (e.detail.empty() ? "" : " " + e.detail) << '\n';
    out << "class1: " << class1 << "\nclass2: " << class2 << "\ninconclusive: " << inconclusive
        << "\nrefused: " << refused << "\nerrors: " << errors << "\nwall_ms: " << wall_ms << '\n';
    return out.str();
  }
};

// Certificates go next to the input: F.cert for single-graph files,
// F.<index>.cert otherwise. Unreadable files become error entries.
inline BatchSummary batch_run(const std::vector<std::string>& paths, const SearchConfig& cfg, int jobs,
                              const ClassifyOptions& opts = {}) {
  const auto start = std::chrono::steady_clock::now();
  struct Work {
    std::size_t entry;
    Graph graph;
    std::optional<VertexPartition> meta;
  };
  BatchSummary summary;
  std::vector<Work> work;
  for (const auto& path : paths) {
    try {
      auto graphs = read_graph6_file(path);
      std::optional<VertexPartition> meta;
      if (graphs.size() == 1) meta = load_meta(path);
      for (std::size_t i = 0; i < graphs.size(); ++i) {
        BatchEntry e{path, i, Verdict::Inconclusive, "", ""};
        e.cert_path = graphs.size() == 1 ? path + ".cert" : path + "." + std::to_string(i) + ".cert";
        summary.entries.push_back(std::move(e));
        work.push_back({summary.entries.size() - 1, std::move(graphs[i]), meta});
      }
    } catch (const std::exception& ex) {
      summary.entries.push_back({path, 0, Verdict::Inconclusive, ex.what(), "", true});
    }
  }

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < work.size(); i = next++) {
      BatchEntry& e = summary.entries[work[i].entry];
      try {
        const ClassifyResult r = classify(work[i].graph, cfg, work[i].meta, opts);
        e.verdict = r.verdict;
        if (r.certificate) {
          std::ofstream out(e.cert_path, std::ios::binary);
          out << write_certificate(*r.certificate);
          e.detail = "method=" + std::string(to_string(r.certificate->method));
        } else {
          e.detail = r.reason;
          e.cert_path.clear();
        }
      } catch (const std::exception& ex) {
        e.error = true;
        e.detail = ex.what();
        e.cert_path.clear();
      }
    }
  };
  std::vector<std::thread> pool;
  for (int j = 1; j < std::max(jobs, 1); ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  for (const auto& e : summary.entries) {
    if (e.error) {
      ++summary.errors;
      continue;
    }
    switch (e.verdict) {
      case Verdict::Class1: ++summary.class1; break;
      case Verdict::Class2: ++summary.class2; break;
      case Verdict::Inconclusive: ++summary.inconclusive; break;
      case Verdict::Refused: ++summary.refused; break;
    }
  }
  summary.wall_ms = detail::elapsed_ms(start);
  return summary;
}

// Regular files ending in .g6 directly under dir, sorted by name.
inline std::vector<std::string> graph6_files_in(const std::string& dir) {
  std::vector<std::string> out;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".g6") out.push_back(entry.path().string());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace srgec
