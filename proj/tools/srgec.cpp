// srgec: strongly regular graph construction, spectra and edge-coloring
// certificates from the command line.
//
// Exit codes: 0 success, 1 inconclusive/refused/invalid, 2 usage or parse error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "srgec/srgec.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInconclusive = 1;
constexpr int kExitUsage = 2;

std::uint64_t default_seed() {
  if (const char* env = std::getenv("SRGEC_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "warning: ignoring malformed SRGEC_SEED\n";
    }
  }
  return 0;
}

srgec::Graph read_single_graph(const std::string& path) {
  auto graphs = srgec::read_graph6_file(path);
  if (graphs.size() != 1)
    throw srgec::Error(srgec::ErrorKind::InvalidInput,
                       path + " holds " + std::to_string(graphs.size()) + " graphs, expected 1");
  return std::move(graphs.front());
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw srgec::Error(srgec::ErrorKind::InvalidInput, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

srgec::LatinSquareSet squares_for(int m, int t) {
  if (t == 0) return srgec::LatinSquareSet{m, {}};
  if (t == 1) return srgec::cyclic_latin_square(m);
  if (srgec::is_prime(m)) return srgec::mols_prime(m, t);
  if (m == 4 && t <= 3) {
    auto ls = srgec::mols4();
    ls.squares.resize(static_cast<std::size_t>(t));
    return ls;
  }
  throw srgec::Error(srgec::ErrorKind::ParameterRange,
                     "no construction for " + std::to_string(t) + " MOLS of order " + std::to_string(m));
}

struct Generated {
  srgec::Graph graph;
  std::optional<srgec::VertexPartition> meta;
};

Generated generate(const std::string& family, const std::vector<int>& args) {
  auto need = [&](std::size_t count) {
    if (args.size() != count)
      throw srgec::Error(srgec::ErrorKind::InvalidInput,
                         family + " takes " + std::to_string(count) + " integer argument(s)");
  };
  if (family == "triangular") {
    need(1);
    return {srgec::triangular(args[0]), std::nullopt};
  }
  if (family == "lattice") {
    need(1);
    return {srgec::lattice(args[0]), srgec::row_spread(args[0])};
  }
  if (family == "latinsq") {
    need(2);
    return {srgec::latin_square_graph(squares_for(args[0], args[1])), srgec::row_spread(args[0], args[1])};
  }
  if (family == "blockgraph-sts") {
    need(1);
    return {srgec::block_graph(srgec::bose_sts(args[0])), std::nullopt};
  }
  if (family == "cliques") {
    need(2);
    return {srgec::disjoint_cliques(args[0], args[1]), std::nullopt};
  }
  if (family == "multipartite") {
    need(2);
    return {srgec::complete_multipartite(args[0], args[1]), srgec::multipartite_parts(args[0], args[1])};
  }
  throw srgec::Error(srgec::ErrorKind::InvalidInput, "unknown family '" + family + "'");
}

void print_edges(std::ostream& out, const std::vector<srgec::Edge>& edges) {
  for (const auto& e : edges) out << ' ' << e.a << '-' << e.b;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Strongly regular graphs: constructions, spectra, chromatic index certificates"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a family graph as graph6 (plus FILE.meta structure)");
  std::string family, gen_out;
  std::vector<int> gen_args;
  gen->add_option("family", family, "triangular | lattice | latinsq | blockgraph-sts | cliques | multipartite")
      ->required();
  gen->add_option("args", gen_args, "family parameters")->required();
  gen->add_option("-o,--output", gen_out, "output graph6 file")->required();

  // info
  auto* info = app.add_subcommand("info", "Describe the graphs in a graph6 file");
  std::string info_file;
  info->add_option("file", info_file)->required();

  // spectrum
  auto* spectrum = app.add_subcommand("spectrum", "Spectrum and bound predicates for SRG parameters");
  std::vector<long long> params;
  spectrum->add_option("--params", params, "n,k,lambda,mu")->required()->delimiter(',')->expected(4);

  // factorize
  auto* factorize = app.add_subcommand("factorize", "Classify a graph and print its certificate");
  std::string fact_file, fact_out, fact_meta, method_name = "auto";
  srgec::SearchConfig cfg;
  cfg.seed = default_seed();
  factorize->add_option("file", fact_file)->required();
  factorize->add_option("--seed", cfg.seed, "base seed (default: $SRGEC_SEED or 0)");
  factorize->add_option("--max-restarts", cfg.max_restarts)->check(CLI::PositiveNumber);
  factorize->add_option("--budget-ms", cfg.time_budget_ms)->check(CLI::PositiveNumber);
  factorize->add_option("--jobs", cfg.parallel_width, "parallel seeded searches")->check(CLI::PositiveNumber);
  factorize->add_option("--method", method_name)->check(CLI::IsMember({"auto", "heuristic", "constructive"}));
  factorize->add_option("--meta", fact_meta, "structure file (default: FILE.meta if present)");
  factorize->add_option("-o,--output", fact_out, "write the certificate here instead of stdout");

  // exact
  auto* exact = app.add_subcommand("exact", "Exact edge-coloring decision with a given number of colors");
  std::string exact_file;
  int colors = 0;
  std::uint64_t node_budget = srgec::kDefaultNodeBudget;
  exact->add_option("file", exact_file)->required();
  exact->add_option("--colors", colors)->required();
  exact->add_option("--node-budget", node_budget);

  // verify
  auto* verify = app.add_subcommand("verify", "Verify a certificate against a graph");
  std::string verify_graph, verify_cert;
  bool recheck = false;
  verify->add_option("graph", verify_graph)->required();
  verify->add_option("cert", verify_cert)->required();
  verify->add_flag("--recheck-exact", recheck, "re-run the exact search behind a class-2 attestation");

  // batch
  auto* batch = app.add_subcommand("batch", "Classify every .g6 file in a directory");
  std::string batch_dir;
  int batch_jobs = 1;
  std::uint64_t batch_seed = default_seed();
  batch->add_option("dir", batch_dir)->required();
  batch->add_option("--jobs", batch_jobs)->check(CLI::PositiveNumber);
  batch->add_option("--seed", batch_seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*gen) {
      const Generated g = generate(family, gen_args);
      srgec::write_graph6_file(gen_out, {g.graph});
      if (g.meta) {
        std::ofstream meta(srgec::meta_path(gen_out));
        srgec::write_partition(meta, *g.meta);
      }
      std::cout << srgec::to_graph6(g.graph) << '\n';
      return kExitOk;
    }

    if (*info) {
      const auto graphs = srgec::read_graph6_file(info_file);
      for (std::size_t i = 0; i < graphs.size(); ++i) {
        const auto& g = graphs[i];
        std::cout << "graph: " << i << "\nn: " << g.order() << "\nedges: " << g.size() << '\n';
        const auto k = srgec::is_regular(g);
        std::cout << "regular: " << (k ? std::to_string(*k) : "no") << '\n';
        std::cout << "connected: " << (srgec::is_connected(g) ? "yes" : "no") << '\n';
        const auto p = srgec::recognize_srg(g);
        std::cout << "srg: " << (p ? p->str() : "no") << '\n';
        if (p) std::cout << srgec::bound_report(*p).str();
      }
      return kExitOk;
    }

    if (*spectrum) {
      const srgec::SrgParams p{params[0], params[1], params[2], params[3]};
      std::cout << srgec::bound_report(p).str();
      return kExitOk;
    }

    if (*factorize) {
      const srgec::Graph g = read_single_graph(fact_file);
      std::optional<srgec::VertexPartition> meta;
      if (!fact_meta.empty()) {
        std::ifstream in(fact_meta);
        if (!in) throw srgec::Error(srgec::ErrorKind::InvalidInput, "cannot open " + fact_meta);
        meta = srgec::read_partition(in);
      } else {
        meta = srgec::load_meta(fact_file);
      }
      srgec::ClassifyOptions opts;
      if (method_name == "heuristic") opts.preference = srgec::MethodPreference::Heuristic;
      if (method_name == "constructive") opts.preference = srgec::MethodPreference::Constructive;
      const auto result = srgec::classify(g, cfg, meta, opts);
      if (!result.certificate) {
        std::cerr << srgec::to_string(result.verdict) << ": " << result.reason << '\n';
        return kExitInconclusive;
      }
      const std::string text = srgec::write_certificate(*result.certificate);
      if (fact_out.empty()) {
        std::cout << text;
      } else {
        std::ofstream out(fact_out, std::ios::binary);
        out << text;
      }
      std::cerr << srgec::to_string(result.verdict) << " via " << srgec::to_string(result.certificate->method)
                << " in " << result.certificate->wall_ms << " ms\n";
      return kExitOk;
    }

    if (*exact) {
      const srgec::Graph g = read_single_graph(exact_file);
      const auto r = srgec::exact_chromatic_index(g, colors, node_budget);
      std::cout << "colors: " << colors << "\noutcome: " << srgec::to_string(r.outcome) << "\nnodes: " << r.nodes
                << '\n';
      if (r.coloring) {
        const auto classes = srgec::coloring_to_factorization(g, *r.coloring);
        for (std::size_t c = 0; c < classes.size(); ++c) {
          std::cout << "color " << c << ':';
          print_edges(std::cout, classes.factors[c].edges);
          std::cout << '\n';
        }
      }
      return r.outcome == srgec::ExactOutcome::BudgetExceeded ? kExitInconclusive : kExitOk;
    }

    if (*verify) {
      const srgec::Graph g = read_single_graph(verify_graph);
      const auto cert = srgec::read_certificate(read_text(verify_cert));
      bool ok = srgec::verify_certificate(g, cert);
      if (ok && recheck && cert.graph_class == 2) {
        const auto r = srgec::exact_chromatic_index(g, cert.k);
        ok = r.outcome == srgec::ExactOutcome::NotColorable;
        std::cout << "recheck: " << srgec::to_string(r.outcome) << " nodes=" << r.nodes << '\n';
      }
      std::cout << (ok ? "valid" : "invalid") << '\n';
      return ok ? kExitOk : kExitInconclusive;
    }

    if (*batch) {
      srgec::SearchConfig bcfg;
      bcfg.seed = batch_seed;
      const auto summary = srgec::batch_run(srgec::graph6_files_in(batch_dir), bcfg, batch_jobs);
      std::cout << summary.str();
      return summary.exit_status();
    }
  } catch (const srgec::Error& e) {
    std::cerr << "error: " << e.what();
    if (e.position()) std::cerr << " (at " << *e.position() << ")";
    std::cerr << '\n';
    if (e.kind() == srgec::ErrorKind::GraphMismatch) return kExitInconclusive;
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
