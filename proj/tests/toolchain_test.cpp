#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "oracles.hpp"
#include "srgec/srgec.hpp"

namespace fs = std::filesystem;

namespace {

using srgec::Certificate;
using srgec::Graph;
using srgec::Method;
using srgec::SearchConfig;
using srgec::Verdict;

struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& name) : path(fs::temp_directory_path() / ("srgec_" + name)) {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct CliRun {
  int status;
  std::string out;
};

CliRun run_cli(const std::string& args) {
  const std::string cmd = std::string(SRGEC_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::optional<std::size_t> parse_error_line(const std::string& text) {
  try {
    srgec::read_certificate(text);
  } catch (const srgec::Error& e) {
    EXPECT_EQ(e.kind(), srgec::ErrorKind::ParseError);
    return e.position();
  }
  ADD_FAILURE() << "accepted certificate";
  return std::nullopt;
}

Certificate lattice_certificate() {
  auto r = srgec::classify(srgec::lattice(4), SearchConfig{}, srgec::row_spread(4));
  return r.certificate.value();
}

// --- certificates ------------------------------------------------------------

TEST(Certificate, LatticeRoundTrip) {
  const Certificate c = lattice_certificate();
  EXPECT_EQ(c.method, Method::HoffmanComplement);
  const std::string text = srgec::write_certificate(c);
  EXPECT_EQ(text.substr(0, 8), "SRGEC 1\n");
  EXPECT_NE(text.find("\nn: 16 k: 6\nclass: 1\nmethod: hoffman-complement\nseed: -\nfactor 0:"), std::string::npos);
  const Certificate back = srgec::read_certificate(text);
  EXPECT_EQ(back, c);
  EXPECT_EQ(srgec::write_certificate(back), text);
  EXPECT_TRUE(srgec::verify_certificate(srgec::lattice(4), back));
}

TEST(Certificate, PetersenRoundTrip) {
  const auto r = srgec::classify(fixture::petersen(), SearchConfig{});
  ASSERT_EQ(r.verdict, Verdict::Class2);
  const Certificate& c = *r.certificate;
  const std::string text = srgec::write_certificate(c);
  EXPECT_NE(text.find("exact: colors=3 outcome=notcolorable nodes="), std::string::npos);
  EXPECT_NE(text.find("\nwitness 4\n"), std::string::npos);
  EXPECT_EQ(srgec::read_certificate(text), c);
  EXPECT_TRUE(srgec::verify_certificate(fixture::petersen(), c));
}

TEST(Certificate, ParseErrors) {
  const std::string good = srgec::write_certificate(lattice_certificate());
  // Swap the first two edges of factor 0 (line 7).
  std::string unsorted = good;
  const auto at = unsorted.find("factor 0: ") + 10;
  const auto sp1 = unsorted.find(' ', at);
  const auto sp2 = unsorted.find(' ', sp1 + 1);
  const std::string first = unsorted.substr(at, sp1 - at), second = unsorted.substr(sp1 + 1, sp2 - sp1 - 1);
  unsorted.replace(at, sp2 - at, second + " " + first);
  EXPECT_EQ(parse_error_line(unsorted), 7u);

  EXPECT_EQ(parse_error_line("SRGEC 2\n"), 1u);
  EXPECT_EQ(parse_error_line(good + "extra\n"), 7u + 6u);
  std::string reversed = good;
  reversed.replace(reversed.find(first), first.size(),
                   first.substr(first.find('-') + 1) + "-" + first.substr(0, first.find('-')));
  EXPECT_EQ(parse_error_line(reversed), 7u);
  EXPECT_TRUE(parse_error_line(good.substr(0, good.size() / 2)).has_value());
}

TEST(Certificate, VerifyRejectsTampering) {
  const Graph g = srgec::lattice(4);
  Certificate c = lattice_certificate();
  Certificate dup = c;
  dup.factors[1].edges[0] = dup.factors[0].edges[0];
  std::sort(dup.factors[1].edges.begin(), dup.factors[1].edges.end());
  EXPECT_FALSE(srgec::verify_certificate(g, dup));
  Certificate fewer = c;
  fewer.factors.pop_back();
  EXPECT_FALSE(srgec::verify_certificate(g, fewer));
  try {
    srgec::verify_certificate(srgec::triangular(5), c);
    FAIL();
  } catch (const srgec::Error& e) {
    EXPECT_EQ(e.kind(), srgec::ErrorKind::GraphMismatch);
  }
}

TEST(Certificate, VerifyRejectsBadClassTwo) {
  const Graph p = fixture::petersen();
  Certificate c = *srgec::classify(p, SearchConfig{}).certificate;
  Certificate colorable = c;
  colorable.exact->outcome = srgec::ExactOutcome::Colorable;
  EXPECT_FALSE(srgec::verify_certificate(p, colorable));
  Certificate short_witness = c;
  short_witness.witness.pop_back();
  EXPECT_FALSE(srgec::verify_certificate(p, short_witness));
}

// --- classify ----------------------------------------------------------------

TEST(Classify, Examples) {
  const auto pet = srgec::classify(fixture::petersen(), SearchConfig{});
  ASSERT_EQ(pet.verdict, Verdict::Class2);
  EXPECT_EQ(pet.certificate->method, Method::Exact);
  EXPECT_EQ(pet.certificate->exact->colors, 3);
  EXPECT_EQ(pet.certificate->exact->outcome, srgec::ExactOutcome::NotColorable);

  const auto t5 = srgec::classify(srgec::triangular(5), SearchConfig{});
  ASSERT_EQ(t5.verdict, Verdict::Class1);
  EXPECT_EQ(t5.certificate->k, 6);
  EXPECT_TRUE(srgec::verify_certificate(srgec::triangular(5), *t5.certificate));

  const auto l4 = srgec::classify(srgec::lattice(4), SearchConfig{}, srgec::row_spread(4));
  ASSERT_EQ(l4.verdict, Verdict::Class1);
  EXPECT_EQ(l4.certificate->method, Method::HoffmanComplement);
}

TEST(Classify, Refusals) {
  EXPECT_EQ(srgec::classify(srgec::cycle_graph(5), SearchConfig{}).verdict, Verdict::Refused);
  EXPECT_EQ(srgec::classify(srgec::disjoint_cliques(2, 4), SearchConfig{}).verdict, Verdict::Refused);
  EXPECT_EQ(srgec::classify(srgec::path_graph(4), SearchConfig{}).verdict, Verdict::Refused);
}

TEST(Classify, Routes) {
  const auto k8 = srgec::classify(srgec::complete_graph(8), SearchConfig{});
  EXPECT_EQ(k8.certificate->method, Method::RoundRobin);

  const auto multi = srgec::classify(srgec::complete_multipartite(4, 3), SearchConfig{}, srgec::multipartite_parts(4, 3));
  EXPECT_EQ(multi.certificate->method, Method::Hoffman);

  srgec::VertexPartition sides{{{0, 1, 2}, {3, 4, 5}}, srgec::PartitionKind::Bipartition};
  EXPECT_EQ(srgec::classify(srgec::complete_multipartite(2, 3), SearchConfig{}, sides).certificate->method,
            Method::Konig);

  const Graph prism = srgec::build_graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
  srgec::VertexPartition tri{{{0, 1, 2}, {3, 4, 5}}, srgec::PartitionKind::Halves};
  EXPECT_EQ(srgec::classify(prism, SearchConfig{}, tri).certificate->method, Method::Lemma22);

  // Wrong structure falls through to the heuristic.
  const auto fallback = srgec::classify(srgec::triangular(5), SearchConfig{}, srgec::row_spread(2));
  EXPECT_EQ(fallback.certificate->method, Method::Heuristic);

  srgec::ClassifyOptions constructive;
  constructive.preference = srgec::MethodPreference::Constructive;
  EXPECT_EQ(srgec::classify(srgec::triangular(5), SearchConfig{}, std::nullopt, constructive).verdict,
            Verdict::Inconclusive);
}

TEST(Classify, NeverClassTwoWithoutProof) {
  // Above the exact threshold an exhausted heuristic stays inconclusive.
  srgec::ClassifyOptions opts;
  opts.exact_edge_threshold = 10;
  SearchConfig cfg;
  cfg.max_restarts = 5;
  const auto r = srgec::classify(fixture::petersen(), cfg, std::nullopt, opts);
  EXPECT_EQ(r.verdict, Verdict::Inconclusive);
  EXPECT_FALSE(r.certificate);

  srgec::ClassifyOptions tiny;
  tiny.exact_node_budget = 3;
  EXPECT_EQ(srgec::classify(fixture::petersen(), cfg, std::nullopt, tiny).verdict, Verdict::Inconclusive);
}

// --- batch -------------------------------------------------------------------

std::vector<Graph> family_graphs() {
  return {srgec::lattice(4),     srgec::lattice(6),     srgec::triangular(4),
          srgec::triangular(5),  srgec::triangular(8),  srgec::complement(srgec::triangular(8)),
          srgec::complement(srgec::lattice(4)), srgec::latin_square_graph(srgec::cyclic_latin_square(4)),
          srgec::block_graph(srgec::bose_sts(9)), srgec::complete_multipartite(3, 4)};
}

TEST(Batch, FamilyDirectory) {
  TempDir dir("batch_family");
  const auto graphs = family_graphs();
  for (std::size_t i = 0; i < graphs.size(); ++i)
    srgec::write_graph6_file(dir.file("g" + std::to_string(i) + ".g6"), {graphs[i]});
  const auto summary = srgec::batch_run(srgec::graph6_files_in(dir.path.string()), SearchConfig{}, 2);
  EXPECT_EQ(summary.class1, 10);
  EXPECT_EQ(summary.exit_status(), 0);
  for (const auto& e : summary.entries) {
    const auto graph = srgec::read_graph6_file(e.path).front();
    EXPECT_TRUE(srgec::verify_certificate(graph, srgec::read_certificate(slurp(e.cert_path)))) << e.path;
  }
}

TEST(Batch, PetersenAndOddOrder) {
  TempDir dir("batch_mixed");
  srgec::write_graph6_file(dir.file("petersen.g6"), {fixture::petersen()});
  srgec::write_graph6_file(dir.file("c5.g6"), {srgec::cycle_graph(5)});
  std::ofstream(dir.file("broken.g6")) << "C~x\n";
  const auto summary = srgec::batch_run(srgec::graph6_files_in(dir.path.string()), SearchConfig{}, 1);
  EXPECT_EQ(summary.class2, 1);
  EXPECT_EQ(summary.refused, 1);
  EXPECT_EQ(summary.errors, 1);
  EXPECT_EQ(summary.exit_status(), 1);
  EXPECT_TRUE(fs::exists(dir.file("petersen.g6.cert")));
  EXPECT_FALSE(fs::exists(dir.file("c5.g6.cert")));
}

TEST(Batch, MultiGraphFileAndReproducible) {
  TempDir dir("batch_repro");
  srgec::write_graph6_file(dir.file("many.g6"), {srgec::triangular(5), srgec::triangular(8), srgec::lattice(4)});
  const auto paths = srgec::graph6_files_in(dir.path.string());
  SearchConfig seeded;
  seeded.seed = 7;
  srgec::batch_run(paths, seeded, 1);
  std::vector<std::string> first;
  for (int i = 0; i < 3; ++i) first.push_back(slurp(dir.file("many.g6." + std::to_string(i) + ".cert")));
  srgec::batch_run(paths, seeded, 1);
  for (int i = 0; i < 3; ++i) EXPECT_EQ(slurp(dir.file("many.g6." + std::to_string(i) + ".cert")), first[static_cast<std::size_t>(i)]);
  EXPECT_FALSE(first[0].empty());
}

TEST(Batch, MetaSidecarSelectsConstructiveRoute) {
  TempDir dir("batch_meta");
  srgec::write_graph6_file(dir.file("l6.g6"), {srgec::lattice(6)});
  {
    std::ofstream meta(srgec::meta_path(dir.file("l6.g6")));
    srgec::write_partition(meta, srgec::row_spread(6));
  }
  srgec::batch_run(srgec::graph6_files_in(dir.path.string()), SearchConfig{}, 1);
  EXPECT_EQ(srgec::read_certificate(slurp(dir.file("l6.g6.cert"))).method, Method::HoffmanComplement);
}

// --- command line ------------------------------------------------------------

TEST(Cli, GenInfoSpectrum) {
  TempDir dir("cli_gen");
  const std::string g = dir.file("l4.g6");
  EXPECT_EQ(run_cli("gen lattice 4 -o " + g).status, 0);
  EXPECT_TRUE(fs::exists(g + ".meta"));
  const CliRun info = run_cli("info " + g);
  EXPECT_EQ(info.status, 0);
  EXPECT_NE(info.out.find("srg: (16,6,2,2)"), std::string::npos);
  const CliRun spec = run_cli("spectrum --params 10,3,0,1");
  EXPECT_EQ(spec.status, 0);
  EXPECT_NE(spec.out.find("eigenvalue.r: 1\neigenvalue.s: -2\nmultiplicity.f: 5\nmultiplicity.g: 4\n"),
            std::string::npos);
  EXPECT_EQ(run_cli("spectrum --params 10,3").status, 2);
  EXPECT_EQ(run_cli("gen nosuchfamily 3 -o " + g).status, 2);
  EXPECT_EQ(run_cli("").status, 2);
}

TEST(Cli, FactorizeVerifyExact) {
  TempDir dir("cli_fact");
  const std::string g = dir.file("l4.g6");
  ASSERT_EQ(run_cli("gen lattice 4 -o " + g).status, 0);
  const CliRun a = run_cli("factorize " + g + " --seed 7 --jobs 1");
  const CliRun b = run_cli("factorize " + g + " --seed 7 --jobs 1");
  EXPECT_EQ(a.status, 0);
  EXPECT_EQ(a.out, b.out);
  std::ofstream(dir.file("l4.cert"), std::ios::binary) << a.out;
  EXPECT_EQ(run_cli("verify " + g + " " + dir.file("l4.cert")).out, "valid\n");

  const std::string pg = dir.file("petersen.g6");
  srgec::write_graph6_file(pg, {fixture::petersen()});
  const CliRun ex3 = run_cli("exact " + pg + " --colors 3");
  EXPECT_EQ(ex3.status, 0);
  EXPECT_NE(ex3.out.find("outcome: notcolorable"), std::string::npos);
  EXPECT_NE(run_cli("exact " + pg + " --colors 4").out.find("outcome: colorable"), std::string::npos);
  EXPECT_EQ(run_cli("exact " + pg + " --colors 3 --node-budget 2").status, 1);

  ASSERT_EQ(run_cli("factorize " + pg + " -o " + dir.file("p.cert")).status, 0);
  const CliRun re = run_cli("verify " + pg + " " + dir.file("p.cert") + " --recheck-exact");
  EXPECT_EQ(re.status, 0);
  EXPECT_NE(re.out.find("recheck: notcolorable"), std::string::npos);
  EXPECT_EQ(run_cli("verify " + g + " " + dir.file("p.cert")).status, 1);

  const std::string c5 = dir.file("c5.g6");
  srgec::write_graph6_file(c5, {srgec::cycle_graph(5)});
  EXPECT_EQ(run_cli("factorize " + c5).status, 1);
}

TEST(Cli, Batch) {
  TempDir dir("cli_batch");
  ASSERT_EQ(run_cli("gen triangular 5 -o " + dir.file("t5.g6")).status, 0);
  ASSERT_EQ(run_cli("gen multipartite 4 4 -o " + dir.file("k44.g6")).status, 0);
  const CliRun ok = run_cli("batch " + dir.path.string() + " --jobs 2 --seed 3");
  EXPECT_EQ(ok.status, 0);
  EXPECT_NE(ok.out.find("class1: 2"), std::string::npos);
  srgec::write_graph6_file(dir.file("c5.g6"), {srgec::cycle_graph(5)});
  EXPECT_EQ(run_cli("batch " + dir.path.string()).status, 1);
}

}  // namespace
