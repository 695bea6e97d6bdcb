#pragma once

#include <charconv>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "srgec/error.hpp"
#include "srgec/factorizer.hpp"
#include "srgec/graph.hpp"
#include "srgec/graph6.hpp"

namespace srgec {

enum class Method { Heuristic, Konig, RoundRobin, Lemma22, Hoffman, HoffmanComplement, Exact };

inline std::string_view to_string(Method m) {
  switch (m) {
    case Method::Heuristic: return "heuristic";
    case Method::Konig: return "konig";
    case Method::RoundRobin: return "roundrobin";
    case Method::Lemma22: return "lemma22";
    case Method::Hoffman: return "hoffman";
    case Method::HoffmanComplement: return "hoffman-complement";
    case Method::Exact: return "exact";
  }
  return "?";
}

inline std::optional<Method> parse_method(std::string_view s) {
  for (Method m : {Method::Heuristic, Method::Konig, Method::RoundRobin, Method::Lemma22, Method::Hoffman,
                   Method::HoffmanComplement, Method::Exact})
    if (to_string(m) == s) return m;
  return std::nullopt;
}

struct ExactAttestation {
  int colors = 0;
  ExactOutcome outcome = ExactOutcome::NotColorable;
  std::uint64_t nodes = 0;

  friend bool operator==(const ExactAttestation&, const ExactAttestation&) = default;
};

// Class 1: `factors` holds k perfect matchings. Class 2: `exact` records a
// completed NotColorable search at k colors and `witness` holds the k+1 color
// classes of a proper coloring. wall_ms is informational and not serialized.
struct Certificate {
  std::string graph6;
  int n = 0;
  int k = 0;
  int graph_class = 1;
  Method method = Method::Heuristic;
  std::optional<std::uint64_t> seed;
  std::vector<Matching> factors;
  std::optional<ExactAttestation> exact;
  std::vector<Matching> witness;
  long long wall_ms = 0;

  friend bool operator==(const Certificate& x, const Certificate& y) {
    return x.graph6 == y.graph6 && x.n == y.n && x.k == y.k && x.graph_class == y.graph_class &&
           x.method == y.method && x.seed == y.seed && x.factors == y.factors && x.exact == y.exact &&
           x.witness == y.witness;
  }
};

namespace detail {

inline void write_edges(std::ostream& out, const Matching& m) {
  for (const Edge& e : m.edges) out << ' ' << e.a << '-' << e.b;
}

}  // namespace detail

// Format (ASCII, LF):
//   SRGEC 1
//   graph6: <g6>
//   n: <n> k: <k>
//   class: <1|2>
//   method: <tag>
//   seed: <u64|->
// then for class 1, k lines "factor <i>: a-b a-b ..." (i from 0), and for
// class 2 "exact: colors=<k> outcome=notcolorable nodes=<N>", "witness <k+1>"
// and k+1 lines "color <c>: a-b ...". Edge lists are sorted with a < b.
inline std::string write_certificate(const Certificate& c) {
  std::ostringstream out;
  out << "SRGEC 1\n";
  out << "graph6: " << c.graph6 << '\n';
  out << "n: " << c.n << " k: " << c.k << '\n';
  out << "class: " << c.graph_class << '\n';
  out << "method: " << to_string(c.method) << '\n';
  out << "seed: ";
  if (c.seed) out << *c.seed;
  else out << '-';
  out << '\n';
  if (c.graph_class == 1) {
    for (std::size_t i = 0; i < c.factors.size(); ++i) {
      out << "factor " << i << ':';
      detail::write_edges(out, c.factors[i]);
      out << '\n';
    }
  } else {
    const ExactAttestation ex = c.exact.value_or(ExactAttestation{});
    out << "exact: colors=" << ex.colors << " outcome=" << to_string(ex.outcome) << " nodes=" << ex.nodes << '\n';
    out << "witness " << c.witness.size() << '\n';
    for (std::size_t i = 0; i < c.witness.size(); ++i) {
      out << "color " << i << ':';
      detail::write_edges(out, c.witness[i]);
      out << '\n';
    }
  }
  return out.str();
}

namespace detail {

class CertificateParser {
 public:
  explicit CertificateParser(std::string_view text) {
    std::size_t start = 0;
    while (start < text.size()) {
      const std::size_t end = text.find('\n', start);
      if (end == std::string_view::npos) {
        lines_.push_back(text.substr(start));
        break;
      }
      lines_.push_back(text.substr(start, end - start));
      start = end + 1;
    }
  }

  Certificate parse() {
    Certificate c;
    expect_exact("SRGEC 1");
    c.graph6 = std::string(after_prefix("graph6: "));
    {
      const std::string_view line = next();
      std::istringstream ss{std::string(line)};
      std::string n_tag, k_tag;
      if (!(ss >> n_tag >> c.n >> k_tag >> c.k) || n_tag != "n:" || k_tag != "k:" || !ss.eof() ||
          line != "n: " + std::to_string(c.n) + " k: " + std::to_string(c.k))
        fail("expected 'n: <n> k: <k>'");
    }
    const auto cls = after_prefix("class: ");
    if (cls == "1") c.graph_class = 1;
    else if (cls == "2") c.graph_class = 2;
    else fail("class must be 1 or 2");
    const auto method = parse_method(after_prefix("method: "));
    if (!method) fail("unknown method");
    c.method = *method;
    const auto seed = after_prefix("seed: ");
    if (seed != "-") c.seed = parse_u64(seed);

    if (c.graph_class == 1) {
      for (int i = 0; i < c.k; ++i) c.factors.push_back(edge_line("factor " + std::to_string(i) + ":"));
    } else {
      const auto ex = after_prefix("exact: colors=");
      const std::size_t sp1 = ex.find(" outcome=");
      const std::size_t sp2 = ex.find(" nodes=");
      if (sp1 == std::string_view::npos || sp2 == std::string_view::npos || sp2 < sp1) fail("malformed exact line");
      ExactAttestation att;
      att.colors = static_cast<int>(parse_u64(ex.substr(0, sp1)));
      const auto outcome = ex.substr(sp1 + 9, sp2 - sp1 - 9);
      if (outcome == "notcolorable") att.outcome = ExactOutcome::NotColorable;
      else if (outcome == "colorable") att.outcome = ExactOutcome::Colorable;
      else if (outcome == "budgetexceeded") att.outcome = ExactOutcome::BudgetExceeded;
      else fail("unknown exact outcome");
      att.nodes = parse_u64(ex.substr(sp2 + 7));
      c.exact = att;
      const auto count = parse_u64(after_prefix("witness "));
      for (std::uint64_t i = 0; i < count; ++i) c.witness.push_back(edge_line("color " + std::to_string(i) + ":"));
    }
    if (pos_ < lines_.size() && !(pos_ + 1 == lines_.size() && lines_[pos_].empty()))
      throw Error(ErrorKind::ParseError, "trailing content", pos_ + 1);
    return c;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw Error(ErrorKind::ParseError, what, pos_); }

  std::string_view next() {
    if (pos_ >= lines_.size() || (pos_ + 1 == lines_.size() && lines_[pos_].empty()))
      throw Error(ErrorKind::ParseError, "unexpected end of certificate", pos_ + 1);
    return lines_[pos_++];
  }

  void expect_exact(std::string_view want) {
    if (next() != want) fail("expected '" + std::string(want) + "'");
  }

  std::string_view after_prefix(std::string_view prefix) {
    const std::string_view line = next();
    if (!line.starts_with(prefix)) fail("expected '" + std::string(prefix) + "...'");
    return line.substr(prefix.size());
  }

  std::uint64_t parse_u64(std::string_view s) const {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) fail("expected an unsigned integer");
    return v;
  }

  Matching edge_line(const std::string& prefix) {
    std::string_view rest = after_prefix(prefix);
    Matching m;
    while (!rest.empty()) {
      if (rest.front() != ' ') fail("expected ' a-b'");
      rest.remove_prefix(1);
      const std::size_t end = std::min(rest.find(' '), rest.size());
      const std::string_view tok = rest.substr(0, end);
      rest.remove_prefix(end);
      const std::size_t dash = tok.find('-');
      if (dash == std::string_view::npos) fail("edge token without '-'");
      const auto a = static_cast<Vertex>(parse_u64(tok.substr(0, dash)));
      const auto b = static_cast<Vertex>(parse_u64(tok.substr(dash + 1)));
      if (a >= b) fail("edge endpoints must satisfy a < b");
      const Edge e{a, b};
      if (!m.edges.empty() && !(m.edges.back() < e)) fail("edges not in canonical sorted order");
      m.edges.push_back(e);
    }
    return m;
  }

  std::vector<std::string_view> lines_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Certificate read_certificate(std::string_view text) { return detail::CertificateParser(text).parse(); }

namespace detail {

// Classes are pairwise disjoint matchings of g covering every edge.
inline bool is_edge_partition(const Graph& g, const std::vector<Matching>& classes) {
  std::vector<char> used(g.size(), 0);
  for (const Matching& m : classes) {
    if (!is_matching_of(g, m)) return false;
    for (const Edge& e : m.edges) {
      const long i = g.edge_index(e.a, e.b);
      if (i < 0 || used[static_cast<std::size_t>(i)]++) return false;
    }
  }
  return std::all_of(used.begin(), used.end(), [](char u) { return u == 1; });
}

}  // namespace detail

// Class 1: factors form a 1-factorization with k factors. Class 2: the
// attestation claims NotColorable at k colors and the witness is a proper
// (k+1)-edge-coloring; the search itself is not re-run here.
inline bool verify_certificate(const Graph& g, const Certificate& c) {
  if (c.graph6 != to_graph6(g)) throw Error(ErrorKind::GraphMismatch, "certificate is for a different graph");
  const auto k = is_regular(g);
  if (!k || c.n != g.order() || c.k != *k) return false;
  if (c.graph_class == 1) return verify_factorization(g, Factorization{c.factors});
  if (c.graph_class != 2 || !c.exact) return false;
  if (c.exact->colors != c.k || c.exact->outcome != ExactOutcome::NotColorable) return false;
  return c.witness.size() == static_cast<std::size_t>(c.k + 1) && detail::is_edge_partition(g, c.witness);
}

}  // namespace srgec
