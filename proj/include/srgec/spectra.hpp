#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <cstdint>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "srgec/error.hpp"
#include "srgec/graph.hpp"

namespace srgec {

// Exact rational over 64-bit integers; intermediates are 128-bit and any
// result that does not fit raises Unsupported.
class Rational {
 public:
  Rational(long long num = 0) : num_(num), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(long long num, long long den) { assign(num, den); }

  long long num() const { return num_; }
  long long den() const { return den_; }
  bool is_integer() const { return den_ == 1; }
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  int sign() const { return (num_ > 0) - (num_ < 0); }

  // Largest integer <= value.
  long long floor() const {
    long long q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
  }

  friend Rational operator+(const Rational& x, const Rational& y) {
    return from128(static_cast<__int128>(x.num_) * y.den_ + static_cast<__int128>(y.num_) * x.den_,
                   static_cast<__int128>(x.den_) * y.den_);
  }
  friend Rational operator-(const Rational& x, const Rational& y) { return x + (-y); }
  friend Rational operator*(const Rational& x, const Rational& y) {
    return from128(static_cast<__int128>(x.num_) * y.num_, static_cast<__int128>(x.den_) * y.den_);
  }
  friend Rational operator/(const Rational& x, const Rational& y) {
    if (y.num_ == 0) throw Error(ErrorKind::Infeasible, "division by zero");
    return from128(static_cast<__int128>(x.num_) * y.den_, static_cast<__int128>(x.den_) * y.num_);
  }
  Rational operator-() const { return Rational(-num_, den_); }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend auto operator<=>(const Rational& x, const Rational& y) {
    return static_cast<__int128>(x.num_) * y.den_ <=> static_cast<__int128>(y.num_) * x.den_;
  }

  std::string str() const { return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_); }

 private:
  static Rational from128(__int128 num, __int128 den) {
    if (den == 0) throw Error(ErrorKind::Infeasible, "zero denominator");
    if (den < 0) num = -num, den = -den;
    __int128 a = num < 0 ? -num : num, b = den;
    while (b) a %= b, std::swap(a, b);
    if (a > 1) num /= a, den /= a;
    constexpr __int128 lim = std::numeric_limits<long long>::max();
    if (num > lim || num < -lim || den > lim) throw Error(ErrorKind::Unsupported, "rational overflow");
    Rational r;
    r.num_ = static_cast<long long>(num);
    r.den_ = static_cast<long long>(den);
    return r;
  }

  void assign(long long num, long long den) { *this = from128(num, den); }

  long long num_ = 0;
  long long den_ = 1;
};

inline long long isqrt(long long x) {
  if (x < 0) return -1;
  auto r = static_cast<long long>(std::sqrt(static_cast<long double>(x)));
  while (r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

// a + b*sqrt(d) with rational a, b and integer d >= 1; d = 1 (b = 0) for
// rationals. Values sharing a radicand form a field, which covers every
// quantity derived from one SRG spectrum.
struct QuadSurd {
  Rational a;
  Rational b;
  long long d = 1;

  static QuadSurd rational(Rational x) { return {x, 0, 1}; }

  // (p + q*sqrt(disc)) / 2, reduced to a rational when disc is a square.
  static QuadSurd half(long long p, long long q, long long disc) {
    const long long root = isqrt(disc);
    if (root * root == disc) return rational(Rational(p + q * root, 2));
    return {Rational(p, 2), Rational(q, 2), disc};
  }

  bool is_rational() const { return b == Rational(0); }
  bool is_integer() const { return is_rational() && a.is_integer(); }
  double to_double() const { return a.to_double() + b.to_double() * std::sqrt(static_cast<double>(d)); }

  // Exact sign of a + b*sqrt(d).
  int sign() const {
    const int sa = a.sign(), sb = b.sign();
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // Opposite signs: compare a^2 with b^2 d.
    const Rational lhs = a * a, rhs = b * b * Rational(d);
    if (lhs == rhs) return 0;
    return lhs > rhs ? sa : sb;
  }

  friend QuadSurd operator+(const QuadSurd& x, const QuadSurd& y) { return {x.a + y.a, x.b + y.b, radicand(x, y)}; }
  friend QuadSurd operator-(const QuadSurd& x, const QuadSurd& y) { return {x.a - y.a, x.b - y.b, radicand(x, y)}; }
  friend QuadSurd operator*(const QuadSurd& x, const QuadSurd& y) {
    const long long dd = radicand(x, y);
    return {x.a * y.a + x.b * y.b * Rational(dd), x.a * y.b + x.b * y.a, dd};
  }
  friend QuadSurd operator/(const QuadSurd& x, const QuadSurd& y) {
    const long long dd = radicand(x, y);
    const Rational norm = y.a * y.a - y.b * y.b * Rational(dd);
    const QuadSurd conj{y.a, -y.b, dd};
    const QuadSurd num = x * conj;
    return {num.a / norm, num.b / norm, dd};
  }
  QuadSurd operator-() const { return {-a, -b, d}; }

  friend bool operator==(const QuadSurd& x, const QuadSurd& y) { return (x - y).sign() == 0; }
  friend bool operator<(const QuadSurd& x, const QuadSurd& y) { return (x - y).sign() < 0; }
  friend bool operator<=(const QuadSurd& x, const QuadSurd& y) { return (x - y).sign() <= 0; }

  std::string str() const {
    if (is_rational()) return a.str();
    std::ostringstream os;
    if (a.sign() == 0) {
      if (b != Rational(1)) os << (b == Rational(-1) ? std::string("-") : b.str() + "*");
      os << "sqrt(" << d << ")";
      return os.str();
    }
    os << "(" << (a * Rational(2)).str() << (b.sign() < 0 ? " - " : " + ");
    const Rational twice_b = b * Rational(2 * b.sign());
    if (twice_b != Rational(1)) os << twice_b.str() << "*";
    os << "sqrt(" << d << "))/2";
    return os.str();
  }

 private:
  static long long radicand(const QuadSurd& x, const QuadSurd& y) {
    if (x.is_rational()) return y.d;
    if (y.is_rational()) return x.d;
    if (x.d != y.d) throw Error(ErrorKind::Unsupported, "mixed radicands");
    return x.d;
  }
};

inline QuadSurd operator+(const QuadSurd& x, long long y) { return x + QuadSurd::rational(y); }
inline QuadSurd operator*(long long x, const QuadSurd& y) { return QuadSurd::rational(x) * y; }

// Eigenvalues k > r > s of an SRG with multiplicities 1, f, g.
struct Spectrum {
  long long k = 0;
  QuadSurd r;
  QuadSurd s;
  long long f = 0;
  long long g = 0;

  bool integral() const { return r.is_integer() && s.is_integer(); }
  long long r_int() const { return r.a.num(); }
  long long s_int() const { return s.a.num(); }
};

inline long long discriminant(const SrgParams& p) {
  return (p.lambda - p.mu) * (p.lambda - p.mu) + 4 * (p.k - p.mu);
}

// Closed-form spectrum; throws Infeasible when the counting identity fails,
// the discriminant is not positive, or multiplicities are not nonnegative
// integers.
inline Spectrum srg_spectrum(const SrgParams& p) {
  if (!p.counting_identity()) throw Error(ErrorKind::Infeasible, "counting identity fails for " + p.str());
  const long long disc = discriminant(p);
  if (disc <= 0) throw Error(ErrorKind::Infeasible, "nonpositive discriminant for " + p.str());
  Spectrum sp;
  sp.k = p.k;
  sp.r = QuadSurd::half(p.lambda - p.mu, 1, disc);
  sp.s = QuadSurd::half(p.lambda - p.mu, -1, disc);
  const long long e = 2 * p.k + (p.n - 1) * (p.lambda - p.mu);
  const long long root = isqrt(disc);
  long long twice_f = 0, twice_g = 0;
  if (root * root == disc) {
    if (e % root != 0) throw Error(ErrorKind::Infeasible, "non-integral multiplicities for " + p.str());
    twice_f = (p.n - 1) - e / root;
    twice_g = (p.n - 1) + e / root;
  } else {
    if (e != 0) throw Error(ErrorKind::Infeasible, "irrational multiplicities for " + p.str());
    twice_f = twice_g = p.n - 1;
  }
  if (twice_f % 2 != 0 || twice_g % 2 != 0 || twice_f < 0 || twice_g < 0)
    throw Error(ErrorKind::Infeasible, "non-integral multiplicities for " + p.str());
  sp.f = twice_f / 2;
  sp.g = twice_g / 2;
  return sp;
}

inline SrgParams complement_params(const SrgParams& p) {
  return {p.n, p.n - p.k - 1, p.n - 2 * p.k + p.mu - 2, p.n - 2 * p.k + p.lambda};
}

struct FeasibilityCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct FeasibilityReport {
  std::vector<FeasibilityCheck> checks;

  bool all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const FeasibilityCheck& c) { return c.passed; });
  }
  const FeasibilityCheck* find(std::string_view name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
};

inline FeasibilityReport feasibility_check(const SrgParams& p) {
  FeasibilityReport rep;
  rep.checks.push_back({"degree_range", p.k > 0 && p.k < p.n - 1, "0 < k < n-1"});
  const long long lhs = p.k * (p.k - p.lambda - 1), rhs = (p.n - p.k - 1) * p.mu;
  rep.checks.push_back({"counting_identity", lhs == rhs, std::to_string(lhs) + " vs " + std::to_string(rhs)});
  std::optional<Spectrum> sp;
  try {
    sp = srg_spectrum(p);
    rep.checks.push_back({"multiplicities", true, "f=" + std::to_string(sp->f) + " g=" + std::to_string(sp->g)});
  } catch (const Error& e) {
    rep.checks.push_back({"multiplicities", false, e.message()});
  }
  if (sp) {
    const QuadSurd lhs_mu = sp->r * sp->s + p.k;
    rep.checks.push_back({"k_plus_rs_equals_mu", lhs_mu == QuadSurd::rational(p.mu), "k+rs=" + lhs_mu.str()});
  } else {
    rep.checks.push_back({"k_plus_rs_equals_mu", false, "spectrum unavailable"});
  }
  return rep;
}

// --- family parameter formulas -------------------------------------------

inline SrgParams triangular_params(long long m) {
  if (m < 4) throw Error(ErrorKind::ParameterRange, "triangular parameters need m >= 4");
  return {m * (m - 1) / 2, 2 * (m - 2), m - 2, 4};
}

inline SrgParams latin_square_params(long long m, long long t) {
  if (m < 2 || t < 0) throw Error(ErrorKind::ParameterRange, "need m >= 2, t >= 0");
  return {m * m, (t + 2) * (m - 1), m - 2 + t * (t + 1), (t + 1) * (t + 2)};
}

inline SrgParams block_graph_params(long long m, long long ell) {
  if (ell < 2 || m < ell) throw Error(ErrorKind::ParameterRange, "need m >= ell >= 2");
  if (m == ell * ell - ell + 1) throw Error(ErrorKind::CompleteGraph, "projective plane: block graph is complete");
  if ((m * (m - 1)) % (ell * (ell - 1)) != 0 || (m - 1) % (ell - 1) != 0 || (m - 2 * ell + 1) % (ell - 1) != 0 ||
      m < ell * ell - ell + 1)
    throw Error(ErrorKind::Infeasible, "no 2-(" + std::to_string(m) + "," + std::to_string(ell) + ",1) design");
  return {m * (m - 1) / (ell * (ell - 1)), ell * (m - ell) / (ell - 1),
          (ell - 1) * (ell - 1) + (m - 2 * ell + 1) / (ell - 1), ell * ell};
}

// --- bounds and predicates -----------------------------------------------

// n*s / (s - k).
inline QuadSurd hoffman_coclique_bound(const SrgParams& p) {
  const Spectrum sp = srg_spectrum(p);
  return (p.n * sp.s) / (sp.s + (-p.k));
}

// floor((k - r + 1) / 2), exact also for irrational r.
inline long long bh_matching_bound(const SrgParams& p) {
  const Spectrum sp = srg_spectrum(p);
  if (sp.r.is_rational()) return ((Rational(p.k + 1) - sp.r.a) / Rational(2)).floor();
  // r = (c + sqrt(D))/2 with sqrt(D) irrational:
  // floor((2(k+1) - c - sqrt(D)) / 4) = floor(floor(2(k+1) - c - sqrt(D)) / 4).
  const long long c = (sp.r.a * Rational(2)).num();
  const long long inner = 2 * (p.k + 1) - c - isqrt(sp.r.d) - 1;
  return Rational(inner, 4).floor();
}

// r <= s(s+1)(mu+1)/2 - 1.
inline bool claw_bound_holds(const SrgParams& p) {
  const Spectrum sp = srg_spectrum(p);
  const QuadSurd rhs = sp.s * (sp.s + 1) * QuadSurd::rational(Rational(p.mu + 1, 2)) + (-1);
  return sp.r <= rhs;
}

// mu <= s^3 (2s + 3).
inline bool mu_bound_holds(const SrgParams& p) {
  const Spectrum sp = srg_spectrum(p);
  const QuadSurd rhs = sp.s * sp.s * sp.s * (2 * sp.s + 3);
  return QuadSurd::rational(p.mu) <= rhs;
}

inline constexpr double kRelativeMargin = 1e-12;

// max(r, -s) < k^0.9, strict with a relative margin: lhs < rhs * (1 - 1e-12).
// Advisory only: the underlying theorem needs an unspecified n0.
inline bool ferber_jain_holds(const SrgParams& p) {
  if (p.n % 2 != 0) throw Error(ErrorKind::NotApplicable, "odd order " + std::to_string(p.n));
  const Spectrum sp = srg_spectrum(p);
  const double lhs = std::max(sp.r.to_double(), -sp.s.to_double());
  return lhs < std::pow(static_cast<double>(p.k), 0.9) * (1.0 - kRelativeMargin);
}

struct HighDegreeVerdict {
  bool csaba = false;
  bool cariolaro_hilton = false;
};

// k >= 2*ceil(n/4) - 1 and k >= 0.823 n, both in exact integer arithmetic.
inline HighDegreeVerdict high_degree_threshold(long long n, long long k) {
  return {k >= 2 * ((n + 3) / 4) - 1, 1000 * k >= 823 * n};
}

inline bool prop32_holds(long long m, long long ell) {
  if (ell < 2) throw Error(ErrorKind::ParameterRange, "block size must be >= 2");
  return 6 * ell * ell <= m;
}

// Stable key:value report of the spectrum and every predicate.
struct BoundReport {
  std::vector<std::pair<std::string, std::string>> entries;

  const std::string* get(std::string_view key) const {
    for (const auto& [k, v] : entries)
      if (k == key) return &v;
    return nullptr;
  }

  std::string str() const {
    std::string out;
    for (const auto& [k, v] : entries) out += k + ": " + v + "\n";
    return out;
  }
};

inline BoundReport bound_report(const SrgParams& p) {
  BoundReport rep;
  auto add = [&rep](std::string key, std::string value) { rep.entries.emplace_back(std::move(key), std::move(value)); };
  auto yes_no = [](bool b) { return std::string(b ? "true" : "false"); };
  add("params", p.str());
  const FeasibilityReport feas = feasibility_check(p);
  for (const auto& c : feas.checks) add("feasible." + c.name, yes_no(c.passed));
  add("complement", complement_params(p).str());

  std::optional<Spectrum> sp;
  try {
    sp = srg_spectrum(p);
  } catch (const Error& e) {
    add("spectrum", std::string("unavailable (") + e.message() + ")");
  }
  if (sp) {
    add("eigenvalue.k", std::to_string(sp->k));
    add("eigenvalue.r", sp->r.str());
    add("eigenvalue.s", sp->s.str());
    add("multiplicity.f", std::to_string(sp->f));
    add("multiplicity.g", std::to_string(sp->g));
    add("conference_type", yes_no(!sp->integral()));
    add("hoffman_coclique_bound", hoffman_coclique_bound(p).str());
    add("bh_disjoint_perfect_matchings", std::to_string(bh_matching_bound(p)));
    add("claw_bound", yes_no(claw_bound_holds(p)));
    add("mu_bound", yes_no(mu_bound_holds(p)));
    const double r = sp->r.to_double(), s = sp->s.to_double(), k = static_cast<double>(p.k);
    add("r_below_k_pow_6_7", yes_no(r < std::pow(k, 6.0 / 7.0) * (1.0 - kRelativeMargin)));
    add("minus_s_below_2k_pow_6_7", yes_no(-s < std::pow(2.0 * k, 6.0 / 7.0) * (1.0 - kRelativeMargin)));
    if (p.n % 2 == 0) add("ferber_jain", yes_no(ferber_jain_holds(p)) + " (advisory)");
    else add("ferber_jain", "not-applicable (odd order)");
  }
  const auto hd = high_degree_threshold(p.n, p.k);
  add("csaba", yes_no(hd.csaba));
  add("cariolaro_hilton", yes_no(hd.cariolaro_hilton));
  return rep;
}

}  // namespace srgec
