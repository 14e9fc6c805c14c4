#pragma once

#include <algorithm>
#include <compare>
#include <cstdlib>
#include <map>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "bhmirror/poly.hpp"

namespace bhmirror {

/** Diagonal symmetry [a_0,...,a_n], entries kept in [0,1). */
class DiagonalSymmetry {
 public:
  DiagonalSymmetry() = default;
  explicit DiagonalSymmetry(std::size_t n) : e_(n, Rational(0)) {}
  explicit DiagonalSymmetry(std::vector<Rational> e) : e_(std::move(e)) {
    for (auto& x : e_) x = frac(x);
  }

  std::size_t size() const { return e_.size(); }
  const Rational& operator[](std::size_t i) const { return e_[i]; }
  const std::vector<Rational>& entries() const { return e_; }

  bool is_identity() const {
    for (const auto& x : e_)
      if (x != 0) return false;
    return true;
  }

  std::vector<std::size_t> fixed_vars() const {
    std::vector<std::size_t> I;
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (e_[i] == 0) I.push_back(i);
    return I;
  }

  std::int64_t order() const {
    std::int64_t o = 1;
    for (const auto& x : e_) o = std::lcm(o, x.denominator());
    return o;
  }

  DiagonalSymmetry& operator+=(const DiagonalSymmetry& o) {
    check(o);
    for (std::size_t i = 0; i < e_.size(); ++i) e_[i] = frac(e_[i] + o.e_[i]);
    return *this;
  }
  friend DiagonalSymmetry operator+(DiagonalSymmetry a, const DiagonalSymmetry& b) { return a += b; }
  friend DiagonalSymmetry operator-(const DiagonalSymmetry& a) {
    DiagonalSymmetry r = a;
    for (auto& x : r.e_) x = frac(-x);
    return r;
  }
  friend DiagonalSymmetry operator-(const DiagonalSymmetry& a, const DiagonalSymmetry& b) { return a + (-b); }
  friend DiagonalSymmetry operator*(std::int64_t c, const DiagonalSymmetry& a) {
    DiagonalSymmetry r = a;
    for (auto& x : r.e_) x = frac(x * c);
    return r;
  }

  friend bool operator==(const DiagonalSymmetry& a, const DiagonalSymmetry& b) { return a.e_ == b.e_; }
  friend bool operator<(const DiagonalSymmetry& a, const DiagonalSymmetry& b) { return a.e_ < b.e_; }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < e_.size(); ++i) {
      if (i) s += ",";
      s += bhmirror::to_string(e_[i]);
    }
    return s + "]";
  }

 private:
  void check(const DiagonalSymmetry& o) const {
    if (o.e_.size() != e_.size()) throw std::invalid_argument("symmetry dimension mismatch");
  }
  std::vector<Rational> e_;
};

struct SymmetryHash {
  std::size_t operator()(const DiagonalSymmetry& g) const noexcept {
    std::size_t h = g.size();
    RationalHash rh;
    for (const auto& x : g.entries()) h = h * 1000003u ^ rh(x);
    return h;
  }
};

inline std::size_t default_group_cap() {
  if (const char* v = std::getenv("BHMIRROR_MAX_GROUP")) {
    char* end = nullptr;
    unsigned long long x = std::strtoull(v, &end, 10);
    if (end != v && *end == '\0' && x > 0) return static_cast<std::size_t>(x);
  }
  return 1000000;
}

/** Finite group of diagonal symmetries as an explicit sorted element list. */
class SymmetryGroup {
 public:
  SymmetryGroup() = default;

  static SymmetryGroup trivial(std::size_t n) {
    SymmetryGroup G;
    G.n_ = n;
    G.elems_ = {DiagonalSymmetry(n)};
    return G;
  }

  /** Breadth-first closure of the generators. */
  static SymmetryGroup span(std::size_t n, std::vector<DiagonalSymmetry> gens, std::size_t cap = default_group_cap()) {
    SymmetryGroup G;
    G.n_ = n;
    std::unordered_set<DiagonalSymmetry, SymmetryHash> seen;
    std::vector<DiagonalSymmetry> frontier{DiagonalSymmetry(n)};
    seen.insert(frontier[0]);
    std::vector<DiagonalSymmetry> useful;
    for (auto& g : gens) {
      if (g.size() != n) throw std::invalid_argument("generator dimension mismatch");
      if (!g.is_identity()) useful.push_back(g);
    }
    while (!frontier.empty()) {
      std::vector<DiagonalSymmetry> next;
      for (const auto& x : frontier)
        for (const auto& g : useful) {
          auto y = x + g;
          if (seen.insert(y).second) {
            if (seen.size() > cap)
              fail(ErrorCode::GroupTooLarge, "group exceeds " + std::to_string(cap) + " elements");
            next.push_back(std::move(y));
          }
        }
      frontier = std::move(next);
    }
    G.elems_.assign(seen.begin(), seen.end());
    std::sort(G.elems_.begin(), G.elems_.end());
    G.gens_ = std::move(useful);
    return G;
  }

  /** Group from a complete element list; a small generating set is chosen greedily. */
  static SymmetryGroup from_elements(std::size_t n, std::vector<DiagonalSymmetry> elems) {
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    SymmetryGroup G;
    G.n_ = n;
    std::unordered_set<DiagonalSymmetry, SymmetryHash> cur{DiagonalSymmetry(n)};
    for (const auto& g : elems) {
      if (cur.count(g)) continue;
      G.gens_.push_back(g);
      std::vector<DiagonalSymmetry> base(cur.begin(), cur.end());
      auto m = g.order();
      for (std::int64_t c = 1; c < m; ++c) {
        auto cg = c * g;
        for (const auto& x : base) cur.insert(x + cg);
      }
    }
    if (cur.size() != elems.size()) throw std::logic_error("element list is not a group");
    G.elems_ = std::move(elems);
    return G;
  }

  std::size_t dim() const { return n_; }
  std::size_t order() const { return elems_.size(); }
  const std::vector<DiagonalSymmetry>& elements() const { return elems_; }
  const std::vector<DiagonalSymmetry>& generators() const { return gens_; }

  bool contains(const DiagonalSymmetry& g) const { return std::binary_search(elems_.begin(), elems_.end(), g); }

  bool is_subgroup_of(const SymmetryGroup& o) const {
    for (const auto& g : elems_)
      if (!o.contains(g)) return false;
    return true;
  }

  friend bool operator==(const SymmetryGroup& a, const SymmetryGroup& b) { return a.elems_ == b.elems_; }

 private:
  std::size_t n_ = 0;
  std::vector<DiagonalSymmetry> gens_;
  std::vector<DiagonalSymmetry> elems_;
};

inline SymmetryGroup enumerate_group(std::size_t n, const std::vector<DiagonalSymmetry>& gens) {
  return SymmetryGroup::span(n, gens);
}

/** True iff g fixes every monomial of P. */
inline bool fixes(const InvertiblePolynomial& P, const DiagonalSymmetry& g) {
  const auto& E = P.exponents();
  for (const auto& row : E) {
    Rational s = 0;
    for (std::size_t j = 0; j < row.size(); ++j) s += g[j] * row[j];
    if (!is_integer(s)) return false;
  }
  return true;
}

/** True iff h fixes every monomial of the transpose of P. */
inline bool fixes_transpose(const InvertiblePolynomial& P, const DiagonalSymmetry& h) {
  const auto& E = P.exponents();
  for (std::size_t j = 0; j < E.size(); ++j) {
    Rational s = 0;
    for (std::size_t i = 0; i < E.size(); ++i) s += h[i] * E[i][j];
    if (!is_integer(s)) return false;
  }
  return true;
}

/** Columns of E^{-1}: the generators rho_j of Aut_P. */
inline std::vector<DiagonalSymmetry> aut_generators(const InvertiblePolynomial& P) {
  const auto& inv = P.inverse();
  std::vector<DiagonalSymmetry> out;
  for (std::size_t j = 0; j < inv.size(); ++j) {
    std::vector<Rational> col;
    for (std::size_t i = 0; i < inv.size(); ++i) col.push_back(inv[i][j]);
    out.emplace_back(std::move(col));
  }
  return out;
}

/** Rows of E^{-1}: the generators of Aut of the transpose. */
inline std::vector<DiagonalSymmetry> dual_aut_generators(const InvertiblePolynomial& P) {
  std::vector<DiagonalSymmetry> out;
  for (const auto& row : P.inverse()) out.emplace_back(row);
  return out;
}

inline SymmetryGroup aut_group(const InvertiblePolynomial& P) {
  return SymmetryGroup::span(P.num_vars(), aut_generators(P));
}

inline SymmetryGroup dual_aut_group(const InvertiblePolynomial& P) {
  return SymmetryGroup::span(P.num_vars(), dual_aut_generators(P));
}

inline Rational age(const DiagonalSymmetry& g) {
  Rational s = 0;
  for (const auto& x : g.entries()) s += x;
  return s;
}

inline bool in_sl(const DiagonalSymmetry& g) { return is_integer(age(g)); }

inline DiagonalSymmetry j_element(const InvertiblePolynomial& P) { return DiagonalSymmetry(P.q()); }

inline DiagonalSymmetry s_element(const InvertiblePolynomial& W) {
  auto split = split_cyclic(W);
  std::vector<Rational> e(W.num_vars(), Rational(0));
  e[0] = Rational(1, split.k);
  return DiagonalSymmetry(std::move(e));
}

/** (E g) . h mod Z, for g in Aut_P and h in Aut of the transpose. */
inline Rational pairing(const InvertiblePolynomial& P, const DiagonalSymmetry& g, const DiagonalSymmetry& h) {
  const auto& E = P.exponents();
  if (g.size() != E.size() || h.size() != E.size()) throw std::invalid_argument("pairing: dimension mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < E.size(); ++i) {
    Rational eg = 0;
    for (std::size_t j = 0; j < E.size(); ++j) eg += g[j] * E[i][j];
    s += eg * h[i];
  }
  return frac(s);
}

inline bool pairs_trivially(const InvertiblePolynomial& P, const SymmetryGroup& H, const DiagonalSymmetry& h) {
  for (const auto& g : H.generators())
    if (pairing(P, g, h) != 0) return false;
  return true;
}

/** H^vee inside Aut of the transpose: elements pairing to zero with all of H. */
inline SymmetryGroup dual_group(const InvertiblePolynomial& P, const SymmetryGroup& H) {
  auto all = dual_aut_group(P);
  std::vector<DiagonalSymmetry> keep;
  for (const auto& h : all.elements())
    if (pairs_trivially(P, H, h)) keep.push_back(h);
  return SymmetryGroup::from_elements(P.num_vars(), std::move(keep));
}

inline SymmetryGroup sl_group(const InvertiblePolynomial& P) {
  auto all = aut_group(P);
  std::vector<DiagonalSymmetry> keep;
  for (const auto& g : all.elements())
    if (in_sl(g)) keep.push_back(g);
  return SymmetryGroup::from_elements(P.num_vars(), std::move(keep));
}

inline DiagonalSymmetry embed_with_leading_zero(const DiagonalSymmetry& g) {
  std::vector<Rational> e{Rational(0)};
  e.insert(e.end(), g.entries().begin(), g.entries().end());
  return DiagonalSymmetry(std::move(e));
}

inline DiagonalSymmetry drop_leading(const DiagonalSymmetry& g) {
  if (g.size() == 0 || g[0] != 0) throw std::invalid_argument("symmetry moves the first variable");
  return DiagonalSymmetry(std::vector<Rational>(g.entries().begin() + 1, g.entries().end()));
}

namespace detail {

inline Rational parse_rational(const std::string& s, std::size_t base) {
  std::size_t i = 0;
  auto num = [&](std::int64_t& out) {
    bool neg = false;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) neg = s[i++] == '-';
    std::size_t st = i;
    out = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      out = out * 10 + (s[i] - '0');
      if (out > 1000000000) throw Error(ErrorCode::SyntaxError, "number too large", base + st);
      ++i;
    }
    if (st == i) throw Error(ErrorCode::SyntaxError, "expected a number in '" + s + "'", base + i);
    if (neg) out = -out;
  };
  std::int64_t p = 0, q = 1;
  num(p);
  if (i < s.size() && s[i] == '/') {
    ++i;
    num(q);
    if (q == 0) throw Error(ErrorCode::SyntaxError, "zero denominator", base + i);
  }
  if (i != s.size()) throw Error(ErrorCode::SyntaxError, "trailing characters in '" + s + "'", base + i);
  return Rational(p, q);
}

inline std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

}  // namespace detail

/** Parse `gen:[a,b,...];gen:[...]` into symmetries of dimension n. */
inline std::vector<DiagonalSymmetry> parse_generators(const std::string& spec, std::size_t n) {
  std::vector<DiagonalSymmetry> out;
  std::size_t pos = 0;
  while (pos <= spec.size()) {
    std::size_t semi = spec.find(';', pos);
    if (semi == std::string::npos) semi = spec.size();
    std::string part = detail::trim(spec.substr(pos, semi - pos));
    if (!part.empty()) {
      if (part.rfind("gen:", 0) != 0) throw Error(ErrorCode::SyntaxError, "expected 'gen:[...]'", pos);
      std::string body = detail::trim(part.substr(4));
      if (body.size() < 2 || body.front() != '[' || body.back() != ']')
        throw Error(ErrorCode::SyntaxError, "expected bracketed entries", pos);
      body = body.substr(1, body.size() - 2);
      std::vector<Rational> e;
      std::size_t b = 0;
      while (b <= body.size()) {
        std::size_t c = body.find(',', b);
        if (c == std::string::npos) c = body.size();
        e.push_back(detail::parse_rational(detail::trim(body.substr(b, c - b)), pos + b));
        b = c + 1;
      }
      if (e.size() != n)
        throw Error(ErrorCode::SyntaxError, "generator has " + std::to_string(e.size()) + " entries, expected " + std::to_string(n), pos);
      out.emplace_back(std::move(e));
    }
    pos = semi + 1;
  }
  return out;
}

/** Group of P from a preset name (J, SL, full, trivial) or explicit generators. */
inline SymmetryGroup parse_group_spec(const InvertiblePolynomial& P, const std::string& spec) {
  std::string s = detail::trim(spec);
  const std::size_t n = P.num_vars();
  if (s == "J") return SymmetryGroup::span(n, {j_element(P)});
  if (s == "SL") return sl_group(P);
  if (s == "full") return aut_group(P);
  if (s == "trivial" || s.empty()) return SymmetryGroup::trivial(n);
  auto gens = parse_generators(s, n);
  for (const auto& g : gens)
    if (!fixes(P, g)) fail(ErrorCode::NotAdmissible, "generator " + g.to_string() + " does not fix " + P.to_string());
  return SymmetryGroup::span(n, gens);
}

/**
 * K for a split W = x_0^k + f, in f-coordinates. Besides the presets of
 * parse_group_spec, "min" names the smallest admissible choice <j_f^k>.
 */
inline SymmetryGroup parse_k_spec(const InvertiblePolynomial& W, const std::string& spec) {
  auto split = split_cyclic(W);
  if (detail::trim(spec) == "min") {
    auto jf = j_element(split.f);
    return SymmetryGroup::span(split.f.num_vars(), {static_cast<std::int64_t>(split.k) * jf});
  }
  return parse_group_spec(split.f, spec);
}

inline SymmetryGroup minimal_k(const InvertiblePolynomial& W) { return parse_k_spec(W, "min"); }

/** Data of an admissible pair (W, K): the groups K <= K[j_W] <= K[j_W, s] and coset labels. */
struct AdmissibleSetup {
  InvertiblePolynomial W;
  InvertiblePolynomial f;
  int k = 0;
  SymmetryGroup K_f;  // in f-coordinates
  SymmetryGroup K;    // embedded in W-coordinates
  SymmetryGroup H;    // K[j_W]
  SymmetryGroup G;    // K[j_W, s]
  DiagonalSymmetry j;
  DiagonalSymmetry s;
  std::unordered_map<DiagonalSymmetry, std::pair<int, int>, SymmetryHash> labels;  // g -> (a, b)

  std::pair<int, int> label(const DiagonalSymmetry& g) const {
    auto it = labels.find(g);
    if (it == labels.end()) throw std::out_of_range("symmetry outside K[j_W,s]: " + g.to_string());
    return it->second;
  }
};

inline AdmissibleSetup admissible_setup(const InvertiblePolynomial& W, const SymmetryGroup& K_f) {
  auto split = split_cyclic(W);
  AdmissibleSetup S{W, split.f, split.k, K_f, {}, {}, {}, j_element(W), s_element(W), {}};
  const std::size_t n = W.num_vars();
  if (K_f.dim() != n - 1) fail(ErrorCode::NotAdmissible, "K must act on the variables of f");
  for (const auto& g : K_f.elements()) {
    if (!fixes(split.f, g)) fail(ErrorCode::NotAdmissible, g.to_string() + " is not a symmetry of f");
    if (!in_sl(g)) fail(ErrorCode::NotAdmissible, g.to_string() + " is not in SL_f");
  }
  auto jfk = static_cast<std::int64_t>(split.k) * j_element(split.f);
  if (!K_f.contains(jfk)) fail(ErrorCode::NotAdmissible, "K does not contain j_f^k = " + jfk.to_string());

  std::vector<DiagonalSymmetry> kgens, kelems;
  for (const auto& g : K_f.generators()) kgens.push_back(embed_with_leading_zero(g));
  for (const auto& g : K_f.elements()) kelems.push_back(embed_with_leading_zero(g));
  S.K = SymmetryGroup::span(n, kgens);

  std::vector<DiagonalSymmetry> gelems;
  for (int a = 0; a < S.k; ++a)
    for (int b = 0; b < S.k; ++b) {
      auto base = static_cast<std::int64_t>(a) * S.j + static_cast<std::int64_t>(b) * S.s;
      for (const auto& x : kelems) {
        auto g = base + x;
        auto [it, fresh] = S.labels.emplace(g, std::make_pair(a, b));
        if (!fresh)
          fail(ErrorCode::GradingCollision, "labels (" + std::to_string(it->second.first) + "," +
                                                std::to_string(it->second.second) + ") and (" + std::to_string(a) +
                                                "," + std::to_string(b) + ") share the coset of " + g.to_string());
        gelems.push_back(g);
      }
    }
  auto hg = kgens;
  hg.push_back(S.j);
  S.H = SymmetryGroup::span(n, hg);
  auto gg = hg;
  gg.push_back(S.s);
  S.G = SymmetryGroup::span(n, gg);
  if (S.G.order() != gelems.size()) throw std::logic_error("coset enumeration disagrees with span");
  return S;
}

}  // namespace bhmirror
