#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cctype>
#include <functional>
#include <cstdint>
#include <limits>
#include <map>
#include <memory>
#include <numeric>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "bhmirror/errors.hpp"
#include "bhmirror/rational.hpp"

namespace bhmirror {

using IntMatrix = std::vector<std::vector<int>>;
using RatMatrix = std::vector<std::vector<Rational>>;

inline constexpr std::size_t kMaxVariables = 12;

struct Atom {
  enum class Kind { Fermat, Chain, Loop };
  Kind kind;
  std::vector<std::size_t> vars;  // chain: head to tail; loop: cyclic, starting at the lowest index
  std::vector<int> exponents;     // exponent of the leading variable of each monomial

  bool operator==(const Atom&) const = default;
};

inline const char* atom_kind_name(Atom::Kind k) {
  switch (k) {
    case Atom::Kind::Fermat: return "Fermat";
    case Atom::Kind::Chain: return "Chain";
    case Atom::Kind::Loop: return "Loop";
  }
  return "?";
}

struct AtomPartition {
  std::vector<Atom> atoms;
  std::vector<std::size_t> lead;  // lead[row] = variable matched to monomial `row`
};

struct WeightSolution {
  std::vector<std::int64_t> weights;
  std::int64_t degree = 0;
};

namespace detail {

struct Inverse {
  RatMatrix inv;
  std::int64_t det = 0;
};

inline std::int64_t to_i64(const boost::multiprecision::cpp_int& v) {
  if (v > std::numeric_limits<std::int64_t>::max() / 4 || v < std::numeric_limits<std::int64_t>::min() / 4)
    throw std::overflow_error("exponent matrix entries too large for 64-bit arithmetic");
  return v.convert_to<std::int64_t>();
}

// Exact Gauss-Jordan inversion; entries are converted back to 64-bit rationals.
inline Inverse invert(const IntMatrix& E) {
  using boost::multiprecision::cpp_rational;
  const std::size_t n = E.size();
  std::vector<std::vector<cpp_rational>> a(n, std::vector<cpp_rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = E[i][j];
    a[i][n + i] = 1;
  }
  cpp_rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) fail(ErrorCode::SingularExponentMatrix, "exponent matrix is singular");
    if (piv != c) {
      std::swap(a[piv], a[c]);
      det = -det;
    }
    cpp_rational p = a[c][c];
    det *= p;
    for (auto& x : a[c]) x /= p;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      cpp_rational f = a[r][c];
      for (std::size_t j = 0; j < 2 * n; ++j) a[r][j] -= f * a[c][j];
    }
  }
  Inverse out;
  out.inv.assign(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto& x = a[i][n + j];
      out.inv[i][j] = Rational(to_i64(boost::multiprecision::numerator(x)),
                               to_i64(boost::multiprecision::denominator(x)));
    }
  out.det = to_i64(boost::multiprecision::numerator(det));
  return out;
}

inline WeightSolution weights_from_inverse(const RatMatrix& inv) {
  const std::size_t n = inv.size();
  std::vector<Rational> q(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) q[i] += inv[i][j];
  std::int64_t d = 1;
  for (const auto& x : q) {
    if (x <= 0) fail(ErrorCode::NonPositiveWeight, "weight of variable " + std::to_string(&x - q.data()) + " is " + to_string(x));
    d = std::lcm(d, x.denominator());
  }
  WeightSolution s;
  s.degree = d;
  for (const auto& x : q) s.weights.push_back((x * d).numerator());
  return s;
}

}  // namespace detail

/** Weights and degree of the quasi-homogeneous polynomial with exponent matrix E. */
inline WeightSolution solve_weights(const IntMatrix& E) {
  for (const auto& row : E)
    if (row.size() != E.size()) fail(ErrorCode::NonSquare, "exponent matrix is not square");
  return detail::weights_from_inverse(detail::invert(E).inv);
}

/**
 * Match monomials to variables so that E splits into Fermat, chain and loop blocks.
 * Each monomial is x_v^a (a >= 2) or x_v^a x_u with the second exponent exactly 1;
 * no variable may be pointed at twice. The first valid matching in lexicographic
 * order of leading variables wins.
 */
inline AtomPartition classify_atoms(const IntMatrix& E) {
  const std::size_t n = E.size();
  if (n == 0) return {};
  if (n > kMaxVariables) fail(ErrorCode::DegenerateShape, "more than 12 variables");
  for (const auto& row : E)
    if (row.size() != n) fail(ErrorCode::NonSquare, "exponent matrix is not square");
  std::vector<std::vector<std::size_t>> support(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t j = 0; j < n; ++j)
      if (E[r][j] > 0) support[r].push_back(j);
    if (support[r].empty() || support[r].size() > 2)
      fail(ErrorCode::DegenerateShape, "monomial " + std::to_string(r) + " is not of atomic shape");
  }
  for (std::size_t j = 0; j < n; ++j) {
    bool seen = false;
    for (std::size_t r = 0; r < n; ++r) seen = seen || E[r][j] > 0;
    if (!seen) fail(ErrorCode::DegenerateShape, "variable " + std::to_string(j) + " appears in no monomial");
  }

  std::vector<std::size_t> lead(n);
  std::unordered_set<std::uint64_t> dead;
  auto key = [](std::size_t r, std::uint32_t used, std::uint32_t pointed) {
    return (std::uint64_t(r) << 32) | (std::uint64_t(used) << 16) | pointed;
  };
  std::function<bool(std::size_t, std::uint32_t, std::uint32_t)> go =
      [&](std::size_t r, std::uint32_t used, std::uint32_t pointed) -> bool {
    if (r == n) return true;
    if (dead.count(key(r, used, pointed))) return false;
    for (std::size_t v : support[r]) {
      if (used & (1u << v)) continue;
      std::uint32_t np = pointed;
      if (support[r].size() == 1) {
        if (E[r][v] < 2) continue;
      } else {
        std::size_t o = support[r][0] == v ? support[r][1] : support[r][0];
        if (E[r][o] != 1 || (pointed & (1u << o))) continue;
        np |= 1u << o;
      }
      lead[r] = v;
      if (go(r + 1, used | (1u << v), np)) return true;
    }
    dead.insert(key(r, used, pointed));
    return false;
  };
  if (!go(0, 0, 0)) fail(ErrorCode::DegenerateShape, "no Fermat/chain/loop decomposition exists");

  std::vector<long> ptr(n, -1);
  std::vector<int> expo(n, 0), indeg(n, 0);
  for (std::size_t r = 0; r < n; ++r) {
    std::size_t v = lead[r];
    expo[v] = E[r][v];
    for (std::size_t o : support[r])
      if (o != v) {
        ptr[v] = static_cast<long>(o);
        ++indeg[o];
      }
  }
  AtomPartition out;
  out.lead = lead;
  std::vector<bool> seen(n, false);
  for (std::size_t v = 0; v < n; ++v) {
    if (indeg[v] != 0 || seen[v]) continue;
    Atom a;
    for (long u = static_cast<long>(v); u >= 0; u = ptr[u]) {
      seen[u] = true;
      a.vars.push_back(static_cast<std::size_t>(u));
      a.exponents.push_back(expo[u]);
    }
    a.kind = a.vars.size() == 1 ? Atom::Kind::Fermat : Atom::Kind::Chain;
    out.atoms.push_back(std::move(a));
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (seen[v]) continue;
    Atom a;
    a.kind = Atom::Kind::Loop;
    for (std::size_t u = v; !seen[u]; u = static_cast<std::size_t>(ptr[u])) {
      seen[u] = true;
      a.vars.push_back(u);
      a.exponents.push_back(expo[u]);
    }
    out.atoms.push_back(std::move(a));
  }
  std::sort(out.atoms.begin(), out.atoms.end(), [](const Atom& x, const Atom& y) {
    return *std::min_element(x.vars.begin(), x.vars.end()) < *std::min_element(y.vars.begin(), y.vars.end());
  });
  return out;
}

/**
 * Invertible quasi-homogeneous polynomial. Monomials are stored so that monomial i
 * is the one led by variable i; this makes the transpose keep the variable order.
 */
class InvertiblePolynomial {
 public:
  static InvertiblePolynomial from_matrix(IntMatrix E, std::vector<std::string> names = {}) {
    const std::size_t n = E.size();
    if (n == 0) fail(ErrorCode::NonSquare, "empty polynomial");
    for (const auto& row : E) {
      if (row.size() != n) fail(ErrorCode::NonSquare, "exponent matrix is not square");
      for (int x : row)
        if (x < 0) fail(ErrorCode::DegenerateShape, "negative exponent");
    }
    for (std::size_t j = 0; j < n; ++j) {
      bool seen = false;
      for (std::size_t r = 0; r < n; ++r) seen = seen || E[r][j] > 0;
      if (!seen) fail(ErrorCode::DegenerateShape, "variable " + std::to_string(j) + " appears in no monomial");
    }
    if (n > kMaxVariables) fail(ErrorCode::DegenerateShape, "more than 12 variables");
    if (names.empty())
      for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
    if (names.size() != n) throw std::invalid_argument("variable name count mismatch");

    auto data = std::make_shared<Data>();
    auto inv = detail::invert(E);
    auto ws = detail::weights_from_inverse(inv.inv);
    auto part = classify_atoms(E);

    IntMatrix sorted(n);
    for (std::size_t r = 0; r < n; ++r) sorted[part.lead[r]] = E[r];
    data->E = std::move(sorted);
    data->names = std::move(names);
    auto inv2 = detail::invert(data->E);
    data->inv = std::move(inv2.inv);
    data->det = inv2.det;
    data->weights = ws.weights;
    data->degree = ws.degree;
    data->atoms = std::move(part.atoms);
    for (std::size_t i = 0; i < n; ++i) data->q.push_back(Rational(ws.weights[i], ws.degree));
    InvertiblePolynomial P;
    P.d_ = std::move(data);
    return P;
  }

  std::size_t num_vars() const { return d_->E.size(); }
  const IntMatrix& exponents() const { return d_->E; }
  const std::vector<std::int64_t>& weights() const { return d_->weights; }
  std::int64_t degree() const { return d_->degree; }
  const std::vector<Rational>& q() const { return d_->q; }
  const std::vector<Atom>& atoms() const { return d_->atoms; }
  const std::vector<std::string>& var_names() const { return d_->names; }
  const RatMatrix& inverse() const { return d_->inv; }
  std::int64_t det() const { return d_->det; }
  std::int64_t abs_det() const { return d_->det < 0 ? -d_->det : d_->det; }

  /** Atom containing variable v. */
  const Atom& atom_of(std::size_t v) const {
    for (const auto& a : d_->atoms)
      if (std::find(a.vars.begin(), a.vars.end(), v) != a.vars.end()) return a;
    throw std::out_of_range("variable index");
  }

  bool is_fermat_diagonal() const {
    for (const auto& a : d_->atoms)
      if (a.kind != Atom::Kind::Fermat) return false;
    return true;
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t r = 0; r < num_vars(); ++r) {
      if (r) s += " + ";
      bool first = true;
      for (std::size_t j = 0; j < num_vars(); ++j) {
        int e = d_->E[r][j];
        if (e == 0) continue;
        if (!first) s += "*";
        first = false;
        s += d_->names[j];
        if (e != 1) s += "^" + std::to_string(e);
      }
    }
    return s;
  }

  bool operator==(const InvertiblePolynomial& o) const { return d_->E == o.d_->E && d_->names == o.d_->names; }

 private:
  struct Data {
    IntMatrix E;
    std::vector<std::string> names;
    RatMatrix inv;
    std::int64_t det = 0;
    std::vector<std::int64_t> weights;
    std::int64_t degree = 0;
    std::vector<Rational> q;
    std::vector<Atom> atoms;
  };
  std::shared_ptr<const Data> d_;
};

namespace detail {

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  InvertiblePolynomial run() {
    std::vector<std::map<std::size_t, int>> monos;
    skip();
    if (i_ >= s_.size()) err("empty input");
    monos.push_back(mono());
    skip();
    while (i_ < s_.size()) {
      if (s_[i_] != '+') err(std::string("unexpected character '") + s_[i_] + "'");
      ++i_;
      monos.push_back(mono());
      skip();
    }
    const std::size_t n = names_.size();
    if (monos.size() != n)
      fail(ErrorCode::NonSquare, std::to_string(monos.size()) + " monomials in " + std::to_string(n) + " variables");
    IntMatrix E(n, std::vector<int>(n, 0));
    for (std::size_t r = 0; r < n; ++r)
      for (auto [v, e] : monos[r]) E[r][v] = e;
    return InvertiblePolynomial::from_matrix(std::move(E), names_);
  }

 private:
  [[noreturn]] void err(const std::string& m) { throw Error(ErrorCode::SyntaxError, m + " at position " + std::to_string(i_), i_); }

  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }

  long number() {
    std::size_t start = i_;
    long v = 0;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
      v = v * 10 + (s_[i_] - '0');
      if (v > 1000000) {
        i_ = start;
        err("number too large");
      }
      ++i_;
    }
    if (start == i_) err("expected a number");
    return v;
  }

  std::map<std::size_t, int> mono() {
    std::map<std::size_t, int> m;
    bool any_var = false;
    for (;;) {
      skip();
      if (i_ >= s_.size()) err("expected a factor");
      char c = s_[i_];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        std::size_t at = i_;
        long v = number();
        if (v != 1) {
          i_ = at;
          err("coefficient other than 1");
        }
      } else if (std::isalpha(static_cast<unsigned char>(c))) {
        std::size_t start = i_;
        while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
        std::string name = s_.substr(start, i_ - start);
        skip();
        long e = 1;
        if (i_ < s_.size() && s_[i_] == '^') {
          ++i_;
          skip();
          std::size_t at = i_;
          e = number();
          if (e == 0) {
            i_ = at;
            err("exponent must be positive");
          }
        }
        auto it = std::find(names_.begin(), names_.end(), name);
        std::size_t idx = static_cast<std::size_t>(it - names_.begin());
        if (it == names_.end()) names_.push_back(name);
        m[idx] += static_cast<int>(e);
        any_var = true;
      } else {
        err(std::string("unexpected character '") + c + "'");
      }
      skip();
      if (i_ < s_.size() && s_[i_] == '*') {
        ++i_;
        continue;
      }
      break;
    }
    if (!any_var) err("constant monomial");
    return m;
  }

  const std::string& s_;
  std::size_t i_ = 0;
  std::vector<std::string> names_;
};

}  // namespace detail

inline InvertiblePolynomial parse_polynomial(const std::string& text) { return detail::Parser(text).run(); }

inline InvertiblePolynomial transpose(const InvertiblePolynomial& P) {
  const auto& E = P.exponents();
  IntMatrix T(E.size(), std::vector<int>(E.size()));
  for (std::size_t i = 0; i < E.size(); ++i)
    for (std::size_t j = 0; j < E.size(); ++j) T[i][j] = E[j][i];
  return InvertiblePolynomial::from_matrix(std::move(T), P.var_names());
}

inline bool is_calabi_yau(const InvertiblePolynomial& P) {
  std::int64_t s = 0;
  for (auto w : P.weights()) s += w;
  return s == P.degree();
}

struct CyclicSplit {
  int k = 0;
  InvertiblePolynomial f;
};

/** W = x_0^k + f(x_1..x_n), where x_0 is the first variable. */
inline CyclicSplit split_cyclic(const InvertiblePolynomial& W) {
  const auto& E = W.exponents();
  const std::size_t n = E.size();
  if (n < 2) fail(ErrorCode::NotCyclicSplit, "need at least two variables");
  for (std::size_t r = 0; r < n; ++r) {
    bool has0 = E[r][0] > 0;
    bool other = false;
    for (std::size_t j = 1; j < n; ++j) other = other || E[r][j] > 0;
    if (r == 0 && (!has0 || other)) fail(ErrorCode::NotCyclicSplit, "first variable is not a pure power");
    if (r != 0 && has0) fail(ErrorCode::NotCyclicSplit, "first variable occurs in another monomial");
  }
  IntMatrix F(n - 1, std::vector<int>(n - 1));
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 1; j < n; ++j) F[i - 1][j - 1] = E[i][j];
  std::vector<std::string> names(W.var_names().begin() + 1, W.var_names().end());
  return CyclicSplit{E[0][0], InvertiblePolynomial::from_matrix(std::move(F), std::move(names))};
}

/** Restriction of a polynomial to a subset of its variables. */
struct RestrictedPolynomial {
  InvertiblePolynomial parent;
  std::vector<std::size_t> fixed_vars;
  std::vector<std::size_t> rows;     // rows of E supported on fixed_vars
  IntMatrix sub_exponents;           // rows x fixed_vars
  std::vector<Atom> atoms;           // atoms of the sub-matrix, indices local to fixed_vars

  std::size_t size() const { return fixed_vars.size(); }
};

inline RestrictedPolynomial restrict_to(const InvertiblePolynomial& P, std::vector<std::size_t> I) {
  std::sort(I.begin(), I.end());
  RestrictedPolynomial R{P, I, {}, {}, {}};
  const auto& E = P.exponents();
  std::vector<bool> in(P.num_vars(), false);
  for (auto i : I) in[i] = true;
  for (std::size_t r = 0; r < E.size(); ++r) {
    bool ok = true;
    for (std::size_t j = 0; j < E.size(); ++j) ok = ok && (in[j] || E[r][j] == 0);
    if (!ok) continue;
    R.rows.push_back(r);
    std::vector<int> row;
    for (auto i : I) row.push_back(E[r][i]);
    R.sub_exponents.push_back(std::move(row));
  }
  if (R.rows.size() != I.size())
    fail(ErrorCode::DegenerateRestriction, std::to_string(R.rows.size()) + " monomials supported on " +
                                               std::to_string(I.size()) + " fixed variables");
  try {
    R.atoms = classify_atoms(R.sub_exponents).atoms;
  } catch (const Error& e) {
    fail(ErrorCode::DegenerateRestriction, e.detail());
  }
  return R;
}

}  // namespace bhmirror
