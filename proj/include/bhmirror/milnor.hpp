#pragma once

#include <map>
#include <unordered_map>
#include <vector>

#include "bhmirror/symmetry.hpp"

namespace bhmirror {

/** Truncated series in t with coefficients in the group ring of the dual group. */
struct GroupRingSeries {
  std::map<std::int64_t, std::map<DiagonalSymmetry, std::int64_t>> coefficients;
  std::int64_t truncation_bound = 0;

  std::int64_t total() const {
    std::int64_t s = 0;
    for (const auto& [m, row] : coefficients)
      for (const auto& [k, c] : row) s += c;
    return s;
  }

  std::map<std::int64_t, std::int64_t> hilbert_function() const {
    std::map<std::int64_t, std::int64_t> h;
    for (const auto& [m, row] : coefficients)
      for (const auto& [k, c] : row) h[m] += c;
    return h;
  }
};

namespace detail {

struct DegKey {
  std::int64_t m;
  DiagonalSymmetry key;
  bool operator==(const DegKey& o) const { return m == o.m && key == o.key; }
};
struct DegKeyHash {
  std::size_t operator()(const DegKey& x) const noexcept { return SymmetryHash{}(x.key) * 31u + std::size_t(x.m); }
};
using Terms = std::unordered_map<DegKey, std::int64_t, DegKeyHash>;

}  // namespace detail

/**
 * Equivariant Hilbert series of the forms prod x_j^{b_j-1} dx_j spanning Jac(P_I) dx_I.
 * Variable x_i contributes chi t^w (1 - chi^{-1} t^{d-w}) / (1 - chi t^w) with chi = row i
 * of E^{-1}; the product is truncated at sum (d - w_i).
 */
inline GroupRingSeries equivariant_hilbert(const RestrictedPolynomial& R) {
  const auto& P = R.parent;
  const std::int64_t d = P.degree();
  const auto& w = P.weights();
  auto chi = dual_aut_generators(P);
  GroupRingSeries out;
  for (auto i : R.fixed_vars) out.truncation_bound += d - w[i];
  const std::int64_t B = out.truncation_bound;

  detail::Terms cur;
  cur[{0, DiagonalSymmetry(P.num_vars())}] = 1;
  for (auto i : R.fixed_vars) {
    std::vector<std::pair<detail::DegKey, std::int64_t>> fac;
    DiagonalSymmetry pw(P.num_vars());
    for (std::int64_t r = 0; d + r * w[i] <= B || (r + 1) * w[i] <= B; ++r) {
      // pw = chi^r
      if (d + r * w[i] <= B) fac.push_back({{d + r * w[i], pw}, -1});
      pw += chi[i];
      if ((r + 1) * w[i] <= B) fac.push_back({{(r + 1) * w[i], pw}, 1});
    }
    detail::Terms next;
    next.reserve(cur.size() * 2);
    for (const auto& [a, ca] : cur)
      for (const auto& [b, cb] : fac) {
        if (a.m + b.m > B) continue;
        auto& slot = next[{a.m + b.m, a.key + b.key}];
        slot += ca * cb;
      }
    cur.clear();
    for (auto& [k, c] : next)
      if (c != 0) cur.emplace(k, c);
  }
  for (const auto& [k, c] : cur) {
    if (c < 0) throw std::logic_error("negative coefficient in Jacobi ring series");
    out.coefficients[k.m][k.key] += c;
  }
  return out;
}

struct FermatForm {
  std::vector<int> b;  // exponent vector over the fixed variables, each in [1, k_i - 1]
  DiagonalSymmetry key;
  std::int64_t degree = 0;
};

/** Direct enumeration of the Jacobi ring basis when every fixed variable sits in a Fermat atom. */
inline std::vector<FermatForm> fermat_monomial_basis(const RestrictedPolynomial& R) {
  const auto& P = R.parent;
  std::vector<int> ks;
  for (auto i : R.fixed_vars) {
    if (P.atom_of(i).kind != Atom::Kind::Fermat)
      fail(ErrorCode::NotFermat, "variable " + P.var_names()[i] + " is not in a Fermat atom");
    ks.push_back(P.exponents()[i][i]);
  }
  auto chi = dual_aut_generators(P);
  std::vector<FermatForm> out;
  std::vector<int> b(ks.size(), 1);
  for (;;) {
    FermatForm f{b, DiagonalSymmetry(P.num_vars()), 0};
    for (std::size_t t = 0; t < b.size(); ++t) {
      f.key += static_cast<std::int64_t>(b[t]) * chi[R.fixed_vars[t]];
      f.degree += b[t] * P.weights()[R.fixed_vars[t]];
    }
    out.push_back(std::move(f));
    std::size_t t = 0;
    while (t < b.size() && b[t] == ks[t] - 1) b[t++] = 1;
    if (t == b.size()) break;
    ++b[t];
  }
  return out;
}

/** prod_{i in I} (d - w_i) / w_i. */
inline Rational milnor_number(const InvertiblePolynomial& P, const std::vector<std::size_t>& I) {
  Rational mu = 1;
  for (auto i : I) mu *= Rational(P.degree() - P.weights()[i], P.weights()[i]);
  return mu;
}

struct SectorClass {
  DiagonalSymmetry key;
  std::int64_t degree = 0;  // weighted form degree in units of 1/d
  Rational p, q;
  std::int64_t dim = 0;
};

struct SectorAlgebra {
  DiagonalSymmetry sector;
  std::vector<std::size_t> fixed_vars;
  Rational age;
  std::vector<SectorClass> classes;

  std::int64_t total_dim() const {
    std::int64_t s = 0;
    for (const auto& c : classes) s += c.dim;
    return s;
  }
};

inline SectorAlgebra sector_from_series(const InvertiblePolynomial& P, const DiagonalSymmetry& h,
                                        const GroupRingSeries& series, const SymmetryGroup* K) {
  SectorAlgebra A{h, h.fixed_vars(), age(h), {}};
  const Rational nI(static_cast<std::int64_t>(A.fixed_vars.size()));
  for (const auto& [m, row] : series.coefficients)
    for (const auto& [key, c] : row) {
      if (K && !pairs_trivially(P, *K, key)) continue;
      Rational qm(m, P.degree());
      A.classes.push_back({key, m, A.age + nI - qm, A.age + qm, c});
    }
  return A;
}

/**
 * (Jac P_h)(-age h) with its dual-group grading. When K is given only keys pairing
 * trivially with K survive, which is the K-invariant part.
 */
inline SectorAlgebra sector_algebra(const InvertiblePolynomial& P, const DiagonalSymmetry& h,
                                    const SymmetryGroup* K = nullptr) {
  auto R = restrict_to(P, h.fixed_vars());
  return sector_from_series(P, h, equivariant_hilbert(R), K);
}

inline RestrictedPolynomial restrict(const InvertiblePolynomial& P, const DiagonalSymmetry& h) {
  if (!fixes(P, h)) throw std::invalid_argument("restrict: " + h.to_string() + " is not a symmetry");
  return restrict_to(P, h.fixed_vars());
}

}  // namespace bhmirror
