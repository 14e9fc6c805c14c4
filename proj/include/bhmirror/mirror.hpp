#pragma once

#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "bhmirror/statespace.hpp"

namespace bhmirror {

struct CheckRow {
  std::string statement;
  std::string cell;
  std::int64_t lhs = 0, rhs = 0;
  bool pass = true;
};

/** Outcome of a verifier. Only failing rows are kept unless keep_all is set. */
struct Report {
  std::string name;
  std::vector<CheckRow> rows;
  std::size_t checked = 0, failed = 0;
  bool keep_all = false;

  bool ok() const { return failed == 0; }

  void add(std::string statement, std::string cell, std::int64_t lhs, std::int64_t rhs) {
    ++checked;
    bool pass = lhs == rhs;
    if (!pass) ++failed;
    if (!pass || keep_all) rows.push_back({std::move(statement), std::move(cell), lhs, rhs, pass});
  }

  void merge(const Report& o) {
    checked += o.checked;
    failed += o.failed;
    rows.insert(rows.end(), o.rows.begin(), o.rows.end());
  }
};

inline std::string bidegree_string(const Bidegree& b) {
  return "(" + to_string(b.first) + "," + to_string(b.second) + ")";
}

// Compares two bigraded tables on the union of their supports.
inline void compare_bigraded(Report& r, const std::string& statement, const std::string& prefix, const BigradedDims& lhs,
                             const BigradedDims& rhs) {
  std::set<Bidegree> keys;
  for (const auto& [b, _] : lhs) keys.insert(b);
  for (const auto& [b, _] : rhs) keys.insert(b);
  for (const auto& b : keys) {
    auto l = lhs.count(b) ? lhs.at(b) : 0;
    auto rr = rhs.count(b) ? rhs.at(b) : 0;
    if (l == 0 && rr == 0) continue;
    r.add(statement, prefix + bidegree_string(b), l, rr);
  }
}

// ---------------------------------------------------------------- mirror pair

struct MirrorPair {
  AdmissibleSetup source;
  AdmissibleSetup target;
  StateTable H_source;
  StateTable H_target;
  SymmetryGroup K_dual_f;  // (K[j_W,s])^vee restricted to f^vee
};

inline MirrorPair build_mirror_pair(const InvertiblePolynomial& W, const SymmetryGroup& K_f) {
  auto S = admissible_setup(W, K_f);
  // K[j_W] and its dual must both sit in SL
  if (!in_sl(S.j)) fail(ErrorCode::NotAdmissible, "j_W = " + S.j.to_string() + " is not in SL_W");
  auto Wv = transpose(W);
  const std::size_t n = W.num_vars();

  auto Gd = dual_group(W, S.G);
  std::vector<DiagonalSymmetry> kd;
  for (const auto& g : Gd.elements()) {
    if (g[0] != 0) fail(ErrorCode::DualityViolation, "dual of K[j,s] moves x0: " + g.to_string());
    kd.push_back(drop_leading(g));
  }
  auto Kd = SymmetryGroup::from_elements(n - 1, kd);

  AdmissibleSetup T;
  try {
    T = admissible_setup(Wv, Kd);
  } catch (const Error& e) {
    fail(ErrorCode::DualityViolation, std::string("dual group is not admissible: ") + e.what());
  }
  if (T.k != S.k) fail(ErrorCode::DualityViolation, "cyclic exponent changed under transpose");
  if (!(dual_group(W, S.K) == T.G)) fail(ErrorCode::DualityViolation, "K^vee differs from K'[j,s] on the mirror");
  if (!(dual_group(W, S.H) == T.H)) fail(ErrorCode::DualityViolation, "H^vee differs from K'[j] on the mirror");
  if (!(dual_group(Wv, T.G) == S.K)) fail(ErrorCode::DualityViolation, "double dual does not return K");

  MirrorPair M{S, T, build_H(S), build_H(T), Kd};
  return M;
}

// ---------------------------------------------------------------- Krawitz

inline Report verify_krawitz(const InvertiblePolynomial& P) {
  using Key = std::tuple<DiagonalSymmetry, DiagonalSymmetry, Rational, Rational>;
  const Rational N(static_cast<std::int64_t>(P.num_vars()));
  auto collect = [](const StateTable& t, bool swap, Rational flip) {
    std::map<Key, std::int64_t> m;
    for (const auto& e : t.entries) {
      if (swap)
        m[{e.key, e.h, flip - e.p, e.q}] += e.dim;
      else
        m[{e.h, e.key, e.p, e.q}] += e.dim;
    }
    return m;
  };
  auto lhs = collect(unprojected_state_space(P), false, 0);
  auto rhs = collect(unprojected_state_space(transpose(P)), true, N);

  Report r{"krawitz " + P.to_string()};
  std::set<Key> keys;
  for (const auto& [k, _] : lhs) keys.insert(k);
  for (const auto& [k, _] : rhs) keys.insert(k);
  for (const auto& k : keys) {
    auto l = lhs.count(k) ? lhs.at(k) : 0;
    auto rr = rhs.count(k) ? rhs.at(k) : 0;
    r.add("krawitz",
          "h=" + std::get<0>(k).to_string() + " key=" + std::get<1>(k).to_string() + " " +
              bidegree_string({std::get<2>(k), std::get<3>(k)}),
          l, rr);
  }
  return r;
}

// ---------------------------------------------------------------- Fermat map

/** Basis element of a Fermat-diagonal state space: sector h = a/k, form prod x_i^{b_i - 1} dx_i. */
struct FermatState {
  std::vector<int> a;
  std::vector<int> b;

  auto operator<=>(const FermatState&) const = default;
};

namespace detail {

inline std::vector<int> fermat_exponents(const InvertiblePolynomial& P) {
  if (!P.is_fermat_diagonal()) fail(ErrorCode::NotFermat, P.to_string() + " is not Fermat-diagonal");
  std::vector<int> ks;
  for (std::size_t i = 0; i < P.num_vars(); ++i) ks.push_back(static_cast<int>(P.exponents()[i][i]));
  return ks;
}

inline void check_ab(const FermatState& s) {
  for (std::size_t i = 0; i < s.a.size(); ++i)
    if ((s.a[i] == 0) == (s.b[i] == 0)) throw std::logic_error("a_i = 0 must hold exactly when b_i != 0");
}

}  // namespace detail

inline std::vector<FermatState> fermat_states(const InvertiblePolynomial& P) {
  auto ks = detail::fermat_exponents(P);
  std::vector<FermatState> out;
  const auto Aut = aut_group(P);
  for (const auto& h : Aut.elements()) {
    auto R = restrict_to(P, h.fixed_vars());
    for (const auto& f : fermat_monomial_basis(R)) {
      FermatState s{std::vector<int>(ks.size()), std::vector<int>(ks.size(), 0)};
      for (std::size_t i = 0; i < ks.size(); ++i) s.a[i] = static_cast<int>((h[i] * ks[i]).numerator());
      for (std::size_t t = 0; t < R.fixed_vars.size(); ++t) s.b[R.fixed_vars[t]] = f.b[t];
      detail::check_ab(s);
      out.push_back(std::move(s));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/** The entry (h, key, p, q) a Fermat basis element stands for. */
inline StateEntry fermat_entry(const InvertiblePolynomial& P, const FermatState& s) {
  auto ks = detail::fermat_exponents(P);
  detail::check_ab(s);
  std::vector<Rational> h, key;
  std::int64_t deg = 0;
  std::size_t nfix = 0;
  for (std::size_t i = 0; i < ks.size(); ++i) {
    h.emplace_back(s.a[i], ks[i]);
    key.emplace_back(s.b[i], ks[i]);
    if (s.b[i]) {
      deg += s.b[i] * P.weights()[i];
      ++nfix;
    }
  }
  StateEntry e;
  e.h = DiagonalSymmetry(h);
  e.key = DiagonalSymmetry(key);
  e.degree = deg;
  Rational ag = age(e.h), qm(deg, P.degree());
  e.p = ag + static_cast<std::int64_t>(nfix) - qm;
  e.q = ag + qm;
  e.dim = 1;
  e.fixed_count = nfix;
  return e;
}

inline FermatState fermat_mirror_map(const InvertiblePolynomial& P, const FermatState& s) {
  detail::fermat_exponents(P);
  detail::check_ab(s);
  return {s.b, s.a};
}

/** Fermat map is a bijection of basis elements onto U(P^vee) flipping p to N - p. */
inline Report verify_fermat_map(const InvertiblePolynomial& P) {
  Report r{"fermat map " + P.to_string()};
  auto states = fermat_states(P);
  std::set<FermatState> all(states.begin(), states.end());
  const std::int64_t N = static_cast<std::int64_t>(P.num_vars());
  for (const auto& s : states) {
    auto m = fermat_mirror_map(P, s);
    auto e = fermat_entry(P, s), f = fermat_entry(P, m);
    std::string cell = "h=" + e.h.to_string() + " key=" + e.key.to_string();
    r.add("image is a state", cell, 1, all.count(m));
    r.add("involution", cell, 1, fermat_mirror_map(P, m) == s ? 1 : 0);
    r.add("bidegree flip", cell, 1, (f.p == N - e.p && f.q == e.q && f.h == e.key && f.key == e.h) ? 1 : 0);
  }
  return r;
}

// ---------------------------------------------------------------- LG mirror theorem

namespace detail {

inline BigradedDims slice_dims(const StateTable& H, int b, const std::function<bool(int)>& weight_ok, Rational shift,
                               bool flip, Rational flip_n) {
  BigradedDims m;
  for (const auto& e : H.entries) {
    if (e.Q_j != 0 || e.b != b || !weight_ok(e.weight)) continue;
    Rational p = e.p - shift, q = e.q - shift;
    if (flip) p = flip_n - p;
    m[{p, q}] += e.dim;
  }
  return m;
}

// The s^i side of the twisted statement: s-invariant part of the s^i slice shifted by (i/k, i/k), plus
// untwisted weight-j pieces shifted by (1,0) for 0 < j < k - i and by (0,1) for k - i < j < k.
inline BigradedDims twisted_side(const StateTable& H, int i) {
  const int k = H.k;
  BigradedDims m = slice_dims(H, i, [](int w) { return w == 0; }, Rational(i, k), false, 0);
  for (const auto& e : H.entries) {
    if (e.Q_j != 0 || e.b != 0 || e.weight == 0) continue;
    int j = e.weight;
    if (j < k - i)
      m[{e.p - 1, e.q}] += e.dim;
    else if (j > k - i)
      m[{e.p, e.q - 1}] += e.dim;
  }
  return m;
}

inline BigradedDims flip_p(const BigradedDims& in, Rational n) {
  BigradedDims out;
  for (const auto& [b, d] : in) out[{n - b.first, b.second}] += d;
  return out;
}

}  // namespace detail

/** Parts 1, 2 and 3 of the LG mirror theorem as bigraded dimension identities. */
inline Report verify_ms_lg(const MirrorPair& M) {
  const auto& H = M.H_source;
  const auto& Hv = M.H_target;
  const int k = H.k;
  const Rational N(static_cast<std::int64_t>(M.source.W.num_vars()));
  const Rational n = N - 1;
  Report r{"ms_lg " + M.source.W.to_string()};

  auto w0 = [](int w) { return w == 0; };
  auto wnz = [](int w) { return w != 0; };
  compare_bigraded(r, "1", "", detail::slice_dims(H, 0, w0, 0, false, 0),
                           detail::slice_dims(Hv, 0, wnz, 0, true, N));

  for (int i = 1; i < k; ++i)
    compare_bigraded(r, "2", "i=" + std::to_string(i) + " ", detail::twisted_side(H, i),
                             detail::flip_p(detail::twisted_side(Hv, i), n));

  for (int b = 1; b < k; ++b)
    for (int t = 1; t < k; ++t) {
      int bv = k - t, tv = k - b;
      auto lhs = detail::slice_dims(H, b, [t](int w) { return w == t; }, Rational(b, k), false, 0);
      auto rhs = detail::slice_dims(Hv, bv, [tv](int w) { return w == tv; }, Rational(bv, k), true, n);
      std::string cell = "b=" + std::to_string(b) + " t=" + std::to_string(t) + " ";
      compare_bigraded(r, "3", cell, lhs, rhs);
      if ((b * t) % k != 0) {
        std::int64_t sl = 0, sr = 0;
        for (const auto& [_, d] : lhs) sl += d;
        for (const auto& [_, d] : rhs) sr += d;
        r.add("3-vanishing", cell + "source", sl, 0);
        r.add("3-vanishing", cell + "mirror", sr, 0);
      }
    }
  return r;
}

/** Moving classes of the s^b slice with weight t vanish unless k | bt. */
inline Report verify_vanishing(const StateTable& H) {
  Report r{"vanishing"};
  const int k = H.k;
  for (int b = 1; b < k; ++b)
    for (int t = 1; t < k; ++t) {
      if ((b * t) % k == 0) continue;
      std::int64_t s = 0;
      for (const auto& e : H.entries)
        if (e.Q_j == 0 && e.b == b && e.weight == t) s += e.dim;
      r.add("vanishing", "b=" + std::to_string(b) + " t=" + std::to_string(t), s, 0);
    }
  return r;
}

inline StateTable lg_to_cy_reindex(const StateTable& t, const InvertiblePolynomial& W) {
  if (!is_calabi_yau(W)) fail(ErrorCode::NotCalabiYau, W.to_string() + " is not Calabi-Yau");
  StateTable out = t;
  for (auto& e : out.entries) {
    e.p -= 1;
    e.q -= 1;
  }
  return out;
}

}  // namespace bhmirror
