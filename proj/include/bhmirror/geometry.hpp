#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bhmirror/mirror.hpp"

namespace bhmirror {

struct GridCell {
  std::int64_t total = 0;
  BigradedDims diamond;
  std::map<int, BigradedDims> by_weight;

  std::int64_t at(int p, int q) const {
    auto it = diamond.find({Rational(p), Rational(q)});
    return it == diamond.end() ? 0 : it->second;
  }
  std::int64_t at(int weight, int p, int q) const {
    auto w = by_weight.find(weight);
    if (w == by_weight.end()) return 0;
    auto it = w->second.find({Rational(p), Rational(q)});
    return it == w->second.end() ? 0 : it->second;
  }
};

/**
 * Row b, column a holds the j-invariant classes of sectors in j^a s^b K. Bidegrees are those of
 * H_{s^b}(b/k), moved down by (1,1) when W is Calabi-Yau.
 */
struct SectorGrid {
  int k = 0;
  bool calabi_yau = false;
  std::vector<std::vector<GridCell>> cells;  // [b][a]

  const GridCell& at(int b, int a) const { return cells.at(b).at(a); }

  std::int64_t row_total(int b) const {
    std::int64_t s = 0;
    for (const auto& c : cells.at(b)) s += c.total;
    return s;
  }

  std::vector<std::vector<std::int64_t>> totals() const {
    std::vector<std::vector<std::int64_t>> t(k, std::vector<std::int64_t>(k));
    for (int b = 0; b < k; ++b)
      for (int a = 0; a < k; ++a) t[b][a] = cells[b][a].total;
    return t;
  }

  // Sum over a row of the diamond entry at (p, q).
  std::int64_t row_sum(int b, int p, int q) const {
    std::int64_t s = 0;
    for (const auto& c : cells.at(b)) s += c.at(p, q);
    return s;
  }
};

inline SectorGrid sector_grid(const StateTable& H, const InvertiblePolynomial& W) {
  if (!H.labeled) throw std::invalid_argument("sector_grid needs a labeled table");
  SectorGrid g;
  g.k = H.k;
  g.calabi_yau = is_calabi_yau(W);
  g.cells.assign(g.k, std::vector<GridCell>(g.k));
  const Rational cy = g.calabi_yau ? 1 : 0;
  for (const auto& e : H.entries) {
    if (e.Q_j != 0) continue;
    Rational sh = cy + Rational(e.b, g.k);
    Bidegree bd{e.p - sh, e.q - sh};
    auto& c = g.cells[e.b][e.a];
    c.total += e.dim;
    c.diamond[bd] += e.dim;
    c.by_weight[e.weight][bd] += e.dim;
  }
  return g;
}

inline SectorGrid sector_grid(const AdmissibleSetup& S) { return sector_grid(build_H(S), S.W); }

inline SectorGrid sector_grid(const InvertiblePolynomial& W, const SymmetryGroup& K_f) {
  return sector_grid(admissible_setup(W, K_f));
}

// ---------------------------------------------------------------- K3 tables

inline bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

inline bool check_prime_divisibility(int k) { return k > 1 && 24 % (k - 1) == 0; }

struct K3Params {
  int k = 0;
  std::int64_t a = 0, b = 0, c = 0, g = 0;
  std::int64_t a_v = 0, b_v = 0, c_v = 0, g_v = 0;

  bool order4() const { return k == 4; }

  K3Params swapped() const { return {k, a_v, b_v, c_v, g_v, a, b, c, g}; }

  bool operator==(const K3Params&) const = default;
};

struct PatternCell {
  int b, a, p, q;
  std::int64_t dim;
};

namespace detail {

using Diamond = std::map<std::pair<int, int>, std::int64_t>;

inline Diamond shifted(const Diamond& d) {
  Diamond out;
  for (const auto& [pq, v] : d) out[{pq.first - 1, pq.second - 1}] += v;
  return out;
}

}  // namespace detail

/** The generic table, cell by cell, for the given parameters. */
inline std::vector<std::vector<detail::Diamond>> k3_pattern(const K3Params& P) {
  const int k = P.k;
  using D = detail::Diamond;
  std::vector<std::vector<D>> t(k, std::vector<D>(k));
  if (P.order4()) {
    t[0][0] = {{{2, 0}, 1}, {{0, 2}, 1}, {{1, 1}, 2 * (P.a - 1) + P.b}};
    t[0][1] = {{{0, 0}, 1}, {{1, 1}, P.a_v - 1}};
    t[0][2] = {{{1, 1}, P.b_v}};
    t[0][3] = {{{2, 2}, 1}, {{1, 1}, P.a_v - 1}};
  } else {
    t[0][0] = {{{2, 0}, 1}, {{0, 2}, 1}, {{1, 1}, (k - 1) * P.a - 2}};
    t[0][1] = {{{0, 0}, 1}, {{1, 1}, P.a_v - 1}};
    for (int a = 2; a <= k - 2; ++a) t[0][a] = {{{1, 1}, P.a_v}};
    t[0][k - 1] = {{{2, 2}, 1}, {{1, 1}, P.a_v - 1}};
  }
  for (int b = 1; b < k; ++b) {
    t[b][0] = {{{0, 0}, P.g_v}, {{1, 1}, P.g_v}, {{1, 0}, P.g}, {{0, 1}, P.g}};
    for (int a = 1; a < k; ++a) {
      if (a + b < k)
        t[b][a] = t[0][a];
      else if (a + b > k)
        t[b][a] = detail::shifted(t[0][a]);
      else if (P.order4() && b == 2)
        t[b][a] = {{{0, 0}, P.c}, {{1, 1}, P.c}, {{1, 0}, P.c_v}, {{0, 1}, P.c_v}};
    }
  }
  for (auto& row : t)
    for (auto& d : row) std::erase_if(d, [](const auto& kv) { return kv.second == 0; });
  return t;
}

namespace detail {

inline void require_k3_grid(const SectorGrid& G) {
  if (!G.calabi_yau) fail(ErrorCode::PatternMismatch, "grid is not Calabi-Yau");
  if (G.k != 4 && !is_prime(G.k)) fail(ErrorCode::PatternMismatch, "order " + std::to_string(G.k) + " has no table");
  if (G.k == 2) fail(ErrorCode::PatternMismatch, "order 2 has no table");
  if (is_prime(G.k) && !check_prime_divisibility(G.k))
    fail(ErrorCode::PatternMismatch, "p - 1 does not divide 24 for p = " + std::to_string(G.k));
}

inline std::string cell_name(int b, int a, int p, int q) {
  return "row " + std::to_string(b) + " col " + std::to_string(a) + " (" + std::to_string(p) + "," +
         std::to_string(q) + ")";
}

}  // namespace detail

/** Reads the parameters off designated cells, then checks every cell against the generic table. */
inline K3Params fit_k3_pattern(const SectorGrid& G) {
  detail::require_k3_grid(G);
  const int k = G.k;
  K3Params P;
  P.k = k;
  P.a_v = G.at(0, 1).at(1, 1) + 1;
  P.g = G.at(1, 0).at(1, 0);
  P.g_v = G.at(1, 0).at(0, 0);
  if (P.order4()) {
    P.a = G.at(0, 0).at(1, 1, 1) + 1;
    P.b = G.at(0, 0).at(2, 1, 1);
    P.b_v = G.at(0, 2).at(1, 1);
    P.c = G.at(2, 2).at(0, 0);
    P.c_v = G.at(2, 2).at(1, 0);
  } else {
    auto mid = G.at(0, 0).at(1, 1) + 2;
    if (mid % (k - 1) != 0) fail(ErrorCode::PatternMismatch, "untwisted middle entry is not (p-1)a - 2");
    P.a = mid / (k - 1);
  }
  for (auto v : {P.a, P.b, P.c, P.g, P.a_v, P.b_v, P.c_v, P.g_v})
    if (v < 0) fail(ErrorCode::PatternMismatch, "negative table parameter");

  auto T = k3_pattern(P);
  for (int b = 0; b < k; ++b)
    for (int a = 0; a < k; ++a) {
      const auto& cell = G.at(b, a);
      std::set<std::pair<int, int>> keys;
      for (const auto& [pq, v] : T[b][a]) keys.insert(pq);
      for (const auto& [bd, v] : cell.diamond) {
        if (!is_integer(bd.first) || !is_integer(bd.second)) {
          if (v) fail(ErrorCode::PatternMismatch, "fractional bidegree in row " + std::to_string(b));
          continue;
        }
        keys.insert({static_cast<int>(bd.first.numerator()), static_cast<int>(bd.second.numerator())});
      }
      for (const auto& [p, q] : keys) {
        auto want = T[b][a].count({p, q}) ? T[b][a].at({p, q}) : 0;
        if (cell.at(p, q) != want)
          fail(ErrorCode::PatternMismatch, detail::cell_name(b, a, p, q) + ": expected " + std::to_string(want) +
                                               ", found " + std::to_string(cell.at(p, q)));
      }
    }
  if (P.order4()) {
    const auto& c = G.at(0, 0);
    std::int64_t want[4][3] = {{0, 0, 0}, {1, P.a - 1, 0}, {0, P.b, 0}, {0, P.a - 1, 1}};
    for (int w = 1; w < 4; ++w)
      if (c.at(w, 2, 0) != want[w][0] || c.at(w, 1, 1) != want[w][1] || c.at(w, 0, 2) != want[w][2])
        fail(ErrorCode::PatternMismatch, "untwisted weight " + std::to_string(w) + " split");
    if (2 * P.a + P.b + 2 * P.a_v + P.b_v != 24) fail(ErrorCode::PatternMismatch, "2a+b+2a'+b' != 24");
  } else if ((k - 1) * (P.a + P.a_v) != 24) {
    fail(ErrorCode::PatternMismatch, "(p-1)(a+a') != 24");
  }
  return P;
}

/** Fixed-locus invariants of s (and of s^2 when k = 4). */
struct K3Invariants {
  std::int64_t N1 = 0, g1 = 0, f1 = 0;
  std::optional<std::int64_t> N2, g2;
};

inline K3Invariants k3_invariants(const K3Params& P) {
  K3Invariants I;
  I.N1 = P.g_v + 1;
  I.g1 = P.g;
  if (P.order4()) {
    I.f1 = P.a_v + P.b_v - 2;
    I.N2 = P.g_v + P.c + P.a_v;
    I.g2 = P.g + P.c_v;
  } else {
    I.f1 = (P.k - 2) * P.a_v - 2;
  }
  return I;
}

/** N, f, g read directly off row k-1, where the age is constant. */
struct FixedLocus {
  std::int64_t N = 0, f = 0, g = 0;
};

inline FixedLocus read_fixed_locus(const SectorGrid& G, int row) {
  FixedLocus L;
  L.N = G.row_sum(row, 1, 1);
  L.f = G.row_sum(row, 0, 0) - L.N;
  L.g = G.row_sum(row, 1, 0);
  return L;
}

struct LatticeInvariants {
  std::int64_t r = 0, a = 0;
  bool operator==(const LatticeInvariants&) const = default;
};

/** r = (N - g)(p - 1) + 11 - p and a = m - 2g with m = (22 - r)/(p - 1). */
inline LatticeInvariants lattice_invariants(int p, std::int64_t g, std::int64_t N) {
  if (p < 3 || !is_prime(p)) fail(ErrorCode::NonIntegralLattice, "p = " + std::to_string(p) + " is not an odd prime");
  LatticeInvariants L;
  L.r = (N - g) * (p - 1) + (11 - p);
  if ((22 - L.r) % (p - 1) != 0)
    fail(ErrorCode::NonIntegralLattice, "m = (22 - " + std::to_string(L.r) + ")/" + std::to_string(p - 1));
  std::int64_t m = (22 - L.r) / (p - 1);
  L.a = m - 2 * g;
  if (L.a < 0 || L.r < 0 || L.r > 20)
    fail(ErrorCode::NonIntegralLattice, "(r, a) = (" + std::to_string(L.r) + ", " + std::to_string(L.a) + ")");
  return L;
}

struct K3Report {
  int k = 0;
  K3Params params, mirror_params;
  K3Invariants inv, mirror_inv;
  FixedLocus locus, mirror_locus;
  std::optional<LatticeInvariants> lattice, mirror_lattice;
  Report checks{"k3"};
};

inline K3Report k3_report(const MirrorPair& M) {
  K3Report R;
  auto G = sector_grid(M.H_source, M.source.W);
  auto Gv = sector_grid(M.H_target, M.target.W);
  R.k = G.k;
  R.params = fit_k3_pattern(G);
  R.mirror_params = fit_k3_pattern(Gv);
  R.inv = k3_invariants(R.params);
  R.mirror_inv = k3_invariants(R.mirror_params);
  R.locus = read_fixed_locus(G, G.k - 1);
  R.mirror_locus = read_fixed_locus(Gv, Gv.k - 1);
  auto& c = R.checks;
  c.keep_all = true;

  const auto& P = R.params;
  const auto& Q = R.mirror_params;
  auto sw = P.swapped();
  c.add("mirror table", "a", Q.a, sw.a);
  c.add("mirror table", "a'", Q.a_v, sw.a_v);
  c.add("mirror table", "g", Q.g, sw.g);
  c.add("mirror table", "g'", Q.g_v, sw.g_v);
  if (P.order4()) {
    c.add("mirror table", "b", Q.b, sw.b);
    c.add("mirror table", "b'", Q.b_v, sw.b_v);
    c.add("mirror table", "c", Q.c, sw.c);
    c.add("mirror table", "c'", Q.c_v, sw.c_v);
  }
  c.add("read-off", "N1", R.locus.N, R.inv.N1);
  c.add("read-off", "f1", R.locus.f, R.inv.f1);
  c.add("read-off", "g1", R.locus.g, R.inv.g1);
  c.add("read-off", "N1'", R.mirror_locus.N, R.mirror_inv.N1);
  c.add("read-off", "f1'", R.mirror_locus.f, R.mirror_inv.f1);
  c.add("read-off", "g1'", R.mirror_locus.g, R.mirror_inv.g1);
  c.add("N1 = g1' + 1", "", R.inv.N1, R.mirror_inv.g1 + 1);
  c.add("N1' = g1 + 1", "", R.mirror_inv.N1, R.inv.g1 + 1);
  if (P.order4()) {
    c.add("2a+b+2a'+b' = 24", "", 2 * P.a + P.b + 2 * P.a_v + P.b_v, 24);
    auto N2 = G.row_sum(2, 1, 1), g2 = G.row_sum(2, 1, 0);
    c.add("read-off", "N2", N2, *R.inv.N2);
    c.add("read-off", "g2", g2, *R.inv.g2);
    c.add("N2 - g2 + f1 = 20 - N2' + g2' - f1'", "", *R.inv.N2 - *R.inv.g2 + R.inv.f1,
          20 - *R.mirror_inv.N2 + *R.mirror_inv.g2 - R.mirror_inv.f1);
  } else {
    const int p = P.k;
    c.add("(p-1)(a+a') = 24", "", (p - 1) * (P.a + P.a_v), 24);
    c.add("f1 + f1' + 4 = 24(p-2)/(p-1)", "", (p - 1) * (R.inv.f1 + R.mirror_inv.f1 + 4), 24 * (p - 2));
    R.lattice = lattice_invariants(p, R.inv.g1, R.inv.N1);
    R.mirror_lattice = lattice_invariants(p, R.mirror_inv.g1, R.mirror_inv.N1);
    c.add("r' = 20 - r", "", R.mirror_lattice->r, 20 - R.lattice->r);
    c.add("a' = a", "", R.mirror_lattice->a, R.lattice->a);
  }
  return R;
}

inline K3Report k3_report(const InvertiblePolynomial& W, const SymmetryGroup& K_f) {
  return k3_report(build_mirror_pair(W, K_f));
}

// ---------------------------------------------------------------- Calabi-Yau side statements

namespace detail {

inline BigradedDims cy_slice(const StateTable& H, int b, const std::function<bool(int)>& weight_ok, bool flip,
                             Rational flip_n) {
  BigradedDims m;
  const Rational sh = Rational(1) + Rational(b, H.k);
  for (const auto& e : H.entries) {
    if (e.Q_j != 0 || e.b != b || !weight_ok(e.weight)) continue;
    Rational p = e.p - sh, q = e.q - sh;
    if (flip) p = flip_n - p;
    m[{p, q}] += e.dim;
  }
  return m;
}

inline void require_cy(const MirrorPair& M) {
  if (!is_calabi_yau(M.source.W)) fail(ErrorCode::NotCalabiYau, M.source.W.to_string() + " is not Calabi-Yau");
}

}  // namespace detail

/** Untwisted statement on the Calabi-Yau side: weight 0 against the nonzero weights of the mirror. */
inline Report verify_ms_cy(const MirrorPair& M) {
  detail::require_cy(M);
  const Rational n(static_cast<std::int64_t>(M.source.W.num_vars()) - 1);
  Report r{"ms_cy " + M.source.W.to_string()};
  compare_bigraded(r, "untwisted", "",
                           detail::cy_slice(M.H_source, 0, [](int w) { return w == 0; }, false, 0),
                           detail::cy_slice(M.H_target, 0, [](int w) { return w != 0; }, true, n - 1));
  return r;
}

/** For k = 2: the +/- exchange on the untwisted part and the self-mirror statement for H_s. */
inline Report verify_k2_corollary(const MirrorPair& M) {
  detail::require_cy(M);
  if (M.source.k != 2) throw std::invalid_argument("k = 2 statement needs W = x0^2 + f");
  const Rational n(static_cast<std::int64_t>(M.source.W.num_vars()) - 1);
  Report r{"k2 " + M.source.W.to_string()};
  for (int w = 0; w < 2; ++w)
    compare_bigraded(r, w == 0 ? "+/-" : "-/+", "",
                             detail::cy_slice(M.H_source, 0, [w](int x) { return x == w; }, false, 0),
                             detail::cy_slice(M.H_target, 0, [w](int x) { return x == 1 - w; }, true, n - 1));
  auto all = [](int) { return true; };
  compare_bigraded(r, "H_s", "", detail::cy_slice(M.H_source, 1, all, false, 0),
                           detail::cy_slice(M.H_target, 1, all, true, n - 2));
  return r;
}

}  // namespace bhmirror
