#include <gtest/gtest.h>

#include "bhmirror/bhmirror.hpp"

using namespace bhmirror;

namespace {

using Cell = std::map<std::pair<int, int>, std::int64_t>;
using Table = std::vector<std::vector<Cell>>;

Cell integral_diamond(const GridCell& c) {
  Cell out;
  for (const auto& [bd, v] : c.diamond) {
    if (!v) continue;
    EXPECT_TRUE(is_integer(bd.first) && is_integer(bd.second));
    out[{static_cast<int>(bd.first.numerator()), static_cast<int>(bd.second.numerator())}] += v;
  }
  return out;
}

void expect_table(const SectorGrid& G, const Table& T, const std::string& what) {
  ASSERT_EQ(G.k, static_cast<int>(T.size()));
  for (int b = 0; b < G.k; ++b)
    for (int a = 0; a < G.k; ++a) EXPECT_EQ(integral_diamond(G.at(b, a)), T[b][a]) << what << " row " << b << " col " << a;
}

SectorGrid quartic_grid(bool mirror) {
  auto W = parse_polynomial("x0^4 + x1^4 + x2^4 + x3^4");
  auto M = build_mirror_pair(W, parse_k_spec(W, "trivial"));
  return mirror ? sector_grid(M.H_target, M.target.W) : sector_grid(M.H_source, M.source.W);
}

}  // namespace

TEST(SectorGrid, EllipticTotals) {
  auto W = parse_polynomial("x0^6 + x1^3 + x2^2");
  auto G = sector_grid(W, parse_k_spec(W, "trivial"));
  std::vector<std::vector<std::int64_t>> want = {{2, 1, 0, 0, 0, 1}, {0, 1, 0, 0, 0, 0}, {0, 1, 0, 0, 1, 1},
                                                 {0, 1, 0, 2, 0, 1}, {0, 1, 1, 0, 0, 1}, {0, 0, 0, 0, 0, 1}};
  EXPECT_EQ(G.totals(), want);
  EXPECT_TRUE(G.calabi_yau);
  // untwisted row: diamond of the elliptic curve
  Cell row0;
  for (int a = 0; a < 6; ++a)
    for (const auto& [pq, v] : integral_diamond(G.at(0, a))) row0[pq] += v;
  EXPECT_EQ(row0, (Cell{{{0, 0}, 1}, {{1, 0}, 1}, {{0, 1}, 1}, {{1, 1}, 1}}));
}

// Bidegrees: (p, q) of the diamond, p increasing to the left of the drawn diamonds.
TEST(SectorGrid, QuarticSource) {
  Table T(4, std::vector<Cell>(4));
  T[0][0] = {{{2, 0}, 1}, {{1, 1}, 19}, {{0, 2}, 1}};
  T[0][1] = {{{0, 0}, 1}};
  T[0][2] = {{{1, 1}, 1}};
  T[0][3] = {{{2, 2}, 1}};
  for (int b = 1; b < 4; ++b) T[b][0] = {{{1, 0}, 3}, {{0, 1}, 3}};
  T[1][1] = {{{0, 0}, 1}};
  T[1][2] = {{{1, 1}, 1}};
  T[2][1] = {{{0, 0}, 1}};
  T[2][3] = {{{1, 1}, 1}};
  // j s^3 is an anti-diagonal sector; the cell is empty and the row totals 8 like the H_s row
  T[3][1] = {};
  T[3][2] = {{{0, 0}, 1}};
  T[3][3] = {{{1, 1}, 1}};
  auto G = quartic_grid(false);
  expect_table(G, T, "source");
  EXPECT_EQ(G.row_total(1), 8);
  EXPECT_EQ(G.row_total(3), 8);
  EXPECT_EQ(G.row_total(0), 24);
  // weight split of the untwisted middle entry
  const auto& c = G.at(0, 0);
  EXPECT_EQ(c.at(1, 1, 1), 6);
  EXPECT_EQ(c.at(2, 1, 1), 7);
  EXPECT_EQ(c.at(3, 1, 1), 6);
  EXPECT_EQ(c.at(1, 2, 0), 1);
  EXPECT_EQ(c.at(3, 0, 2), 1);
}

TEST(SectorGrid, QuarticMirror) {
  Table T(4, std::vector<Cell>(4));
  // weight split 0 + 1 + 0 in the middle: a - 1 = 0 on both outer weights, and the row totals 24
  T[0][0] = {{{2, 0}, 1}, {{1, 1}, 1}, {{0, 2}, 1}};
  T[0][1] = {{{0, 0}, 1}, {{1, 1}, 6}};
  T[0][2] = {{{1, 1}, 7}};
  T[0][3] = {{{2, 2}, 1}, {{1, 1}, 6}};
  for (int b = 1; b < 4; ++b) T[b][0] = {{{0, 0}, 3}, {{1, 1}, 3}};
  T[1][1] = {{{0, 0}, 1}, {{1, 1}, 6}};
  T[1][2] = {{{1, 1}, 7}};
  T[2][1] = {{{0, 0}, 1}, {{1, 1}, 6}};
  T[2][3] = {{{0, 0}, 6}, {{1, 1}, 1}};
  T[3][2] = {{{0, 0}, 7}};
  T[3][3] = {{{0, 0}, 6}, {{1, 1}, 1}};
  auto G = quartic_grid(true);
  expect_table(G, T, "mirror");
  EXPECT_EQ(G.row_total(0), 24);
  EXPECT_EQ(G.at(0, 0).at(1, 1, 1), 0);
  EXPECT_EQ(G.at(0, 0).at(2, 1, 1), 1);
  EXPECT_EQ(G.at(0, 0).at(3, 1, 1), 0);
}

TEST(FixedLocus, QuarticReadOff) {
  // s fixes the plane quartic curve: one curve of genus 3
  auto L = read_fixed_locus(quartic_grid(false), 3);
  EXPECT_EQ(L.N, 1);
  EXPECT_EQ(L.g, 3);
  EXPECT_EQ(L.f, 0);
  // mirror: four rational curves and 12 points
  auto Lv = read_fixed_locus(quartic_grid(true), 3);
  EXPECT_EQ(Lv.N, 4);
  EXPECT_EQ(Lv.g, 0);
  EXPECT_EQ(Lv.f, 12);
}

TEST(K3Pattern, QuarticParameters) {
  auto P = fit_k3_pattern(quartic_grid(false));
  EXPECT_EQ(P, (K3Params{4, 7, 7, 0, 3, 1, 1, 0, 0}));
  auto Pv = fit_k3_pattern(quartic_grid(true));
  EXPECT_EQ(Pv, P.swapped());
  EXPECT_EQ(2 * P.a + P.b + 2 * P.a_v + P.b_v, 24);
  auto I = k3_invariants(P);
  EXPECT_EQ(I.N1, 1);
  EXPECT_EQ(I.g1, 3);
  EXPECT_EQ(I.f1, 0);
  auto Iv = k3_invariants(Pv);
  EXPECT_EQ(I.N1, Iv.g1 + 1);
  EXPECT_EQ(Iv.N1, 4);
  EXPECT_EQ(Iv.f1, 12);
  // s^2 invariants on both sides
  EXPECT_EQ(*I.N2 - *I.g2 + I.f1, 20 - *Iv.N2 + *Iv.g2 - Iv.f1);
}

TEST(K3Pattern, GenericTables) {
  // order 4: untwisted middle 2(a-1)+b, (2,0) and (0,2) both 1
  K3Params P{4, 3, 2, 1, 2, 5, 4, 1, 0};
  auto T = k3_pattern(P);
  EXPECT_EQ(T[0][0].at({1, 1}), 2 * 2 + 2);
  // the anti-diagonal cell of row 2 carries c on the diagonal and c' off it
  EXPECT_EQ(T[2][2], (detail::Diamond{{{0, 0}, 1}, {{1, 1}, 1}, {{1, 0}, 1}, {{0, 1}, 1}}));
  EXPECT_EQ(T[3][2], (detail::Diamond{{{0, 0}, 4}}));
  EXPECT_TRUE(T[1][3].empty());
  // prime 5: columns 2..3 carry a', the last column is the shifted copy below the anti-diagonal
  K3Params Q{5, 4, 0, 0, 1, 2, 0, 0, 3};
  auto U = k3_pattern(Q);
  EXPECT_EQ(U[0][0].at({1, 1}), 4 * 4 - 2);
  EXPECT_EQ(U[0][2].at({1, 1}), 2);
  EXPECT_EQ(U[0][3].at({1, 1}), 2);
  EXPECT_EQ(U[0][4], (detail::Diamond{{{2, 2}, 1}, {{1, 1}, 1}}));
  EXPECT_EQ(U[2][4], (detail::Diamond{{{1, 1}, 1}, {{0, 0}, 1}}));
  EXPECT_EQ(U[1][0], (detail::Diamond{{{0, 0}, 3}, {{1, 1}, 3}, {{1, 0}, 1}, {{0, 1}, 1}}));
  EXPECT_TRUE(U[2][3].empty());
}

TEST(K3Pattern, Rejections) {
  auto W = parse_polynomial("x0^6 + x1^3 + x2^2");
  try {
    fit_k3_pattern(sector_grid(W, parse_k_spec(W, "trivial")));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::PatternMismatch);
  }
  auto V = parse_polynomial("x0^4 + x1^4 + x2^4 + x3^2");
  try {
    fit_k3_pattern(sector_grid(V, parse_k_spec(V, "min")));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::PatternMismatch);
  }
}

TEST(Lattice, Arithmetic) {
  // one genus-4 curve (the triple cover of P^1 branched at six points)
  EXPECT_EQ(lattice_invariants(3, 4, 1), (LatticeInvariants{2, 2}));
  EXPECT_EQ(lattice_invariants(3, 0, 5), (LatticeInvariants{18, 2}));
  EXPECT_EQ(lattice_invariants(13, 0, 1), (LatticeInvariants{10, 1}));
  EXPECT_EQ(lattice_invariants(5, 0, 1), (LatticeInvariants{10, 3}));
  EXPECT_EQ(lattice_invariants(7, 0, 1), (LatticeInvariants{10, 2}));
  auto code = [](int p, int g, int N) {
    try {
      lattice_invariants(p, g, N);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::NonSquare;
  };
  EXPECT_EQ(code(11, 0, 1), ErrorCode::NonIntegralLattice);
  EXPECT_EQ(code(4, 0, 1), ErrorCode::NonIntegralLattice);
  EXPECT_EQ(code(3, 6, 1), ErrorCode::NonIntegralLattice);
}

TEST(Lattice, PrimeDivisibility) {
  EXPECT_TRUE(check_prime_divisibility(3));
  EXPECT_TRUE(check_prime_divisibility(5));
  EXPECT_TRUE(check_prime_divisibility(7));
  EXPECT_FALSE(check_prime_divisibility(11));
  EXPECT_TRUE(check_prime_divisibility(13));
  EXPECT_FALSE(check_prime_divisibility(17));
}

TEST(K3Report, P3Fermat) {
  auto W = parse_polynomial("x0^3 + x1^3 + x2^6 + x3^6");
  auto R = k3_report(W, parse_k_spec(W, "min"));
  EXPECT_TRUE(R.checks.ok());
  EXPECT_EQ(R.locus.N, 1);
  EXPECT_EQ(R.locus.g, 4);
  ASSERT_TRUE(R.lattice && R.mirror_lattice);
  EXPECT_EQ(*R.lattice, (LatticeInvariants{2, 2}));
  EXPECT_EQ(*R.mirror_lattice, (LatticeInvariants{18, 2}));
  EXPECT_EQ(R.inv.f1 + R.mirror_inv.f1 + 4, 24 * (3 - 2) / (3 - 1));
}

TEST(K3Report, Catalog) {
  std::set<int> orders;
  for (const auto& c : cyclic_catalog()) {
    if (!c.k3) continue;
    auto W = parse_polynomial(c.poly);
    auto R = k3_report(W, parse_k_spec(W, c.K));
    orders.insert(R.k);
    std::string bad;
    for (const auto& row : R.checks.rows)
      if (!row.pass) bad += row.statement + " " + row.cell + "; ";
    EXPECT_TRUE(R.checks.ok()) << c.name << " " << bad;
    EXPECT_EQ(R.inv.N1, R.mirror_inv.g1 + 1) << c.name;
    if (R.k == 4) {
      const auto& P = R.params;
      EXPECT_EQ(2 * P.a + P.b + 2 * P.a_v + P.b_v, 24) << c.name;
    } else {
      EXPECT_EQ((R.k - 1) * (R.inv.f1 + R.mirror_inv.f1 + 4), 24 * (R.k - 2)) << c.name;
      EXPECT_EQ(R.mirror_lattice->r, 20 - R.lattice->r) << c.name;
      EXPECT_EQ(R.mirror_lattice->a, R.lattice->a) << c.name;
    }
  }
  EXPECT_EQ(orders, (std::set<int>{3, 4, 5, 7, 13}));
}

TEST(CalabiYauSide, UntwistedAndDoubleCover) {
  for (const auto& c : cyclic_catalog()) {
    auto W = parse_polynomial(c.poly);
    if (!is_calabi_yau(W)) continue;
    auto M = build_mirror_pair(W, parse_k_spec(W, c.K));
    EXPECT_TRUE(verify_ms_cy(M).ok()) << c.name;
    if (M.source.k == 2) EXPECT_TRUE(verify_k2_corollary(M).ok()) << c.name;
  }
  // j_W has age 2 here: in SL without the Calabi-Yau condition
  auto W = parse_polynomial("x0^2 + x1^2 + x2^2 + x3^2");
  auto M = build_mirror_pair(W, parse_k_spec(W, "min"));
  EXPECT_TRUE(verify_ms_lg(M).ok());
  try {
    verify_ms_cy(M);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotCalabiYau);
  }
}

TEST(CalabiYauSide, DoubleQuarticExchange) {
  // x0^2 + x1^4 + x2^4: the untwisted +/- parts trade places under the mirror
  auto W = parse_polynomial("x0^2 + x1^4 + x2^4");
  auto M = build_mirror_pair(W, parse_k_spec(W, "min"));
  auto r = verify_k2_corollary(M);
  EXPECT_TRUE(r.ok());
  EXPECT_GT(r.checked, 0u);
}

TEST(MirrorPairDomain, RequiresJInSL) {
  auto W = parse_polynomial("x0^5 + x1^5");
  auto S = admissible_setup(W, parse_k_spec(W, "min"));
  EXPECT_FALSE(in_sl(S.j));
  try {
    build_mirror_pair(W, parse_k_spec(W, "min"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotAdmissible);
  }
}
