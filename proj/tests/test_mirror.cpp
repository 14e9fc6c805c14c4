#include <gtest/gtest.h>

#include "bhmirror/bhmirror.hpp"
#include "oracles.hpp"

using namespace bhmirror;

namespace {

using OQ = oracle::Q;
using OKey = std::tuple<oracle::Vec, oracle::Vec, OQ, OQ>;

// (sector, key, p, q) -> dim, built entirely from the oracle group and Jacobi ring.
std::map<OKey, std::int64_t> oracle_table(const oracle::Mat& E, bool swap) {
  const OQ N(static_cast<std::int64_t>(E.size()));
  auto [w, d] = oracle::weights(E);
  std::map<OKey, std::int64_t> out;
  for (const auto& h : oracle::brute_aut(E)) {
    std::vector<std::size_t> I;
    OQ age(0);
    for (std::size_t i = 0; i < h.size(); ++i) {
      age += h[i];
      if (h[i] == 0) I.push_back(i);
    }
    for (const auto& [cls, dim] : oracle::jacobi_ring(E, I)) {
      OQ qm(cls.degree, d);
      OQ p = age + OQ(static_cast<std::int64_t>(I.size())) - qm, q = age + qm;
      if (swap)
        out[{cls.key, h, N - p, q}] += dim;
      else
        out[{h, cls.key, p, q}] += dim;
    }
  }
  return out;
}

oracle::Mat transposed(const oracle::Mat& E) {
  oracle::Mat T(E.size(), std::vector<int>(E.size()));
  for (std::size_t i = 0; i < E.size(); ++i)
    for (std::size_t j = 0; j < E.size(); ++j) T[j][i] = E[i][j];
  return T;
}

std::int64_t cell_total(const StateTable& H, int a, int b) {
  std::int64_t s = 0;
  for (const auto& e : H.entries)
    if (e.a == a && e.b == b && e.Q_j == 0) s += e.dim;
  return s;
}

}  // namespace

TEST(Krawitz, OracleDuality) {
  int n = 0;
  for (const auto& c : polynomial_catalog()) {
    auto P = parse_polynomial(c.poly);
    if (P.num_vars() > 3 || P.abs_det() > 60) continue;
    ++n;
    const auto& E = P.exponents();
    EXPECT_EQ(oracle_table(E, false), oracle_table(transposed(E), true)) << c.name;
  }
  EXPECT_GE(n, 10);
}

TEST(Krawitz, WholeCatalog) {
  EXPECT_GE(polynomial_catalog().size(), 30u);
  for (const auto& c : polynomial_catalog()) {
    auto r = verify_krawitz(parse_polynomial(c.poly));
    EXPECT_TRUE(r.ok()) << c.name << " " << (r.rows.empty() ? "" : r.rows[0].cell);
    EXPECT_GT(r.checked, 0u);
  }
}

TEST(Krawitz, XToTheK) {
  for (int k = 2; k <= 13; ++k) {
    auto P = parse_polynomial("x^" + std::to_string(k));
    EXPECT_EQ(transpose(P), P);
    auto U = unprojected_state_space(P);
    // the untwisted class x^{i-1}dx at (1 - i/k, i/k) pairs with the narrow sector xi^i at (i/k, i/k)
    for (const auto& e : U.entries) {
      if (!e.h.is_identity()) continue;
      bool found = false;
      for (const auto& f : U.entries)
        found = found || (f.h == e.key && f.key == e.h && f.p == 1 - e.p && f.q == e.q);
      EXPECT_TRUE(found) << k;
    }
    EXPECT_TRUE(verify_krawitz(P).ok());
  }
}

TEST(FermatMap, Involution) {
  for (const auto& c : polynomial_catalog()) {
    auto P = parse_polynomial(c.poly);
    if (!P.is_fermat_diagonal()) continue;
    EXPECT_TRUE(verify_fermat_map(P).ok()) << c.name;
    auto states = fermat_states(P);
    EXPECT_EQ(static_cast<std::int64_t>(states.size()), unprojected_state_space(P).total()) << c.name;
  }
  auto P = parse_polynomial("x^3 + y^4");
  FermatState s{{0, 1}, {2, 0}};
  EXPECT_EQ(fermat_mirror_map(P, s), (FermatState{{2, 0}, {0, 1}}));
  auto e = fermat_entry(P, s);
  EXPECT_EQ(e.h.to_string(), "[0,1/4]");
  EXPECT_EQ(e.key.to_string(), "[2/3,0]");
  EXPECT_THROW(fermat_mirror_map(P, FermatState{{1, 1}, {1, 0}}), std::logic_error);
  try {
    fermat_states(parse_polynomial("x^2*y + y^3"));
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::NotFermat);
  }
}

TEST(MirrorPair, EllipticIsSelfMirror) {
  auto W = parse_polynomial("x0^6 + x1^3 + x2^2");
  auto M = build_mirror_pair(W, parse_k_spec(W, "trivial"));
  EXPECT_EQ(M.target.W, W);
  // K[j,s] is all of Aut, so the mirror group K' is trivial
  EXPECT_EQ(M.source.G.order(), 36u);
  EXPECT_EQ(M.K_dual_f.order(), 1u);
  EXPECT_EQ(M.target.K.order(), 1u);
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) EXPECT_EQ(cell_total(M.H_source, a, b), cell_total(M.H_target, a, b)) << a << b;
}

TEST(MirrorPair, QuarticGroups) {
  auto W = parse_polynomial("x0^4 + x1^4 + x2^4 + x3^4");
  auto M = build_mirror_pair(W, parse_k_spec(W, "trivial"));
  EXPECT_EQ(M.source.H.order(), 4u);
  EXPECT_EQ(M.target.H.order(), 64u);
  EXPECT_EQ(M.target.H, sl_group(W));
  EXPECT_EQ(M.target.G.order(), 256u);
  EXPECT_EQ(M.K_dual_f.order(), 16u);
}

TEST(MirrorPair, LoopTransposeFlipsOrientation) {
  auto W = parse_polynomial("x0^4 + x1^3*x2 + x2^3*x3 + x3^3*x1");
  auto M = build_mirror_pair(W, parse_k_spec(W, "min"));
  EXPECT_EQ(M.target.W.to_string(), "x0^4 + x1^3*x3 + x1*x2^3 + x2*x3^3");
  // K' on the mirror is the annihilator of K[j,s]
  EXPECT_EQ(M.source.G.order() * M.target.K.order(), static_cast<std::size_t>(W.abs_det()));
}

TEST(MSLG, EllipticStatements) {
  auto W = parse_polynomial("x0^6 + x1^3 + x2^2");
  auto M = build_mirror_pair(W, parse_k_spec(W, "trivial"));
  auto r = verify_ms_lg(M);
  EXPECT_TRUE(r.ok());
  // anti-diagonal cell 3/6 matches the two cells 2/6, 4/6
  EXPECT_EQ(cell_total(M.H_source, 3, 3), 2);
  EXPECT_EQ(cell_total(M.H_target, 2, 4) + cell_total(M.H_target, 4, 2), 2);
  // fixed classes of the 0th row sit at d_j = 1/6, 5/6; the moving ones at d_j = 0 have weights 1 and 5
  std::map<int, std::int64_t> fixed_by_a, moving_by_weight;
  for (const auto& e : M.H_source.entries) {
    if (e.b != 0 || e.Q_j != 0) continue;
    if (e.weight == 0)
      fixed_by_a[e.a] += e.dim;
    else if (e.a == 0)
      moving_by_weight[e.weight] += e.dim;
  }
  EXPECT_EQ(fixed_by_a, (std::map<int, std::int64_t>{{1, 1}, {5, 1}}));
  EXPECT_EQ(moving_by_weight, (std::map<int, std::int64_t>{{1, 1}, {5, 1}}));
}

TEST(MSLG, CyclicCatalog) {
  for (const auto& c : cyclic_catalog()) {
    auto W = parse_polynomial(c.poly);
    auto M = build_mirror_pair(W, parse_k_spec(W, c.K));
    auto r = verify_ms_lg(M);
    EXPECT_TRUE(r.ok()) << c.name << " " << (r.rows.empty() ? "" : r.rows[0].statement + " " + r.rows[0].cell);
    EXPECT_GT(r.checked, 0u);
    EXPECT_TRUE(verify_vanishing(M.H_source).ok()) << c.name;
    EXPECT_TRUE(verify_vanishing(M.H_target).ok()) << c.name;
  }
}

TEST(MSLG, ReportKeepsFailures) {
  Report r{"x"};
  r.add("1", "a", 1, 1);
  r.add("1", "b", 1, 2);
  EXPECT_EQ(r.checked, 2u);
  EXPECT_EQ(r.failed, 1u);
  ASSERT_EQ(r.rows.size(), 1u);
  EXPECT_EQ(r.rows[0].cell, "b");
  EXPECT_FALSE(r.ok());
}

TEST(Reindex, EllipticDiamond) {
  auto W = parse_polynomial("x0^6 + x1^3 + x2^2");
  auto H = build_H(W, parse_k_spec(W, "trivial"));
  auto t = lg_to_cy_reindex(fjrw_state_space(H, 0), W);
  BigradedDims got = t.bigraded(), want{{{Rational(1), Rational(0)}, 1},
                                        {{Rational(0), Rational(1)}, 1},
                                        {{Rational(0), Rational(0)}, 1},
                                        {{Rational(1), Rational(1)}, 1}};
  std::erase_if(got, [](const auto& x) { return x.second == 0; });
  EXPECT_EQ(got, want);
  auto V = parse_polynomial("x0^5 + x1^5");
  try {
    lg_to_cy_reindex(StateTable{}, V);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotCalabiYau);
  }
}
