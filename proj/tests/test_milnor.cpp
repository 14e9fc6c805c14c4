#include <gtest/gtest.h>

#include <numeric>

#include "bhmirror/bhmirror.hpp"
#include "oracles.hpp"

using namespace bhmirror;

namespace {

oracle::Vec as_vec(const DiagonalSymmetry& g) {
  oracle::Vec v;
  for (const auto& x : g.entries()) v.emplace_back(x.numerator(), x.denominator());
  return v;
}

std::map<oracle::JacClass, std::int64_t> library_classes(const InvertiblePolynomial& P, const DiagonalSymmetry& h) {
  std::map<oracle::JacClass, std::int64_t> out;
  for (const auto& c : sector_algebra(P, h).classes) out[{c.degree, as_vec(c.key)}] += c.dim;
  return out;
}

}  // namespace

// Every sector of every small catalog polynomial, against Gaussian elimination on the Jacobian ideal.
TEST(EquivariantHilbert, JacobiRingOracle) {
  int cases = 0;
  for (const auto& c : polynomial_catalog()) {
    auto P = parse_polynomial(c.poly);
    if (P.num_vars() > 3 || P.abs_det() > 150) continue;
    ++cases;
    const auto Aut = aut_group(P);
    for (const auto& h : Aut.elements()) {
      auto fixed = h.fixed_vars();
      auto expect = oracle::jacobi_ring(P.exponents(), fixed);
      EXPECT_EQ(library_classes(P, h), expect) << c.name << " h=" << h.to_string();
    }
  }
  EXPECT_GE(cases, 15);
}

TEST(EquivariantHilbert, MixedAtomsOracle) {
  for (const char* s : {"x^2*y + y^2*z + z^2*x + u^2", "x^3*y + y^2*z + z^2 + u^3", "x^2*y + y^3*x + z^4"}) {
    auto P = parse_polynomial(s);
    const auto Aut = aut_group(P);
    for (const auto& h : Aut.elements())
      EXPECT_EQ(library_classes(P, h), oracle::jacobi_ring(P.exponents(), h.fixed_vars())) << s << " " << h.to_string();
  }
}

TEST(EquivariantHilbert, PoincareSeries) {
  for (const auto& c : polynomial_catalog()) {
    auto P = parse_polynomial(c.poly);
    std::vector<std::size_t> all(P.num_vars());
    std::iota(all.begin(), all.end(), 0);
    auto H = equivariant_hilbert(restrict_to(P, all)).hilbert_function();
    // shift to the degree of the function, not the form
    std::int64_t sw = 0;
    for (auto w : P.weights()) sw += w;
    std::map<std::int64_t, std::int64_t> lib;
    for (auto [m, c2] : H) lib[m - sw] = c2;
    EXPECT_EQ(lib, oracle::poincare(P.weights(), P.degree())) << c.name;
  }
}

TEST(MilnorNumber, KnownValues) {
  auto E = parse_polynomial("x0^6 + x1^3 + x2^2");
  EXPECT_EQ(milnor_number(E, {0, 1, 2}), Rational(10));
  auto Q = parse_polynomial("x0^4 + x1^4 + x2^4 + x3^4");
  EXPECT_EQ(milnor_number(Q, {0, 1, 2, 3}), Rational(81));
  EXPECT_EQ(sector_algebra(Q, DiagonalSymmetry(4)).total_dim(), 81);
  // loop: mu is the product of the exponents, one less than |det| for three variables
  auto L = parse_polynomial("x^2*y + y^3*z + z^2*x");
  EXPECT_EQ(L.abs_det(), 13);
  EXPECT_EQ(milnor_number(L, {0, 1, 2}), Rational(12));
  EXPECT_EQ(sector_algebra(L, DiagonalSymmetry(3)).total_dim(), 12);
}

TEST(MilnorNumber, EverySectorIntegral) {
  for (const auto& c : polynomial_catalog()) {
    auto r = verify_milnor(parse_polynomial(c.poly));
    EXPECT_TRUE(r.ok()) << c.name;
    EXPECT_GT(r.checked, 0u);
  }
}

TEST(SectorAlgebra, Bidegrees) {
  auto P = parse_polynomial("x0^6 + x1^3 + x2^2");
  const auto Aut = aut_group(P);
  for (const auto& h : Aut.elements()) {
    auto A = sector_algebra(P, h);
    for (const auto& c : A.classes) {
      EXPECT_EQ(c.p + c.q, 2 * A.age + Rational(static_cast<std::int64_t>(A.fixed_vars.size())));
      EXPECT_EQ(c.q, A.age + Rational(c.degree, 6));
    }
  }
  // narrow sector of j: a single class at (1,1)
  auto A = sector_algebra(P, j_element(P));
  ASSERT_EQ(A.classes.size(), 1u);
  EXPECT_EQ(A.classes[0].p, Rational(1));
  EXPECT_EQ(A.classes[0].q, Rational(1));
}

TEST(SectorAlgebra, KInvariantFilter) {
  auto P = parse_polynomial("x^4 + y^4");
  auto K = parse_group_spec(P, "J");
  auto A = sector_algebra(P, DiagonalSymmetry(2), &K);
  // x^a y^b dx dy with a+b+2 = 0 mod 4, 0 <= a,b <= 2
  EXPECT_EQ(A.total_dim(), 3);
}

TEST(FermatBasis, MatchesSeriesAndRejectsChains) {
  EXPECT_TRUE(verify_engines(parse_polynomial("x^3 + y^4 + z^5")).ok());
  auto C = parse_polynomial("x^2*y + y^3");
  try {
    fermat_monomial_basis(restrict_to(C, {0, 1}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotFermat);
  }
  EXPECT_THROW(restrict(C, DiagonalSymmetry(std::vector<Rational>{Rational(1, 3), Rational(0)})),
               std::invalid_argument);
}
