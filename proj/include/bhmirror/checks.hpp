#pragma once

#include <string>
#include <vector>

#include "bhmirror/catalog.hpp"
#include "bhmirror/geometry.hpp"

namespace bhmirror {

/** Series engine against direct monomial enumeration, sector by sector, on a Fermat-diagonal P. */
inline Report verify_engines(const InvertiblePolynomial& P) {
  if (!P.is_fermat_diagonal()) fail(ErrorCode::NotFermat, P.to_string() + " is not Fermat-diagonal");
  Report r{"engines " + P.to_string()};
  const auto Aut = aut_group(P);
  for (const auto& h : Aut.elements()) {
    auto R = restrict_to(P, h.fixed_vars());
    std::map<std::pair<std::int64_t, DiagonalSymmetry>, std::int64_t> a, b;
    for (const auto& [m, row] : equivariant_hilbert(R).coefficients)
      for (const auto& [key, c] : row) a[{m, key}] += c;
    for (const auto& f : fermat_monomial_basis(R)) b[{f.degree, f.key}] += 1;
    std::set<std::pair<std::int64_t, DiagonalSymmetry>> keys;
    for (const auto& [k, _] : a) keys.insert(k);
    for (const auto& [k, _] : b) keys.insert(k);
    for (const auto& k : keys)
      r.add("engines", "h=" + h.to_string() + " deg=" + std::to_string(k.first) + " key=" + k.second.to_string(),
            a.count(k) ? a.at(k) : 0, b.count(k) ? b.at(k) : 0);
  }
  return r;
}

/** Total dimension of every sector of Aut_P against prod (d - w_i)/w_i. */
inline Report verify_milnor(const InvertiblePolynomial& P) {
  Report r{"milnor " + P.to_string()};
  const auto Aut = aut_group(P);
  for (const auto& h : Aut.elements()) {
    auto A = sector_algebra(P, h);
    auto mu = milnor_number(P, A.fixed_vars);
    if (!is_integer(mu)) {
      r.add("milnor", "h=" + h.to_string() + " non-integral", 0, 1);
      continue;
    }
    r.add("milnor", "h=" + h.to_string(), A.total_dim(), mu.numerator());
  }
  return r;
}

struct CaseResult {
  std::string name;
  std::string poly;
  std::vector<Report> reports;
  std::string error;  // set when the case could not be run

  bool ok() const {
    if (!error.empty()) return false;
    for (const auto& r : reports)
      if (!r.ok()) return false;
    return true;
  }
};

inline CaseResult run_polynomial_case(const PolyCase& c) {
  CaseResult out{c.name, c.poly, {}, {}};
  try {
    auto P = parse_polynomial(c.poly);
    out.reports.push_back(verify_krawitz(P));
    out.reports.push_back(verify_milnor(P));
    if (P.is_fermat_diagonal()) {
      out.reports.push_back(verify_engines(P));
      out.reports.push_back(verify_fermat_map(P));
    }
  } catch (const std::exception& e) {
    out.error = e.what();
  }
  return out;
}

inline bool is_k3_setup(const AdmissibleSetup& S) {
  return is_calabi_yau(S.W) && S.W.num_vars() == 4 && (S.k == 4 || (S.k > 2 && is_prime(S.k)));
}

inline CaseResult run_cyclic_case(const CyclicCase& c) {
  CaseResult out{c.name, c.poly, {}, {}};
  try {
    auto W = parse_polynomial(c.poly);
    auto M = build_mirror_pair(W, parse_k_spec(W, c.K));
    out.reports.push_back(verify_ms_lg(M));
    auto v = verify_vanishing(M.H_source);
    v.merge(verify_vanishing(M.H_target));
    out.reports.push_back(v);
    if (is_calabi_yau(W)) out.reports.push_back(verify_ms_cy(M));
    if (is_calabi_yau(W) && M.source.k == 2) out.reports.push_back(verify_k2_corollary(M));
    if (c.k3 || is_k3_setup(M.source)) {
      auto R = k3_report(M);
      R.checks.keep_all = false;
      std::erase_if(R.checks.rows, [](const CheckRow& row) { return row.pass; });
      out.reports.push_back(R.checks);
    }
  } catch (const std::exception& e) {
    out.error = e.what();
  }
  return out;
}

}  // namespace bhmirror
