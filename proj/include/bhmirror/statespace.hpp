#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <map>
#include <mutex>
#include <thread>
#include <vector>

#include "bhmirror/milnor.hpp"

namespace bhmirror {

namespace detail {

// Runs fn(i) for i in [0, n) on a few threads; callers write results by index.
inline void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
  std::size_t hw = std::max(1u, std::thread::hardware_concurrency());
  std::size_t nt = std::min<std::size_t>(hw, n < 64 ? 1 : 8);
  if (nt <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr err;
  std::mutex mu;
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < nt; ++t)
    pool.emplace_back([&] {
      for (;;) {
        std::size_t i = next++;
        if (i >= n) return;
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lk(mu);
          if (!err) err = std::current_exception();
          next = n;
        }
      }
    });
  for (auto& th : pool) th.join();
  if (err) std::rethrow_exception(err);
}

}  // namespace detail

enum class Side { Moving, Fixed };

inline const char* side_name(Side s) { return s == Side::Moving ? "moving" : "fixed"; }

using Bidegree = std::pair<Rational, Rational>;
using BigradedDims = std::map<Bidegree, std::int64_t>;

struct StateEntry {
  DiagonalSymmetry h;    // sector
  DiagonalSymmetry key;  // element of the dual group grading the class
  std::int64_t degree = 0;
  Rational p, q;
  std::int64_t dim = 0;
  std::size_t fixed_count = 0;

  // Cyclic data, present in tables built from an admissible setup.
  int a = 0, b = 0;  // d_j = a/k, d_s = b/k
  Rational d_j, d_s, Q_j, Q_s;
  int weight = 0;
  Side side = Side::Fixed;
  int X = 0, Y = 0, Z = 0;

  bool narrow() const { return fixed_count == 0; }
};

struct StateTable {
  std::vector<StateEntry> entries;
  bool labeled = false;
  int k = 0;

  std::int64_t total() const {
    std::int64_t s = 0;
    for (const auto& e : entries) s += e.dim;
    return s;
  }

  BigradedDims bigraded() const {
    BigradedDims m;
    for (const auto& e : entries) m[{e.p, e.q}] += e.dim;
    return m;
  }

  StateTable filter(const std::function<bool(const StateEntry&)>& pred) const {
    StateTable t{{}, labeled, k};
    for (const auto& e : entries)
      if (pred(e)) t.entries.push_back(e);
    return t;
  }
};

/** U_P: every sector of Aut_P with its full dual-group grading. */
inline StateTable unprojected_state_space(const InvertiblePolynomial& P) {
  auto G = aut_group(P);
  std::vector<SectorAlgebra> sectors(G.order());
  detail::parallel_for(G.order(), [&](std::size_t i) { sectors[i] = sector_algebra(P, G.elements()[i]); });
  StateTable t;
  for (const auto& A : sectors)
    for (const auto& c : A.classes) {
      StateEntry e;
      e.h = A.sector;
      e.key = c.key;
      e.degree = c.degree;
      e.p = c.p;
      e.q = c.q;
      e.dim = c.dim;
      e.fixed_count = A.fixed_vars.size();
      t.entries.push_back(std::move(e));
    }
  return t;
}

/** The K-invariant part of the state space over all sectors of K[j_W, s], with all gradings. */
inline StateTable build_H(const AdmissibleSetup& S) {
  const auto& W = S.W;
  const int k = S.k;
  const auto& elems = S.G.elements();
  std::vector<SectorAlgebra> sectors(elems.size());
  detail::parallel_for(elems.size(), [&](std::size_t i) { sectors[i] = sector_algebra(W, elems[i], &S.K); });
  StateTable t{{}, true, k};
  for (const auto& A : sectors) {
    auto [a, b] = S.label(A.sector);
    for (const auto& c : A.classes) {
      StateEntry e;
      e.h = A.sector;
      e.key = c.key;
      e.degree = c.degree;
      e.p = c.p;
      e.q = c.q;
      e.dim = c.dim;
      e.fixed_count = A.fixed_vars.size();
      e.a = a;
      e.b = b;
      e.d_j = Rational(a, k);
      e.d_s = Rational(b, k);
      e.Q_j = pairing(W, S.j, c.key);
      e.Q_s = pairing(W, S.s, c.key);
      Rational kQs = e.Q_s * k, kY = frac(e.Q_s - e.Q_j) * k;
      if (!is_integer(kQs) || !is_integer(kY)) throw std::logic_error("charges outside (1/k)Z");
      e.weight = static_cast<int>(kQs.numerator());
      e.side = e.Q_s != 0 ? Side::Moving : Side::Fixed;
      e.X = a;
      e.Y = static_cast<int>(kY.numerator());
      e.Z = e.side == Side::Moving ? e.weight : (a + b) % k;
      bool anti = (a + b) % k == 0;
      if ((e.side == Side::Moving) != anti || e.Z == 0)
        throw std::logic_error("moving/fixed split disagrees with d_j + d_s at sector " + A.sector.to_string());
      t.entries.push_back(std::move(e));
    }
  }
  return t;
}

inline StateTable build_H(const InvertiblePolynomial& W, const SymmetryGroup& K_f) {
  return build_H(admissible_setup(W, K_f));
}

/** The s^b slice: j-invariant entries whose sector lies in s^b K[j_W]. */
inline StateTable fjrw_state_space(const StateTable& H, int b) {
  if (!H.labeled) throw std::invalid_argument("fjrw_state_space needs a labeled table");
  return H.filter([b](const StateEntry& e) { return e.Q_j == 0 && e.b == b; });
}

inline StateTable fjrw_state_space(const AdmissibleSetup& S, int b) { return fjrw_state_space(build_H(S), b); }

/** Label of an entry in (X, Y, Z) coordinates with its bidegree. */
struct XYZLabel {
  Side side = Side::Fixed;
  int k = 0;
  int X = 0, Y = 0, Z = 0;
  Rational p, q;

  bool operator==(const XYZLabel&) const = default;
};

inline XYZLabel xyz_label(const StateEntry& e, int k) { return {e.side, k, e.X, e.Y, e.Z, e.p, e.q}; }

/** Moving (X,Y,Z) class to the fixed (X,Y,Z) class: (p,q) -> (p - 1 + 2Z/k, q). */
inline XYZLabel twist(const XYZLabel& m) {
  if (m.side != Side::Moving) fail(ErrorCode::SideMismatch, "twist applies to moving classes");
  if (m.Z <= 0 || m.Z >= m.k) fail(ErrorCode::ZOutOfRange, "Z = " + std::to_string(m.Z));
  XYZLabel f = m;
  f.side = Side::Fixed;
  f.p = m.p - 1 + Rational(2 * m.Z, m.k);
  return f;
}

namespace detail {

inline XYZLabel elevate(const XYZLabel& x, int Z2, Side side, int sign_p) {
  if (x.side != side) fail(ErrorCode::SideMismatch, std::string("elevator expects a ") + side_name(side) + " class");
  if (x.Z <= 0 || x.Z >= x.k || Z2 <= 0 || Z2 >= x.k)
    fail(ErrorCode::ZOutOfRange, "Z' = " + std::to_string(x.Z) + ", Z'' = " + std::to_string(Z2));
  XYZLabel y = x;
  Rational delta(Z2 - x.Z, x.k);
  y.Z = Z2;
  y.p = x.p + sign_p * delta;
  y.q = x.q + delta;
  return y;
}

}  // namespace detail

inline XYZLabel elevator_m(const XYZLabel& x, int Z2) { return detail::elevate(x, Z2, Side::Moving, -1); }
inline XYZLabel elevator_f(const XYZLabel& x, int Z2) { return detail::elevate(x, Z2, Side::Fixed, 1); }

inline std::map<int, StateTable> weight_decomposition(const StateTable& t) {
  std::map<int, StateTable> out;
  for (const auto& e : t.entries) {
    auto& s = out[e.weight];
    s.labeled = t.labeled;
    s.k = t.k;
    s.entries.push_back(e);
  }
  return out;
}

inline std::pair<StateTable, StateTable> narrow_broad_split(const StateTable& t) {
  return {t.filter([](const StateEntry& e) { return e.narrow(); }),
          t.filter([](const StateEntry& e) { return !e.narrow(); })};
}

}  // namespace bhmirror
