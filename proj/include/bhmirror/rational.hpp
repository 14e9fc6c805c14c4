#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <functional>
#include <numeric>
#include <string>

// Under C++20 rewritten comparisons the mixed rational/integer equality templates of
// boost 1.74 call each other forever. Exact-match overloads win overload resolution.
namespace boost {

#define BHMIRROR_MIXED_EQ(T)                                                                                      \
  inline bool operator==(const rational<std::int64_t>& a, T b) { return a.denominator() == 1 && a.numerator() == b; } \
  inline bool operator==(T b, const rational<std::int64_t>& a) { return a == b; }                                 \
  inline bool operator!=(const rational<std::int64_t>& a, T b) { return !(a == b); }                              \
  inline bool operator!=(T b, const rational<std::int64_t>& a) { return !(a == b); }

BHMIRROR_MIXED_EQ(int)
BHMIRROR_MIXED_EQ(long)
BHMIRROR_MIXED_EQ(long long)

#undef BHMIRROR_MIXED_EQ

}  // namespace boost

namespace bhmirror {

using Rational = boost::rational<std::int64_t>;

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline std::int64_t floor(const Rational& x) { return floor_div(x.numerator(), x.denominator()); }

// Representative of x mod Z in [0,1).
inline Rational frac(const Rational& x) { return x - Rational(floor(x)); }

inline bool is_integer(const Rational& x) { return x.denominator() == 1; }

inline std::string to_string(const Rational& x) {
  if (x.denominator() == 1) return std::to_string(x.numerator());
  return std::to_string(x.numerator()) + "/" + std::to_string(x.denominator());
}

inline std::int64_t lcm64(std::int64_t a, std::int64_t b) { return std::lcm(a, b); }

struct RationalHash {
  std::size_t operator()(const Rational& x) const noexcept {
    std::size_t h = std::hash<std::int64_t>{}(x.numerator());
    return h * 1000003u ^ std::hash<std::int64_t>{}(x.denominator());
  }
};

}  // namespace bhmirror
