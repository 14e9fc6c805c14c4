#pragma once

#include <string>
#include <vector>

namespace bhmirror {

struct PolyCase {
  std::string name;
  std::string poly;
};

// K is a K-spec string: trivial, SL, J, full, min, or gen:[...] generators on the variables of f.
struct CyclicCase {
  std::string name;
  std::string poly;
  std::string K;
  bool k3 = false;
};

inline const std::vector<PolyCase>& polynomial_catalog() {
  static const std::vector<PolyCase> c = {
      {"x2", "x^2"},
      {"x3", "x^3"},
      {"x4", "x^4"},
      {"x5", "x^5"},
      {"x6", "x^6"},
      {"x7", "x^7"},
      {"x8", "x^8"},
      {"x9", "x^9"},
      {"x10", "x^10"},
      {"x11", "x^11"},
      {"x12", "x^12"},
      {"x13", "x^13"},
      {"fermat-2-3", "x^2 + y^3"},
      {"fermat-4-4", "x^4 + y^4"},
      {"chain-2-3", "x^2*y + y^3"},
      {"chain-3-4", "x^3*y + y^4"},
      {"chain-2-5", "x^2*y + y^5"},
      {"chain-5-2", "x^5*y + y^2"},
      {"loop-2-2", "x^2*y + y^2*x"},
      {"loop-3-2", "x^3*y + y^2*x"},
      {"cubic", "x^3 + y^3 + z^3"},
      {"elliptic", "x^6 + y^3 + z^2"},
      {"chain-2-2-3", "x^2*y + y^2*z + z^3"},
      {"loop-2-3-2", "x^2*y + y^3*z + z^2*x"},
      {"loop-3-3-3", "x^3*y + y^3*z + z^3*x"},
      {"loop2-fermat", "x^2*y + y^2*x + z^3"},
      {"fermat-chain", "x^4 + y^2*z + z^3"},
      {"quartic", "x^4 + y^4 + z^4 + w^4"},
      {"cubic-4", "x^3 + y^3 + z^3 + w^3"},
      {"chain-loop", "x^3*y + y^3 + z^2*w + w^2*z"},
      {"loop-4", "x^2*y + y^2*z + z^2*w + w^2*x"},
      {"chain-4", "x^2*y + y^2*z + z^2*w + w^3"},
      {"chain3-fermat", "x^3*y + y^3*z + z^3 + w^2"},
      {"double-sextic", "x^2 + y^6 + z^6 + w^6"},
      {"k3-p5", "x^5 + y^2*z + z^3*y + w^5"},
      {"k3-loop3", "x^4 + y^3*z + z^3*w + w^3*y"},
      {"fermat-5", "x^2 + y^2 + z^2 + u^2 + v^2"},
      {"cubic-5", "x^3 + y^3 + z^3 + u^3 + v^3"},
      {"mixed-5", "u^2 + x^2*y + y^2*x + z^3*w + w^3"},
      {"loops-5", "x^2*y + y^2*x + z^2*u + u^2*z + v^3"},
      {"loop-5", "x^2*y + y^2*z + z^2*u + u^2*v + v^2*x"},
      {"chain-5", "x^2*y + y^2*z + z^2*u + u^2*v + v^2"},
  };
  return c;
}

inline const std::vector<CyclicCase>& cyclic_catalog() {
  static const std::vector<CyclicCase> c = {
      {"elliptic", "x0^6 + x1^3 + x2^2", "trivial"},
      {"cubic", "x0^3 + x1^3 + x2^3", "trivial"},
      {"cubic-SL", "x0^3 + x1^3 + x2^3", "SL"},
      {"cubic-loop", "x0^3 + x1^2*x2 + x2^2*x1", "trivial"},
      {"cubic-chain", "x0^3 + x1^2*x2 + x2^3", "trivial"},
      {"elliptic-4", "x0^4 + x1^4 + x2^2", "trivial"},
      {"double-quartic", "x0^2 + x1^4 + x2^4", "min"},
      {"double-quartic-SL", "x0^2 + x1^4 + x2^4", "SL"},
      {"double-chain", "x0^2 + x1^3*x2 + x2^4", "min"},
      {"double-loop", "x0^2 + x1^3*x2 + x2^3*x1", "min"},
      {"quartic", "x0^4 + x1^4 + x2^4 + x3^4", "trivial", true},
      {"quartic-SL", "x0^4 + x1^4 + x2^4 + x3^4", "SL", true},
      {"quartic-loop3", "x0^4 + x1^3*x2 + x2^3*x3 + x3^3*x1", "min", true},
      {"quartic-loop2", "x0^4 + x1^3*x2 + x2^3*x1 + x3^4", "min", true},
      {"quartic-chain", "x0^4 + x1^3*x2 + x2^3*x3 + x3^4", "min", true},
      {"quartic-loop2-12", "x0^4 + x1^2*x2 + x2^2*x1 + x3^12", "min", true},
      {"p3-fermat", "x0^3 + x1^3 + x2^6 + x3^6", "min", true},
      {"p3-loop", "x0^3 + x1^3*x2 + x2^3*x1 + x3^6", "min", true},
      {"p5-loop", "x0^5 + x1^2*x2 + x2^3*x1 + x3^5", "min", true},
      {"p7-loop", "x0^7 + x1^2*x2 + x2^2*x3 + x3^5*x1", "min", true},
      {"p7-chain", "x0^7 + x1^2*x2 + x2^2*x3 + x3^7", "min", true},
      {"p13-loop", "x0^13 + x1^2*x2 + x2^2*x3 + x3^3*x1", "min", true},
      {"double-sextic", "x0^2 + x1^6 + x2^6 + x3^6", "min"},
      {"double-sextic-loop", "x0^2 + x1^5*x2 + x2^5*x1 + x3^6", "min"},
      {"k9-loop", "x0^9 + x1^2*x2 + x2^5*x1 + x3^3", "min"},
      {"k9-chain", "x0^9 + x1^3*x2 + x2^2*x3 + x3^3", "min"},
      {"double-octic", "x0^2 + x1^8 + x2^8 + x3^8 + x4^8", "min"},
  };
  return c;
}

}  // namespace bhmirror
