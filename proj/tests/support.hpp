#pragma once

#include <random>
#include <vector>

#include "ajlab/poly.hpp"
#include "ajlab/ratfun.hpp"

namespace testsupport {

using namespace ajlab;

inline std::mt19937_64& rng() {
  static std::mt19937_64 g(20240611);
  return g;
}

inline long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

inline Rational small_rational() {
  long d = uniform(1, 4);
  Rational r(uniform(-6, 6), d);
  r.canonicalize();
  return r;
}

/// Random Laurent polynomial with up to `terms` terms in `vars`, exponents in [lo, hi].
inline LaurentMPoly random_poly(const std::vector<VarId>& vars, int terms, int lo, int hi) {
  LaurentMPoly p;
  for (int t = 0; t < terms; ++t) {
    std::vector<std::pair<VarId, int>> pw;
    for (const auto& v : vars) pw.emplace_back(v, static_cast<int>(uniform(lo, hi)));
    p += LaurentMPoly::monomial(small_rational(), pw);
  }
  return p;
}

inline LaurentMPoly random_nonzero(const std::vector<VarId>& vars, int terms, int lo, int hi) {
  for (;;) {
    LaurentMPoly p = random_poly(vars, terms, lo, hi);
    if (!p.is_zero()) return p;
  }
}

}  // namespace testsupport
