#pragma once

#include <optional>
#include <vector>

#include "ajlab/poly.hpp"

namespace ajlab {

/// a / b when b divides a in the Laurent ring, std::nullopt otherwise. Throws on b == 0.
std::optional<LaurentMPoly> divide_exact(const LaurentMPoly& a, const LaurentMPoly& b);

/// Like divide_exact but throws DomainError when the division is not exact.
LaurentMPoly divide_or_throw(const LaurentMPoly& a, const LaurentMPoly& b);

/// Positive rational c such that p / c has coprime integer coefficients.
Rational rational_content(const LaurentMPoly& p);

/// Associate of p with Laurent unit and rational content removed: a polynomial with no
/// monomial factor, coprime integer coefficients, positive grlex-leading coefficient.
LaurentMPoly normalize_associate(const LaurentMPoly& p);

/// normalize_associate, with the sign fixed by the leading coefficient in v instead
/// (so alpha^4*l^2 + ... keeps its printed sign when v = l).
LaurentMPoly normalize_leading(const LaurentMPoly& p, const VarId& v);

/// GCD in the polynomial ring after clearing Laurent units; primitive with positive leading
/// coefficient. gcd(0, 0) throws DomainError.
LaurentMPoly gcd(const LaurentMPoly& a, const LaurentMPoly& b);

/// Content of p as a polynomial in v (gcd of its v-coefficients), normalized like gcd().
LaurentMPoly content_in(const LaurentMPoly& p, const VarId& v);

/// Resultant in v of the v-unit-cleared inputs, via the subresultant PRS.
/// Laurent units in the other variables are factored out and reapplied
/// (Res(u a, b) = u^deg(b) Res(a, b)).
LaurentMPoly resultant(const LaurentMPoly& a, const LaurentMPoly& b, const VarId& v);

/// Product of the distinct factors of a that involve v, times the v-free part of a.
LaurentMPoly squarefree_part(const LaurentMPoly& a, const VarId& v);

/// Dense representation in v: result[k] is the coefficient of v^k. Requires min_degree(v) >= 0.
std::vector<LaurentMPoly> coefficients_in(const LaurentMPoly& p, const VarId& v);
LaurentMPoly from_coefficients(const std::vector<LaurentMPoly>& coeffs, const VarId& v);

}  // namespace ajlab
