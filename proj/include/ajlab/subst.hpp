#pragma once

#include <complex>
#include <map>

#include "ajlab/ratfun.hpp"

namespace ajlab {

using Bindings = std::map<VarId, RationalFunction>;
using ExactPoint = std::map<VarId, Rational>;
using ComplexPoint = std::map<VarId, std::complex<double>>;

/// Exact substitution of variables by rational functions; unbound variables are kept.
/// Throws DomainError naming the binding when a negative power of a zero binding, or a zero
/// denominator, appears.
RationalFunction subst(const LaurentMPoly& p, const Bindings& bindings);
RationalFunction subst(const RationalFunction& f, const Bindings& bindings);

/// Value at a fully specified rational point. Throws DomainError on unbound variables or
/// division by zero.
Rational eval_exact(const LaurentMPoly& p, const ExactPoint& point);
Rational eval_exact(const RationalFunction& f, const ExactPoint& point);

/// Double-precision complex value. Throws DomainError on unbound variables, SingularityError on
/// a zero denominator.
std::complex<double> eval_complex(const LaurentMPoly& p, const ComplexPoint& point);
std::complex<double> eval_complex(const RationalFunction& f, const ComplexPoint& point);

}  // namespace ajlab
