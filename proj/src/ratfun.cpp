#include "ajlab/ratfun.hpp"

#include <ostream>

#include "ajlab/errors.hpp"
#include "ajlab/polyalg.hpp"

namespace ajlab {

RationalFunction::RationalFunction(const LaurentMPoly& num, const LaurentMPoly& den) : num_(num), den_(den) {
  if (den_.is_zero()) throw DomainError("rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = LaurentMPoly(1);
    return;
  }
  if (!den_.is_monomial()) {
    LaurentMPoly g = gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = divide_or_throw(num_, g);
      den_ = divide_or_throw(den_, g);
    }
  }
  normalize_units();
}

RationalFunction RationalFunction::from_coprime(const LaurentMPoly& num, const LaurentMPoly& den) {
  if (den.is_zero()) throw DomainError("rational function with zero denominator");
  RationalFunction r;
  r.num_ = num;
  r.den_ = num.is_zero() ? LaurentMPoly(1) : den;
  r.normalize_units();
  return r;
}

void RationalFunction::normalize_units() {
  if (den_.is_constant() && den_.constant_value() == 1) return;
  LaurentMPoly m = den_.min_monomial().pow(-1);
  Rational c = 1 / (den_ * m).leading_coefficient();
  LaurentMPoly u = m.scaled(c);
  num_ = num_ * u;
  den_ = den_ * u;
}

Rational RationalFunction::constant_value() const {
  if (!is_constant()) throw DomainError("constant_value on non-constant rational function " + to_string());
  return num_.constant_value() / den_.constant_value();
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw DomainError("inverse of the zero rational function");
  return from_coprime(den_, num_);
}

RationalFunction RationalFunction::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  return from_coprime(num_.pow(e), den_.pow(e));
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
  if (a.is_polynomial() && b.is_polynomial()) return RationalFunction(a.num_ + b.num_);
  // a/b + c/d with g = gcd(b, d): (a d' + c b') / (b' d' g), then cancel against g only.
  LaurentMPoly g = gcd(a.den_, b.den_);
  LaurentMPoly bd = divide_or_throw(a.den_, g);
  LaurentMPoly dd = divide_or_throw(b.den_, g);
  LaurentMPoly num = a.num_ * dd + b.num_ * bd;
  if (num.is_zero()) return RationalFunction();
  if (g.is_constant()) return RationalFunction::from_coprime(num, bd * dd * g);
  LaurentMPoly h = gcd(num, g);
  return RationalFunction::from_coprime(divide_or_throw(num, h), bd * dd * divide_or_throw(g, h));
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero() || b.is_zero()) return RationalFunction();
  if (a.is_polynomial() && b.is_polynomial()) return RationalFunction(a.num_ * b.num_);
  // Cross-cancel: inputs are reduced, so gcd(a.num, b.den) and gcd(b.num, a.den) suffice.
  LaurentMPoly an = a.num_, ad = a.den_, bn = b.num_, bd = b.den_;
  if (!bd.is_constant()) {
    LaurentMPoly g = gcd(an, bd);
    if (!g.is_constant()) {
      an = divide_or_throw(an, g);
      bd = divide_or_throw(bd, g);
    }
  }
  if (!ad.is_constant()) {
    LaurentMPoly g = gcd(bn, ad);
    if (!g.is_constant()) {
      bn = divide_or_throw(bn, g);
      ad = divide_or_throw(ad, g);
    }
  }
  return RationalFunction::from_coprime(an * bn, ad * bd);
}

std::string RationalFunction::to_string() const {
  if (den_.is_constant() && den_.constant_value() == 1) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

std::ostream& operator<<(std::ostream& os, const RationalFunction& f) { return os << f.to_string(); }

}  // namespace ajlab
