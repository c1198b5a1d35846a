#pragma once

#include <string>

#include "ajlab/poly.hpp"

namespace ajlab {

/// Quotient num / den of Laurent polynomials in canonical form (a constant den is always 1):
/// gcd(num, den) is a unit, den has no monomial factor, and den is monic in grlex order.
/// Structural equality is therefore mathematical equality.
class RationalFunction {
 public:
  RationalFunction() : den_(1) {}
  RationalFunction(const LaurentMPoly& p) : num_(p), den_(1) {}  // NOLINT
  RationalFunction(const Rational& c) : num_(c), den_(1) {}      // NOLINT
  RationalFunction(long c) : num_(c), den_(1) {}                 // NOLINT
  /// Throws DomainError when den is zero.
  RationalFunction(const LaurentMPoly& num, const LaurentMPoly& den);

  static RationalFunction var(const VarId& v, int power = 1) { return LaurentMPoly::var(v, power); }

  const LaurentMPoly& num() const { return num_; }
  const LaurentMPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  Rational constant_value() const;
  bool has_var(const VarId& v) const { return num_.has_var(v) || den_.has_var(v); }
  VarList vars() const { return merge_vars(num_.vars(), den_.vars()); }

  RationalFunction operator-() const;
  RationalFunction inverse() const;
  RationalFunction pow(long e) const;

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    return a * b.inverse();
  }
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// Applies a monomial-preserving transform to num and den independently; valid for ring
  /// automorphisms such as Q -> q Q, which keep num and den coprime.
  template <class Fn>
  RationalFunction map_coprime(Fn&& fn) const {
    return from_coprime(fn(num_), fn(den_));
  }

  /// "(num)/(den)", or the numerator text alone when den == 1.
  std::string to_string() const;

  /// Builds from parts already known to be coprime; only the unit normalization runs.
  static RationalFunction from_coprime(const LaurentMPoly& num, const LaurentMPoly& den);

 private:
  void normalize_units();

  LaurentMPoly num_;
  LaurentMPoly den_;
};

std::ostream& operator<<(std::ostream& os, const RationalFunction& f);

}  // namespace ajlab
