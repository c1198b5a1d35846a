#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ajlab/rational.hpp"
#include "ajlab/var.hpp"

namespace ajlab {

using Exponents = std::vector<int>;

/// Multivariate Laurent polynomial with exact rational coefficients.
///
/// Canonical form: the variable list is sorted by the VarId order and holds exactly the
/// variables that occur with a nonzero exponent; no zero coefficients are stored. Two
/// equal polynomials therefore have identical variable lists and term maps, and
/// operator== is structural.
class LaurentMPoly {
 public:
  using TermMap = std::map<Exponents, Rational>;

  LaurentMPoly() = default;
  LaurentMPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  LaurentMPoly(long c) : LaurentMPoly(Rational(c)) {}  // NOLINT
  LaurentMPoly(VarList vars, TermMap terms);

  static LaurentMPoly var(const VarId& v, int power = 1);
  static LaurentMPoly monomial(const Rational& c, const std::vector<std::pair<VarId, int>>& powers);

  const VarList& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return vars_.empty(); }
  /// Single term c * m.
  bool is_monomial() const { return terms_.size() == 1; }
  Rational constant_value() const;  // requires is_constant()

  bool has_var(const VarId& v) const;
  int var_index(const VarId& v) const;  // -1 when absent
  int degree(const VarId& v) const;     // max exponent, 0 when absent
  int min_degree(const VarId& v) const; // min exponent, 0 when absent
  int total_degree() const;
  /// True when every exponent is nonnegative.
  bool is_polynomial() const;

  /// Leading term under graded lexicographic order on the VarId order.
  const std::pair<const Exponents, Rational>& leading_term() const;
  const Rational& leading_coefficient() const { return leading_term().second; }

  /// Coefficient of v^k as a polynomial in the remaining variables.
  LaurentMPoly coefficient(const VarId& v, int k) const;
  /// Exponent-wise minimum over all terms, as a monic monomial (the Laurent unit to divide out).
  LaurentMPoly min_monomial() const;

  LaurentMPoly operator-() const;
  LaurentMPoly& operator+=(const LaurentMPoly& o);
  LaurentMPoly& operator-=(const LaurentMPoly& o);
  LaurentMPoly& operator*=(const LaurentMPoly& o);
  friend LaurentMPoly operator+(LaurentMPoly a, const LaurentMPoly& b) { return a += b; }
  friend LaurentMPoly operator-(LaurentMPoly a, const LaurentMPoly& b) { return a -= b; }
  friend LaurentMPoly operator*(const LaurentMPoly& a, const LaurentMPoly& b);
  LaurentMPoly scaled(const Rational& c) const;
  /// Multiplication by the monomial prod v_i^{e_i} (e given over this->vars()).
  LaurentMPoly shifted(const std::vector<std::pair<VarId, int>>& monomial) const;
  /// Power with nonnegative exponent; negative exponents only for monomials.
  LaurentMPoly pow(long e) const;

  /// Partial derivative in v (exact; Laurent exponents allowed).
  LaurentMPoly derivative(const VarId& v) const;
  /// Rename variables (the map must not merge two variables that both occur).
  LaurentMPoly renamed(const std::vector<std::pair<VarId, VarId>>& renames) const;

  friend bool operator==(const LaurentMPoly& a, const LaurentMPoly& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

  /// Human-readable signed monomial sum, descending grlex, e.g. "Q^2*E^2 + Q*E - E".
  std::string to_string() const;

 private:
  void canonicalize();

  VarList vars_;
  TermMap terms_;
};

/// Sorted union of two canonical variable lists.
VarList merge_vars(const VarList& a, const VarList& b);
/// Term map of p re-expressed over the (superset) variable list `target`.
LaurentMPoly::TermMap align_terms(const LaurentMPoly& p, const VarList& target);

/// Graded lexicographic comparison of exponent vectors over the same variable list.
bool grlex_less(const Exponents& a, const Exponents& b);

std::ostream& operator<<(std::ostream& os, const LaurentMPoly& p);

}  // namespace ajlab
