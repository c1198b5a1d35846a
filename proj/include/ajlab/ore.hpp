#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ajlab/ratfun.hpp"

namespace ajlab {

/// Which shift acts on the first argument: E (n -> n+1, twisting Q = q^n) or
/// Em (m -> m+1, twisting Qm = q^m, with n = 2m+1).
enum class Meridian { n, m };

std::string to_string(Meridian m);
Meridian meridian_from_string(const std::string& s);

/// Element of the Ore algebra over Q(q)(Q, Qt1..Qt_nu) in shifts E, Et1..Et_nu, with
/// E Q = q Q E and Et_i Qt_i = q Qt_i Et_i. Stored in normal form: a(q, Q, Qt) E^e0 Et^e
/// with coefficients on the left.
class OreOperator {
 public:
  /// (e0, e1, ..., e_nu), all nonnegative.
  using Shift = std::vector<int>;
  using TermMap = std::map<Shift, RationalFunction>;

  explicit OreOperator(int nu = 0, Meridian mer = Meridian::n) : nu_(nu), mer_(mer) {}
  OreOperator(int nu, Meridian mer, TermMap terms);

  static OreOperator scalar(const RationalFunction& c, int nu = 0, Meridian mer = Meridian::n);
  static OreOperator monomial(const Shift& e, int nu = 0, Meridian mer = Meridian::n);

  int nu() const { return nu_; }
  Meridian meridian() const { return mer_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Largest exponent of shift i (0 = E or Em).
  int degree(int i) const;

  /// E or Em for i = 0, Et_i otherwise.
  VarId shift_var(int i) const;
  /// Q or Qm for i = 0, Qt_i otherwise.
  VarId twisted_var(int i) const;

  /// Coefficient-wise: sigma^e(f), the substitution X_i -> q^{e_i} X_i.
  RationalFunction twist(const RationalFunction& f, const Shift& e) const;

  OreOperator operator-() const;
  friend OreOperator operator+(const OreOperator& a, const OreOperator& b);
  friend OreOperator operator-(const OreOperator& a, const OreOperator& b) { return a + (-b); }
  friend OreOperator operator*(const OreOperator& a, const OreOperator& b);
  friend bool operator==(const OreOperator& a, const OreOperator& b) {
    return a.nu_ == b.nu_ && a.mer_ == b.mer_ && a.terms_ == b.terms_;
  }

  /// "(coeff)*E^2*Et1 + ..." in descending shift order; parse_operator reads it back.
  std::string to_string() const;

 private:
  int nu_;
  Meridian mer_;
  TermMap terms_;
};

/// Normal-form product; throws DomainError when nu or meridian differ.
OreOperator ore_mul(const OreOperator& a, const OreOperator& b);

OreOperator parse_operator(std::string_view text, int nu = 0, Meridian mer = Meridian::n);
nlohmann::json to_json(const OreOperator& p);
OreOperator operator_from_json(const nlohmann::json& j);

/// Value of a discrete function; in_support = false marks the conventional zero outside the
/// support (value is then 0).
struct EvalValue {
  Rational value;
  bool in_support = true;
};

/// Exact function of (n, k1..k_nu) at a rational q.
struct DiscreteEvaluator {
  int arity = 1;
  std::function<EvalValue(const std::vector<long>& point, const Rational& q)> eval;
};

/// sum_e coeff_e(q, q^point) f(point + e). Throws PoleError naming the coefficient on a pole.
Rational ore_apply(const OreOperator& P, const DiscreteEvaluator& f, const std::vector<long>& point,
                   const Rational& q);

/// Same, with q kept symbolic: f returns rational functions in q.
RationalFunction ore_apply_symbolic(const OreOperator& P,
                                    const std::function<RationalFunction(const std::vector<long>&)>& f,
                                    const std::vector<long>& point);

/// The discrete function P f.
DiscreteEvaluator apply_as_evaluator(const OreOperator& P, const DiscreteEvaluator& f);

struct Expansion {
  OreOperator p0;
  std::vector<OreOperator> r;  // r[i-1] multiplies (Et_i - 1); holds only Et_j with j >= i
};

/// P = P0 + sum_i (Et_i - 1) R_i with the Et_1-first sequential division. Requires P free of
/// Qt; throws DomainError otherwise.
Expansion expand_at_one(const OreOperator& P);
OreOperator reconstruct(const Expansion& x);

/// Summation range a*n + b .. c*n + d for one k-index.
struct AffineRange {
  long a_lo = 0, b_lo = 0, a_hi = 1, b_hi = 0;
  long lo(long n) const { return a_lo * n + b_lo; }
  long hi(long n) const { return a_hi * n + b_hi; }
};

struct TelescopeResult {
  Rational residual;  // P0 applied to G(n) = sum_k F(n, k)
  Rational boundary;  // sum_k sum_i ((Et_i - 1) R_i F)(n, k)
  Rational total;     // residual + boundary; 0 when P0 + sum (Et_i - 1) R_i annihilates F
};

/// Sums P0 F and the certificate terms over the box given by `bounds` (one range per k).
/// Throws DomainError when F is nonzero just past an upper bound at a shifted n, or when the
/// box is empty of ranges while F has k-arguments.
TelescopeResult telescope_sum_check(const OreOperator& P0, const std::vector<OreOperator>& R,
                                    const DiscreteEvaluator& F, long n,
                                    const std::vector<AffineRange>& bounds, const Rational& q);

/// eps(P) = unit * poly, where poly is the q = 1 image of the cleared operator as a commutative
/// polynomial in the twisted and shift variables, primitive with positive leading coefficient
/// in the first shift variable.
struct EpsilonImage {
  LaurentMPoly poly;
  RationalFunction unit;
};

/// Throws PoleError when the q = 1 image of the left unit has a pole.
EpsilonImage epsilon_eval(const OreOperator& P);

/// (E - 1) * f^-1 * P0. Throws DomainError for f = 0.
OreOperator homogenize(const OreOperator& P0, const RationalFunction& f);

/// Rewrites an Em/Qm operator in E/Q through Qm^2 = Q/q and Em = E^2. Throws ParityError on an
/// odd power of Qm.
OreOperator substitute_qm(const OreOperator& P);

}  // namespace ajlab
