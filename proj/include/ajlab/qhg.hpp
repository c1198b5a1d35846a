#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ajlab/errors.hpp"
#include "ajlab/ore.hpp"
#include "ajlab/ratfun.hpp"
#include "ajlab/subst.hpp"

namespace ajlab {

/// Values of the summation indices by name ("n", "m", "m2", "k1", ...).
using IndexPoint = std::map<std::string, long>;

/// c + sum_v a_v * v with integer coefficients.
struct IndexForm {
  std::map<std::string, long> coef;
  long c = 0;

  static IndexForm var(const std::string& v, long a = 1) { return IndexForm{{{v, a}}, 0}; }
  static IndexForm constant(long c) { return IndexForm{{}, c}; }
  long coefficient(const std::string& v) const;
  long eval(const IndexPoint& p) const;
  IndexForm operator+(const IndexForm& o) const;
  IndexForm operator-(const IndexForm& o) const;
  IndexForm operator+(long k) const;
  IndexForm operator-(long k) const { return *this + (-k); }
  IndexForm scaled(long k) const;
  bool operator==(const IndexForm&) const = default;
  /// As a polynomial over index variables (for the quadratic exponent).
  LaurentMPoly poly() const;
  std::string to_string() const;
};

/// (base; q)_length, in the numerator or the denominator.
struct PochFactor {
  RationalFunction base;  // in q
  IndexForm length;
  bool denominator = false;
};

/// Which index carries the color: "n" with shift E and Q = q^n, or "m" with Em and Qm = q^m.
/// Region indices are "k1".."k<nu>" with Et_i and Qt_i.
///
/// F = constant * (-1)^sign * q^quad * prod_v xi_v^v * prod (A; q)_L^{+-1}
class ProperQHTerm {
 public:
  Meridian meridian = Meridian::n;
  int nu = 0;
  /// Extra color indices beyond the meridian (only "m2" for the two-color R-matrix).
  std::vector<std::string> extra_colors;
  std::vector<PochFactor> pochs;
  LaurentMPoly quad;  // rational coefficients over VarIds named like the indices
  IndexForm sign;
  std::map<std::string, RationalFunction> prefactor;
  RationalFunction constant = 1;
  /// Names for Qt_i after q = 1 (defaults to w_i).
  std::vector<VarId> region_vars;

  std::string color_index() const { return meridian == Meridian::n ? "n" : "m"; }
  /// Ordered index names: color, extra colors, k1..k_nu.
  std::vector<std::string> indices() const;
  VarId region_var(int i) const;

  ProperQHTerm operator*(const ProperQHTerm& o) const;
  ProperQHTerm inverse() const;
};

/// Commutative variable standing for q^index.
VarId index_qvar(const std::string& index);
/// Shift operator symbol for an index.
VarId index_shift(const std::string& index);

struct CrossingData {
  int sign = 1;
  std::array<int, 4> regions{1, 2, 3, 4};  // j1..j4, 1-based region indices
};

/// Product of SO(3) crossing R-matrices (m-convention), or the figure-eight Habiro term.
struct KnotSpec {
  bool figure8 = false;
  bool mirror = false;
  std::vector<CrossingData> crossings;
  int nu = 0;
  std::map<int, long> fixed;  // region index -> fixed k value for diagram sums
};

KnotSpec knot_spec_from_json(const nlohmann::json& j);
nlohmann::json to_json(const KnotSpec& s);

/// Single-crossing SO(3) R-matrix term R_c^{sign} with q^{+-(m^2+m)} framing, over nu regions.
ProperQHTerm build_crossing(const CrossingData& c, int nu);
/// Two-color R-matrix with exponent -(m+m2)/2 (...) and no framing factor.
ProperQHTerm build_crossing_two_color(const CrossingData& c, int nu);
/// {a}! = prod_{j=1}^a (s^j - s^-j) with q = s^2, as a proper term.
ProperQHTerm bracket_factorial(const IndexForm& a, Meridian mer, int nu);
/// F(n, i) = {n+i}! / ({n} {n-i-1}!), index i = k1, region variable x.
ProperQHTerm habiro_figure_eight();
ProperQHTerm summand(const KnotSpec& spec);

/// F(index + 1) / F as a rational function of q and the q^index variables.
/// `which` is an index name ("n", "m", "k1", ...). Half-integer exponents use s (q = s^2)
/// for the constant part and <Qvar>h = q^(index/2) for index-dependent parts.
RationalFunction shift_ratio(const ProperQHTerm& F, const std::string& which);
/// The q = 1 image of shift_ratio (s = 1 too). Throws PoleError.
RationalFunction epsilon_ratio(const ProperQHTerm& F, const std::string& which);

// ---- evaluation ----------------------------------------------------------------------------

/// q as an exact rational (s = sqrt(q) needed only for half-integer exponents).
struct ExactQ {
  using Value = Rational;
  Rational q;
  std::optional<Rational> s;

  Value one() const { return 1; }
  Value lift(const Rational& r) const { return r; }
  Value qpow(const Rational& e) const;
  Value eval(const RationalFunction& f) const;
};

/// q kept symbolic; use_s writes everything in s with q = s^2.
struct SymbolicQ {
  using Value = RationalFunction;
  bool use_s = false;

  Value one() const { return 1; }
  Value lift(const Rational& r) const { return r; }
  Value qpow(const Rational& e) const;
  Value eval(const RationalFunction& f) const;
};

/// q = r e^{i theta} in double precision.
struct ComplexQ {
  using Value = std::complex<double>;
  double r = 1;
  double theta = 0;

  static ComplexQ root_of_unity(long N) { return {1.0, 2 * M_PI / static_cast<double>(N)}; }
  Value one() const { return 1.0; }
  Value lift(const Rational& x) const { return x.get_d(); }
  Value qpow(const Rational& e) const { return std::polar(std::pow(r, e.get_d()), theta * e.get_d()); }
  Value eval(const RationalFunction& f) const;
};

template <class T>
struct TermValue {
  T value;
  bool in_support = true;
};

namespace detail {

Rational eval_quad(const LaurentMPoly& quad, const IndexPoint& p);

template <class Field, class T>
T ipow(const Field& K, T x, long e) {
  if (e < 0) return K.one() / ipow(K, x, -e);
  T r = K.one();
  while (e > 0) {
    if (e & 1) r = r * x;
    e >>= 1;
    if (e > 0) x = x * x;
  }
  return r;
}

}  // namespace detail

/// F at an index point. A denominator Pochhammer of negative length gives the conventional zero
/// (in_support = false); a numerator one uses (A;q)_{-j} = 1 / prod_{i=1}^j (1 - A q^-i) and
/// throws PoleError when that vanishes.
template <class Field>
TermValue<typename Field::Value> evaluate(const ProperQHTerm& F, const IndexPoint& p, const Field& K) {
  using T = typename Field::Value;
  for (const auto& pf : F.pochs) {
    if (pf.denominator && pf.length.eval(p) < 0) return {K.lift(0), false};
  }
  T v = K.eval(F.constant);
  if (F.sign.eval(p) % 2 != 0) v = -v;
  v = v * K.qpow(detail::eval_quad(F.quad, p));
  for (const auto& [idx, xi] : F.prefactor) v = v * detail::ipow(K, K.eval(xi), p.at(idx));
  for (const auto& pf : F.pochs) {
    long L = pf.length.eval(p);
    T A = K.eval(pf.base);
    T prod = K.one();
    if (L >= 0) {
      for (long j = 0; j < L; ++j) prod = prod * (K.one() - A * K.qpow(j));
    } else {
      T inv = K.one();
      for (long j = 1; j <= -L; ++j) inv = inv * (K.one() - A * K.qpow(-j));
      if (inv == K.lift(0)) throw PoleError("numerator Pochhammer of negative length " + std::to_string(L) + " has a pole");
      prod = K.one() / inv;
    }
    if (pf.denominator) {
      if (prod == K.lift(0)) throw PoleError("denominator Pochhammer (" + pf.length.to_string() + ") vanishes");
      v = v / prod;
    } else {
      v = v * prod;
    }
  }
  return {v, true};
}

/// Point vector in indices() order -> IndexPoint.
IndexPoint index_point(const ProperQHTerm& F, const std::vector<long>& point);

/// Exact evaluator over (color, k1..k_nu) for ore_apply and telescope checks.
DiscreteEvaluator as_evaluator(const ProperQHTerm& F);

/// Summation box for a diagram spec at color m (interval propagation over the denominator
/// length constraints). Throws SupportError when some region stays unbounded.
std::vector<std::pair<long, long>> support_box(const ProperQHTerm& F, long color, const std::map<int, long>& fixed);

/// J_n: builtin figure-eight sums i = 0..n-1; diagram specs need odd n = 2m+1 and sum over the
/// support box of the product of crossing terms.
template <class Field>
typename Field::Value jones_eval(const KnotSpec& spec, long n, const Field& K) {
  if (n < 1) throw DomainError("jones_eval: n must be positive");
  if (spec.mirror && spec.figure8) throw DomainError("jones_eval: mirror of the builtin summand is not supported");
  ProperQHTerm F = summand(spec);
  typename Field::Value sum = K.lift(0);
  if (spec.figure8) {
    for (long i = 0; i < n; ++i) {
      auto t = evaluate(F, {{"n", n}, {"k1", i}}, K);
      if (t.in_support) sum = sum + t.value;
    }
    return sum;
  }
  if (n % 2 == 0) throw DomainError("jones_eval: diagram summands need odd n = 2m+1");
  long m = (n - 1) / 2;
  auto box = support_box(F, m, spec.fixed);
  std::vector<long> k(box.size());
  for (std::size_t i = 0; i < box.size(); ++i) {
    if (box[i].first > box[i].second) return sum;
    k[i] = box[i].first;
  }
  while (true) {
    IndexPoint p{{"m", m}};
    for (std::size_t i = 0; i < k.size(); ++i) p["k" + std::to_string(i + 1)] = k[i];
    auto t = evaluate(F, p, K);
    if (t.in_support) sum = sum + t.value;
    std::size_t i = 0;
    for (; i < k.size(); ++i) {
      if (++k[i] <= box[i].second) break;
      k[i] = box[i].first;
    }
    if (i == k.size()) return sum;
  }
}

// ---- figure-eight data (text format) ------------------------------------------------------

namespace figure8 {
/// P(E, Q, Et1), the annihilator of the Habiro summand.
extern const char* const kP;
/// P0(E, Q) = P(E, Q, 1).
extern const char* const kP0;
/// R(E, Q) with P = P0 + (Et1 - 1) R.
extern const char* const kR;
/// alpha(q, E, Q) with P0 = (1 + q Q) alpha (Q - 1).
extern const char* const kAlpha;
/// Third-order annihilator of J(n).
extern const char* const kCubic;
/// Inhomogeneity f(q, Q) = q Q + 1 of P0 J + f = 0.
extern const char* const kInhomogeneity;
/// The A-polynomial factor in (l, alpha).
extern const char* const kAPoly;
}  // namespace figure8

}  // namespace ajlab
