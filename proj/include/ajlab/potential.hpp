#pragma once

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ajlab/errors.hpp"
#include "ajlab/qhg.hpp"
#include "ajlab/ratfun.hpp"

namespace ajlab {

using cplx = std::complex<double>;

enum class Side { none, above, below };

/// Principal dilogarithm. On the cut (1, inf) a side must be chosen, else BranchError.
cplx li2(cplx z, Side side = Side::none);

/// Product of variable powers with coefficient 1 (arguments of logs and dilogs).
using Monomial = std::map<VarId, int>;

Monomial mono(std::initializer_list<std::pair<VarId, int>> powers);
LaurentMPoly to_poly(const Monomial& m);

/// c log u log v
struct LogLog {
  Rational c;
  Monomial u, v;
};
/// c Li2(M)
struct Dilog {
  Rational c;
  Monomial M;
};
/// c pi i log M
struct PiLog {
  Rational c;
  Monomial M;
};

/// Sum of terms with log of a monomial read as the sum of per-variable principal logs.
struct Potential {
  VarList region_vars;  // unknowns of the saddle system
  std::vector<LogLog> loglogs;
  std::vector<Dilog> dilogs;
  std::vector<PiLog> pilogs;
  cplx constant = 0;

  Potential& operator+=(const Potential& o);
  Potential operator-() const;
};

/// Which transcription of the negative-crossing potential to use.
enum class MinusForm {
  corrected,  // derivative forms agree with the shift ratios of R_c^-
  literal,    // -Li2(1/Z) form; its w-derivatives miss a factor w1 w3 / (w2 w4)
};

Potential crossing_potential(const CrossingData& c, MinusForm form = MinusForm::corrected);
/// -2 log(alpha) log(x) - Li2(alpha^2 x) + Li2(alpha^2 / x)
Potential figure_eight_potential();
/// Sum over crossings (mirror flips signs), or the builtin (mirror negates it).
Potential potential_from_spec(const KnotSpec& spec, MinusForm form = MinusForm::corrected);

/// Value with principal branches. SingularityError for a zero variable or Li2 at a point
/// where a side is needed.
cplx phi_eval(const Potential& P, cplx alpha, const std::vector<cplx>& w);

/// exp(v dPhi/dv) = (-1)^sign * prod base^exp.
struct DerivativeForm {
  std::vector<std::pair<LaurentMPoly, Rational>> factors;
  Rational sign = 0;

  void multiply(const LaurentMPoly& base, const Rational& e);
  /// Requires integer exponents.
  RationalFunction to_rational() const;
  /// Square root with all exponents halved; DomainError when some exponent is odd.
  DerivativeForm sqrt() const;
  cplx eval(const ComplexPoint& p) const;
};

/// Forms for alpha and each region variable, keyed by variable.
std::map<VarId, DerivativeForm> derivative_forms(const Potential& P);

struct SaddleResult {
  cplx alpha;
  std::vector<cplx> w;
  double residual = 0;
  double im_phi = 0;
  cplx l_squared;
  int iterations = 0;
};

struct SolverOptions {
  double tol = 1e-12;
  int max_iter = 100;
};

/// Newton on num_i - den_i = 0 where X_i = num_i / den_i. For real alpha the conjugate
/// solution is also a saddle; the one with larger Im Phi is returned.
SaddleResult solve_saddle(const Potential& P, cplx alpha, const std::vector<cplx>& w0,
                          const SolverOptions& opt = {});

/// Im Phi at the saddle for alpha = -1.
double volume(const Potential& P, const std::vector<cplx>& w0, const SolverOptions& opt = {});

/// |discrete - continuous| / |continuous| for the color shift ratio at q = exp(2 pi i / N),
/// index point m = round(a N), k_i = round(u_i N). For an n-convention summand the color shift
/// is E^2 (n = 2m + 1).
double asymptotic_check(const ProperQHTerm& F, const Potential& P, long N, const std::vector<double>& point);

nlohmann::json to_json(const SaddleResult& r);
/// "%.17g"
std::string format_double(double x);

}  // namespace ajlab
