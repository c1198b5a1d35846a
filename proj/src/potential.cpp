#include "ajlab/potential.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>

#include <Eigen/Dense>

#include "ajlab/polyalg.hpp"
#include "ajlab/subst.hpp"

namespace ajlab {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr int kBernoulliTerms = 60;

// B_n / (n+1)! for the series Li2(z) = sum_n B_n u^{n+1} / (n+1)!, u = -log(1 - z).
const std::array<double, kBernoulliTerms>& bernoulli_coefficients() {
  static const std::array<double, kBernoulliTerms> table = [] {
    std::vector<Rational> B(kBernoulliTerms);
    B[0] = 1;
    for (int m = 1; m < kBernoulliTerms; ++m) {
      Rational sum = 0;
      Integer binom = 1;  // C(m+1, k)
      for (int k = 0; k < m; ++k) {
        sum += Rational(binom) * B[k];
        binom = binom * (m + 1 - k) / (k + 1);
      }
      B[m] = -sum / (m + 1);
    }
    std::array<double, kBernoulliTerms> out{};
    Integer fact = 1;
    for (int n = 0; n < kBernoulliTerms; ++n) {
      fact *= n + 1;
      out[n] = Rational(B[n] / Rational(fact)).get_d();
    }
    return out;
  }();
  return table;
}

cplx li2_series(cplx z) {
  cplx u = -std::log(1.0 - z);
  const auto& b = bernoulli_coefficients();
  cplx sum = 0, up = u;
  for (int n = 0; n < kBernoulliTerms; ++n) {
    cplx t = b[n] * up;
    sum += t;
    if (n > 2 && b[n] != 0 && std::abs(t) < 1e-17 * std::abs(sum)) break;
    up *= u;
  }
  return sum;
}

// |z| <= 1
cplx li2_disc(cplx z) {
  if (z.real() > 0.5) {
    if (z == cplx(1.0, 0.0)) return kPi * kPi / 6;
    return kPi * kPi / 6 - std::log(z) * std::log(1.0 - z) - li2_series(1.0 - z);
  }
  return li2_series(z);
}

}  // namespace

cplx li2(cplx z, Side side) {
  if (z == cplx(0.0, 0.0)) return 0;
  if (z.imag() == 0.0 && z.real() > 1.0) {
    if (side == Side::none) throw BranchError("li2: argument " + format_double(z.real()) + " lies on the cut (1, inf)");
    double x = z.real(), lx = std::log(x);
    double re = kPi * kPi / 3 - 0.5 * lx * lx - li2_disc(1.0 / x).real();
    return {re, (side == Side::above ? 1 : -1) * kPi * lx};
  }
  if (std::abs(z) <= 1.0) return li2_disc(z);
  cplx lz = std::log(-z);
  return -li2_disc(1.0 / z) - kPi * kPi / 6 - 0.5 * lz * lz;
}

// ---- potentials -----------------------------------------------------------------------------

Monomial mono(std::initializer_list<std::pair<VarId, int>> powers) {
  Monomial m;
  for (const auto& [v, e] : powers) {
    if ((m[v] += e) == 0) m.erase(v);
  }
  return m;
}

LaurentMPoly to_poly(const Monomial& m) {
  return LaurentMPoly::monomial(1, std::vector<std::pair<VarId, int>>(m.begin(), m.end()));
}

namespace {

int exponent(const Monomial& m, const VarId& v) {
  auto it = m.find(v);
  return it == m.end() ? 0 : it->second;
}

}  // namespace

Potential& Potential::operator+=(const Potential& o) {
  VarList merged = merge_vars(region_vars, o.region_vars);
  region_vars = merged;
  loglogs.insert(loglogs.end(), o.loglogs.begin(), o.loglogs.end());
  dilogs.insert(dilogs.end(), o.dilogs.begin(), o.dilogs.end());
  pilogs.insert(pilogs.end(), o.pilogs.begin(), o.pilogs.end());
  constant += o.constant;
  return *this;
}

Potential Potential::operator-() const {
  Potential r = *this;
  for (auto& t : r.loglogs) t.c = -t.c;
  for (auto& t : r.dilogs) t.c = -t.c;
  for (auto& t : r.pilogs) t.c = -t.c;
  r.constant = -constant;
  return r;
}

Potential crossing_potential(const CrossingData& c, MinusForm form) {
  if (c.sign != 1 && c.sign != -1) throw DomainError("crossing sign must be +1 or -1");
  VarId a = vars::alpha;
  VarId w1 = vars::w(c.regions[0]), w2 = vars::w(c.regions[1]), w3 = vars::w(c.regions[2]),
        w4 = vars::w(c.regions[3]);
  Monomial A = mono({{a, 1}});
  Monomial Z = mono({{w1, 1}, {w3, 1}, {w2, -1}, {w4, -1}});
  Monomial Zi = mono({{w1, -1}, {w3, -1}, {w2, 1}, {w4, 1}});
  Potential P;
  for (int r : c.regions) {
    if (std::find(P.region_vars.begin(), P.region_vars.end(), vars::w(r)) == P.region_vars.end()) {
      P.region_vars.push_back(vars::w(r));
    }
  }
  std::sort(P.region_vars.begin(), P.region_vars.end());
  double zeta2 = kPi * kPi / 6;
  if (c.sign > 0) {
    P.loglogs = {{1, A, A}, {1, A, Z}, {-1, mono({{w2, 1}, {w1, -1}}), mono({{w3, 1}, {w2, -1}})}};
    P.constant = -zeta2;
    P.dilogs = {{-1, mono({{a, 1}, {w4, 1}, {w3, -1}})},
                {-1, mono({{a, 1}, {w4, 1}, {w1, -1}})},
                {1, Zi},
                {1, mono({{a, 1}, {w1, 1}, {w2, -1}})},
                {1, mono({{a, 1}, {w3, 1}, {w2, -1}})}};
  } else {
    P.loglogs = {{-1, A, A}, {-1, A, Z}, {1, mono({{w3, 1}, {w4, -1}}), mono({{w4, 1}, {w1, -1}})}};
    P.constant = zeta2;
    P.dilogs = {{-1, mono({{a, 1}, {w1, 1}, {w4, -1}})},
                {-1, mono({{a, 1}, {w3, 1}, {w4, -1}})},
                {1, mono({{a, 1}, {w2, 1}, {w3, -1}})},
                {1, mono({{a, 1}, {w2, 1}, {w1, -1}})}};
    if (form == MinusForm::literal) {
      P.dilogs.push_back({-1, Zi});
    } else {
      // Li2(Z) + pi i log Z in place of -Li2(1/Z)
      P.dilogs.push_back({1, Z});
      P.pilogs.push_back({1, Z});
    }
  }
  return P;
}

Potential figure_eight_potential() {
  VarId a = vars::alpha, x = vars::x;
  Potential P;
  P.region_vars = {x};
  P.loglogs = {{-2, mono({{a, 1}}), mono({{x, 1}})}};
  P.dilogs = {{-1, mono({{a, 2}, {x, 1}})}, {1, mono({{a, 2}, {x, -1}})}};
  return P;
}

Potential potential_from_spec(const KnotSpec& spec, MinusForm form) {
  if (spec.figure8) return spec.mirror ? -figure_eight_potential() : figure_eight_potential();
  Potential P;
  for (int i = 1; i <= spec.nu; ++i) P.region_vars.push_back(vars::w(i));
  for (auto c : spec.crossings) {
    if (spec.mirror) c.sign = -c.sign;
    P += crossing_potential(c, form);
  }
  return P;
}

namespace {

ComplexPoint make_point(const Potential& P, cplx alpha, const std::vector<cplx>& w) {
  if (w.size() != P.region_vars.size()) {
    throw DomainError("expected " + std::to_string(P.region_vars.size()) + " region values, got " +
                      std::to_string(w.size()));
  }
  ComplexPoint p{{vars::alpha, alpha}};
  for (std::size_t i = 0; i < w.size(); ++i) p[P.region_vars[i]] = w[i];
  return p;
}

cplx log_of(const Monomial& m, const ComplexPoint& p) {
  cplx r = 0;
  for (const auto& [v, e] : m) {
    auto it = p.find(v);
    if (it == p.end()) throw DomainError("unbound variable " + v.name());
    if (it->second == cplx(0.0, 0.0)) throw SingularityError("log of zero variable " + v.name());
    r += static_cast<double>(e) * std::log(it->second);
  }
  return r;
}

cplx value_of(const Monomial& m, const ComplexPoint& p) { return eval_complex(to_poly(m), p); }

std::string mono_string(const Monomial& m) { return to_poly(m).to_string(); }

}  // namespace

cplx phi_eval(const Potential& P, cplx alpha, const std::vector<cplx>& w) {
  ComplexPoint p = make_point(P, alpha, w);
  cplx r = P.constant;
  for (const auto& t : P.loglogs) r += t.c.get_d() * log_of(t.u, p) * log_of(t.v, p);
  for (const auto& t : P.pilogs) r += t.c.get_d() * cplx(0, kPi) * log_of(t.M, p);
  for (const auto& t : P.dilogs) {
    cplx z;
    try {
      z = value_of(t.M, p);
    } catch (const SingularityError&) {
      throw SingularityError("Li2(" + mono_string(t.M) + "): zero variable");
    }
    try {
      r += t.c.get_d() * li2(z);
    } catch (const BranchError&) {
      throw SingularityError("Li2(" + mono_string(t.M) + ") evaluated on its branch cut");
    }
  }
  return r;
}

// ---- derivative forms -----------------------------------------------------------------------

void DerivativeForm::multiply(const LaurentMPoly& base, const Rational& e) {
  if (e == 0) return;
  for (auto it = factors.begin(); it != factors.end(); ++it) {
    if (it->first == base) {
      it->second += e;
      if (it->second == 0) factors.erase(it);
      return;
    }
  }
  factors.emplace_back(base, e);
}

RationalFunction DerivativeForm::to_rational() const {
  RationalFunction r = 1;
  for (const auto& [b, e] : factors) {
    if (!is_integer(e)) throw DomainError("derivative form has a non-integer exponent " + e.get_str());
    r *= RationalFunction(b).pow(e.get_num().get_si());
  }
  if (!is_integer(sign)) throw DomainError("derivative form has a non-integer sign exponent");
  if (sign.get_num().get_si() % 2 != 0) r = -r;
  return r;
}

DerivativeForm DerivativeForm::sqrt() const {
  DerivativeForm r;
  for (const auto& [b, e] : factors) {
    Rational h = e / 2;
    if (!is_integer(h)) throw DomainError("derivative form is not a square: exponent " + e.get_str());
    r.factors.emplace_back(b, h);
  }
  r.sign = sign / 2;
  if (!is_integer(r.sign)) throw DomainError("derivative form is not a square: sign");
  return r;
}

cplx DerivativeForm::eval(const ComplexPoint& p) const {
  cplx r = std::exp(cplx(0, kPi * sign.get_d()));
  if (is_integer(sign)) r = (sign.get_num().get_si() % 2 == 0) ? 1.0 : -1.0;
  for (const auto& [b, e] : factors) {
    cplx v = eval_complex(b, p);
    if (is_integer(e)) {
      long k = e.get_num().get_si();
      cplx acc = 1.0, base = k < 0 ? 1.0 / v : v;
      for (long n = std::labs(k); n > 0; n >>= 1) {
        if (n & 1) acc *= base;
        base *= base;
      }
      r *= acc;
    } else {
      r *= std::pow(v, e.get_d());
    }
  }
  return r;
}

std::map<VarId, DerivativeForm> derivative_forms(const Potential& P) {
  std::map<VarId, DerivativeForm> out;
  if (P.loglogs.empty() && P.dilogs.empty() && P.pilogs.empty()) return out;
  VarList all{vars::alpha};
  all.insert(all.end(), P.region_vars.begin(), P.region_vars.end());
  for (const auto& v : all) {
    DerivativeForm f;
    for (const auto& t : P.loglogs) {
      f.multiply(to_poly(t.v), t.c * exponent(t.u, v));
      f.multiply(to_poly(t.u), t.c * exponent(t.v, v));
    }
    for (const auto& t : P.dilogs) f.multiply(LaurentMPoly(1) - to_poly(t.M), -t.c * exponent(t.M, v));
    for (const auto& t : P.pilogs) f.sign += t.c * exponent(t.M, v);
    out[v] = f;
  }
  return out;
}

// ---- saddle solving -------------------------------------------------------------------------

namespace {

struct NewtonSystem {
  VarList unknowns;
  std::vector<LaurentMPoly> num, den, eq;
  std::vector<std::vector<LaurentMPoly>> jac;
};

NewtonSystem newton_system(const Potential& P) {
  auto forms = derivative_forms(P);
  NewtonSystem s;
  s.unknowns = P.region_vars;
  for (const auto& v : s.unknowns) {
    RationalFunction X = forms.count(v) ? forms.at(v).to_rational() : RationalFunction(1);
    s.num.push_back(X.num());
    s.den.push_back(X.den());
    s.eq.push_back(X.num() - X.den());
    std::vector<LaurentMPoly> row;
    for (const auto& u : s.unknowns) row.push_back(s.eq.back().derivative(u));
    s.jac.push_back(std::move(row));
  }
  return s;
}

double residual_at(const NewtonSystem& s, const ComplexPoint& p) {
  double r = 0;
  for (std::size_t i = 0; i < s.eq.size(); ++i) {
    cplx d = eval_complex(s.den[i], p);
    if (d == cplx(0.0, 0.0)) return std::numeric_limits<double>::infinity();
    r = std::max(r, std::abs(eval_complex(s.num[i], p) / d - 1.0));
  }
  return r;
}

}  // namespace

SaddleResult solve_saddle(const Potential& P, cplx alpha, const std::vector<cplx>& w0, const SolverOptions& opt) {
  for (const auto& w : w0) {
    if (w == cplx(0.0, 0.0)) throw DomainError("initial guess has a zero coordinate");
  }
  NewtonSystem s = newton_system(P);
  std::size_t n = s.unknowns.size();
  ComplexPoint p = make_point(P, alpha, w0);
  SaddleResult res;
  res.alpha = alpha;
  double r = residual_at(s, p);
  int it = 0;
  while (!(r < opt.tol)) {
    if (it >= opt.max_iter) {
      throw ConvergenceError("Newton did not converge in " + std::to_string(opt.max_iter) + " iterations", r);
    }
    Eigen::MatrixXcd J(n, n);
    Eigen::VectorXcd f(n);
    for (std::size_t i = 0; i < n; ++i) {
      f(i) = eval_complex(s.eq[i], p);
      for (std::size_t j = 0; j < n; ++j) J(i, j) = eval_complex(s.jac[i][j], p);
    }
    Eigen::FullPivLU<Eigen::MatrixXcd> lu(J);
    if (!lu.isInvertible()) throw DegeneracyError("singular Jacobian at Newton step " + std::to_string(it));
    Eigen::VectorXcd d = lu.solve(-f);
    for (std::size_t i = 0; i < n; ++i) {
      p[s.unknowns[i]] += d(i);
      if (p[s.unknowns[i]] == cplx(0.0, 0.0)) throw DegeneracyError("Newton step hit a zero coordinate");
    }
    ++it;
    r = residual_at(s, p);
    if (!std::isfinite(r) && it >= opt.max_iter) throw ConvergenceError("Newton diverged", r);
  }
  std::vector<cplx> w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = p[s.unknowns[i]];
  res.w = w;
  res.residual = r;
  res.iterations = it;
  res.im_phi = phi_eval(P, alpha, w).imag();

  if (alpha.imag() == 0.0 && n > 0) {
    std::vector<cplx> wc(n);
    for (std::size_t i = 0; i < n; ++i) wc[i] = std::conj(w[i]);
    ComplexPoint pc = make_point(P, alpha, wc);
    double rc = residual_at(s, pc);
    if (rc < opt.tol) {
      double ic = phi_eval(P, alpha, wc).imag();
      bool take = ic > res.im_phi + 1e-12 ||
                  (std::abs(ic - res.im_phi) <= 1e-12 && wc[0].imag() > 0 && w[0].imag() <= 0);
      if (take) {
        res.w = wc;
        res.residual = rc;
        res.im_phi = ic;
        p = pc;
      }
    }
  }
  auto forms = derivative_forms(P);
  res.l_squared = forms.count(vars::alpha) ? forms.at(vars::alpha).eval(p) : cplx(1.0, 0.0);
  return res;
}

double volume(const Potential& P, const std::vector<cplx>& w0, const SolverOptions& opt) {
  if (P.region_vars.empty()) return phi_eval(P, -1.0, {}).imag();
  return solve_saddle(P, -1.0, w0, opt).im_phi;
}

// ---- asymptotics at roots of unity -----------------------------------------------------------

namespace {

cplx root_power(long N, long k, long den = 1) {
  // exp(2 pi i k / (den N)) with the argument reduced mod 2 pi
  long period = den * N;
  long r = ((k % period) + period) % period;
  return std::polar(1.0, 2 * kPi * static_cast<double>(r) / static_cast<double>(period));
}

bool denominators_nonnegative(const ProperQHTerm& F, const IndexPoint& p) {
  for (const auto& pf : F.pochs) {
    if (pf.denominator && pf.length.eval(p) < 0) return false;
  }
  return true;
}

}  // namespace

double asymptotic_check(const ProperQHTerm& F, const Potential& P, long N, const std::vector<double>& point) {
  if (N < 2 || N > 10000) throw DomainError("asymptotic_check: N must lie in 2..10000");
  auto idx = F.indices();
  if (!F.extra_colors.empty()) throw DomainError("asymptotic_check: two-color summands are not supported");
  if (point.size() != idx.size()) {
    throw DomainError("asymptotic_check: point needs " + std::to_string(idx.size()) + " coordinates");
  }
  if (P.region_vars.size() + 1 != idx.size()) throw DomainError("asymptotic_check: potential and summand differ in nu");
  for (double u : point) {
    if (!(u > 0 && u < 1)) throw DomainError("asymptotic_check: scaled coordinates must lie in (0, 1)");
  }
  long m = std::lround(point[0] * static_cast<double>(N));
  std::vector<long> k;
  for (std::size_t i = 1; i < point.size(); ++i) k.push_back(std::lround(point[i] * static_cast<double>(N)));

  bool ncon = F.meridian == Meridian::n;
  IndexPoint ip;
  ip[F.color_index()] = ncon ? 2 * m + 1 : m;
  for (std::size_t i = 0; i < k.size(); ++i) ip["k" + std::to_string(i + 1)] = k[i];
  IndexPoint shifted = ip;
  shifted[F.color_index()] += ncon ? 2 : 1;
  if (!denominators_nonnegative(F, ip) || !denominators_nonnegative(F, shifted)) {
    throw SupportError("asymptotic_check: index point outside the support");
  }

  RationalFunction r = shift_ratio(F, F.color_index());
  if (ncon) {
    r *= subst(r, {{vars::Q, RationalFunction(LaurentMPoly::var(vars::q) * LaurentMPoly::var(vars::Q))}});
  }
  ComplexPoint dp{{vars::q, root_power(N, 1)}, {vars::s, root_power(N, 1, 2)}};
  for (const auto& [name, v] : ip) {
    VarId X = index_qvar(name);
    dp[X] = root_power(N, v);
    dp[VarId(X.name() + "h")] = root_power(N, v, 2);
  }
  cplx discrete = eval_complex(r, dp);

  auto forms = derivative_forms(P);
  cplx continuous = 1.0;
  if (forms.count(vars::alpha)) {
    ComplexPoint cp{{vars::alpha, root_power(N, m)}};
    for (std::size_t i = 0; i < k.size(); ++i) cp[P.region_vars[i]] = root_power(N, k[i]);
    continuous = forms.at(vars::alpha).eval(cp);
  }
  return std::abs(discrete - continuous) / std::abs(continuous);
}

// ---- JSON -----------------------------------------------------------------------------------

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

nlohmann::json to_json(const SaddleResult& r) {
  auto c = [](cplx z) { return nlohmann::json::array({format_double(z.real()), format_double(z.imag())}); };
  nlohmann::json w = nlohmann::json::array();
  for (const auto& z : r.w) w.push_back(c(z));
  return {{"alpha", c(r.alpha)},         {"w", w},
          {"residuals", format_double(r.residual)}, {"imPhi", format_double(r.im_phi)},
          {"l_squared", c(r.l_squared)}, {"iterations", r.iterations}};
}

}  // namespace ajlab
