#include <doctest.h>

#include <cmath>

#include "ajlab/elimination.hpp"
#include "ajlab/errors.hpp"
#include "ajlab/parse.hpp"
#include "ajlab/potential.hpp"
#include "ajlab/qhg.hpp"
#include "support.hpp"

using namespace ajlab;
using testsupport::uniform;

namespace {

double unit_real() { return std::uniform_real_distribution<double>(0, 1)(testsupport::rng()); }

// -int_0^1 log(1 - z t) / t dt by adaptive Simpson.
cplx simpson(const std::function<cplx(double)>& f, double a, double b, cplx fa, cplx fm, cplx fb, cplx whole, int depth) {
  double m = (a + b) / 2;
  cplx flm = f((a + m) / 2), frm = f((m + b) / 2);
  cplx left = (m - a) / 6 * (fa + 4.0 * flm + fm), right = (b - m) / 6 * (fm + 4.0 * frm + fb);
  if (depth <= 0 || std::abs(left + right - whole) < 1e-15) return left + right + (left + right - whole) / 15.0;
  return simpson(f, a, m, fa, flm, fm, left, depth - 1) + simpson(f, m, b, fm, frm, fb, right, depth - 1);
}

cplx li2_quadrature(cplx z) {
  auto f = [z](double t) { return t == 0 ? z : -std::log(1.0 - z * t) / t; };
  cplx fa = f(0), fm = f(0.5), fb = f(1);
  return simpson(f, 0, 1, fa, fm, fb, (fa + 4.0 * fm + fb) / 6.0, 40);
}

// Cl2(theta) = theta - theta log theta + sum |B_2n| theta^(2n+1) / (2n (2n+1)!)
double clausen(double theta) {
  std::vector<double> B{1.0};  // Bernoulli numbers B_0..B_60, double recurrence
  for (int m = 1; m <= 60; ++m) {
    double s = 0, binom = 1;
    for (int k = 0; k < m; ++k) {
      s += binom * B[k];
      binom = binom * (m + 1 - k) / (k + 1);
    }
    B.push_back(-s / (m + 1));
  }
  double sum = theta - theta * std::log(theta), fact = 1;
  for (int n = 1; 2 * n <= 60; ++n) {
    fact *= (2.0 * n) * (2.0 * n + 1);
    sum += std::abs(B[2 * n]) * std::pow(theta, 2 * n + 1) / (2.0 * n * fact);
  }
  return sum;
}

cplx random_point(double rlo = 0.6, double rhi = 1.4) {
  return std::polar(rlo + (rhi - rlo) * unit_real(), 2 * M_PI * unit_real() - M_PI);
}

// w dPhi/dw by central differences in log w.
cplx log_derivative(const Potential& P, cplx alpha, std::vector<cplx> w, int which, double h) {
  auto at = [&](double t) {
    cplx a = alpha;
    std::vector<cplx> ww = w;
    if (which < 0) {
      a *= std::exp(t);
    } else {
      ww[which] *= std::exp(t);
    }
    return phi_eval(P, a, ww);
  };
  return (at(h) - at(-h)) / (2 * h);
}

bool near_cut(const Potential& P, const ComplexPoint& pt) {
  for (const auto& d : P.dilogs) {
    cplx m = eval_complex(to_poly(d.M), pt);
    if (std::abs(m.imag()) < 1e-3 && m.real() > 0.99) return true;
    if (std::abs(m - 1.0) < 1e-2) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("li2 against quadrature and series") {
  for (int i = 0; i < 200; ++i) {
    cplx z = std::polar(3.0 * unit_real(), 2 * M_PI * unit_real());
    if (z.real() > 0.9 && std::abs(z.imag()) < 0.2) continue;
    cplx ref = li2_quadrature(z);
    CHECK(std::abs(li2(z) - ref) < 1e-12 * std::max(1.0, std::abs(ref)));
  }
  for (double x : {-0.3, 0.2, 0.45}) {
    cplx s = 0;
    for (int n = 1; n < 200; ++n) s += std::pow(x, n) / (double(n) * n);
    CHECK(std::abs(li2(x) - s) < 1e-15);
  }
  CHECK(std::abs(li2(1.0) - M_PI * M_PI / 6) < 1e-14);
  CHECK(std::abs(li2(-1.0) + M_PI * M_PI / 12) < 1e-14);
  CHECK(std::abs(li2(0.5) - (M_PI * M_PI / 12 - std::log(2.0) * std::log(2.0) / 2)) < 1e-14);
  CHECK(std::abs(li2(std::polar(1.0, M_PI / 3)).imag() - clausen(M_PI / 3)) < 1e-14);
}

TEST_CASE("li2 on the cut") {
  CHECK_THROWS_AS(li2(2.0), BranchError);
  for (double x : {1.5, 2.0, 7.0}) {
    cplx above = li2(x, Side::above), below = li2(x, Side::below);
    CHECK(std::abs(above - li2(cplx(x, 1e-13))) < 1e-9);
    CHECK(std::abs(below - li2(cplx(x, -1e-13))) < 1e-9);
    CHECK(std::abs(above - std::conj(below)) < 1e-14);
    CHECK(std::abs(above.imag() - M_PI * std::log(x)) < 1e-13);
  }
}

TEST_CASE("derivative forms against numerical differentiation") {
  std::vector<Potential> pots{figure_eight_potential()};
  for (int sign : {1, -1}) {
    pots.push_back(crossing_potential({sign, {1, 2, 3, 4}}));
    pots.push_back(crossing_potential({sign, {2, 4, 1, 3}}));
  }
  int checked = 0;
  for (const auto& P : pots) {
    auto forms = derivative_forms(P);
    for (int trial = 0; trial < 30; ++trial) {
      cplx alpha = random_point();
      std::vector<cplx> w;
      ComplexPoint pt{{vars::alpha, alpha}};
      for (const auto& v : P.region_vars) {
        w.push_back(random_point());
        pt[v] = w.back();
      }
      if (near_cut(P, pt)) continue;
      for (int i = -1; i < static_cast<int>(w.size()); ++i) {
        const VarId& v = i < 0 ? vars::alpha : P.region_vars[i];
        cplx X = forms.count(v) ? forms.at(v).eval(pt) : cplx(1.0);
        cplx d = log_derivative(P, alpha, w, i, 1e-5);
        cplx diff = d - std::log(X);
        diff -= cplx(0, 2 * M_PI * std::round(diff.imag() / (2 * M_PI)));
        CHECK(std::abs(diff) < 1e-6);
        ++checked;
      }
    }
  }
  CHECK(checked > 300);
}

TEST_CASE("figure-eight saddle and volume") {
  Potential P = figure_eight_potential();
  double v3 = clausen(M_PI / 3);
  double vol = volume(P, {cplx(0.5, 0.8)});
  CHECK(std::abs(vol - 2.029883212819307) < 1e-9);
  CHECK(std::abs(vol - 2 * v3) < 1e-12);
  // the other starting point converges to the conjugate, which loses the selection
  CHECK(std::abs(volume(P, {cplx(0.5, -0.8)}) - vol) < 1e-12);

  SaddleResult s = solve_saddle(P, -1.0, {cplx(0.5, 0.8)});
  CHECK(s.residual < 1e-12);
  CHECK(std::abs(s.l_squared - 1.0) < 1e-10);
  REQUIRE(s.w.size() == 1);
  CHECK(std::abs(s.w[0] - std::polar(1.0, -M_PI / 3)) < 1e-10);

  KnotSpec mirror;
  mirror.figure8 = true;
  mirror.mirror = true;
  CHECK(std::abs(volume(potential_from_spec(mirror), {cplx(0.5, 0.8)}) - vol) < 1e-12);
  KnotSpec empty;
  CHECK(volume(potential_from_spec(empty), {}) == 0);
}

TEST_CASE("numeric saddles satisfy the epsilon system") {
  EquationSystem sys = build_epsilon_system(habiro_figure_eight());
  Potential P = figure_eight_potential();
  std::vector<cplx> alphas{-1.0, cplx(-0.9, 0.2), cplx(-1.1, -0.3), cplx(0.7, 0.8)};
  for (cplx a : alphas) {
    SaddleResult s = solve_saddle(P, a, {cplx(0.5, 0.8)});
    ComplexPoint pt{{vars::alpha, a}, {vars::x, s.w[0]}, {vars::l, std::sqrt(s.l_squared)}};
    for (const auto& e : sys.equations) CHECK(std::abs(eval_complex(e.poly, pt)) < 1e-10);
  }
}

TEST_CASE("solver errors") {
  Potential P = figure_eight_potential();
  CHECK_THROWS_AS(solve_saddle(P, -1.0, {}), DomainError);
  CHECK_THROWS_AS(solve_saddle(P, -1.0, {cplx(0.0)}), DomainError);
  CHECK_THROWS_AS(solve_saddle(P, -1.0, {cplx(0.5, 0.8)}, {1e-12, 1}), ConvergenceError);
  CHECK_THROWS_AS(phi_eval(P, 0.0, {cplx(0.5)}), SingularityError);
  DerivativeForm f;
  f.multiply(parse_poly("1 - x"), 1);
  CHECK_THROWS_AS(f.sqrt(), DomainError);
  f.multiply(parse_poly("1 - x"), 1);
  CHECK(f.sqrt().to_rational() == parse_rational_function("1 - x"));
}

TEST_CASE("discrete and continuous color ratios converge") {
  ProperQHTerm F = habiro_figure_eight();
  Potential P = figure_eight_potential();
  std::vector<double> err;
  for (long N : {100, 200, 400, 800}) err.push_back(asymptotic_check(F, P, N, {0.3, 0.25}));
  for (std::size_t i = 1; i < err.size(); ++i) {
    CHECK(err[i] < err[i - 1]);
    double r = err[i - 1] / err[i];
    CHECK(r >= 1.5);
    CHECK(r <= 2.5);
  }
  CHECK(asymptotic_check(F, P, 400, {0.3, 0.25}) < asymptotic_check(F, P, 200, {0.3, 0.25}));

  // single positive crossing in the m-convention
  CrossingData c{1, {1, 2, 3, 4}};
  ProperQHTerm R = build_crossing(c, 4);
  Potential PR = crossing_potential(c);
  std::vector<double> e2;
  for (long N : {100, 200, 400}) e2.push_back(asymptotic_check(R, PR, N, {0.3, 0.1, 0.2, 0.3, 0.25}));
  CHECK(e2[1] < e2[0]);
  CHECK(e2[2] < e2[1]);

  KnotSpec empty;
  CHECK(asymptotic_check(summand(empty), potential_from_spec(empty), 100, {0.3}) == 0);
  CHECK_THROWS_AS(asymptotic_check(F, P, 1, {0.3, 0.25}), DomainError);
  CHECK_THROWS_AS(asymptotic_check(F, P, 20000, {0.3, 0.25}), DomainError);
  CHECK_THROWS_AS(asymptotic_check(F, P, 100, {0.3, 0.9}), SupportError);
}

TEST_CASE("saddle result JSON") {
  SaddleResult s = solve_saddle(figure_eight_potential(), -1.0, {cplx(0.5, 0.8)});
  auto j = to_json(s);
  CHECK(j.at("imPhi").get<std::string>() == format_double(s.im_phi));
  CHECK(j.at("w").size() == 1);
  CHECK(format_double(0.1) == "0.10000000000000001");
}
