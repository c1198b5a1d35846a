// One line per acceptance criterion; exit status 1 if any checked criterion fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>

#include "ajlab/elimination.hpp"
#include "ajlab/parse.hpp"
#include "ajlab/polyalg.hpp"
#include "ajlab/potential.hpp"
#include "ajlab/qhg.hpp"
#include "support.hpp"

using namespace ajlab;
using testsupport::random_nonzero;
using testsupport::random_poly;
using testsupport::uniform;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

int failures = 0;

void report(int id, bool pass, const std::string& what) {
  std::printf("%s %d %s\n", pass ? "PASS" : "FAIL", id, what.c_str());
  if (!pass) ++failures;
}

void guarded(int id, const std::function<void()>& body) {
  try {
    body();
  } catch (const std::exception& e) {
    report(id, false, std::string("exception: ") + e.what());
  }
}

const std::vector<Rational> kQs{2, 3, Rational(5, 2), 7, 11};

KnotSpec figure8_spec() {
  KnotSpec k;
  k.figure8 = true;
  k.nu = 1;
  return k;
}

DiscreteEvaluator jones_evaluator() {
  KnotSpec k = figure8_spec();
  return {1, [k](const std::vector<long>& p, const Rational& q) {
            if (p[0] < 1) return EvalValue{0, false};
            return EvalValue{jones_eval(k, p[0], ExactQ{q, std::nullopt}), true};
          }};
}

// Im Li2(e^{i theta}) = Cl2(theta) from its Bernoulli series.
double clausen(double theta) {
  std::vector<double> B{1.0};
  for (int m = 1; m <= 40; ++m) {
    double s = 0, binom = 1;
    for (int k = 0; k < m; ++k) {
      s += binom * B[k];
      binom = binom * (m + 1 - k) / (k + 1);
    }
    B.push_back(-s / (m + 1));
  }
  double sum = theta - theta * std::log(theta), fact = 1;
  for (int n = 1; 2 * n <= 40; ++n) {
    fact *= (2.0 * n) * (2.0 * n + 1);
    sum += std::abs(B[2 * n]) * std::pow(theta, 2 * n + 1) / (2.0 * n * fact);
  }
  return sum;
}

OreOperator random_op(int nu) {
  std::vector<VarId> vs{vars::q, vars::Q};
  for (int i = 1; i <= nu; ++i) vs.push_back(vars::Qt(i));
  OreOperator P(nu);
  for (int t = static_cast<int>(uniform(1, 3)); t > 0; --t) {
    OreOperator::Shift e(nu + 1);
    for (auto& x : e) x = static_cast<int>(uniform(0, 2));
    LaurentMPoly den(1);
    if (uniform(0, 1)) den += LaurentMPoly::monomial(Rational(uniform(1, 3)), {{vs[uniform(0, vs.size() - 1)], 1}});
    P = P + OreOperator::scalar(RationalFunction(random_nonzero(vs, 3, -1, 2), den), nu) * OreOperator::monomial(e, nu);
  }
  return P;
}

}  // namespace

int main() {
  LaurentMPoly apoly = parse_poly(figure8::kAPoly);
  LaurentMPoly eliminant;

  guarded(1, [&] {
    auto t0 = Clock::now();
    EquationSystem sys = build_epsilon_system(habiro_figure_eight());
    APolyCandidate a = eliminate(sys, default_order(sys));
    double t = seconds_since(t0);
    eliminant = a.poly;
    bool same = normalize_leading(a.poly, vars::l) == normalize_leading(apoly, vars::l);
    report(1, same && t < 1.0,
           "figure-eight eliminant " + a.poly.to_string() + (same ? " equals" : " differs from") + " the A-polynomial factor; " +
               format_double(t) + " s");
  });

  guarded(2, [&] {
    if (eliminant.is_zero()) throw DomainError("no eliminant from criterion 1");
    Identity id = aj_compare(parse_operator(figure8::kP0), eliminant);
    RationalFunction unit = parse_rational_function(id.unit);
    bool finite = !unit.is_zero() && unit.vars() == VarList{vars::alpha};
    report(2, id.pass && finite, "eps(P0)(l, alpha^2) = unit * eliminant with unit " + id.unit);
  });

  guarded(3, [&] {
    OreOperator P0 = parse_operator(figure8::kP0);
    auto J = jones_evaluator();
    int bad = 0, rows = 0;
    for (const auto& q : kQs) {
      for (long n = 1; n <= 8; ++n) {
        Rational r = ore_apply(P0, J, {n}, q) + pow(q, n + 1) + 1;
        if (r != 0) ++bad;
        ++rows;
      }
    }
    report(3, bad == 0, "P0 J(n) + q^(n+1) + 1 = 0 at " + std::to_string(rows) + " (n, q) pairs, " +
                            std::to_string(bad) + " nonzero");
  });

  guarded(4, [&] {
    OreOperator cubic = parse_operator(figure8::kCubic);
    auto J = jones_evaluator();
    int bad = 0;
    for (const auto& q : kQs) {
      for (long n = 1; n <= 8; ++n) {
        if (ore_apply(cubic, J, {n}, q) != 0) ++bad;
      }
    }
    RationalFunction f = parse_rational_function(figure8::kInhomogeneity);
    OreOperator rebuilt = (parse_operator("E") - parse_operator("1")) * OreOperator::scalar(f.inverse()) *
                          OreOperator::scalar(f) * parse_operator(figure8::kAlpha) * parse_operator("Q - 1");
    bool same = rebuilt == cubic;
    report(4, bad == 0 && same,
           "cubic annihilates J(n) (" + std::to_string(bad) + " nonzero of 40); product reconstruction " +
               (same ? "matches" : "differs"));
  });

  guarded(5, [&] {
    int pass = 0, total = 0;
    for (int sign : {1, -1}) {
      for (const auto& id : prop_comp_check({sign, {1, 2, 3, 4}})) {
        ++total;
        if (id.pass) ++pass;
      }
    }
    report(5, total == 10 && pass == 10,
           std::to_string(pass) + "/" + std::to_string(total) + " derivative-form identities hold exactly");
  });

  guarded(6, [&] {
    auto t0 = Clock::now();
    double v = volume(figure_eight_potential(), {cplx(0.5, 0.8)});
    double t = seconds_since(t0);
    double oracle = 2 * clausen(M_PI / 3);
    bool ok = std::abs(v - 2.029883212819307) < 1e-9 && std::abs(v - oracle) < 1e-9 && t < 0.1;
    report(6, ok, "volume " + format_double(v) + ", series " + format_double(oracle) + "; " + format_double(t) + " s");
  });

  guarded(7, [&] {
    SaddleResult s = solve_saddle(figure_eight_potential(), -1.0, {cplx(0.5, 0.8)});
    EquationSystem sys = build_epsilon_system(habiro_figure_eight());
    ComplexPoint pt{{vars::alpha, s.alpha}, {vars::x, s.w[0]}, {vars::l, std::sqrt(s.l_squared)}};
    double worst = 0;
    for (const auto& e : sys.equations) worst = std::max(worst, std::abs(eval_complex(e.poly, pt)));
    double dl = std::abs(s.l_squared - 1.0);
    report(7, dl < 1e-10 && worst < 1e-10,
           "|l^2 - 1| = " + format_double(dl) + ", max epsilon-system residual " + format_double(worst));
  });

  guarded(8, [&] {
    ProperQHTerm F = habiro_figure_eight();
    Potential P = figure_eight_potential();
    std::vector<double> err;
    for (long N : {100, 200, 400, 800}) err.push_back(asymptotic_check(F, P, N, {0.3, 0.25}));
    bool ok = true;
    std::string ratios;
    for (std::size_t i = 1; i < err.size(); ++i) {
      double r = err[i - 1] / err[i];
      ok = ok && err[i] < err[i - 1] && r >= 1.5 && r <= 2.5;
      ratios += (i > 1 ? ", " : "") + format_double(r);
    }
    report(8, ok, "relative errors decrease with ratios " + ratios);
  });

  guarded(9, [&] {
    int cases = 0, bad = 0;
    // ring and resultant properties
    std::vector<VarId> vs{VarId("x"), vars::l, vars::alpha};
    for (int i = 0; i < 200; ++i, ++cases) {
      auto a = random_poly(vs, 4, 0, 4), b = random_poly(vs, 4, 0, 4), c = random_poly(vs, 4, 0, 4);
      if (!((a * b) * c == a * (b * c) && a * (b + c) == a * b + a * c && a * b == b * a)) ++bad;
    }
    int res_cases = 0;
    for (int i = 0; i < 400 && res_cases < 200; ++i) {
      auto a = random_nonzero({VarId("x"), vars::l}, 3, 0, 3), b = random_nonzero({VarId("x"), vars::l}, 3, 0, 3),
           c = random_nonzero({VarId("x"), vars::l}, 3, 0, 3);
      if (a.degree(VarId("x")) < 1 || b.degree(VarId("x")) < 1 || c.degree(VarId("x")) < 1) continue;
      ++res_cases;
      if (resultant(a * b, c, VarId("x")) != resultant(a, c, VarId("x")) * resultant(b, c, VarId("x"))) ++bad;
    }
    // ore associativity
    int triples = 0;
    for (; triples < 100; ++triples) {
      int nu = static_cast<int>(uniform(0, 2));
      auto a = random_op(nu), b = random_op(nu), c = random_op(nu);
      if ((a * b) * c != a * (b * c)) ++bad;
    }
    // shift-ratio consistency
    int points = 0;
    ProperQHTerm H = habiro_figure_eight(), R = build_crossing({1, {1, 2, 3, 4}}, 4), Rm = build_crossing({-1, {1, 2, 3, 4}}, 4);
    for (int i = 0; i < 2000 && points < 150; ++i) {
      const ProperQHTerm& F = i % 3 == 0 ? H : (i % 3 == 1 ? R : Rm);
      auto idx = F.indices();
      IndexPoint p;
      for (const auto& name : idx) p[name] = name == "n" ? uniform(1, 6) : uniform(-1, 4);
      const std::string& which = idx[uniform(0, idx.size() - 1)];
      Rational q = kQs[uniform(0, 4)];
      ExactQ K{q, std::nullopt};
      TermValue<Rational> f0, f1;
      IndexPoint p1 = p;
      ++p1[which];
      try {
        f0 = evaluate(F, p, K);
        f1 = evaluate(F, p1, K);
      } catch (const PoleError&) {
        continue;
      }
      if (!f0.in_support || f0.value == 0 || !f1.in_support) continue;
      ExactPoint pt{{vars::q, q}};
      for (const auto& name : idx) pt[index_qvar(name)] = pow(q, p.at(name));
      RationalFunction r = shift_ratio(F, which);
      ExactPoint used;
      for (const auto& v : r.vars()) used[v] = pt.at(v);
      if (eval_exact(r, used) != f1.value / f0.value) ++bad;
      ++points;
    }
    // telescoping
    auto x = expand_at_one(parse_operator(figure8::kP, 1));
    auto HF = as_evaluator(H);
    int tele = 0;
    for (const auto& q : kQs) {
      for (long n = 1; n <= 8; ++n, ++tele) {
        if (telescope_sum_check(x.p0, x.r, HF, n, {{0, 0, 1, 3}}, q).total != 0) ++bad;
      }
    }
    bool ok = bad == 0 && cases >= 200 && res_cases >= 200 && triples >= 100 && points >= 150;
    report(9, ok,
           std::to_string(cases) + " ring, " + std::to_string(res_cases) + " resultant, " + std::to_string(triples) +
               " associativity, " + std::to_string(points) + " shift-ratio, " + std::to_string(tele) +
               " telescoping cases; " + std::to_string(bad) + " failures");
  });

  std::printf("EXCLUDED 10 generic-q derivation of A_q by noncommutative elimination is not attempted; "
              "criteria 3 and 4 verify certificates instead\n");

  return failures == 0 ? 0 : 1;
}
