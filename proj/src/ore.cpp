#include "ajlab/ore.hpp"

#include <algorithm>

#include "ajlab/errors.hpp"
#include "ajlab/parse.hpp"
#include "ajlab/polyalg.hpp"
#include "ajlab/subst.hpp"

namespace ajlab {

std::string to_string(Meridian m) { return m == Meridian::n ? "n" : "m"; }

Meridian meridian_from_string(const std::string& s) {
  if (s == "n") return Meridian::n;
  if (s == "m") return Meridian::m;
  throw ParseError("meridian must be \"n\" or \"m\", got \"" + s + "\"");
}

namespace {

// p with each v^k (v in shifts) multiplied by q^{k * shifts[v]}.
LaurentMPoly twist_poly(const LaurentMPoly& p, const std::vector<std::pair<VarId, int>>& shifts) {
  std::vector<std::pair<int, int>> slots;  // (index in p.vars(), q-step)
  for (const auto& [v, s] : shifts) {
    int idx = p.var_index(v);
    if (idx >= 0 && s != 0) slots.emplace_back(idx, s);
  }
  if (slots.empty()) return p;
  VarList vars = merge_vars(p.vars(), {vars::q});
  auto src = align_terms(p, vars);
  int qi = static_cast<int>(std::find(vars.begin(), vars.end(), vars::q) - vars.begin());
  // Slots refer to p.vars(); re-locate them in the merged list.
  std::vector<std::pair<int, int>> moved;
  for (auto [idx, s] : slots) {
    int j = static_cast<int>(std::find(vars.begin(), vars.end(), p.vars()[idx]) - vars.begin());
    moved.emplace_back(j, s);
  }
  LaurentMPoly::TermMap out;
  for (const auto& [e0, c] : src) {
    Exponents e = e0;
    for (auto [j, s] : moved) e[qi] += e[j] * s;
    out[e] += c;
  }
  return LaurentMPoly(vars, std::move(out));
}

void check_same_algebra(const OreOperator& a, const OreOperator& b) {
  if (a.nu() != b.nu()) {
    throw DomainError("Ore operators over different algebras: nu = " + std::to_string(a.nu()) + " vs " +
                      std::to_string(b.nu()));
  }
  if (a.meridian() != b.meridian()) throw DomainError("Ore operators with different meridian shifts");
}

LaurentMPoly shift_monomial(const OreOperator& ctx, const OreOperator::Shift& e) {
  std::vector<std::pair<VarId, int>> powers;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] != 0) powers.emplace_back(ctx.shift_var(static_cast<int>(i)), e[i]);
  }
  return LaurentMPoly::monomial(1, powers);
}

}  // namespace

OreOperator::OreOperator(int nu, Meridian mer, TermMap terms) : nu_(nu), mer_(mer) {
  for (auto& [e, c] : terms) {
    if (static_cast<int>(e.size()) != nu + 1) throw DomainError("shift vector length must be nu + 1");
    for (int k : e) {
      if (k < 0) throw DomainError("negative shift exponent");
    }
    for (int i = 0; i <= nu; ++i) {
      if (c.has_var(shift_var(i))) throw DomainError("coefficient contains shift variable " + shift_var(i).name());
    }
    if (!c.is_zero()) terms_.emplace(e, std::move(c));
  }
}

OreOperator OreOperator::scalar(const RationalFunction& c, int nu, Meridian mer) {
  return OreOperator(nu, mer, {{Shift(nu + 1, 0), c}});
}

OreOperator OreOperator::monomial(const Shift& e, int nu, Meridian mer) { return OreOperator(nu, mer, {{e, 1}}); }

int OreOperator::degree(int i) const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[i]);
  return d;
}

VarId OreOperator::shift_var(int i) const {
  if (i == 0) return mer_ == Meridian::n ? vars::E : vars::Em;
  return vars::Et(i);
}

VarId OreOperator::twisted_var(int i) const {
  if (i == 0) return mer_ == Meridian::n ? vars::Q : vars::Qm;
  return vars::Qt(i);
}

RationalFunction OreOperator::twist(const RationalFunction& f, const Shift& e) const {
  std::vector<std::pair<VarId, int>> shifts;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] != 0) shifts.emplace_back(twisted_var(static_cast<int>(i)), e[i]);
  }
  if (shifts.empty()) return f;
  return f.map_coprime([&](const LaurentMPoly& p) { return twist_poly(p, shifts); });
}

OreOperator OreOperator::operator-() const {
  OreOperator r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

OreOperator operator+(const OreOperator& a, const OreOperator& b) {
  check_same_algebra(a, b);
  OreOperator r = a;
  for (const auto& [e, c] : b.terms_) {
    auto it = r.terms_.find(e);
    if (it == r.terms_.end()) {
      r.terms_.emplace(e, c);
      continue;
    }
    it->second += c;
    if (it->second.is_zero()) r.terms_.erase(it);
  }
  return r;
}

OreOperator operator*(const OreOperator& a, const OreOperator& b) {
  check_same_algebra(a, b);
  OreOperator r(a.nu_, a.mer_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      OreOperator::Shift e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      RationalFunction c = ca * a.twist(cb, ea);
      auto it = r.terms_.find(e);
      if (it == r.terms_.end()) {
        r.terms_.emplace(e, c);
      } else {
        it->second += c;
        if (it->second.is_zero()) r.terms_.erase(it);
      }
    }
  }
  return r;
}

OreOperator ore_mul(const OreOperator& a, const OreOperator& b) { return a * b; }

std::string OreOperator::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += shift_var(static_cast<int>(i)).name();
      if (e[i] != 1) mono += "^" + std::to_string(e[i]);
    }
    std::string coeff = c.to_string();
    std::string term;
    if (mono.empty()) {
      term = c.is_polynomial() && c.num().size() == 1 ? coeff : "(" + coeff + ")";
    } else if (c == RationalFunction(1)) {
      term = mono;
    } else if (c == RationalFunction(-1)) {
      term = "-" + mono;
    } else if (c.is_polynomial() && c.num().size() == 1) {
      term = coeff + "*" + mono;
    } else {
      term = "(" + coeff + ")*" + mono;
    }
    if (out.empty()) {
      out = term;
    } else if (term[0] == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out;
}

namespace {

struct OreAlgebra {
  using Value = OreOperator;
  int nu;
  Meridian mer;

  bool is_scalar(const Value& v) const {
    return v.is_zero() || (v.terms().size() == 1 && v.degree(0) == 0 &&
                           std::all_of(v.terms().begin()->first.begin(), v.terms().begin()->first.end(),
                                       [](int k) { return k == 0; }));
  }
  RationalFunction scalar_value(const Value& v) const {
    return v.is_zero() ? RationalFunction() : v.terms().begin()->second;
  }

  Value number(const Rational& r) const { return OreOperator::scalar(r, nu, mer); }
  Value symbol(std::string_view name) const {
    std::string s(name);
    if (!is_valid_identifier(s)) throw ParseError("bad identifier '" + s + "'");
    OreOperator probe(nu, mer);
    for (int i = 0; i <= nu; ++i) {
      if (s == probe.shift_var(i).name()) {
        OreOperator::Shift e(nu + 1, 0);
        e[i] = 1;
        return OreOperator::monomial(e, nu, mer);
      }
    }
    if (s == "E" || s == "Em" || (s.rfind("Et", 0) == 0 && s.size() > 2)) {
      throw ParseError("shift symbol " + s + " is not part of this operator algebra");
    }
    return OreOperator::scalar(RationalFunction::var(VarId(s)), nu, mer);
  }
  Value add(const Value& a, const Value& b) const { return a + b; }
  Value sub(const Value& a, const Value& b) const { return a - b; }
  Value mul(const Value& a, const Value& b) const { return a * b; }
  Value div(const Value& a, const Value& b) const {
    if (!is_scalar(b)) throw ParseError("division by an operator containing shifts");
    if (b.is_zero()) throw ParseError("division by zero");
    return a * OreOperator::scalar(scalar_value(b).inverse(), nu, mer);
  }
  Value neg(const Value& a) const { return -a; }
  Value pow(const Value& a, long e) const {
    if (e < 0) {
      if (!is_scalar(a) || a.is_zero()) throw ParseError("negative power of an operator");
      return OreOperator::scalar(scalar_value(a).pow(e), nu, mer);
    }
    Value r = number(1);
    for (long i = 0; i < e; ++i) r = r * a;
    return r;
  }
};

}  // namespace

OreOperator parse_operator(std::string_view text, int nu, Meridian mer) {
  OreAlgebra alg{nu, mer};
  return ExpressionParser<OreAlgebra>(text, alg).parse();
}

nlohmann::json to_json(const OreOperator& p) {
  nlohmann::json j;
  j["nu"] = p.nu();
  j["meridian"] = to_string(p.meridian());
  j["terms"] = nlohmann::json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    j["terms"].push_back({{"shift", it->first}, {"coeff", it->second.to_string()}});
  }
  return j;
}

OreOperator operator_from_json(const nlohmann::json& j) {
  try {
    int nu = j.at("nu").get<int>();
    if (nu < 0) throw ParseError("nu must be nonnegative");
    Meridian mer = j.contains("meridian") ? meridian_from_string(j.at("meridian").get<std::string>()) : Meridian::n;
    OreOperator::TermMap terms;
    for (const auto& t : j.at("terms")) {
      auto e = t.at("shift").get<OreOperator::Shift>();
      if (static_cast<int>(e.size()) != nu + 1) throw ParseError("shift vector length must be nu + 1");
      RationalFunction c = t.at("coeff").is_string() ? parse_rational_function(t.at("coeff").get<std::string>())
                                                     : ratfun_from_json(t.at("coeff"));
      auto [it, fresh] = terms.emplace(e, c);
      if (!fresh) it->second += c;
    }
    return OreOperator(nu, mer, std::move(terms));
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("operator JSON: ") + ex.what());
  } catch (const DomainError& ex) {
    throw ParseError(std::string("operator JSON: ") + ex.what());
  }
}

namespace {

ExactPoint coefficient_point(const OreOperator& P, const std::vector<long>& point, const Rational& q) {
  ExactPoint pt{{vars::q, q}};
  for (int i = 0; i <= P.nu(); ++i) pt[P.twisted_var(i)] = pow(q, point[i]);
  return pt;
}

void check_arity(const OreOperator& P, std::size_t arity) {
  if (arity != static_cast<std::size_t>(P.nu() + 1)) {
    throw DomainError("point has " + std::to_string(arity) + " coordinates, operator expects " +
                      std::to_string(P.nu() + 1));
  }
}

}  // namespace

Rational ore_apply(const OreOperator& P, const DiscreteEvaluator& f, const std::vector<long>& point,
                   const Rational& q) {
  check_arity(P, point.size());
  ExactPoint pt = coefficient_point(P, point, q);
  Rational sum = 0;
  for (const auto& [e, c] : P.terms()) {
    std::vector<long> shifted = point;
    for (std::size_t i = 0; i < e.size(); ++i) shifted[i] += e[i];
    EvalValue v = f.eval(shifted, q);
    if (!v.in_support || v.value == 0) continue;
    if (eval_exact(c.den(), pt) == 0) {
      throw PoleError("coefficient " + c.to_string() + " has a pole at q = " + q.get_str() + ", point (" +
                      [&] {
                        std::string s;
                        for (long x : point) s += (s.empty() ? "" : ", ") + std::to_string(x);
                        return s;
                      }() +
                      ")");
    }
    sum += eval_exact(c, pt) * v.value;
  }
  return sum;
}

RationalFunction ore_apply_symbolic(const OreOperator& P,
                                    const std::function<RationalFunction(const std::vector<long>&)>& f,
                                    const std::vector<long>& point) {
  check_arity(P, point.size());
  Bindings b;
  for (int i = 0; i <= P.nu(); ++i) b[P.twisted_var(i)] = RationalFunction::var(vars::q, static_cast<int>(point[i]));
  RationalFunction sum;
  for (const auto& [e, c] : P.terms()) {
    std::vector<long> shifted = point;
    for (std::size_t i = 0; i < e.size(); ++i) shifted[i] += e[i];
    RationalFunction v = f(shifted);
    if (v.is_zero()) continue;
    RationalFunction cv;
    try {
      cv = subst(c, b);
    } catch (const DomainError& ex) {
      throw PoleError("coefficient " + c.to_string() + ": " + ex.what());
    }
    sum += cv * v;
  }
  return sum;
}

DiscreteEvaluator apply_as_evaluator(const OreOperator& P, const DiscreteEvaluator& f) {
  return {f.arity, [P, f](const std::vector<long>& point, const Rational& q) {
            return EvalValue{ore_apply(P, f, point, q), true};
          }};
}

Expansion expand_at_one(const OreOperator& P) {
  for (const auto& [e, c] : P.terms()) {
    for (int i = 1; i <= P.nu(); ++i) {
      if (c.has_var(P.twisted_var(i))) {
        throw DomainError("expand_at_one: coefficient " + c.to_string() + " depends on " + P.twisted_var(i).name());
      }
    }
  }
  Expansion out{OreOperator(P.nu(), P.meridian()), {}};
  OreOperator current = P;
  for (int i = 1; i <= P.nu(); ++i) {
    OreOperator::TermMap at_one, quotient;
    for (const auto& [e, c] : current.terms()) {
      OreOperator::Shift base = e;
      base[i] = 0;
      at_one[base] += c;
      // (Et_i^a - 1) / (Et_i - 1) = 1 + Et_i + ... + Et_i^(a-1); coefficients commute with Et_i.
      for (int j = 0; j < e[i]; ++j) {
        OreOperator::Shift s = e;
        s[i] = j;
        quotient[s] += c;
      }
    }
    out.r.push_back(OreOperator(P.nu(), P.meridian(), std::move(quotient)));
    current = OreOperator(P.nu(), P.meridian(), std::move(at_one));
  }
  out.p0 = current;
  return out;
}

OreOperator reconstruct(const Expansion& x) {
  OreOperator r = x.p0;
  for (std::size_t i = 0; i < x.r.size(); ++i) {
    OreOperator::Shift e(x.p0.nu() + 1, 0);
    e[i + 1] = 1;
    OreOperator et = OreOperator::monomial(e, x.p0.nu(), x.p0.meridian());
    r = r + (et - OreOperator::scalar(1, x.p0.nu(), x.p0.meridian())) * x.r[i];
  }
  return r;
}

TelescopeResult telescope_sum_check(const OreOperator& P0, const std::vector<OreOperator>& R,
                                    const DiscreteEvaluator& F, long n,
                                    const std::vector<AffineRange>& bounds, const Rational& q) {
  int nu = P0.nu();
  if (static_cast<int>(R.size()) > nu) throw DomainError("more certificates than k-variables");
  if (F.arity != nu + 1) throw DomainError("summand arity does not match the operator");
  if (static_cast<int>(bounds.size()) != nu) {
    throw DomainError("unbounded support: need one summation range per k-variable");
  }
  std::vector<long> lo(nu), hi(nu);
  for (int i = 0; i < nu; ++i) {
    lo[i] = bounds[i].lo(n);
    hi[i] = bounds[i].hi(n);
  }

  std::vector<OreOperator> cert;
  for (std::size_t i = 0; i < R.size(); ++i) {
    OreOperator::Shift e(nu + 1, 0);
    e[i + 1] = 1;
    cert.push_back((OreOperator::monomial(e, nu, P0.meridian()) - OreOperator::scalar(1, nu, P0.meridian())) * R[i]);
  }

  auto for_box = [&](const std::vector<long>& blo, const std::vector<long>& bhi, auto&& body) {
    std::vector<long> k = blo;
    for (int i = 0; i < nu; ++i) {
      if (blo[i] > bhi[i]) return;
    }
    while (true) {
      body(k);
      int i = 0;
      for (; i < nu; ++i) {
        if (++k[i] <= bhi[i]) break;
        k[i] = blo[i];
      }
      if (i == nu) return;
    }
  };

  // The box must contain the support of F at every n-shift that P0 uses.
  for (const auto& [e, c] : P0.terms()) {
    for (int j = 0; j < nu; ++j) {
      std::vector<long> blo = lo, bhi = hi;
      blo[j] = bhi[j] = hi[j] + 1;
      for_box(blo, bhi, [&](const std::vector<long>& k) {
        std::vector<long> pt{n + e[0]};
        pt.insert(pt.end(), k.begin(), k.end());
        EvalValue v = F.eval(pt, q);
        if (v.in_support && v.value != 0) {
          throw DomainError("summand is nonzero past the upper summation bound at n = " + std::to_string(n + e[0]));
        }
      });
    }
  }

  TelescopeResult out;
  for_box(lo, hi, [&](const std::vector<long>& k) {
    std::vector<long> pt{n};
    pt.insert(pt.end(), k.begin(), k.end());
    out.residual += ore_apply(P0, F, pt, q);
    for (const auto& T : cert) out.boundary += ore_apply(T, F, pt, q);
  });
  out.total = out.residual + out.boundary;
  return out;
}

EpsilonImage epsilon_eval(const OreOperator& P) {
  if (P.is_zero()) return {LaurentMPoly(), RationalFunction(1)};
  // Common denominator D and cleared numerators N_e = c_e * D.
  LaurentMPoly D(1);
  for (const auto& [e, c] : P.terms()) {
    if (c.den().is_constant()) continue;
    LaurentMPoly g = gcd(D, c.den());
    D = D * divide_or_throw(c.den(), g);
  }
  std::vector<std::pair<OreOperator::Shift, LaurentMPoly>> cleared;
  LaurentMPoly g;
  for (const auto& [e, c] : P.terms()) {
    LaurentMPoly N = c.num() * divide_or_throw(D, c.den());
    g = g.is_zero() ? normalize_associate(N) : gcd(g, N);
    cleared.emplace_back(e, N);
  }
  Bindings at_one{{vars::q, RationalFunction(1)}, {vars::s, RationalFunction(1)}};
  RationalFunction unit;
  try {
    unit = subst(RationalFunction(g, D), at_one);
  } catch (const DomainError&) {
    throw PoleError("epsilon: the cleared left unit " + RationalFunction(g, D).to_string() + " has a pole at q = 1");
  }
  LaurentMPoly poly;
  for (const auto& [e, N] : cleared) {
    LaurentMPoly img = subst(divide_or_throw(N, g), at_one).num();
    poly += img * shift_monomial(P, e);
  }
  LaurentMPoly normal = normalize_leading(divide_or_throw(poly, content_in(poly, P.shift_var(0))), P.shift_var(0));
  unit *= RationalFunction(poly, normal);
  return {normal, unit};
}

OreOperator homogenize(const OreOperator& P0, const RationalFunction& f) {
  if (f.is_zero()) throw DomainError("homogenize: f = 0");
  int nu = P0.nu();
  OreOperator::Shift e(nu + 1, 0);
  e[0] = 1;
  OreOperator em1 = OreOperator::monomial(e, nu, P0.meridian()) - OreOperator::scalar(1, nu, P0.meridian());
  return em1 * OreOperator::scalar(f.inverse(), nu, P0.meridian()) * P0;
}

namespace {

LaurentMPoly halve_qm(const LaurentMPoly& p, const RationalFunction& context) {
  int idx = p.var_index(vars::Qm);
  if (idx < 0) return p;
  LaurentMPoly out;
  for (const auto& [e, c] : p.terms()) {
    if (e[idx] % 2 != 0) {
      throw ParityError("odd power Qm^" + std::to_string(e[idx]) + " in " + context.to_string());
    }
    std::vector<std::pair<VarId, int>> powers;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (static_cast<int>(i) == idx) continue;
      powers.emplace_back(p.vars()[i], e[i]);
    }
    int h = e[idx] / 2;
    powers.emplace_back(vars::Q, h);
    powers.emplace_back(vars::q, -h);
    out += LaurentMPoly::monomial(c, powers);
  }
  return out;
}

}  // namespace

OreOperator substitute_qm(const OreOperator& P) {
  if (P.meridian() == Meridian::n) return P;
  OreOperator::TermMap terms;
  for (const auto& [e, c] : P.terms()) {
    OreOperator::Shift s = e;
    s[0] = 2 * e[0];
    terms[s] += RationalFunction(halve_qm(c.num(), c), halve_qm(c.den(), c));
  }
  return OreOperator(P.nu(), Meridian::n, std::move(terms));
}

}  // namespace ajlab
