#include "ajlab/elimination.hpp"

#include <algorithm>
#include <set>

#include "ajlab/polyalg.hpp"
#include "ajlab/subst.hpp"

namespace ajlab {

const Equation& EquationSystem::longitude() const {
  for (const auto& e : equations) {
    if (e.tag == "longitude") return e;
  }
  throw DomainError("system has no longitude equation");
}

namespace {

// S - R for the ratio R / S, i.e. S E - R at E = 1.
LaurentMPoly gluing_poly(const RationalFunction& ratio) { return normalize_associate(ratio.den() - ratio.num()); }

void require_no_half_powers(const RationalFunction& r) {
  for (const auto& v : r.vars()) {
    const auto& n = v.name();
    if (!n.empty() && n.back() == 'h') throw DomainError("half-integer index power " + n + " in an epsilon ratio");
  }
}

LaurentMPoly l2_longitude(const RationalFunction& X) {
  return normalize_associate(X.den() * LaurentMPoly::var(vars::l, 2) - X.num());
}

}  // namespace

EquationSystem build_epsilon_system(const ProperQHTerm& F) {
  if (!F.extra_colors.empty()) throw DomainError("epsilon system of a two-color summand is not supported");
  Bindings b;
  for (int i = 1; i <= F.nu; ++i) b[vars::Qt(i)] = RationalFunction::var(F.region_var(i));
  b[vars::Q] = RationalFunction::var(vars::alpha, 2);
  b[vars::Qm] = RationalFunction::var(vars::alpha);
  auto image = [&](const std::string& idx) {
    RationalFunction r = subst(epsilon_ratio(F, idx), b);
    require_no_half_powers(r);
    return r;
  };
  EquationSystem s;
  for (int i = 1; i <= F.nu; ++i) {
    s.unknowns.push_back(F.region_var(i));
    s.equations.push_back({gluing_poly(image("k" + std::to_string(i))), "gluing-" + std::to_string(i)});
  }
  RationalFunction r = image(F.color_index());
  if (F.meridian == Meridian::n) {
    s.longitude_root = r;
    s.equations.push_back({l2_longitude(r.pow(2)), "longitude"});
  } else {
    s.equations.push_back({l2_longitude(r), "longitude"});
  }
  return s;
}

EquationSystem build_saddle_system(const Potential& P) {
  auto forms = derivative_forms(P);
  EquationSystem s;
  for (std::size_t i = 0; i < P.region_vars.size(); ++i) {
    const VarId& v = P.region_vars[i];
    s.unknowns.push_back(v);
    RationalFunction X = forms.count(v) ? forms.at(v).to_rational() : RationalFunction(1);
    s.equations.push_back({gluing_poly(X), "gluing-" + std::to_string(i + 1)});
  }
  DerivativeForm fa = forms.count(vars::alpha) ? forms.at(vars::alpha) : DerivativeForm{};
  s.equations.push_back({l2_longitude(fa.to_rational()), "longitude"});
  try {
    s.longitude_root = fa.sqrt().to_rational();
  } catch (const DomainError&) {
  }
  return s;
}

nlohmann::json to_json(const Identity& i) {
  return {{"identity", i.identity}, {"pass", i.pass}, {"lhs", i.lhs}, {"rhs", i.rhs}, {"unit", i.unit}};
}

nlohmann::json to_json(const std::vector<Identity>& report) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& i : report) j.push_back(to_json(i));
  return j;
}

std::vector<Identity> compare_systems(const EquationSystem& a, const EquationSystem& b) {
  if (a.unknowns != b.unknowns) throw DomainError("systems have different region variables");
  std::vector<Identity> out;
  for (const auto& ea : a.equations) {
    auto it = std::find_if(b.equations.begin(), b.equations.end(), [&](const Equation& e) { return e.tag == ea.tag; });
    Identity id{ea.tag, false, ea.poly.to_string(), it == b.equations.end() ? "(missing)" : it->poly.to_string(), ""};
    if (it != b.equations.end()) {
      LaurentMPoly x = normalize_associate(ea.poly), y = normalize_associate(it->poly);
      id.pass = x == y;
      if (!ea.poly.is_zero() && !it->poly.is_zero()) id.unit = RationalFunction(ea.poly, it->poly).to_string();
    }
    out.push_back(id);
  }
  if (a.equations.size() != b.equations.size()) out.push_back({"equation count", false, "", "", ""});
  return out;
}

std::vector<Identity> prop_comp_check(const CrossingData& c, MinusForm form) {
  int nu = *std::max_element(c.regions.begin(), c.regions.end());
  ProperQHTerm F = build_crossing(c, nu);
  Potential P = crossing_potential(c, form);
  auto forms = derivative_forms(P);
  Bindings b{{vars::Qm, RationalFunction::var(vars::alpha)}};
  for (int i = 1; i <= nu; ++i) b[vars::Qt(i)] = RationalFunction::var(vars::w(i));

  std::string sign = c.sign > 0 ? "+" : "-";
  std::vector<Identity> out;
  auto check = [&](const std::string& name, const VarId& v, const std::string& idx) {
    RationalFunction lhs = forms.count(v) ? forms.at(v).to_rational() : RationalFunction(1);
    RationalFunction rhs = subst(epsilon_ratio(F, idx), b);
    Identity id{name, lhs == rhs, lhs.to_string(), rhs.to_string(), (lhs / rhs).to_string()};
    out.push_back(id);
  };
  std::set<int> seen;
  for (int j = 0; j < 4; ++j) {
    int r = c.regions[j];
    if (!seen.insert(r).second) continue;
    check("R" + sign + " w" + std::to_string(r) + " d/dw", vars::w(r), "k" + std::to_string(r));
  }
  check("R" + sign + " alpha d/dalpha", vars::alpha, "m");
  return out;
}

nlohmann::json to_json(const APolyCandidate& c) {
  nlohmann::json d = nlohmann::json::array();
  for (const auto& f : c.discarded) d.push_back({{"factor", f.factor.to_string()}, {"reason", f.reason}});
  nlohmann::json j{{"poly", c.poly.to_string()}, {"discarded", d}};
  if (c.branch_product_ok) j["branch_product_ok"] = *c.branch_product_ok;
  return j;
}

VarList default_order(const EquationSystem& s) {
  VarList v = s.unknowns;
  std::sort(v.begin(), v.end());
  return v;
}

namespace {

LaurentMPoly eliminate_all(std::vector<LaurentMPoly> eqs, const VarList& order) {
  for (const auto& v : order) {
    std::vector<LaurentMPoly> with, without;
    for (auto& e : eqs) (e.has_var(v) ? with : without).push_back(std::move(e));
    if (with.empty()) throw DegeneracyError("no equation involves " + v.name());
    auto pivot = std::min_element(with.begin(), with.end(), [&](const LaurentMPoly& a, const LaurentMPoly& b) {
      return a.degree(v) - a.min_degree(v) < b.degree(v) - b.min_degree(v);
    });
    LaurentMPoly p = *pivot;
    with.erase(pivot);
    for (const auto& e : with) {
      LaurentMPoly r = resultant(p, e, v);
      if (r.is_zero()) {
        throw DegeneracyError("resultant in " + v.name() + " vanishes identically; try another elimination order");
      }
      without.push_back(normalize_associate(r));
    }
    eqs = std::move(without);
  }
  if (eqs.empty()) throw DegeneracyError("no equation left after elimination");
  LaurentMPoly g = eqs[0];
  for (std::size_t i = 1; i < eqs.size(); ++i) g = gcd(g, eqs[i]);
  return g;
}

}  // namespace

APolyCandidate eliminate(const EquationSystem& s, const VarList& order) {
  std::set<VarId> want(s.unknowns.begin(), s.unknowns.end()), got(order.begin(), order.end());
  if (want != got || order.size() != got.size()) {
    throw DomainError("elimination order must list each region variable exactly once");
  }
  std::vector<LaurentMPoly> gluing;
  for (const auto& e : s.equations) {
    if (e.tag != "longitude") gluing.push_back(e.poly);
  }
  APolyCandidate out;
  LaurentMPoly p;
  if (s.longitude_root) {
    const RationalFunction& root = *s.longitude_root;
    LaurentMPoly lv = LaurentMPoly::var(vars::l);
    auto with_longitude = [&](const LaurentMPoly& lon) {
      auto eqs = gluing;
      eqs.push_back(lon);
      return eliminate_all(eqs, order);
    };
    LaurentMPoly plus = with_longitude(root.den() * lv - root.num());
    LaurentMPoly minus = with_longitude(root.den() * lv + root.num());
    LaurentMPoly full = with_longitude(s.longitude().poly);
    out.branch_product_ok = normalize_associate(full) == normalize_associate(plus * minus);
    out.discarded.push_back({normalize_leading(minus, vars::l), "l -> -l branch"});
    p = plus;
  } else {
    auto eqs = gluing;
    eqs.push_back(s.longitude().poly);
    p = eliminate_all(eqs, order);
  }

  LaurentMPoly c = content_in(p, vars::l);
  if (!c.is_constant()) {
    out.discarded.push_back({c, "free of l"});
    p = divide_or_throw(p, c);
  }
  LaurentMPoly m = p.min_monomial();
  if (!m.is_constant()) {
    out.discarded.push_back({m, "monomial factor"});
    p = divide_or_throw(p, m);
  }
  LaurentMPoly sf = squarefree_part(p, vars::l);
  if (sf.degree(vars::l) < p.degree(vars::l)) {
    out.discarded.push_back({normalize_leading(divide_or_throw(p, sf), vars::l), "repeated factor"});
  }
  out.poly = normalize_leading(sf, vars::l);
  return out;
}

Identity aj_compare(const OreOperator& P0, const LaurentMPoly& A) {
  if (A.is_zero()) throw DomainError("aj_compare: A is zero");
  EpsilonImage e = epsilon_eval(P0);
  Bindings b;
  if (P0.meridian() == Meridian::n) {
    b[vars::Q] = RationalFunction::var(vars::alpha, 2);
    b[vars::E] = RationalFunction::var(vars::l);
  } else {
    b[vars::Qm] = RationalFunction::var(vars::alpha);
    b[vars::Em] = RationalFunction::var(vars::l, 2);
  }
  RationalFunction lhs = subst(e.poly, b);
  RationalFunction unit = subst(e.unit, b);
  for (const auto& v : lhs.vars()) {
    if (v != vars::alpha && v != vars::l) throw DomainError("eps(P0) still involves " + v.name());
  }
  LaurentMPoly left = lhs.num();  // e.poly is a polynomial, so lhs.den() is constant
  left = left.scaled(1 / lhs.den().constant_value());
  RationalFunction ratio = unit * RationalFunction(left) / RationalFunction(A);
  auto rv = ratio.vars();
  bool pass = !ratio.is_zero() && std::all_of(rv.begin(), rv.end(), [](const VarId& v) { return v == vars::alpha; });
  return {"eps(P0)(l, alpha^2) vs A(l, alpha)", pass, normalize_leading(left, vars::l).to_string(),
          normalize_leading(A, vars::l).to_string(), ratio.to_string()};
}

LaurentMPoly divide_abelian(const LaurentMPoly& A) {
  auto q = divide_exact(A, LaurentMPoly::var(vars::l) - LaurentMPoly(1));
  if (!q) throw DomainError("l - 1 does not divide " + A.to_string());
  return *q;
}

}  // namespace ajlab
