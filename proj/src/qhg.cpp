#include "ajlab/qhg.hpp"

#include <algorithm>
#include <limits>

#include "ajlab/polyalg.hpp"

namespace ajlab {

// ---- IndexForm ------------------------------------------------------------------------------

long IndexForm::coefficient(const std::string& v) const {
  auto it = coef.find(v);
  return it == coef.end() ? 0 : it->second;
}

long IndexForm::eval(const IndexPoint& p) const {
  long r = c;
  for (const auto& [v, a] : coef) {
    auto it = p.find(v);
    if (it == p.end()) throw DomainError("index " + v + " is unbound");
    r += a * it->second;
  }
  return r;
}

IndexForm IndexForm::operator+(const IndexForm& o) const {
  IndexForm r = *this;
  r.c += o.c;
  for (const auto& [v, a] : o.coef) {
    if ((r.coef[v] += a) == 0) r.coef.erase(v);
  }
  return r;
}

IndexForm IndexForm::operator-(const IndexForm& o) const { return *this + o.scaled(-1); }

IndexForm IndexForm::operator+(long k) const {
  IndexForm r = *this;
  r.c += k;
  return r;
}

IndexForm IndexForm::scaled(long k) const {
  if (k == 0) return {};
  IndexForm r = *this;
  r.c *= k;
  for (auto& [v, a] : r.coef) a *= k;
  return r;
}

LaurentMPoly IndexForm::poly() const {
  LaurentMPoly p(c);
  for (const auto& [v, a] : coef) p += LaurentMPoly::var(VarId(v)).scaled(a);
  return p;
}

std::string IndexForm::to_string() const { return poly().to_string(); }

// ---- ProperQHTerm ---------------------------------------------------------------------------

VarId index_qvar(const std::string& index) {
  if (index == "n") return vars::Q;
  if (index == "m") return vars::Qm;
  if (index == "m2") return VarId("Qm2");
  if (index.size() > 1 && index[0] == 'k') return vars::Qt(std::stoi(index.substr(1)));
  throw DomainError("unknown summation index " + index);
}

VarId index_shift(const std::string& index) {
  if (index == "n") return vars::E;
  if (index == "m") return vars::Em;
  if (index == "m2") return VarId("Em2");
  if (index.size() > 1 && index[0] == 'k') return vars::Et(std::stoi(index.substr(1)));
  throw DomainError("unknown summation index " + index);
}

std::vector<std::string> ProperQHTerm::indices() const {
  std::vector<std::string> out{color_index()};
  out.insert(out.end(), extra_colors.begin(), extra_colors.end());
  for (int i = 1; i <= nu; ++i) out.push_back("k" + std::to_string(i));
  return out;
}

VarId ProperQHTerm::region_var(int i) const {
  if (i >= 1 && i <= static_cast<int>(region_vars.size())) return region_vars[i - 1];
  return vars::w(i);
}

namespace {

IndexForm reduce_mod2(IndexForm f) {
  IndexForm r;
  r.c = ((f.c % 2) + 2) % 2;
  for (const auto& [v, a] : f.coef) {
    if (a % 2 != 0) r.coef[v] = 1;
  }
  return r;
}

// Cancel identical numerator/denominator Pochhammer pairs.
std::vector<PochFactor> cancel_pochs(std::vector<PochFactor> in) {
  std::vector<PochFactor> out;
  for (auto& p : in) {
    auto it = std::find_if(out.begin(), out.end(), [&](const PochFactor& o) {
      return o.denominator != p.denominator && o.base == p.base && o.length == p.length;
    });
    if (it != out.end()) {
      out.erase(it);
    } else {
      out.push_back(std::move(p));
    }
  }
  return out;
}

}  // namespace

ProperQHTerm ProperQHTerm::operator*(const ProperQHTerm& o) const {
  if (meridian != o.meridian) throw DomainError("product of summands with different color indices");
  ProperQHTerm r = *this;
  r.nu = std::max(nu, o.nu);
  for (const auto& c : o.extra_colors) {
    if (std::find(r.extra_colors.begin(), r.extra_colors.end(), c) == r.extra_colors.end()) r.extra_colors.push_back(c);
  }
  std::vector<PochFactor> all = pochs;
  all.insert(all.end(), o.pochs.begin(), o.pochs.end());
  r.pochs = cancel_pochs(std::move(all));
  r.quad = quad + o.quad;
  r.sign = reduce_mod2(sign + o.sign);
  for (const auto& [v, xi] : o.prefactor) {
    auto it = r.prefactor.find(v);
    if (it == r.prefactor.end()) {
      r.prefactor.emplace(v, xi);
    } else {
      it->second *= xi;
    }
  }
  r.constant = constant * o.constant;
  if (o.region_vars.size() > r.region_vars.size()) r.region_vars = o.region_vars;
  return r;
}

ProperQHTerm ProperQHTerm::inverse() const {
  ProperQHTerm r = *this;
  for (auto& p : r.pochs) p.denominator = !p.denominator;
  r.quad = -quad;
  for (auto& [v, xi] : r.prefactor) xi = xi.inverse();
  r.constant = constant.inverse();
  return r;
}

namespace {

IndexForm K(const CrossingData& c, int i) { return IndexForm::var("k" + std::to_string(c.regions[i - 1])); }

PochFactor qpoch(const IndexForm& len, bool den) { return {RationalFunction::var(vars::q), len, den}; }

void check_regions(const CrossingData& c, int nu) {
  if (c.sign != 1 && c.sign != -1) throw DomainError("crossing sign must be +1 or -1");
  for (int r : c.regions) {
    if (r < 1 || r > nu) throw DomainError("region index " + std::to_string(r) + " outside 1.." + std::to_string(nu));
  }
}

}  // namespace

ProperQHTerm build_crossing(const CrossingData& c, int nu) {
  check_regions(c, nu);
  ProperQHTerm t;
  t.meridian = Meridian::m;
  t.nu = nu;
  IndexForm m = IndexForm::var("m");
  IndexForm k1 = K(c, 1), k2 = K(c, 2), k3 = K(c, 3), k4 = K(c, 4);
  LaurentMPoly mp = m.poly();
  LaurentMPoly framing = mp * mp + mp;
  if (c.sign > 0) {
    t.quad = framing - (k2 - k1).poly() * (k3 - k2).poly() - mp * (k2 + k4 - k1 - k3).poly();
    t.pochs = {qpoch(m + k4 - k3, false), qpoch(m + k4 - k1, false), qpoch(k2 + k4 - k1 - k3, true),
               qpoch(m + k1 - k2, true), qpoch(m + k3 - k2, true)};
  } else {
    t.sign = reduce_mod2(k1 + k3 - k2 - k4);
    t.quad = -framing + (k3 - k4).poly() * (k4 - k1).poly() - mp * (k1 + k3 - k2 - k4).poly();
    t.pochs = {qpoch(m + k1 - k4, false), qpoch(m + k3 - k4, false), qpoch(k1 + k3 - k2 - k4, true),
               qpoch(m + k2 - k3, true), qpoch(m + k2 - k1, true)};
  }
  t.pochs = cancel_pochs(t.pochs);
  return t;
}

ProperQHTerm build_crossing_two_color(const CrossingData& c, int nu) {
  check_regions(c, nu);
  ProperQHTerm t;
  t.meridian = Meridian::m;
  t.nu = nu;
  t.extra_colors = {"m2"};
  IndexForm m = IndexForm::var("m"), m2 = IndexForm::var("m2");
  IndexForm k1 = K(c, 1), k2 = K(c, 2), k3 = K(c, 3), k4 = K(c, 4);
  LaurentMPoly half_sum = (m + m2).poly().scaled(Rational(1, 2));
  if (c.sign > 0) {
    t.quad = -((k2 - k1).poly() * (k3 - k2).poly()) - half_sum * (k2 + k4 - k1 - k3).poly();
    t.pochs = {qpoch(m + k4 - k3, false), qpoch(m2 + k4 - k1, false), qpoch(k2 + k4 - k1 - k3, true),
               qpoch(m + k2 - k1, true), qpoch(m2 + k3 - k2, true)};
  } else {
    t.sign = reduce_mod2(k1 + k3 - k2 - k4);
    t.quad = (k3 - k4).poly() * (k4 - k1).poly() - half_sum * (k1 + k3 - k2 - k4).poly();
    t.pochs = {qpoch(m + k1 - k4, false), qpoch(m2 + k3 - k4, false), qpoch(k1 + k3 - k2 - k4, true),
               qpoch(m + k2 - k3, true), qpoch(m2 + k2 - k1, true)};
  }
  t.pochs = cancel_pochs(t.pochs);
  return t;
}

ProperQHTerm bracket_factorial(const IndexForm& a, Meridian mer, int nu) {
  // {j} = s^j - s^-j = -s^-j (1 - q^j), so {a}! = (-1)^a q^{-a(a+1)/4} (q; q)_a.
  ProperQHTerm t;
  t.meridian = mer;
  t.nu = nu;
  t.sign = reduce_mod2(a);
  LaurentMPoly ap = a.poly();
  t.quad = (ap * ap + ap).scaled(Rational(-1, 4));
  t.pochs = {qpoch(a, false)};
  return t;
}

ProperQHTerm habiro_figure_eight() {
  IndexForm n = IndexForm::var("n"), i = IndexForm::var("k1");
  auto bf = [](const IndexForm& a) { return bracket_factorial(a, Meridian::n, 1); };
  ProperQHTerm F = bf(n + i) * bf(n - 1) * bf(n).inverse() * bf(n - i - 1).inverse();
  F.region_vars = {vars::x};
  return F;
}

ProperQHTerm summand(const KnotSpec& spec) {
  if (spec.figure8) return habiro_figure_eight();
  ProperQHTerm F;
  F.meridian = Meridian::m;
  F.nu = spec.nu;
  for (auto c : spec.crossings) {
    if (spec.mirror) c.sign = -c.sign;
    F = F * build_crossing(c, spec.nu);
  }
  return F;
}

// ---- shift ratios ---------------------------------------------------------------------------

namespace {

// q^e with half-integer e through s.
LaurentMPoly q_monomial(const Rational& e) {
  if (is_integer(e)) return LaurentMPoly::var(vars::q, static_cast<int>(e.get_num().get_si()));
  Rational twice = 2 * e;
  if (!is_integer(twice)) throw DomainError("q-exponent " + e.get_str() + " is not a half-integer");
  long t = twice.get_num().get_si();
  long fl = t >= 0 ? t / 2 : -((1 - t) / 2);  // floor(t / 2) for odd t
  return LaurentMPoly::var(vars::q, static_cast<int>(fl)) * LaurentMPoly::var(vars::s, static_cast<int>(t - 2 * fl));
}

// q^{coef * index} as a monomial in index_qvar (or its square root).
LaurentMPoly index_monomial(const std::string& index, const Rational& coef) {
  VarId X = index_qvar(index);
  if (is_integer(coef)) return LaurentMPoly::var(X, static_cast<int>(coef.get_num().get_si()));
  Rational twice = 2 * coef;
  if (!is_integer(twice)) throw DomainError("coefficient " + coef.get_str() + " of " + index + " is not a half-integer");
  return LaurentMPoly::var(VarId(X.name() + "h"), static_cast<int>(twice.get_num().get_si()));
}

LaurentMPoly qpow_form(const IndexForm& L, long extra) {
  LaurentMPoly m = LaurentMPoly::var(vars::q, static_cast<int>(L.c + extra));
  for (const auto& [v, a] : L.coef) m *= LaurentMPoly::var(index_qvar(v), static_cast<int>(a));
  return m;
}

}  // namespace

RationalFunction shift_ratio(const ProperQHTerm& F, const std::string& which) {
  auto idx = F.indices();
  if (std::find(idx.begin(), idx.end(), which) == idx.end()) throw DomainError("summand has no index " + which);
  VarId wv(which);

  LaurentMPoly num(1), den(1);

  // q^{quad(v+1) - quad(v)}
  RationalFunction shifted = subst(F.quad, {{wv, RationalFunction(LaurentMPoly::var(wv) + LaurentMPoly(1))}});
  LaurentMPoly diff = shifted.num() - F.quad;
  if (diff.total_degree() > 1) throw DomainError("q-exponent is not quadratic in the indices");
  Rational c0 = 0;
  for (const auto& [e, c] : diff.terms()) {
    bool constant = std::all_of(e.begin(), e.end(), [](int k) { return k == 0; });
    if (constant) {
      c0 = c;
      continue;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 1) num *= index_monomial(diff.vars()[i].name(), c);
    }
  }
  LaurentMPoly qc = q_monomial(c0);
  num *= qc;

  if (F.sign.coefficient(which) % 2 != 0) num = -num;
  RationalFunction pre = F.prefactor.count(which) ? F.prefactor.at(which) : RationalFunction(1);
  num *= pre.num();
  den *= pre.den();

  for (const auto& pf : F.pochs) {
    long d = pf.length.coefficient(which);
    if (d == 0) continue;
    // (1 - A q^L) with A = a/b is (b - a q^L) / b
    LaurentMPoly up(1), down(1);
    if (d > 0) {
      for (long j = 0; j < d; ++j) {
        up *= pf.base.den() - pf.base.num() * qpow_form(pf.length, j);
        down *= pf.base.den();
      }
    } else {
      for (long j = 1; j <= -d; ++j) {
        down *= pf.base.den() - pf.base.num() * qpow_form(pf.length, -j);
        up *= pf.base.den();
      }
    }
    if (pf.denominator) std::swap(up, down);
    num *= up;
    den *= down;
  }
  return RationalFunction(num, den);
}

RationalFunction epsilon_ratio(const ProperQHTerm& F, const std::string& which) {
  RationalFunction r = shift_ratio(F, which);
  try {
    return subst(r, {{vars::q, RationalFunction(1)}, {vars::s, RationalFunction(1)}});
  } catch (const DomainError&) {
    throw PoleError("shift ratio " + r.to_string() + " has a pole at q = 1");
  }
}

// ---- evaluation -----------------------------------------------------------------------------

ExactQ::Value ExactQ::qpow(const Rational& e) const {
  if (is_integer(e)) return pow(q, e.get_num().get_si());
  Rational twice = 2 * e;
  if (!is_integer(twice)) throw DomainError("q-exponent " + e.get_str() + " is not a half-integer");
  if (!s) throw DomainError("half-integer q-power needs s = sqrt(q)");
  return pow(*s, twice.get_num().get_si());
}

ExactQ::Value ExactQ::eval(const RationalFunction& f) const {
  ExactPoint p{{vars::q, q}};
  if (s) p[vars::s] = *s;
  return eval_exact(f, p);
}

SymbolicQ::Value SymbolicQ::qpow(const Rational& e) const {
  Rational twice = 2 * e;
  if (use_s) {
    if (!is_integer(twice)) throw DomainError("q-exponent " + e.get_str() + " is not a half-integer");
    return RationalFunction::var(vars::s, static_cast<int>(twice.get_num().get_si()));
  }
  if (!is_integer(e)) throw DomainError("half-integer power of q; evaluate in s");
  return RationalFunction::var(vars::q, static_cast<int>(e.get_num().get_si()));
}

SymbolicQ::Value SymbolicQ::eval(const RationalFunction& f) const {
  if (!use_s) return f;
  return subst(f, {{vars::q, RationalFunction::var(vars::s, 2)}});
}

ComplexQ::Value ComplexQ::eval(const RationalFunction& f) const {
  return eval_complex(f, {{vars::q, std::polar(r, theta)}, {vars::s, std::polar(std::sqrt(r), theta / 2)}});
}

namespace detail {

Rational eval_quad(const LaurentMPoly& quad, const IndexPoint& p) {
  ExactPoint pt;
  for (const auto& v : quad.vars()) {
    auto it = p.find(v.name());
    if (it == p.end()) throw DomainError("index " + v.name() + " is unbound");
    pt[v] = Rational(it->second);
  }
  return eval_exact(quad, pt);
}

}  // namespace detail

IndexPoint index_point(const ProperQHTerm& F, const std::vector<long>& point) {
  auto idx = F.indices();
  if (idx.size() != point.size()) {
    throw DomainError("summand takes " + std::to_string(idx.size()) + " indices, got " + std::to_string(point.size()));
  }
  IndexPoint p;
  for (std::size_t i = 0; i < idx.size(); ++i) p[idx[i]] = point[i];
  return p;
}

DiscreteEvaluator as_evaluator(const ProperQHTerm& F) {
  if (!F.extra_colors.empty()) throw DomainError("two-color summands have no Ore evaluator");
  return {F.nu + 1, [F](const std::vector<long>& point, const Rational& q) {
            auto t = evaluate(F, index_point(F, point), ExactQ{q, std::nullopt});
            return EvalValue{t.value, t.in_support};
          }};
}

namespace {

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

long ceil_div(long a, long b) { return -floor_div(-a, b); }

}  // namespace

std::vector<std::pair<long, long>> support_box(const ProperQHTerm& F, long color, const std::map<int, long>& fixed) {
  int nu = F.nu;
  std::vector<std::optional<long>> lo(nu), hi(nu);
  for (const auto& [r, v] : fixed) {
    if (r < 1 || r > nu) throw DomainError("fixed region " + std::to_string(r) + " outside 1.." + std::to_string(nu));
    lo[r - 1] = hi[r - 1] = v;
  }
  std::string cname = F.color_index();
  struct Constraint {
    std::vector<long> a;
    long c;
  };
  std::vector<Constraint> cons;
  for (const auto& pf : F.pochs) {
    if (!pf.denominator) continue;
    Constraint k{std::vector<long>(nu, 0), pf.length.c + pf.length.coefficient(cname) * color};
    for (const auto& [v, a] : pf.length.coef) {
      if (v == cname) continue;
      if (v.size() < 2 || v[0] != 'k') throw DomainError("support_box: unexpected index " + v);
      k.a[std::stoi(v.substr(1)) - 1] = a;
    }
    cons.push_back(std::move(k));
  }
  for (int round = 0; round < 1000; ++round) {
    bool changed = false;
    for (const auto& k : cons) {
      for (int j = 0; j < nu; ++j) {
        if (k.a[j] == 0) continue;
        // a_j k_j >= -c - sum_{o != j} a_o k_o  >=  -c - max(...)
        long mx = 0;
        bool finite = true;
        for (int o = 0; o < nu && finite; ++o) {
          if (o == j || k.a[o] == 0) continue;
          const auto& b = k.a[o] > 0 ? hi[o] : lo[o];
          if (!b) finite = false;
          else mx += k.a[o] * *b;
        }
        if (!finite) continue;
        long rhs = -k.c - mx;
        if (k.a[j] > 0) {
          long nl = ceil_div(rhs, k.a[j]);
          if (!lo[j] || nl > *lo[j]) {
            lo[j] = nl;
            changed = true;
          }
        } else {
          long nh = floor_div(rhs, k.a[j]);
          if (!hi[j] || nh < *hi[j]) {
            hi[j] = nh;
            changed = true;
          }
        }
      }
    }
    if (!changed) break;
  }
  std::vector<std::pair<long, long>> box;
  std::string unbounded;
  for (int j = 0; j < nu; ++j) {
    if (!lo[j] || !hi[j]) {
      unbounded += (unbounded.empty() ? "" : ", ") + std::to_string(j + 1);
      continue;
    }
    box.emplace_back(*lo[j], *hi[j]);
  }
  if (!unbounded.empty()) throw SupportError("unbounded support in regions " + unbounded + "; fix them in \"fixed\"");
  return box;
}

// ---- JSON -----------------------------------------------------------------------------------

KnotSpec knot_spec_from_json(const nlohmann::json& j) {
  try {
    KnotSpec s;
    if (j.contains("builtin")) {
      auto b = j.at("builtin").get<std::string>();
      if (b != "figure8") throw ParseError("unknown builtin '" + b + "'");
      s.figure8 = true;
      s.nu = 1;
      s.mirror = j.value("mirror", false);
      return s;
    }
    s.nu = j.at("nu").get<int>();
    if (s.nu < 0) throw ParseError("nu must be nonnegative");
    s.mirror = j.value("mirror", false);
    for (const auto& c : j.at("crossings")) {
      CrossingData d;
      d.sign = c.at("sign").get<int>();
      auto r = c.at("regions").get<std::vector<int>>();
      if (r.size() != 4) throw ParseError("a crossing has exactly 4 regions");
      std::copy(r.begin(), r.end(), d.regions.begin());
      check_regions(d, s.nu);
      s.crossings.push_back(d);
    }
    if (j.contains("fixed")) {
      for (const auto& [k, v] : j.at("fixed").items()) s.fixed[std::stoi(k)] = v.get<long>();
    }
    return s;
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("knot spec JSON: ") + ex.what());
  } catch (const DomainError& ex) {
    throw ParseError(std::string("knot spec JSON: ") + ex.what());
  } catch (const std::invalid_argument&) {
    throw ParseError("knot spec JSON: region keys in \"fixed\" must be integers");
  }
}

nlohmann::json to_json(const KnotSpec& s) {
  if (s.figure8) {
    nlohmann::json j{{"builtin", "figure8"}};
    if (s.mirror) j["mirror"] = true;
    return j;
  }
  nlohmann::json j{{"nu", s.nu}, {"crossings", nlohmann::json::array()}};
  for (const auto& c : s.crossings) {
    j["crossings"].push_back({{"sign", c.sign}, {"regions", std::vector<int>(c.regions.begin(), c.regions.end())}});
  }
  if (s.mirror) j["mirror"] = true;
  if (!s.fixed.empty()) {
    nlohmann::json f = nlohmann::json::object();
    for (const auto& [r, v] : s.fixed) f[std::to_string(r)] = v;
    j["fixed"] = f;
  }
  return j;
}

// ---- figure-eight data ----------------------------------------------------------------------

namespace figure8 {

const char* const kP =
    "(q*Q/(1-q^3*Q^2)*Et1*E^2 + (1/(1-q^3*Q^2)*Et1 + 1/(1-q*Q^2)*Et1 + q*Q - Et1 - 1/(q*Q))*E"
    " + q*Q/(1-q*Q^2)*Et1)*(Q-1)";
const char* const kP0 =
    "(q*Q/(1-q^3*Q^2)*E^2 + (1/(1-q^3*Q^2) + 1/(1-q*Q^2) + q*Q - 1 - 1/(q*Q))*E + q*Q/(1-q*Q^2))*(Q-1)";
const char* const kR = "(q*Q/(1-q^3*Q^2)*E^2 + (1/(1-q^3*Q^2) + 1/(1-q*Q^2) - 1)*E + q*Q/(1-q*Q^2))*(Q-1)";
const char* const kAlpha =
    "1/(1+q*Q)*(q*Q/(1-q^3*Q^2)*E^2 + (1/(1-q^3*Q^2) + 1/(1-q*Q^2) + q*Q - 1 - 1/(q*Q))*E + q*Q/(1-q*Q^2))";
const char* const kCubic =
    "q^4*Q*(-1+q^3*Q)/((q+q^3*Q)*(q-q^6*Q^2))*E^3"
    " + (-q+q^3*Q)*(q^4+q^5*Q-2*q^6*Q-q^7*Q^2+q^8*Q^2-q^9*Q^2-2*q^10*Q^3+q^11*Q^3+q^12*Q^4)"
    "/(q^4*Q*(q^2+q^3*Q)*(-q+q^6*Q^2))*E^2"
    " - (q^2-q^3*Q)*(q^8-2*q^9*Q+q^10*Q-q^9*Q^2+q^10*Q^2-q^11*Q^2+q^10*Q^3-2*q^11*Q^3+q^12*Q^4)"
    "/(q^5*Q*(q+q^3*Q)*(q^5-q^6*Q^2))*E"
    " + q^5*Q*(-q^3+q^3*Q)/((q^2+q^3*Q)*(-q^5+q^6*Q^2))";
const char* const kInhomogeneity = "q*Q + 1";
const char* const kAPoly = "alpha^4*l^2 - l + alpha^2*l + 2*alpha^4*l + alpha^6*l - alpha^8*l + alpha^4";

}  // namespace figure8

}  // namespace ajlab
