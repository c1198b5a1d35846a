#include "ajlab/polyalg.hpp"

#include <algorithm>

#include "ajlab/errors.hpp"

namespace ajlab {

namespace {

using UPoly = std::vector<LaurentMPoly>;  // dense in the main variable, index = degree

void trim(UPoly& u) {
  while (!u.empty() && u.back().is_zero()) u.pop_back();
}

int deg(const UPoly& u) { return static_cast<int>(u.size()) - 1; }

// Exact division of polynomials (nonnegative exponents) by lex-leading-term reduction.
std::optional<LaurentMPoly> polynomial_divide(const LaurentMPoly& a, const LaurentMPoly& b) {
  VarList u = merge_vars(a.vars(), b.vars());
  auto r = align_terms(a, u);
  auto bb = align_terms(b, u);
  const auto& [lead_e, lead_c] = *bb.rbegin();
  LaurentMPoly::TermMap quot;
  Exponents shift(u.size());
  while (!r.empty()) {
    auto top = std::prev(r.end());
    for (std::size_t i = 0; i < u.size(); ++i) {
      shift[i] = top->first[i] - lead_e[i];
      if (shift[i] < 0) return std::nullopt;
    }
    Rational t = top->second / lead_c;
    quot.emplace(shift, t);
    Exponents e(u.size());
    for (const auto& [be, bc] : bb) {
      for (std::size_t i = 0; i < u.size(); ++i) e[i] = be[i] + shift[i];
      auto it = r.find(e);
      if (it == r.end()) {
        r.emplace(e, -t * bc);
      } else {
        it->second -= t * bc;
        if (it->second == 0) r.erase(it);
      }
    }
  }
  return LaurentMPoly(std::move(u), std::move(quot));
}

LaurentMPoly clear_unit(const LaurentMPoly& p) { return p * p.min_monomial().pow(-1); }

UPoly to_upoly(const LaurentMPoly& p, const VarId& v) { return coefficients_in(p, v); }

UPoly scale(const UPoly& u, const LaurentMPoly& c) {
  UPoly r(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) r[i] = u[i] * c;
  trim(r);
  return r;
}

UPoly divide_all(const UPoly& u, const LaurentMPoly& c) {
  UPoly r(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) r[i] = divide_or_throw(u[i], c);
  return r;
}

// Pseudo-remainder: lc(B)^(deg A - deg B + 1) A = Q B + R.
UPoly prem(UPoly a, const UPoly& b) {
  const LaurentMPoly& lcb = b.back();
  int e = deg(a) - deg(b) + 1;
  while (!a.empty() && deg(a) >= deg(b)) {
    LaurentMPoly lca = a.back();
    int shift = deg(a) - deg(b);
    for (auto& c : a) c *= lcb;
    for (int i = 0; i <= deg(b); ++i) a[i + shift] -= lca * b[i];
    trim(a);
    --e;
  }
  if (e > 0) a = scale(a, lcb.pow(e));
  return a;
}

struct SubresultantState {
  UPoly a, b;
  LaurentMPoly g{1}, h{1};
};

// One subresultant step. Returns false when the remainder vanished (b is then the last
// nonzero element).
bool subresultant_step(SubresultantState& st) {
  int delta = deg(st.a) - deg(st.b);
  UPoly r = prem(st.a, st.b);
  if (r.empty()) return false;
  st.a = std::move(st.b);
  st.b = divide_all(r, st.g * st.h.pow(delta));
  st.g = st.a.back();
  if (delta == 1) {
    st.h = st.g;
  } else if (delta > 1) {
    st.h = divide_or_throw(st.g.pow(delta), st.h.pow(delta - 1));
  }
  return true;
}

LaurentMPoly gcd_polynomial(const LaurentMPoly& a, const LaurentMPoly& b);

LaurentMPoly content_polynomial(const LaurentMPoly& p, const VarId& v) {
  LaurentMPoly c;
  for (const auto& coeff : to_upoly(p, v)) {
    if (coeff.is_zero()) continue;
    c = c.is_zero() ? normalize_associate(coeff) : gcd_polynomial(c, coeff);
    if (c.is_constant()) return LaurentMPoly(1);
  }
  return c;
}

// a, b nonzero polynomials; monomial factors are units and are ignored.
LaurentMPoly gcd_polynomial(const LaurentMPoly& a_in, const LaurentMPoly& b_in) {
  if (a_in.is_constant() || b_in.is_constant()) return LaurentMPoly(1);
  LaurentMPoly a = normalize_associate(a_in);
  LaurentMPoly b = normalize_associate(b_in);
  VarList common;
  std::set_intersection(a.vars().begin(), a.vars().end(), b.vars().begin(), b.vars().end(),
                        std::back_inserter(common));
  if (common.empty()) return LaurentMPoly(1);
  VarId v = common.front();
  int best = std::min(a.degree(v), b.degree(v));
  for (const auto& c : common) {
    int d = std::min(a.degree(c), b.degree(c));
    if (d < best) {
      best = d;
      v = c;
    }
  }
  LaurentMPoly ca = content_polynomial(a, v);
  LaurentMPoly cb = content_polynomial(b, v);
  LaurentMPoly c = gcd_polynomial(ca, cb);
  UPoly pa = to_upoly(divide_or_throw(a, ca), v);
  UPoly pb = to_upoly(divide_or_throw(b, cb), v);

  if (deg(pa) < deg(pb)) std::swap(pa, pb);
  SubresultantState st{std::move(pa), std::move(pb)};
  bool coprime = false;
  while (true) {
    if (deg(st.b) == 0) {
      coprime = true;
      break;
    }
    if (!subresultant_step(st)) break;
  }
  if (coprime) return normalize_associate(c);
  LaurentMPoly g = from_coefficients(st.b, v);
  g = divide_or_throw(g, content_polynomial(g, v));
  return normalize_associate(c * g);
}

}  // namespace

std::vector<LaurentMPoly> coefficients_in(const LaurentMPoly& p, const VarId& v) {
  if (p.min_degree(v) < 0) throw DomainError("coefficients_in: negative exponent in " + v.name());
  UPoly out(p.is_zero() ? 0 : p.degree(v) + 1);
  int idx = p.var_index(v);
  if (idx < 0) {
    if (!p.is_zero()) out[0] = p;
    return out;
  }
  std::vector<LaurentMPoly::TermMap> parts(out.size());
  for (const auto& [e, c] : p.terms()) {
    Exponents t = e;
    t[idx] = 0;
    parts[e[idx]].emplace(std::move(t), c);
  }
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = LaurentMPoly(p.vars(), std::move(parts[k]));
  return out;
}

LaurentMPoly from_coefficients(const std::vector<LaurentMPoly>& coeffs, const VarId& v) {
  LaurentMPoly r;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (!coeffs[k].is_zero()) r += coeffs[k] * LaurentMPoly::var(v, static_cast<int>(k));
  }
  return r;
}

std::optional<LaurentMPoly> divide_exact(const LaurentMPoly& a, const LaurentMPoly& b) {
  if (b.is_zero()) throw DomainError("division by the zero polynomial");
  if (a.is_zero()) return LaurentMPoly();
  if (b.is_monomial()) return a * b.pow(-1);
  LaurentMPoly ma = a.min_monomial();
  LaurentMPoly mb = b.min_monomial();
  auto q = polynomial_divide(a * ma.pow(-1), b * mb.pow(-1));
  if (!q) return std::nullopt;
  return *q * ma * mb.pow(-1);
}

LaurentMPoly divide_or_throw(const LaurentMPoly& a, const LaurentMPoly& b) {
  auto q = divide_exact(a, b);
  if (!q) throw DomainError("inexact division: (" + a.to_string() + ") / (" + b.to_string() + ")");
  return *q;
}

Rational rational_content(const LaurentMPoly& p) {
  if (p.is_zero()) return Rational(1);
  Integer num_gcd = 0, den_lcm = 1;
  for (const auto& [e, c] : p.terms()) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  return Rational(num_gcd, den_lcm);
}

LaurentMPoly normalize_associate(const LaurentMPoly& p) {
  if (p.is_zero()) return p;
  LaurentMPoly r = clear_unit(p);
  Rational c = rational_content(r);
  if (r.leading_coefficient() < 0) c = -c;
  return r.scaled(1 / c);
}

LaurentMPoly normalize_leading(const LaurentMPoly& p, const VarId& v) {
  LaurentMPoly r = normalize_associate(p);
  if (r.is_zero() || !r.has_var(v)) return r;
  if (r.coefficient(v, r.degree(v)).leading_coefficient() < 0) r = -r;
  return r;
}

LaurentMPoly gcd(const LaurentMPoly& a, const LaurentMPoly& b) {
  if (a.is_zero() && b.is_zero()) throw DomainError("gcd(0, 0) is undefined");
  if (a.is_zero()) return normalize_associate(b);
  if (b.is_zero()) return normalize_associate(a);
  return gcd_polynomial(normalize_associate(a), normalize_associate(b));
}

LaurentMPoly content_in(const LaurentMPoly& p, const VarId& v) {
  if (p.is_zero()) return p;
  return content_polynomial(normalize_associate(p * LaurentMPoly::var(v, -p.min_degree(v))), v);
}

LaurentMPoly resultant(const LaurentMPoly& a, const LaurentMPoly& b, const VarId& v) {
  if (a.is_zero() || b.is_zero()) throw DomainError("resultant of the zero polynomial");
  LaurentMPoly ca = a * LaurentMPoly::var(v, -a.min_degree(v));
  LaurentMPoly cb = b * LaurentMPoly::var(v, -b.min_degree(v));
  int da = ca.degree(v), db = cb.degree(v);
  if (da == 0) return ca.pow(db);
  if (db == 0) return cb.pow(da);
  // Laurent units in the remaining variables (v-free after the shift above).
  LaurentMPoly ua = ca.min_monomial(), ub = cb.min_monomial();
  UPoly pa = to_upoly(ca * ua.pow(-1), v);
  UPoly pb = to_upoly(cb * ub.pow(-1), v);
  LaurentMPoly unit = ua.pow(db) * ub.pow(da);

  int sign = 1;
  if (deg(pa) < deg(pb)) {
    std::swap(pa, pb);
    if (deg(pa) % 2 == 1 && deg(pb) % 2 == 1) sign = -sign;
  }
  SubresultantState st{std::move(pa), std::move(pb)};
  while (deg(st.b) > 0) {
    if (deg(st.a) % 2 == 1 && deg(st.b) % 2 == 1) sign = -sign;
    if (!subresultant_step(st)) return LaurentMPoly();
  }
  int d = deg(st.a);
  LaurentMPoly res = divide_or_throw(st.b[0].pow(d), st.h.pow(d - 1));
  return res.scaled(sign) * unit;
}

LaurentMPoly squarefree_part(const LaurentMPoly& a, const VarId& v) {
  if (a.is_zero()) throw DomainError("squarefree_part of the zero polynomial");
  if (!a.has_var(v)) return a;
  LaurentMPoly core = normalize_associate(a);
  LaurentMPoly scalar_unit = divide_or_throw(a, core);  // monomial times rational
  LaurentMPoly cont = content_in(core, v);
  LaurentMPoly pp = divide_or_throw(core, cont);
  LaurentMPoly g = gcd(pp, pp.derivative(v));
  return scalar_unit * cont * divide_or_throw(pp, g);
}

}  // namespace ajlab
