#include "ajlab/subst.hpp"

#include <algorithm>
#include <sstream>

#include "ajlab/errors.hpp"

namespace ajlab {

namespace {

std::string describe(const Bindings& b) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [v, f] : b) {
    if (!first) os << ", ";
    first = false;
    os << v.name() << " -> " << f.to_string();
  }
  os << '}';
  return os.str();
}

// Power table for one bound variable: base^k for k in [lo, hi] as numerator-only polynomials
// after clearing by den^hi * num^(-lo).
struct BoundVar {
  int slot;            // index in p.vars()
  const RationalFunction* value;
  int lo, hi;          // clamp(min exponent, <= 0), clamp(max exponent, >= 0)
  std::vector<LaurentMPoly> num_pow, den_pow;

  const LaurentMPoly& np(int k) {
    while (static_cast<int>(num_pow.size()) <= k) {
      num_pow.push_back(num_pow.empty() ? LaurentMPoly(1) : num_pow.back() * value->num());
    }
    return num_pow[k];
  }
  const LaurentMPoly& dp(int k) {
    while (static_cast<int>(den_pow.size()) <= k) {
      den_pow.push_back(den_pow.empty() ? LaurentMPoly(1) : den_pow.back() * value->den());
    }
    return den_pow[k];
  }
};

std::complex<double> ipow(std::complex<double> z, int k) {
  if (k < 0) return 1.0 / ipow(z, -k);
  std::complex<double> r = 1.0;
  while (k > 0) {
    if (k & 1) r *= z;
    k >>= 1;
    if (k > 0) z *= z;
  }
  return r;
}

}  // namespace

RationalFunction subst(const LaurentMPoly& p, const Bindings& bindings) {
  if (bindings.empty() || p.is_zero()) return p;
  std::vector<BoundVar> bound;
  VarList free_vars;
  std::vector<int> free_slots;
  for (std::size_t i = 0; i < p.vars().size(); ++i) {
    auto it = bindings.find(p.vars()[i]);
    if (it == bindings.end()) {
      free_vars.push_back(p.vars()[i]);
      free_slots.push_back(static_cast<int>(i));
      continue;
    }
    int lo = std::min(0, p.min_degree(p.vars()[i]));
    int hi = std::max(0, p.degree(p.vars()[i]));
    if (lo < 0 && it->second.is_zero()) {
      throw DomainError("substitution " + it->first.name() + " -> 0 in a negative power (bindings " +
                        describe(bindings) + ")");
    }
    bound.push_back({static_cast<int>(i), &it->second, lo, hi, {}, {}});
  }
  if (bound.empty()) return p;

  LaurentMPoly num;
  for (const auto& [e, c] : p.terms()) {
    Exponents fe(free_slots.size());
    for (std::size_t j = 0; j < free_slots.size(); ++j) fe[j] = e[free_slots[j]];
    LaurentMPoly term(free_vars, {{fe, c}});
    for (auto& b : bound) {
      int k = e[b.slot];
      // base^k * den^hi * num^(-lo) = num^(k - lo) * den^(hi - k)
      term *= b.np(k - b.lo) * b.dp(b.hi - k);
    }
    num += term;
  }
  LaurentMPoly den(1);
  for (auto& b : bound) den *= b.dp(b.hi) * b.np(-b.lo);
  return RationalFunction(num, den);
}

RationalFunction subst(const RationalFunction& f, const Bindings& bindings) {
  RationalFunction n = subst(f.num(), bindings);
  RationalFunction d = subst(f.den(), bindings);
  if (d.is_zero()) {
    throw DomainError("denominator " + f.den().to_string() + " vanishes under bindings " + describe(bindings));
  }
  return n / d;
}

Rational eval_exact(const LaurentMPoly& p, const ExactPoint& point) {
  std::vector<const Rational*> values;
  for (const auto& v : p.vars()) {
    auto it = point.find(v);
    if (it == point.end()) throw DomainError("eval_exact: variable " + v.name() + " is unbound");
    values.push_back(&it->second);
  }
  std::vector<std::map<int, Rational>> cache(values.size());
  auto power = [&](std::size_t i, int k) -> const Rational& {
    auto it = cache[i].find(k);
    if (it != cache[i].end()) return it->second;
    if (k < 0 && *values[i] == 0) {
      throw DomainError("eval_exact: " + p.vars()[i].name() + " = 0 raised to a negative power");
    }
    return cache[i].emplace(k, ajlab::pow(*values[i], k)).first->second;
  };
  Rational sum = 0;
  for (const auto& [e, c] : p.terms()) {
    Rational t = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] != 0) t *= power(i, e[i]);
    }
    sum += t;
  }
  return sum;
}

Rational eval_exact(const RationalFunction& f, const ExactPoint& point) {
  Rational d = eval_exact(f.den(), point);
  if (d == 0) throw DomainError("eval_exact: denominator " + f.den().to_string() + " vanishes");
  return eval_exact(f.num(), point) / d;
}

std::complex<double> eval_complex(const LaurentMPoly& p, const ComplexPoint& point) {
  std::vector<std::complex<double>> values;
  for (const auto& v : p.vars()) {
    auto it = point.find(v);
    if (it == point.end()) throw DomainError("eval_complex: variable " + v.name() + " is unbound");
    values.push_back(it->second);
  }
  std::complex<double> sum = 0;
  for (const auto& [e, c] : p.terms()) {
    std::complex<double> t = c.get_d();
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (e[i] < 0 && values[i] == 0.0) {
        throw SingularityError("eval_complex: " + p.vars()[i].name() + " = 0 raised to a negative power");
      }
      t *= ipow(values[i], e[i]);
    }
    sum += t;
  }
  return sum;
}

std::complex<double> eval_complex(const RationalFunction& f, const ComplexPoint& point) {
  auto d = eval_complex(f.den(), point);
  if (d == 0.0) throw SingularityError("eval_complex: denominator " + f.den().to_string() + " vanishes");
  return eval_complex(f.num(), point) / d;
}

}  // namespace ajlab
