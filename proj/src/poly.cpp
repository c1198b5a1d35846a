#include "ajlab/poly.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>

#include "ajlab/errors.hpp"

namespace ajlab {

VarList merge_vars(const VarList& a, const VarList& b) {
  VarList out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

LaurentMPoly::TermMap align_terms(const LaurentMPoly& p, const VarList& target) {
  if (p.vars() == target) return p.terms();
  std::vector<std::size_t> pos(p.vars().size());
  for (std::size_t i = 0; i < p.vars().size(); ++i) {
    auto it = std::lower_bound(target.begin(), target.end(), p.vars()[i]);
    if (it == target.end() || !(*it == p.vars()[i])) {
      throw DomainError("align_terms: target context lacks variable " + p.vars()[i].name());
    }
    pos[i] = static_cast<std::size_t>(it - target.begin());
  }
  LaurentMPoly::TermMap out;
  for (const auto& [e, c] : p.terms()) {
    Exponents t(target.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) t[pos[i]] = e[i];
    out.emplace(std::move(t), c);
  }
  return out;
}

bool grlex_less(const Exponents& a, const Exponents& b) {
  long da = std::accumulate(a.begin(), a.end(), 0L);
  long db = std::accumulate(b.begin(), b.end(), 0L);
  if (da != db) return da < db;
  return a < b;
}

LaurentMPoly::LaurentMPoly(const Rational& c) {
  if (c != 0) {
    Rational k = c;
    k.canonicalize();  // mpq_class(n, d) is not reduced on construction
    terms_.emplace(Exponents{}, k);
  }
}

LaurentMPoly::LaurentMPoly(VarList vars, TermMap terms) : vars_(std::move(vars)), terms_(std::move(terms)) {
  for (auto& [e, c] : terms_) c.canonicalize();
  if (!std::is_sorted(vars_.begin(), vars_.end()) ||
      std::adjacent_find(vars_.begin(), vars_.end()) != vars_.end()) {
    // Re-sort the variables and permute exponents accordingly.
    std::vector<std::size_t> order(vars_.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](auto i, auto j) { return vars_[i] < vars_[j]; });
    VarList sorted;
    std::vector<std::size_t> slot(vars_.size());
    for (auto i : order) {
      if (sorted.empty() || !(sorted.back() == vars_[i])) sorted.push_back(vars_[i]);
      slot[i] = sorted.size() - 1;
    }
    TermMap remapped;
    for (const auto& [e, c] : terms_) {
      if (e.size() != vars_.size()) throw DomainError("exponent vector length mismatch");
      Exponents t(sorted.size(), 0);
      for (std::size_t i = 0; i < e.size(); ++i) t[slot[i]] += e[i];
      remapped[t] += c;
    }
    vars_ = std::move(sorted);
    terms_ = std::move(remapped);
  }
  for (const auto& [e, c] : terms_) {
    if (e.size() != vars_.size()) throw DomainError("exponent vector length mismatch");
  }
  canonicalize();
}

LaurentMPoly LaurentMPoly::var(const VarId& v, int power) {
  if (power == 0) return LaurentMPoly(1);
  return LaurentMPoly({v}, {{Exponents{power}, Rational(1)}});
}

LaurentMPoly LaurentMPoly::monomial(const Rational& c, const std::vector<std::pair<VarId, int>>& powers) {
  VarList vs;
  Exponents e;
  for (const auto& [v, k] : powers) {
    vs.push_back(v);
    e.push_back(k);
  }
  TermMap t;
  t.emplace(std::move(e), c);
  return LaurentMPoly(std::move(vs), std::move(t));
}

void LaurentMPoly::canonicalize() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second == 0) {
      it = terms_.erase(it);
    } else {
      ++it;
    }
  }
  std::vector<bool> used(vars_.size(), false);
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] != 0) used[i] = true;
    }
  }
  if (std::all_of(used.begin(), used.end(), [](bool b) { return b; })) return;
  VarList kept;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (used[i]) kept.push_back(vars_[i]);
  }
  TermMap trimmed;
  for (const auto& [e, c] : terms_) {
    Exponents t;
    t.reserve(kept.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (used[i]) t.push_back(e[i]);
    }
    trimmed.emplace(std::move(t), c);
  }
  vars_ = std::move(kept);
  terms_ = std::move(trimmed);
}

Rational LaurentMPoly::constant_value() const {
  if (!is_constant()) throw DomainError("constant_value on non-constant polynomial " + to_string());
  return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

int LaurentMPoly::var_index(const VarId& v) const {
  auto it = std::lower_bound(vars_.begin(), vars_.end(), v);
  if (it == vars_.end() || !(*it == v)) return -1;
  return static_cast<int>(it - vars_.begin());
}

bool LaurentMPoly::has_var(const VarId& v) const { return var_index(v) >= 0; }

int LaurentMPoly::degree(const VarId& v) const {
  int i = var_index(v);
  if (i < 0 || terms_.empty()) return 0;
  int d = terms_.begin()->first[i];
  for (const auto& [e, c] : terms_) d = std::max(d, e[i]);
  return d;
}

int LaurentMPoly::min_degree(const VarId& v) const {
  int i = var_index(v);
  if (i < 0 || terms_.empty()) return 0;
  int d = terms_.begin()->first[i];
  for (const auto& [e, c] : terms_) d = std::min(d, e[i]);
  return d;
}

int LaurentMPoly::total_degree() const {
  int d = 0;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    int s = std::accumulate(e.begin(), e.end(), 0);
    d = first ? s : std::max(d, s);
    first = false;
  }
  return d;
}

bool LaurentMPoly::is_polynomial() const {
  for (const auto& [e, c] : terms_) {
    for (int k : e) {
      if (k < 0) return false;
    }
  }
  return true;
}

const std::pair<const Exponents, Rational>& LaurentMPoly::leading_term() const {
  if (terms_.empty()) throw DomainError("leading term of zero polynomial");
  auto best = terms_.begin();
  for (auto it = std::next(best); it != terms_.end(); ++it) {
    if (grlex_less(best->first, it->first)) best = it;
  }
  return *best;
}

LaurentMPoly LaurentMPoly::coefficient(const VarId& v, int k) const {
  int i = var_index(v);
  if (i < 0) return k == 0 ? *this : LaurentMPoly();
  TermMap out;
  for (const auto& [e, c] : terms_) {
    if (e[i] != k) continue;
    Exponents t = e;
    t[i] = 0;
    out.emplace(std::move(t), c);
  }
  return LaurentMPoly(vars_, std::move(out));
}

LaurentMPoly LaurentMPoly::min_monomial() const {
  if (terms_.empty()) return LaurentMPoly(1);
  Exponents m = terms_.begin()->first;
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < e.size(); ++i) m[i] = std::min(m[i], e[i]);
  }
  TermMap t;
  t.emplace(std::move(m), Rational(1));
  return LaurentMPoly(vars_, std::move(t));
}

LaurentMPoly LaurentMPoly::operator-() const {
  LaurentMPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

LaurentMPoly& LaurentMPoly::operator+=(const LaurentMPoly& o) {
  if (o.is_zero()) return *this;
  if (vars_ != o.vars_) {
    VarList u = merge_vars(vars_, o.vars_);
    terms_ = align_terms(*this, u);
    vars_ = std::move(u);
    for (auto& [e, c] : align_terms(o, vars_)) terms_[e] += c;
  } else {
    for (const auto& [e, c] : o.terms_) terms_[e] += c;
  }
  canonicalize();
  return *this;
}

LaurentMPoly& LaurentMPoly::operator-=(const LaurentMPoly& o) { return *this += -o; }

LaurentMPoly operator*(const LaurentMPoly& a, const LaurentMPoly& b) {
  if (a.is_zero() || b.is_zero()) return LaurentMPoly();
  VarList u = merge_vars(a.vars_, b.vars_);
  auto ta = align_terms(a, u);
  auto tb = align_terms(b, u);
  LaurentMPoly::TermMap out;
  Exponents e(u.size());
  for (const auto& [ea, ca] : ta) {
    for (const auto& [eb, cb] : tb) {
      for (std::size_t i = 0; i < u.size(); ++i) e[i] = ea[i] + eb[i];
      out[e] += ca * cb;
    }
  }
  LaurentMPoly r;
  r.vars_ = std::move(u);
  r.terms_ = std::move(out);
  r.canonicalize();
  return r;
}

LaurentMPoly& LaurentMPoly::operator*=(const LaurentMPoly& o) { return *this = *this * o; }

LaurentMPoly LaurentMPoly::scaled(const Rational& c) const {
  if (c == 0) return LaurentMPoly();
  Rational k0 = c;
  k0.canonicalize();
  LaurentMPoly r = *this;
  for (auto& [e, k] : r.terms_) k *= k0;
  return r;
}

LaurentMPoly LaurentMPoly::shifted(const std::vector<std::pair<VarId, int>>& monomial) const {
  return *this * LaurentMPoly::monomial(1, monomial);
}

LaurentMPoly LaurentMPoly::pow(long e) const {
  if (e < 0) {
    if (!is_monomial()) throw DomainError("negative power of a non-monomial Laurent polynomial");
    const auto& [m, c] = *terms_.begin();
    Exponents inv(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) inv[i] = static_cast<int>(m[i] * e);
    TermMap t;
    t.emplace(std::move(inv), ajlab::pow(c, e));
    return LaurentMPoly(vars_, std::move(t));
  }
  LaurentMPoly result(1), base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

LaurentMPoly LaurentMPoly::derivative(const VarId& v) const {
  int i = var_index(v);
  if (i < 0) return LaurentMPoly();
  TermMap out;
  for (const auto& [e, c] : terms_) {
    if (e[i] == 0) continue;
    Exponents t = e;
    t[i] -= 1;
    out[t] += c * e[i];
  }
  return LaurentMPoly(vars_, std::move(out));
}

LaurentMPoly LaurentMPoly::renamed(const std::vector<std::pair<VarId, VarId>>& renames) const {
  VarList vs = vars_;
  for (auto& v : vs) {
    for (const auto& [from, to] : renames) {
      if (v == from) {
        v = to;
        break;
      }
    }
  }
  VarList check = vs;
  std::sort(check.begin(), check.end());
  if (std::adjacent_find(check.begin(), check.end()) != check.end()) {
    throw DomainError("rename merges two occurring variables");
  }
  return LaurentMPoly(std::move(vs), terms_);
}

namespace {

void write_monomial(std::ostream& os, const VarList& vars, const Exponents& e) {
  bool first = true;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!first) os << '*';
    first = false;
    os << vars[i].name();
    if (e[i] != 1) os << '^' << e[i];
  }
}

}  // namespace

std::string LaurentMPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<const std::pair<const Exponents, Rational>*> order;
  for (const auto& t : terms_) order.push_back(&t);
  std::sort(order.begin(), order.end(), [](auto* a, auto* b) { return grlex_less(b->first, a->first); });
  std::ostringstream os;
  bool first = true;
  for (const auto* t : order) {
    const auto& [e, c] = *t;
    bool constant = std::all_of(e.begin(), e.end(), [](int k) { return k == 0; });
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (constant) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << '*';
    write_monomial(os, vars_, e);
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentMPoly& p) { return os << p.to_string(); }

}  // namespace ajlab
