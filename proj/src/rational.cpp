#include "ajlab/rational.hpp"

#include <cctype>

#include "ajlab/errors.hpp"

namespace ajlab {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  auto num = text.substr(0, slash);
  auto den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den)) {
    throw ParseError("not a rational number: '" + std::string(text) + "'");
  }
  std::string n(num[0] == '+' ? num.substr(1) : num);
  std::string d(den[0] == '+' ? den.substr(1) : den);
  Integer dn(d);
  if (dn == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  Rational r(Integer(n), dn);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

Rational pow(const Rational& r, long e) {
  if (e < 0) {
    if (r == 0) throw DomainError("zero raised to a negative power");
    Rational inv = 1 / r;
    return pow(inv, -e);
  }
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), r.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(den.get_mpz_t(), r.get_den_mpz_t(), static_cast<unsigned long>(e));
  return Rational(num, den);  // already coprime
}

}  // namespace ajlab
