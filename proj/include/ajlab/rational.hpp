#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace ajlab {

using Integer = mpz_class;
using Rational = mpq_class;  // arithmetic expects canonical operands; Rational(n, d) needs canonicalize()

/// Parses "7", "-3/4" into a canonical rational. Throws ParseError.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& r);

/// r^e for any integer e; throws DomainError for 0^(negative).
Rational pow(const Rational& r, long e);

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

}  // namespace ajlab
