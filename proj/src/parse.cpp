#include "ajlab/parse.hpp"

namespace ajlab {

namespace {

struct RationalFunctionAlgebra {
  using Value = RationalFunction;
  Value number(const Rational& r) const { return r; }
  Value symbol(std::string_view name) const {
    if (!is_valid_identifier(name)) throw ParseError("bad identifier '" + std::string(name) + "'");
    return RationalFunction::var(VarId(std::string(name)));
  }
  Value add(const Value& a, const Value& b) const { return a + b; }
  Value sub(const Value& a, const Value& b) const { return a - b; }
  Value mul(const Value& a, const Value& b) const { return a * b; }
  Value div(const Value& a, const Value& b) const {
    if (b.is_zero()) throw ParseError("division by zero");
    return a / b;
  }
  Value neg(const Value& a) const { return -a; }
  Value pow(const Value& a, long e) const {
    if (e < 0 && a.is_zero()) throw ParseError("zero raised to a negative power");
    return a.pow(e);
  }
};

Rational json_rational(const nlohmann::json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw ParseError("expected integer or string rational in JSON, got " + j.dump());
}

}  // namespace

RationalFunction parse_rational_function(std::string_view text) {
  RationalFunctionAlgebra alg;
  return ExpressionParser<RationalFunctionAlgebra>(text, alg).parse();
}

LaurentMPoly parse_poly(std::string_view text) {
  RationalFunction f = parse_rational_function(text);
  if (!f.is_polynomial()) throw ParseError("not a Laurent polynomial: '" + std::string(text) + "'");
  return f.num().scaled(1 / f.den().constant_value());
}

nlohmann::json to_json(const LaurentMPoly& p) {
  nlohmann::json j;
  j["vars"] = nlohmann::json::array();
  for (const auto& v : p.vars()) j["vars"].push_back(v.name());
  j["terms"] = nlohmann::json::array();
  for (const auto& [e, c] : p.terms()) {
    j["terms"].push_back({{"exp", e}, {"num", c.get_num().get_str()}, {"den", c.get_den().get_str()}});
  }
  return j;
}

LaurentMPoly poly_from_json(const nlohmann::json& j) {
  try {
    VarList vars;
    for (const auto& v : j.at("vars")) {
      auto name = v.get<std::string>();
      if (!is_valid_identifier(name)) throw ParseError("bad identifier '" + name + "'");
      vars.push_back(VarId(name));
    }
    LaurentMPoly out;
    for (const auto& t : j.at("terms")) {
      auto e = t.at("exp").get<Exponents>();
      if (e.size() != vars.size()) throw ParseError("exponent vector length does not match vars");
      Rational c = json_rational(t.at("num"));
      if (t.contains("den")) {
        Rational d = json_rational(t.at("den"));
        if (d == 0) throw ParseError("zero denominator in polynomial JSON");
        c /= d;
      }
      std::vector<std::pair<VarId, int>> powers;
      for (std::size_t i = 0; i < vars.size(); ++i) powers.emplace_back(vars[i], e[i]);
      out += LaurentMPoly::monomial(c, powers);
    }
    return out;
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("polynomial JSON: ") + ex.what());
  }
}

nlohmann::json to_json(const RationalFunction& f) { return {{"num", to_json(f.num())}, {"den", to_json(f.den())}}; }

RationalFunction ratfun_from_json(const nlohmann::json& j) {
  try {
    if (j.is_string()) return parse_rational_function(j.get<std::string>());
    LaurentMPoly den = poly_from_json(j.at("den"));
    if (den.is_zero()) throw ParseError("zero denominator in rational function JSON");
    return RationalFunction(poly_from_json(j.at("num")), den);
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("rational function JSON: ") + ex.what());
  }
}

}  // namespace ajlab
