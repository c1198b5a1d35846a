#include "ajlab/cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "ajlab/elimination.hpp"
#include "ajlab/errors.hpp"
#include "ajlab/parse.hpp"
#include "ajlab/polyalg.hpp"
#include "ajlab/potential.hpp"
#include "ajlab/qhg.hpp"

namespace ajlab::cli {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) {
    auto b = cur.find_first_not_of(" \t");
    auto e = cur.find_last_not_of(" \t");
    out.push_back(b == std::string::npos ? "" : cur.substr(b, e - b + 1));
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

nlohmann::json parse_json(const std::string& text, const std::string& what) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(what + ": " + e.what());
  }
}

/// "figure8", inline JSON, or a path to a JSON file.
KnotSpec load_knot(const std::string& arg) {
  if (arg == "figure8") return knot_spec_from_json({{"builtin", "figure8"}});
  std::string text = (!arg.empty() && arg[0] == '{') ? arg : read_file(arg);
  return knot_spec_from_json(parse_json(text, "knot spec"));
}

double parse_double(const std::string& s) {
  try {
    std::size_t pos = 0;
    double d = std::stod(s, &pos);
    if (pos != s.size()) throw ParseError("bad number '" + s + "'");
    return d;
  } catch (const std::logic_error&) {
    throw ParseError("bad number '" + s + "'");
  }
}

cplx parse_complex(const std::string& s) {
  auto parts = split(s, ',');
  if (parts.size() == 1) return parse_double(parts[0]);
  if (parts.size() != 2) throw ParseError("expected RE,IM but got '" + s + "'");
  return {parse_double(parts[0]), parse_double(parts[1])};
}

cplx complex_from_json(const nlohmann::json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_array() && j.size() == 2) {
    auto part = [](const nlohmann::json& x) { return x.is_string() ? parse_double(x.get<std::string>()) : x.get<double>(); };
    return {part(j[0]), part(j[1])};
  }
  throw ParseError("expected [re, im], got " + j.dump());
}

/// JSON array of [re, im], a file holding one, or "RE,IM;RE,IM".
std::vector<cplx> load_w0(const std::string& arg) {
  std::string text = arg;
  if (!arg.empty() && arg[0] != '[' && std::filesystem::exists(arg)) text = read_file(arg);
  std::vector<cplx> out;
  if (!text.empty() && text.find_first_not_of(" \t\n") != std::string::npos &&
      text[text.find_first_not_of(" \t\n")] == '[') {
    auto j = parse_json(text, "w0");
    if (!j.is_array()) throw ParseError("w0 must be an array");
    for (const auto& z : j) out.push_back(complex_from_json(z));
    return out;
  }
  for (const auto& part : split(text, ';')) out.push_back(parse_complex(part));
  return out;
}

std::vector<Rational> parse_q_list(const std::string& s) {
  std::vector<Rational> out;
  for (const auto& p : split(s, ',')) out.push_back(parse_rational(p));
  return out;
}

std::string cstr(cplx z) { return format_double(z.real()) + "," + format_double(z.imag()); }

MinusForm minus_form(const std::string& s) {
  if (s == "corrected") return MinusForm::corrected;
  if (s == "literal") return MinusForm::literal;
  throw ParseError("minus form must be corrected or literal");
}

struct Options {
  std::string knot = "figure8";
  std::string n_range;
  std::string q_list;
  std::string order;
  std::string alpha = "-1,0";
  std::string w0;
  std::string request;
  double tol = 1e-12;
  std::string format = "text";
  std::string out;
  std::string index;
  bool eps = false;
  std::string source = "epsilon";
  std::string op = "P0";
  std::string inhom;
  std::string apoly;
  std::string sign = "both";
  std::string regions = "1,2,3,4";
  std::string minus = "corrected";
  std::string point = "0.3,0.25";
  std::string N_list = "100,200,400,800";
};

bool json_out(const Options& o) { return o.format == "json"; }

// ---- commands -------------------------------------------------------------------------------

int cmd_ratio(const Options& o, std::ostream& os) {
  ProperQHTerm F = summand(load_knot(o.knot));
  std::vector<std::string> idx = o.index.empty() ? F.indices() : std::vector<std::string>{o.index};
  nlohmann::json j = nlohmann::json::object();
  for (const auto& i : idx) {
    RationalFunction r = o.eps ? epsilon_ratio(F, i) : shift_ratio(F, i);
    if (json_out(o)) {
      j[i] = r.to_string();
    } else {
      os << index_shift(i).name() << ": " << r.to_string() << "\n";
    }
  }
  if (json_out(o)) os << j.dump(2) << "\n";
  return 0;
}

EquationSystem load_system(const Options& o) {
  KnotSpec k = load_knot(o.knot);
  if (o.source == "epsilon") return build_epsilon_system(summand(k));
  if (o.source == "saddle") return build_saddle_system(potential_from_spec(k, minus_form(o.minus)));
  throw ParseError("source must be epsilon or saddle");
}

int cmd_system(const Options& o, std::ostream& os) {
  EquationSystem s = load_system(o);
  if (json_out(o)) {
    nlohmann::json eqs = nlohmann::json::array();
    for (const auto& e : s.equations) eqs.push_back({{"tag", e.tag}, {"poly", e.poly.to_string()}});
    nlohmann::json unk = nlohmann::json::array();
    for (const auto& v : s.unknowns) unk.push_back(v.name());
    nlohmann::json j{{"equations", eqs}, {"unknowns", unk}};
    j["longitude_root"] = s.longitude_root ? nlohmann::json(s.longitude_root->to_string()) : nlohmann::json(nullptr);
    os << j.dump(2) << "\n";
  } else {
    for (const auto& e : s.equations) os << e.tag << ": " << e.poly.to_string() << "\n";
  }
  return 0;
}

int cmd_eliminate(const Options& o, std::ostream& os, std::ostream& err) {
  EquationSystem s = load_system(o);
  VarList order;
  if (o.order.empty()) {
    order = default_order(s);
  } else {
    for (const auto& v : split(o.order, ',')) {
      if (!is_valid_identifier(v)) throw ParseError("bad variable '" + v + "' in --order");
      order.push_back(VarId(v));
    }
  }
  APolyCandidate c = eliminate(s, order);
  if (json_out(o)) {
    os << to_json(c).dump(2) << "\n";
  } else {
    os << c.poly.to_string() << "\n";
    for (const auto& d : c.discarded) err << "discarded (" << d.reason << "): " << d.factor.to_string() << "\n";
  }
  return 0;
}

struct OperatorChoice {
  OreOperator op;
  RationalFunction inhom;
  LaurentMPoly apoly;
};

OperatorChoice choose_operator(const Options& o) {
  OperatorChoice c;
  LaurentMPoly apoly = parse_poly(figure8::kAPoly);
  if (o.op == "P0") {
    c.op = parse_operator(figure8::kP0, 0);
    c.inhom = parse_rational_function(figure8::kInhomogeneity);
    c.apoly = apoly;
  } else if (o.op == "cubic") {
    c.op = parse_operator(figure8::kCubic, 0);
    c.inhom = 0;
    c.apoly = apoly * (LaurentMPoly::var(vars::l) - LaurentMPoly(1));
  } else {
    std::string text = std::filesystem::exists(o.op) ? read_file(o.op) : o.op;
    c.op = parse_operator(text, 0);
    c.inhom = 0;
  }
  if (!o.inhom.empty()) c.inhom = parse_rational_function(o.inhom);
  if (!o.apoly.empty()) c.apoly = parse_poly(o.apoly);
  return c;
}

int cmd_verify(const Options& o, std::ostream& os) {
  KnotSpec k = load_knot(o.knot);
  if (!k.figure8 || k.mirror) throw DomainError("verify needs the figure8 builtin");
  OperatorChoice c = choose_operator(o);
  auto ns = parse_range(o.n_range.empty() ? "1..8" : o.n_range);
  auto qs = parse_q_list(o.q_list.empty() ? "2,3,5/2,7,11" : o.q_list);
  DiscreteEvaluator J{1, [k](const std::vector<long>& p, const Rational& q) {
                        if (p[0] < 1) return EvalValue{0, false};
                        return EvalValue{jones_eval(k, p[0], ExactQ{q, std::nullopt}), true};
                      }};
  bool ok = true;
  nlohmann::json rows = nlohmann::json::array();
  for (long n : ns) {
    for (const auto& q : qs) {
      Rational r = ore_apply(c.op, J, {n}, q);
      r += eval_exact(c.inhom, {{vars::q, q}, {vars::Q, pow(q, n)}});
      ok = ok && r == 0;
      if (json_out(o)) {
        rows.push_back({{"n", n}, {"q", q.get_str()}, {"residual", r.get_str()}});
      } else {
        os << n << " " << q.get_str() << " " << r.get_str() << "\n";
      }
    }
  }
  if (json_out(o)) os << nlohmann::json{{"pass", ok}, {"rows", rows}}.dump(2) << "\n";
  return ok ? 0 : 1;
}

int cmd_jones(const Options& o, std::ostream& os) {
  if (o.n_range.empty()) throw ParseError("jones needs --n");
  KnotSpec k = load_knot(o.knot);
  auto ns = parse_range(o.n_range);
  auto qs = o.q_list.empty() ? std::vector<Rational>{} : parse_q_list(o.q_list);
  bool single = ns.size() == 1 && qs.size() <= 1;
  nlohmann::json rows = nlohmann::json::array();
  for (long n : ns) {
    if (qs.empty()) {
      std::string v;
      try {
        v = jones_eval(k, n, SymbolicQ{false}).to_string();
      } catch (const DomainError&) {
        v = jones_eval(k, n, SymbolicQ{true}).to_string();
      }
      if (json_out(o)) rows.push_back({{"n", n}, {"value", v}});
      else os << (single ? v : "J_" + std::to_string(n) + " = " + v) << "\n";
    }
    for (const auto& q : qs) {
      std::string v = jones_eval(k, n, ExactQ{q, std::nullopt}).get_str();
      if (json_out(o)) rows.push_back({{"n", n}, {"q", q.get_str()}, {"value", v}});
      else os << (single ? v : "J_" + std::to_string(n) + "(" + q.get_str() + ") = " + v) << "\n";
    }
  }
  if (json_out(o)) os << rows.dump(2) << "\n";
  return 0;
}

struct SaddleRequest {
  Potential P;
  cplx alpha;
  std::vector<cplx> w0;
};

SaddleRequest saddle_request(const Options& o, bool volume_mode) {
  SaddleRequest r;
  if (!o.request.empty()) {
    auto j = parse_json(read_file(o.request), "saddle request");
    try {
      const auto& spec = j.at("spec");
      KnotSpec k = spec.is_string() ? load_knot(spec.get<std::string>()) : knot_spec_from_json(spec);
      r.P = potential_from_spec(k, minus_form(o.minus));
      r.alpha = volume_mode ? cplx(-1.0) : complex_from_json(j.at("alpha"));
      for (const auto& z : j.at("w0")) r.w0.push_back(complex_from_json(z));
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("saddle request: ") + e.what());
    }
    return r;
  }
  KnotSpec k = load_knot(o.knot);
  r.P = potential_from_spec(k, minus_form(o.minus));
  r.alpha = volume_mode ? cplx(-1.0) : parse_complex(o.alpha);
  if (!o.w0.empty()) {
    r.w0 = load_w0(o.w0);
  } else if (k.figure8) {
    r.w0 = {cplx(0.5, 0.8)};
  } else if (!r.P.region_vars.empty()) {
    throw ParseError("--w0 is required for diagram specs");
  }
  return r;
}

int cmd_saddle(const Options& o, std::ostream& os) {
  SaddleRequest r = saddle_request(o, false);
  SaddleResult s = solve_saddle(r.P, r.alpha, r.w0, {o.tol, 100});
  if (json_out(o)) {
    os << to_json(s).dump(2) << "\n";
  } else {
    os << "alpha: " << cstr(s.alpha) << "\n";
    for (std::size_t i = 0; i < s.w.size(); ++i) os << r.P.region_vars[i].name() << ": " << cstr(s.w[i]) << "\n";
    os << "residual: " << format_double(s.residual) << "\n";
    os << "imPhi: " << format_double(s.im_phi) << "\n";
    os << "l_squared: " << cstr(s.l_squared) << "\n";
    os << "iterations: " << s.iterations << "\n";
  }
  return 0;
}

int cmd_volume(const Options& o, std::ostream& os) {
  SaddleRequest r = saddle_request(o, true);
  double v = volume(r.P, r.w0, {o.tol, 100});
  if (json_out(o)) {
    os << nlohmann::json{{"volume", format_double(v)}}.dump(2) << "\n";
  } else {
    os << format_double(v) << "\n";
  }
  return 0;
}

int cmd_ajcheck(const Options& o, std::ostream& os) {
  KnotSpec k = load_knot(o.knot);
  OperatorChoice c = choose_operator(o);
  if (c.apoly.is_zero()) {
    if (!k.figure8) throw ParseError("--apoly is required");
    APolyCandidate a = eliminate(build_epsilon_system(summand(k)), {vars::x});
    c.apoly = a.poly;
  }
  Identity id = aj_compare(c.op, c.apoly);
  if (json_out(o)) {
    os << to_json(id).dump(2) << "\n";
  } else {
    os << (id.pass ? "PASS" : "FAIL") << " " << id.identity << "\n";
    os << "lhs: " << id.lhs << "\nrhs: " << id.rhs << "\nunit: " << id.unit << "\n";
  }
  return id.pass ? 0 : 1;
}

int cmd_propcheck(const Options& o, std::ostream& os) {
  std::vector<int> signs;
  if (o.sign == "+" || o.sign == "both") signs.push_back(1);
  if (o.sign == "-" || o.sign == "both") signs.push_back(-1);
  if (signs.empty()) throw ParseError("--sign must be +, - or both");
  auto reg = split(o.regions, ',');
  if (reg.size() != 4) throw ParseError("--regions needs 4 integers");
  CrossingData c;
  for (int i = 0; i < 4; ++i) {
    try {
      c.regions[i] = std::stoi(reg[i]);
    } catch (const std::logic_error&) {
      throw ParseError("bad region '" + reg[i] + "'");
    }
    if (c.regions[i] < 1) throw ParseError("regions are 1-based");
  }
  std::vector<Identity> all;
  for (int s : signs) {
    c.sign = s;
    auto r = prop_comp_check(c, minus_form(o.minus));
    all.insert(all.end(), r.begin(), r.end());
  }
  bool ok = std::all_of(all.begin(), all.end(), [](const Identity& i) { return i.pass; });
  if (json_out(o)) {
    os << to_json(all).dump(2) << "\n";
  } else {
    for (const auto& i : all) {
      os << (i.pass ? "PASS " : "FAIL ") << i.identity;
      if (!i.pass) os << "  lhs/rhs = " << i.unit;
      os << "\n";
    }
  }
  return ok ? 0 : 1;
}

int cmd_asympt(const Options& o, std::ostream& os) {
  KnotSpec k = load_knot(o.knot);
  ProperQHTerm F = summand(k);
  Potential P = potential_from_spec(k, minus_form(o.minus));
  std::vector<double> pt;
  for (const auto& s : split(o.point, ',')) pt.push_back(parse_double(s));
  std::vector<long> Ns;
  for (const auto& s : split(o.N_list, ',')) {
    try {
      Ns.push_back(std::stol(s));
    } catch (const std::logic_error&) {
      throw ParseError("bad N '" + s + "'");
    }
  }
  nlohmann::json rows = nlohmann::json::array();
  double prev = 0;
  for (long N : Ns) {
    double e = asymptotic_check(F, P, N, pt);
    nlohmann::json row{{"N", N}, {"error", format_double(e)}};
    if (prev > 0) row["ratio"] = format_double(prev / e);
    rows.push_back(row);
    if (!json_out(o)) {
      os << N << " " << format_double(e);
      if (prev > 0) os << " " << format_double(prev / e);
      os << "\n";
    }
    prev = e;
  }
  if (json_out(o)) os << rows.dump(2) << "\n";
  return 0;
}

}  // namespace

std::vector<long> parse_range(const std::string& text) {
  std::vector<long> out;
  auto num = [&](const std::string& s) {
    try {
      std::size_t pos = 0;
      long v = std::stol(s, &pos);
      if (pos != s.size()) throw ParseError("bad integer '" + s + "' in range");
      return v;
    } catch (const std::logic_error&) {
      throw ParseError("bad integer '" + s + "' in range");
    }
  };
  for (const auto& part : split(text, ',')) {
    auto dots = part.find("..");
    if (dots == std::string::npos) {
      out.push_back(num(part));
      continue;
    }
    long a = num(part.substr(0, dots)), b = num(part.substr(dots + 2));
    if (b < a) throw ParseError("empty range '" + part + "'");
    for (long v = a; v <= b; ++v) out.push_back(v);
  }
  if (out.empty()) throw ParseError("empty range");
  return out;
}

void write_atomic(const std::string& path, const std::string& content) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw ParseError("cannot write " + tmp);
    f << content;
    f.flush();
    if (!f) throw ParseError("write failed: " + tmp);
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw ParseError("cannot rename " + tmp + " to " + path + ": " + ec.message());
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Colored Jones / A-polynomial toolkit", "ajlab"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sc) {
    sc->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    sc->add_option("--out", o.out, "write the primary output to this file");
  };
  auto knot = [&](CLI::App* sc) { sc->add_option("--knot", o.knot, "figure8, a spec JSON file or inline JSON"); };
  auto minus = [&](CLI::App* sc) {
    sc->add_option("--minus-form", o.minus, "negative crossing potential: corrected or literal");
  };
  auto op = [&](CLI::App* sc) {
    sc->add_option("--operator", o.op, "P0, cubic, operator text or a file holding it");
  };

  auto* ratio = app.add_subcommand("ratio", "shift ratios of the summand");
  knot(ratio), common(ratio);
  ratio->add_option("--index", o.index, "n, m, k1, ...");
  ratio->add_flag("--eps", o.eps, "q = 1 image");

  auto* system = app.add_subcommand("system", "gluing and longitude equations");
  knot(system), common(system), minus(system);
  system->add_option("--source", o.source, "epsilon or saddle");

  auto* elim = app.add_subcommand("eliminate", "eliminate region variables");
  knot(elim), common(elim), minus(elim);
  elim->add_option("--source", o.source, "epsilon or saddle");
  elim->add_option("--order", o.order, "comma separated region variables");

  auto* verify = app.add_subcommand("verify", "check a recurrence on J(n) at rational q");
  knot(verify), common(verify), op(verify);
  verify->add_option("--n", o.n_range, "range, default 1..8");
  verify->add_option("--q", o.q_list, "rational list, default 2,3,5/2,7,11");
  verify->add_option("--inhom", o.inhom, "inhomogeneous term f(q, Q)");

  auto* jones = app.add_subcommand("jones", "colored Jones polynomial by summation");
  knot(jones), common(jones);
  jones->add_option("--n", o.n_range, "range")->required();
  jones->add_option("--q", o.q_list, "rational list; symbolic when absent");

  auto* saddle = app.add_subcommand("saddle", "saddle point of the potential");
  knot(saddle), common(saddle), minus(saddle);
  saddle->add_option("--alpha", o.alpha, "RE,IM");
  saddle->add_option("--w0", o.w0, "initial guess: file, JSON array or RE,IM;RE,IM");
  saddle->add_option("--request", o.request, "JSON file {spec, alpha, w0}");
  saddle->add_option("--tol", o.tol, "residual tolerance");

  auto* vol = app.add_subcommand("volume", "Im Phi at the saddle for alpha = -1");
  knot(vol), common(vol), minus(vol);
  vol->add_option("--w0", o.w0, "initial guess");
  vol->add_option("--request", o.request, "JSON file {spec, w0}");
  vol->add_option("--tol", o.tol, "residual tolerance");

  auto* aj = app.add_subcommand("ajcheck", "eps(P0) against an A-polynomial");
  knot(aj), common(aj), op(aj);
  aj->add_option("--apoly", o.apoly, "A(l, alpha); default the eliminant");

  auto* prop = app.add_subcommand("propcheck", "derivative forms against q = 1 shift ratios");
  common(prop), minus(prop);
  prop->add_option("--sign", o.sign, "+, - or both");
  prop->add_option("--regions", o.regions, "j1,j2,j3,j4");

  auto* asym = app.add_subcommand("asympt", "discrete against continuous color ratio at roots of unity");
  knot(asym), common(asym), minus(asym);
  asym->add_option("--point", o.point, "scaled coordinates a,u1,..");
  asym->add_option("--N", o.N_list, "list of N");

  std::vector<std::string> argv_store{"ajlab"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "ajlab: " << e.what() << "\n";
    return 2;
  }

  std::ostringstream os;
  int code = 0;
  try {
    if (*ratio) code = cmd_ratio(o, os);
    else if (*system) code = cmd_system(o, os);
    else if (*elim) code = cmd_eliminate(o, os, err);
    else if (*verify) code = cmd_verify(o, os);
    else if (*jones) code = cmd_jones(o, os);
    else if (*saddle) code = cmd_saddle(o, os);
    else if (*vol) code = cmd_volume(o, os);
    else if (*aj) code = cmd_ajcheck(o, os);
    else if (*prop) code = cmd_propcheck(o, os);
    else if (*asym) code = cmd_asympt(o, os);
    if (o.out.empty()) {
      out << os.str();
    } else {
      write_atomic(o.out, os.str());
    }
  } catch (const ParseError& e) {
    err << "ajlab: malformed input: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    err << "ajlab: malformed input: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "ajlab: " << e.what() << "\n";
    return 1;
  } catch (const ConvergenceError& e) {
    err << "ajlab: " << e.what() << " (last residual " << format_double(e.last_residual()) << ")\n";
    return 1;
  } catch (const std::runtime_error& e) {
    err << "ajlab: " << e.what() << "\n";
    return 1;
  }
  if (code != 0) err << "ajlab: verification failed\n";
  return code;
}

}  // namespace ajlab::cli
