#include "msres/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "msres/check.hpp"
#include "msres/error.hpp"
#include "msres/format.hpp"
#include "msres/parametric.hpp"
#include "msres/parse.hpp"
#include "msres/solvers.hpp"

namespace msres {

DeltaIndex parse_delta(std::string_view text) {
  std::string s(text);
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  std::vector<unsigned> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw Error(Errc::invalid_argument, "empty entry in delta '" + std::string(text) + "'");
    item = item.substr(b, e - b + 1);
    if (item.find_first_not_of("0123456789") != std::string::npos || item.size() > 6)
      throw Error(Errc::invalid_argument, "delta entries must be natural numbers: '" + item + "'");
    parts.push_back(static_cast<unsigned>(std::stoul(item)));
  }
  if (parts.empty()) throw Error(Errc::invalid_argument, "delta must not be empty");
  return DeltaIndex(std::move(parts));
}

namespace {

std::string bracket(std::span<const unsigned> parts) {
  std::string s = "[";
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + std::to_string(parts[i]);
  return s + "]";
}

struct Input {
  PolyInputDoc doc;
  std::vector<UPoly<ParamPoly>> polys;
};

Input read_input(const std::string& path, std::istream& in) {
  std::string text;
  if (path == "-") {
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  } else {
    std::ifstream f(path);
    if (!f) throw Error(Errc::invalid_argument, "cannot read input file '" + path + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    text = ss.str();
  }
  Input input;
  input.doc = parse_input_doc(text);
  if (input.doc.polynomials.empty()) throw Error(Errc::invalid_argument, "input has no 'poly:' lines");
  for (std::size_t i = 0; i < input.doc.polynomials.size(); ++i) {
    try {
      input.polys.push_back(parse_poly(input.doc.polynomials[i], std::span<const std::string>(input.doc.parameters)));
    } catch (const ParseError& e) {
      throw ParseError(e.code(), e.position(), "poly " + std::to_string(i) + ": " + e.what());
    }
  }
  return input;
}

std::vector<UPoly<Rational>> rational_polys(const Input& input, const char* command) {
  if (input.doc.parametric())
    throw Error(Errc::invalid_argument, std::string(command) + " needs rational coefficients; use param-" + command);
  std::vector<UPoly<Rational>> out;
  for (const auto& p : input.polys) out.push_back(specialize(p, {}));
  return out;
}

void echo_inputs(ResultDoc& doc, const Input& input) {
  if (input.doc.parametric()) {
    std::string names;
    for (std::size_t i = 0; i < input.doc.parameters.size(); ++i) names += (i ? ", " : "") + input.doc.parameters[i];
    doc.add("parameters", names);
    for (const auto& p : input.polys) doc.add("input", format_poly(p));
  } else {
    for (const auto& p : input.polys) doc.add("input", format_poly(specialize(p, {})));
  }
}

Method method_from(const std::string& name) {
  const auto m = parse_method(name);
  if (!m) throw Error(Errc::invalid_argument, "unknown method '" + name + "'");
  return *m;
}

const char* status(bool dead, bool fallback) { return fallback ? "else" : dead ? "dead" : "live"; }

struct Options {
  std::string input = "-";
  std::string delta;
  std::string method = "sylvester";
  unsigned degree = 0;
  std::vector<std::string> coeffs;
  bool primitive = false;
  bool serial = false;
  CheckOptions check;
};

void cmd_subres(const Options& o, std::istream& in, ResultDoc& doc) {
  const auto input = read_input(o.input, in);
  const auto delta = parse_delta(o.delta);
  const Method method = method_from(o.method);
  echo_inputs(doc, input);
  doc.add("delta", delta.str());
  doc.add("method", method_name(method));
  if (input.doc.parametric()) {
    const PolyTuple<ParamPoly> F(input.polys);
    const auto r = subresultant(F, delta, method);
    doc.add("delta0", std::to_string(r.delta0));
    doc.add("epsilon", std::to_string(r.epsilon));
    doc.add("S", format_poly(r.s_poly));
    doc.add("S_coeffs", format_coeffs(r.s_poly));
    doc.add("s", r.s_principal.str());
    doc.add("assumption", "(" + F.lc0().str() + ") != 0");
  } else {
    const PolyTuple<Rational> F(rational_polys(input, "subres"));
    const auto r = subresultant(F, delta, method);
    doc.add("delta0", std::to_string(r.delta0));
    doc.add("epsilon", std::to_string(r.epsilon));
    doc.add("S", format_poly(r.s_poly));
    doc.add("S_coeffs", format_coeffs(r.s_poly));
    doc.add("s", r.s_principal.str());
  }
}

void cmd_gcd(const Options& o, std::istream& in, ResultDoc& doc) {
  const auto input = read_input(o.input, in);
  const PolyTuple<Rational> F(rational_polys(input, "gcd"));
  const auto r = multi_gcd(F, method_from(o.method));
  echo_inputs(doc, input);
  doc.add("method", method_name(r.method));
  doc.add("gcd", format_poly(r.gcd));
  doc.add("gcd_coeffs", format_coeffs(r.gcd));
  doc.add("delta", r.delta ? r.delta->str() : "none");
  doc.add("s", r.s_value.str());
}

void cmd_mult(const Options& o, std::istream& in, ResultDoc& doc) {
  const auto input = read_input(o.input, in);
  const auto polys = rational_polys(input, "mult");
  if (polys.size() != 1) throw Error(Errc::invalid_argument, "mult takes exactly one polynomial");
  const auto r = multiplicity(polys[0], method_from(o.method));
  echo_inputs(doc, input);
  doc.add("method", method_name(method_from(o.method)));
  doc.add("multiplicities", bracket(r.multiplicities.parts()));
  doc.add("lambda", bracket(r.lambda.parts()));
}

ParamOptions param_options(const Options& o) {
  ParamOptions p;
  p.method = method_from(o.method);
  p.primitive_conditions = o.primitive;
  return p;
}

void cmd_param_gcd(const Options& o, std::istream& in, ResultDoc& doc) {
  const auto input = read_input(o.input, in);
  const PolyTuple<ParamPoly> F(input.polys);
  const auto tree = gcd_decision_tree(F, param_options(o));
  echo_inputs(doc, input);
  doc.add("method", o.method);
  doc.add("assumption", "(" + tree.assumption.str() + ") != 0");
  doc.add("branches", std::to_string(tree.branches.size()));
  for (std::size_t i = 0; i < tree.branches.size(); ++i) {
    const auto& b = tree.branches[i];
    const std::string p = "branch." + std::to_string(i + 1) + ".";
    doc.add(p + "delta", b.delta.str());
    doc.add(p + "status", status(b.dead, b.fallback));
    doc.add(p + "condition", b.condition.str());
    doc.add(p + "gcd_numerator", format_poly(b.gcd_numerator));
    doc.add(p + "gcd_denominator", b.gcd_denominator.str());
  }
}

void cmd_param_mult(const Options& o, std::istream& in, ResultDoc& doc) {
  MultTable table;
  if (o.degree > 0) {
    table = mult_decision_table(o.degree, o.coeffs, param_options(o));
  } else {
    const auto input = read_input(o.input, in);
    if (input.polys.size() != 1) throw Error(Errc::invalid_argument, "param-mult takes exactly one polynomial");
    table = mult_decision_table(input.polys[0], param_options(o));
  }
  doc.add("H", format_poly(table.h));
  doc.add("method", o.method);
  doc.add("assumption", "(" + table.assumption.str() + ") != 0");
  doc.add("rows", std::to_string(table.rows.size()));
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    const auto& r = table.rows[i];
    const std::string p = "row." + std::to_string(i + 1) + ".";
    doc.add(p + "lambda", bracket(r.lambda.parts()));
    doc.add(p + "multiplicities", bracket(r.multiplicities.parts()));
    doc.add(p + "status", status(r.dead, r.fallback));
    doc.add(p + "condition", r.condition.str());
  }
}

bool cmd_check(const Options& o, ResultDoc& doc) {
  const auto report = o.serial ? run_check_serial(o.check) : run_check(o.check);
  doc.add("seed", std::to_string(o.check.seed));
  doc.add("cases", std::to_string(report.cases));
  doc.add("rooted_cases", std::to_string(report.rooted));
  doc.add("comparisons", std::to_string(report.comparisons));
  doc.add("mismatches", std::to_string(report.mismatches.size()));
  for (const auto& m : report.mismatches)
    doc.add("mismatch", "case " + std::to_string(m.case_index) + " delta " + m.delta + ": " + m.detail);
  doc.add("result", std::to_string(report.agree) + "/" + std::to_string(report.cases) + " agree");
  return report.mismatches.empty();
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Multi-polynomial subresultants, gcds and multiplicity structures over Q", "msres"};
  app.require_subcommand(1);
  Options o;

  auto add_input = [&](CLI::App* sub) { sub->add_option("input", o.input, "input document, '-' for stdin"); };
  auto add_method = [&](CLI::App* sub) {
    sub->add_option("--method", o.method, "sylvester, barnett, bezout or oracle")->capture_default_str();
  };

  auto* subres = app.add_subcommand("subres", "S_delta and s_delta of a polynomial tuple");
  subres->add_option("--delta", o.delta, "comma-separated delta, e.g. 1,1")->required();
  add_method(subres);
  add_input(subres);

  auto* gcd = app.add_subcommand("gcd", "gcd of several rational polynomials");
  add_method(gcd);
  add_input(gcd);

  auto* mult = app.add_subcommand("mult", "multiplicity structure of a rational polynomial");
  add_method(mult);
  add_input(mult);

  auto* pgcd = app.add_subcommand("param-gcd", "gcd decision tree for parametric coefficients");
  add_method(pgcd);
  pgcd->add_flag("--primitive", o.primitive, "divide conditions by their rational content");
  add_input(pgcd);

  auto* pmult = app.add_subcommand("param-mult", "multiplicity decision table for a generic polynomial");
  pmult->add_option("--degree", o.degree, "degree of the generic polynomial");
  pmult->add_option("--coeffs", o.coeffs, "coefficient names from x^n down to x^0 (n names: monic)")->delimiter(',');
  add_method(pmult);
  pmult->add_flag("--primitive", o.primitive, "divide conditions by their rational content");
  add_input(pmult);

  auto* check = app.add_subcommand("check", "cross-method differential suite on random tuples");
  check->add_option("--seed", o.check.seed)->capture_default_str();
  check->add_option("--cases", o.check.cases)->capture_default_str();
  check->add_option("--max-degree", o.check.max_degree)->capture_default_str()->check(CLI::Range(1u, 12u));
  check->add_option("--max-t", o.check.max_t)->capture_default_str()->check(CLI::Range(std::size_t{1}, std::size_t{6}));
  check->add_flag("--serial", o.serial, "run without OpenMP");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 1;
  }

  ResultDoc doc;
  try {
    bool ok = true;
    if (*subres) {
      doc.add("command", "subres");
      cmd_subres(o, in, doc);
    } else if (*gcd) {
      doc.add("command", "gcd");
      cmd_gcd(o, in, doc);
    } else if (*mult) {
      doc.add("command", "mult");
      cmd_mult(o, in, doc);
    } else if (*pgcd) {
      doc.add("command", "param-gcd");
      cmd_param_gcd(o, in, doc);
    } else if (*pmult) {
      doc.add("command", "param-mult");
      cmd_param_mult(o, in, doc);
    } else if (*check) {
      doc.add("command", "check");
      ok = cmd_check(o, doc);
    }
    doc.write(out);
    return ok ? 0 : 2;
  } catch (const Error& e) {
    err << "error [" << errc_name(e.code()) << "]: " << e.what() << '\n';
    return is_internal(e.code()) ? 2 : 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace msres
