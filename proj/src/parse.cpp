#include "msres/parse.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <set>

#include "msres/error.hpp"

namespace msres {

namespace {

using PP = UPoly<ParamPoly>;

class Parser {
 public:
  Parser(std::string_view text, const VarList& vars) : text_(text), vars_(vars) {}

  PP parse() {
    skip();
    if (at_end()) fail(Errc::parse_error, "empty expression");
    PP e = expr();
    if (!at_end()) fail(Errc::parse_error, std::string("unexpected '") + text_[pos_] + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(Errc code, const std::string& what) const {
    throw ParseError(code, pos_, what + " at position " + std::to_string(pos_));
  }
  bool at_end() const { return pos_ >= text_.size(); }
  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (!at_end() && text_[pos_] == c) {
      ++pos_;
      skip();
      return true;
    }
    return false;
  }

  PP expr() {
    PP acc = term();
    for (;;) {
      if (eat('+'))
        acc += term();
      else if (eat('-'))
        acc -= term();
      else
        return acc;
    }
  }

  PP term() {
    PP acc = unary();
    for (;;) {
      if (eat('*')) {
        acc *= unary();
      } else if (eat('/')) {
        const std::size_t at = pos_;
        const PP d = unary();
        if (d.size() > 1 || d.is_zero() || !d.coeff(0).is_constant()) {
          pos_ = at;
          fail(Errc::parse_error, "division only by a nonzero constant");
        }
        const Rational c = d.coeff(0).constant_term();
        acc = map_coeffs<ParamPoly>(acc, [&](const ParamPoly& a) { return a.scaled_down(c); });
      } else {
        return acc;
      }
    }
  }

  PP unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  PP power() {
    PP base = primary();
    if (!eat('^')) return base;
    const std::size_t at = pos_;
    if (at_end() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail(Errc::parse_error, "exponent must be a natural number");
    unsigned long e = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      e = e * 10 + static_cast<unsigned long>(text_[pos_] - '0');
      if (e > 10000) {
        pos_ = at;
        fail(Errc::parse_error, "exponent too large");
      }
      ++pos_;
    }
    skip();
    PP r(ParamPoly(1));
    for (unsigned long k = 0; k < e; ++k) r *= base;
    return r;
  }

  PP primary() {
    skip();
    if (at_end()) fail(Errc::parse_error, "unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      PP e = expr();
      if (!eat(')')) fail(Errc::parse_error, "expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      const Rational v = Rational::parse(text_.substr(start, pos_ - start));
      skip();
      return PP(ParamPoly(v));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
      const std::string name(text_.substr(start, pos_ - start));
      skip();
      if (name == "x") return PP::x();
      if (vars_) {
        const auto it = std::find(vars_->begin(), vars_->end(), name);
        if (it != vars_->end())
          return PP(ParamPoly::variable(vars_, static_cast<std::size_t>(it - vars_->begin())));
      }
      pos_ = start;
      fail(Errc::unknown_symbol, "unknown symbol '" + name + "'");
    }
    fail(Errc::parse_error, std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  VarList vars_;
  std::size_t pos_ = 0;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool valid_name(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

}  // namespace

UPoly<ParamPoly> parse_poly(std::string_view text, const VarList& parameters) {
  return Parser(text, parameters).parse();
}

UPoly<ParamPoly> parse_poly(std::string_view text, std::span<const std::string> parameters) {
  std::set<std::string> seen;
  for (const auto& p : parameters) {
    if (!valid_name(p) || p == "x") throw Error(Errc::invalid_argument, "invalid parameter name '" + p + "'");
    if (!seen.insert(p).second) throw Error(Errc::invalid_argument, "duplicate parameter name '" + p + "'");
  }
  return parse_poly(text, make_vars({parameters.begin(), parameters.end()}));
}

UPoly<Rational> parse_rational_poly(std::string_view text) {
  const auto p = parse_poly(text, VarList{});
  return map_coeffs<Rational>(p, [](const ParamPoly& c) { return c.constant_term(); });
}

PolyInputDoc parse_input_doc(std::string_view text) {
  PolyInputDoc doc;
  std::size_t line_no = 0;
  std::size_t offset = 0;
  bool have_params = false;
  while (offset <= text.size()) {
    const std::size_t nl = std::min(text.find('\n', offset), text.size());
    std::string_view line = text.substr(offset, nl - offset);
    const std::size_t line_start = offset;
    offset = nl + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (trim(line).empty()) continue;
    const auto colon = line.find(':');
    if (colon == std::string_view::npos)
      throw ParseError(Errc::parse_error, line_start, "line " + std::to_string(line_no) + ": expected 'key: value'");
    const auto key = trim(line.substr(0, colon));
    const auto value = trim(line.substr(colon + 1));
    if (key == "poly") {
      if (value.empty())
        throw ParseError(Errc::parse_error, line_start, "line " + std::to_string(line_no) + ": empty polynomial");
      doc.polynomials.emplace_back(value);
    } else if (key == "parameters") {
      if (have_params)
        throw ParseError(Errc::parse_error, line_start, "line " + std::to_string(line_no) + ": repeated 'parameters'");
      have_params = true;
      std::string_view rest = value;
      while (!rest.empty()) {
        const auto comma = rest.find(',');
        const auto name = trim(rest.substr(0, comma));
        if (!name.empty()) doc.parameters.emplace_back(name);
        if (comma == std::string_view::npos) break;
        rest = rest.substr(comma + 1);
      }
    } else {
      throw ParseError(Errc::parse_error, line_start,
                       "line " + std::to_string(line_no) + ": unknown key '" + std::string(key) + "'");
    }
  }
  return doc;
}

}  // namespace msres
