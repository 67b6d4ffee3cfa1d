#include "msres/param_poly.hpp"

#include <algorithm>
#include <sstream>

#include "msres/error.hpp"

namespace msres {

namespace {

VarList merged(const VarList& a, const VarList& b) {
  if (!a) return b;
  if (!b || a == b) return a;
  if (*a != *b) throw Error(Errc::variable_mismatch, "parameter polynomials over different variables");
  return a;
}

bool divides(const Monomial& d, const Monomial& m) {
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i] > m[i]) return false;
  return true;
}

}  // namespace

VarList make_vars(std::vector<std::string> names) {
  return std::make_shared<const std::vector<std::string>>(std::move(names));
}

ParamPoly::ParamPoly(const Rational& c) {
  if (!c.is_zero()) terms_.emplace(Monomial{}, c);
}

ParamPoly ParamPoly::variable(const VarList& vars, std::size_t index) {
  if (!vars || index >= vars->size()) throw Error(Errc::index_out_of_range, "no such parameter");
  Monomial m(vars->size(), 0);
  m[index] = 1;
  return term(vars, std::move(m), Rational(1));
}

ParamPoly ParamPoly::term(const VarList& vars, Monomial exponents, const Rational& c) {
  if (exponents.size() != (vars ? vars->size() : 0))
    throw Error(Errc::length_mismatch, "exponent vector length differs from variable count");
  ParamPoly p;
  p.vars_ = vars;
  if (!c.is_zero()) p.terms_.emplace(std::move(exponents), c);
  return p;
}

void ParamPoly::adopt(const VarList& vars) {
  if (vars_ == vars) return;
  if (vars_ && vars && *vars_ == *vars) {
    vars_ = vars;
    return;
  }
  if (vars_) throw Error(Errc::variable_mismatch, "parameter polynomials over different variables");
  // Context-free values are constants keyed by the empty monomial.
  TermMap rekeyed;
  for (auto& [m, c] : terms_) rekeyed.emplace(Monomial(vars ? vars->size() : 0, 0), c);
  terms_ = std::move(rekeyed);
  vars_ = vars;
}

bool ParamPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& m = terms_.begin()->first;
  return std::all_of(m.begin(), m.end(), [](auto e) { return e == 0; });
}

Rational ParamPoly::constant_term() const {
  if (terms_.empty()) return Rational(0);
  const auto& [m, c] = *terms_.rbegin();  // the zero monomial sorts last
  return std::all_of(m.begin(), m.end(), [](auto e) { return e == 0; }) ? c : Rational(0);
}

std::size_t ParamPoly::total_degree() const {
  std::size_t best = 0;
  for (const auto& [m, c] : terms_) {
    std::size_t s = 0;
    for (auto e : m) s += e;
    best = std::max(best, s);
  }
  return best;
}

Rational ParamPoly::eval(std::span<const Rational> values) const {
  if (values.size() != nvars() && !is_constant())
    throw Error(Errc::length_mismatch, "wrong number of parameter values");
  Rational sum(0);
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i] != 0) t *= pow(values[i], m[i]);
    sum += t;
  }
  return sum;
}

ParamPoly ParamPoly::operator-() const {
  ParamPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

void ParamPoly::add_scaled(const ParamPoly& o, const Rational& c, const Monomial* shift) {
  for (const auto& [m, oc] : o.terms_) {
    Monomial key = m;
    if (shift)
      for (std::size_t i = 0; i < key.size(); ++i) key[i] += (*shift)[i];
    auto [it, inserted] = terms_.try_emplace(std::move(key), Rational(0));
    it->second += c * oc;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& o) {
  if (&o == this) return *this = *this * ParamPoly(2);
  const auto vars = merged(vars_, o.vars_);
  adopt(vars);
  if (o.vars_ == vars) {
    add_scaled(o, Rational(1), nullptr);
  } else {
    ParamPoly tmp = o;
    tmp.adopt(vars);
    add_scaled(tmp, Rational(1), nullptr);
  }
  return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& o) {
  if (&o == this) {
    terms_.clear();
    return *this;
  }
  const auto vars = merged(vars_, o.vars_);
  adopt(vars);
  if (o.vars_ == vars) {
    add_scaled(o, Rational(-1), nullptr);
  } else {
    ParamPoly tmp = o;
    tmp.adopt(vars);
    add_scaled(tmp, Rational(-1), nullptr);
  }
  return *this;
}

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
  const auto vars = merged(a.vars_, b.vars_);
  ParamPoly lhs = a, rhs = b;
  lhs.adopt(vars);
  rhs.adopt(vars);
  ParamPoly r;
  r.vars_ = vars;
  for (const auto& [m, c] : lhs.terms_) r.add_scaled(rhs, c, &m);
  return r;
}

ParamPoly& ParamPoly::operator*=(const ParamPoly& o) { return *this = *this * o; }

bool operator==(const ParamPoly& a, const ParamPoly& b) {
  if (a.nvars() == b.nvars()) return a.terms_ == b.terms_;
  if (a.vars_ && b.vars_) return false;
  return a.is_constant() && b.is_constant() && a.constant_term() == b.constant_term();
}

ParamPoly ParamPoly::scaled_down(const Rational& c) const {
  ParamPoly r = *this;
  for (auto& [m, coef] : r.terms_) coef = exact_div(coef, c);
  return r;
}

std::string ParamPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool constant = std::all_of(m.begin(), m.end(), [](auto e) { return e == 0; });
    Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (constant || mag != Rational(1)) {
      os << mag.str();
      wrote = true;
    }
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (wrote) os << "*";
      os << (*vars_)[i];
      if (m[i] > 1) os << "^" << m[i];
      wrote = true;
    }
  }
  return os.str();
}

std::optional<ParamPoly> try_div(const ParamPoly& a, const ParamPoly& b) {
  if (b.is_zero()) return std::nullopt;
  const auto vars = merged(a.vars_, b.vars_);
  ParamPoly rem = a, divisor = b;
  rem.adopt(vars);
  divisor.adopt(vars);
  ParamPoly quot;
  quot.vars_ = vars;
  const auto& [lead_m, lead_c] = *divisor.terms_.begin();
  while (!rem.terms_.empty()) {
    const auto& [m, c] = *rem.terms_.begin();
    if (!divides(lead_m, m)) return std::nullopt;
    Monomial shift(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) shift[i] = m[i] - lead_m[i];
    const Rational q = c / lead_c;
    quot.terms_.emplace(shift, q);
    rem.add_scaled(divisor, -q, &shift);
  }
  return quot;
}

ParamPoly exact_div(const ParamPoly& a, const ParamPoly& b) {
  if (b.is_zero()) throw Error(Errc::division_not_exact, "parameter polynomial division by zero");
  auto q = try_div(a, b);
  if (!q) throw Error(Errc::division_not_exact, "(" + b.str() + ") does not divide (" + a.str() + ")");
  return *std::move(q);
}

ParamPoly pow(const ParamPoly& base, unsigned exponent) {
  ParamPoly result(1), b = base;
  while (exponent) {
    if (exponent & 1u) result *= b;
    exponent >>= 1;
    if (exponent) b *= b;
  }
  return result;
}

Rational content(const ParamPoly& p) {
  if (p.is_zero()) return Rational(0);
  mpz_class g = 0, l = 1;
  for (const auto& [m, c] : p.terms()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.value().get_num_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.value().get_den_mpz_t());
  }
  return Rational(abs(g), l);
}

ParamPoly primitive_part(const ParamPoly& p) {
  if (p.is_zero()) return p;
  return p.scaled_down(content(p));
}

}  // namespace msres
