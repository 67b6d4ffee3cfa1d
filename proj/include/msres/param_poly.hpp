#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "msres/rational.hpp"

namespace msres {

using Monomial = std::vector<std::uint32_t>;
using VarList = std::shared_ptr<const std::vector<std::string>>;

VarList make_vars(std::vector<std::string> names);

/// Sparse multivariate polynomial over the rationals in a fixed, ordered list
/// of parameter names. Terms are kept in lexicographically descending order of
/// exponent vectors; no stored coefficient is zero.
///
/// A constant built without a variable list adopts the list of whatever it is
/// combined with, so literals such as ParamPoly(2) mix freely with parameters.
class ParamPoly {
 public:
  using TermMap = std::map<Monomial, Rational, std::greater<>>;

  ParamPoly() = default;
  template <std::integral I>
  ParamPoly(I c) : ParamPoly(Rational(c)) {}  // NOLINT: implicit
  ParamPoly(const Rational& c);               // NOLINT: implicit

  static ParamPoly variable(const VarList& vars, std::size_t index);
  static ParamPoly term(const VarList& vars, Monomial exponents, const Rational& c);

  const VarList& variables() const { return vars_; }
  std::size_t nvars() const { return vars_ ? vars_->size() : 0; }
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term (coefficient of the all-zero monomial).
  Rational constant_term() const;
  std::size_t total_degree() const;

  /// Evaluates at a point; values are given in variable order.
  Rational eval(std::span<const Rational> values) const;

  ParamPoly operator-() const;
  ParamPoly& operator+=(const ParamPoly& o);
  ParamPoly& operator-=(const ParamPoly& o);
  ParamPoly& operator*=(const ParamPoly& o);
  friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
  friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
  friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);
  friend bool operator==(const ParamPoly& a, const ParamPoly& b);

  /// Divides every coefficient by a nonzero rational.
  ParamPoly scaled_down(const Rational& c) const;

  /// Human-readable and re-parseable, e.g. "3/2*a^2*b - a + 1".
  std::string str() const;

 private:
  friend std::optional<ParamPoly> try_div(const ParamPoly& a, const ParamPoly& b);
  void adopt(const VarList& vars);
  void add_scaled(const ParamPoly& o, const Rational& c, const Monomial* shift);

  VarList vars_;
  TermMap terms_;
};

inline bool is_zero(const ParamPoly& a) { return a.is_zero(); }
/// Exact multivariate division; nullopt when b does not divide a.
std::optional<ParamPoly> try_div(const ParamPoly& a, const ParamPoly& b);
ParamPoly exact_div(const ParamPoly& a, const ParamPoly& b);
ParamPoly pow(const ParamPoly& base, unsigned exponent);

/// Positive rational content: gcd of numerators over lcm of denominators.
Rational content(const ParamPoly& p);
/// p divided by its content (zero stays zero).
ParamPoly primitive_part(const ParamPoly& p);

}  // namespace msres
