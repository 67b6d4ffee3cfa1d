#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "msres/param_poly.hpp"
#include "msres/rational.hpp"
#include "msres/upoly.hpp"

namespace msres {

/// Parses an expression in x and the given parameters: numbers, names,
/// parentheses, + - *, ^ with a natural exponent and / by a nonzero constant.
/// Whitespace is ignored.
UPoly<ParamPoly> parse_poly(std::string_view text, const VarList& parameters);
UPoly<ParamPoly> parse_poly(std::string_view text, std::span<const std::string> parameters);

/// As parse_poly with no parameters.
UPoly<Rational> parse_rational_poly(std::string_view text);

/// Key-value input document:
///
///   # comment
///   parameters: a, b
///   poly: x^2 + a*x + b
///   poly: x - 1
struct PolyInputDoc {
  std::vector<std::string> parameters;
  std::vector<std::string> polynomials;

  bool parametric() const { return !parameters.empty(); }
};

PolyInputDoc parse_input_doc(std::string_view text);

}  // namespace msres
