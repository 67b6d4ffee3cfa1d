#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "msres/param_poly.hpp"
#include "msres/rational.hpp"
#include "msres/upoly.hpp"

namespace msres {

/// "x^2 - 3*x + 2", "1/2*x^3 + 7", "0". Re-parseable by parse_rational_poly.
std::string format_poly(const UPoly<Rational>& p);
/// "(a)*x^2 + (-b + 1)*x + (c)". Re-parseable by parse_poly.
std::string format_poly(const UPoly<ParamPoly>& p);

/// Coefficients from x^0 upwards: "[-6, -6]".
std::string format_coeffs(const UPoly<Rational>& p);
std::string format_coeffs(const UPoly<ParamPoly>& p);

/// Ordered "key: value" output document.
class ResultDoc {
 public:
  void add(std::string key, std::string value) { entries_.emplace_back(std::move(key), std::move(value)); }
  const std::vector<std::pair<std::string, std::string>>& entries() const { return entries_; }
  /// First value stored under `key`, or empty.
  std::string get(const std::string& key) const;
  void write(std::ostream& out) const;

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
};

}  // namespace msres
