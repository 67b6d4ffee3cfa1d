#include "msres/format.hpp"

namespace msres {

namespace {

std::string power(std::size_t k) {
  if (k == 0) return "";
  if (k == 1) return "x";
  return "x^" + std::to_string(k);
}

}  // namespace

std::string format_poly(const UPoly<Rational>& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t k = p.size(); k-- > 0;) {
    const Rational& c = p.coeff(k);
    if (c.is_zero()) continue;
    const bool negative = c.sign() < 0;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    const Rational a = c.abs();
    if (k == 0)
      out += a.str();
    else if (a == Rational(1))
      out += power(k);
    else
      out += a.str() + "*" + power(k);
  }
  return out;
}

std::string format_poly(const UPoly<ParamPoly>& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t k = p.size(); k-- > 0;) {
    const ParamPoly& c = p.coeff(k);
    if (c.is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + c.str() + ")";
    if (k > 0) out += "*" + power(k);
  }
  return out;
}

std::string format_coeffs(const UPoly<Rational>& p) {
  std::string out = "[";
  for (std::size_t k = 0; k < p.size(); ++k) out += (k ? ", " : "") + p.coeff(k).str();
  return out + "]";
}

std::string format_coeffs(const UPoly<ParamPoly>& p) {
  std::string out = "[";
  for (std::size_t k = 0; k < p.size(); ++k) out += (k ? ", " : "") + p.coeff(k).str();
  return out + "]";
}

std::string ResultDoc::get(const std::string& key) const {
  for (const auto& [k, v] : entries_)
    if (k == key) return v;
  return {};
}

void ResultDoc::write(std::ostream& out) const {
  for (const auto& [k, v] : entries_) out << k << ": " << v << '\n';
}

}  // namespace msres
