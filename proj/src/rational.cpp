#include "msres/rational.hpp"

#include <cctype>

#include "msres/error.hpp"

namespace msres {

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw Error(Errc::division_not_exact, "zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  auto digits = [&](std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  auto as_mpz = [](std::string_view s) {
    if (!s.empty() && s[0] == '+') s.remove_prefix(1);
    return mpz_class(std::string(s), 10);
  };
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  if (!digits(num)) throw Error(Errc::parse_error, "bad rational '" + std::string(text) + "'");
  if (slash == std::string_view::npos) return Rational(as_mpz(num), mpz_class(1));
  const auto den = text.substr(slash + 1);
  if (!digits(den) || den[0] == '-' || den[0] == '+')
    throw Error(Errc::parse_error, "bad rational '" + std::string(text) + "'");
  return Rational(as_mpz(num), as_mpz(den));
}

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}
Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}
Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}
Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(Errc::division_not_exact, "rational division by zero");
  value_ /= o.value_;
  return *this;
}

std::string Rational::str() const { return value_.get_str(10); }

std::optional<Rational> try_div(const Rational& a, const Rational& b) {
  if (b.is_zero()) return std::nullopt;
  return a / b;
}

Rational exact_div(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw Error(Errc::division_not_exact, "rational division by zero");
  return a / b;
}

Rational pow(const Rational& base, unsigned exponent) {
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), base.value().get_num_mpz_t(), exponent);
  mpz_pow_ui(d.get_mpz_t(), base.value().get_den_mpz_t(), exponent);
  return Rational(n, d);
}

}  // namespace msres
