#include <cstdint>
#include "msres/subres.hpp"

#include <algorithm>
#include <set>

namespace msres {

namespace {

// Positive divisors of n > 0 by trial division; empty when n is too large
// for that to be sensible.
std::vector<mpz_class> divisors(const mpz_class& n) {
  std::vector<mpz_class> small, large;
  if (mpz_sizeinbase(n.get_mpz_t(), 2) > 48) return {};
  const auto m = static_cast<std::uint64_t>(mpz_get_ui(n.get_mpz_t()));
  for (std::uint64_t d = 1; d * d <= m; ++d) {
    if (m % d != 0) continue;
    small.emplace_back(static_cast<unsigned long>(d));
    if (d * d != m) large.emplace_back(static_cast<unsigned long>(m / d));
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace

const char* method_name(Method m) {
  switch (m) {
    case Method::sylvester: return "sylvester";
    case Method::barnett: return "barnett";
    case Method::bezout: return "bezout";
    case Method::root_oracle: return "oracle";
  }
  return "unknown";
}

std::optional<Method> parse_method(std::string_view name) {
  if (name == "sylvester") return Method::sylvester;
  if (name == "barnett") return Method::barnett;
  if (name == "bezout") return Method::bezout;
  if (name == "oracle" || name == "root_oracle") return Method::root_oracle;
  return std::nullopt;
}

int delta0(const DeltaIndex& delta, std::span<const unsigned> degrees) {
  if (degrees.size() != delta.size() + 1) throw Error(Errc::length_mismatch, "need degrees d0..dt");
  const int d0 = static_cast<int>(degrees[0]);
  int best = 1 - static_cast<int>(delta.total());
  for (std::size_t i = 0; i < delta.size(); ++i)
    best = std::max(best, static_cast<int>(delta[i]) + static_cast<int>(degrees[i + 1]) - d0);
  return best;
}

unsigned epsilon(const DeltaIndex& delta, unsigned d0) {
  if (delta.total() > d0) throw Error(Errc::delta_too_large, "|delta| exceeds d0");
  return 1 + d0 - delta.total();
}

std::optional<std::vector<Rational>> distinct_rational_roots(const UPoly<Rational>& p) {
  if (p.is_zero()) return std::nullopt;
  const std::size_t n = p.degree();
  if (n == 0) return std::vector<Rational>{};

  mpz_class scale = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), c.value().get_den_mpz_t());
  std::vector<mpz_class> ints;
  for (const auto& c : p.coeffs()) ints.push_back(c.num() * (scale / c.den()));

  std::vector<Rational> roots;
  std::size_t low = 0;
  while (ints[low] == 0) ++low;
  if (low > 1) return std::nullopt;
  if (low == 1) roots.emplace_back(0);

  const auto numerators = divisors(abs(ints[low]));
  const auto denominators = divisors(abs(ints.back()));
  if (numerators.empty() || denominators.empty()) return std::nullopt;
  // a/b a root forces (b - a) | P(1) and (b + a) | P(-1)
  mpz_class at_one = 0, at_minus_one = 0;
  for (std::size_t k = 0; k < ints.size(); ++k) {
    at_one += ints[k];
    at_minus_one += (k % 2 == 0) ? ints[k] : mpz_class(-ints[k]);
  }
  const auto divides = [](const mpz_class& d, const mpz_class& v) {
    return v == 0 || (d != 0 && mpz_divisible_p(v.get_mpz_t(), d.get_mpz_t()) != 0);
  };
  std::set<Rational> found;
  for (const auto& a : numerators)
    for (const auto& b : denominators) {
      if (gcd(a, b) != 1) continue;
      for (int sign : {1, -1}) {
        const mpz_class sa = a * sign;
        if (!divides(b - sa, at_one) || !divides(b + sa, at_minus_one)) continue;
        Rational cand(sa, b);
        if (!found.contains(cand) && is_zero(eval(p, cand))) found.insert(cand);
      }
    }
  roots.insert(roots.end(), found.begin(), found.end());
  if (roots.size() != n) return std::nullopt;
  return roots;
}

}  // namespace msres
