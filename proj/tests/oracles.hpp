#pragma once

// Independent reference computations used only by the tests.

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include "msres/check.hpp"
#include "msres/index.hpp"
#include "msres/matrix.hpp"
#include "msres/rational.hpp"
#include "msres/upoly.hpp"

namespace oracle {

using msres::Rational;
using QPoly = msres::UPoly<Rational>;

// Sum over all permutations.
template <class T>
T det_leibniz(const msres::DenseMatrix<T>& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  T total(0);
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    T term(1);
    for (std::size_t i = 0; i < n; ++i) term = term * m(i, perm[i]);
    total = inversions % 2 ? total - term : total + term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

inline Rational vandermonde_product(const std::vector<Rational>& a) {
  Rational v(1);
  for (std::size_t j = 0; j < a.size(); ++j)
    for (std::size_t k = j + 1; k < a.size(); ++k) v *= a[k] - a[j];
  return v;
}

// Every tuple in {0..d0}^t with sum <= d0, sorted by (sum, tuple) descending.
inline std::vector<std::vector<unsigned>> brute_deltas(std::size_t t, unsigned d0) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> cur(t, 0);
  for (;;) {
    if (std::accumulate(cur.begin(), cur.end(), 0u) <= d0) out.push_back(cur);
    std::size_t i = 0;
    while (i < t && cur[i] == d0) cur[i++] = 0;
    if (i == t) break;
    ++cur[i];
  }
  auto key = [](const std::vector<unsigned>& v) { return std::make_pair(std::accumulate(v.begin(), v.end(), 0u), v); };
  std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) { return key(a) > key(b); });
  return out;
}

// Weakly decreasing tuples of length t summing to t, lexicographically descending.
inline std::vector<std::vector<unsigned>> brute_partitions(std::size_t t) {
  std::vector<std::vector<unsigned>> out;
  for (const auto& v : brute_deltas(t, static_cast<unsigned>(t)))
    if (std::accumulate(v.begin(), v.end(), 0u) == t && std::is_sorted(v.begin(), v.end(), std::greater<>()))
      out.push_back(v);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

inline std::size_t binomial(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

inline std::size_t partition_count(unsigned n) {
  std::vector<std::size_t> p(n + 1, 0);
  p[0] = 1;
  for (unsigned part = 1; part <= n; ++part)
    for (unsigned s = part; s <= n; ++s) p[s] += p[s - part];
  return p[n];
}

// Monic gcd of all polynomials via plain Euclid with field division.
inline QPoly chain_gcd(const std::vector<QPoly>& polys) {
  QPoly g = polys[0];
  for (std::size_t i = 1; i < polys.size(); ++i) {
    QPoly a = g, b = polys[i];
    while (!b.is_zero()) {
      std::vector<Rational> r(a.coeffs().begin(), a.coeffs().end());
      const auto& bc = b.coeffs();
      while (r.size() >= bc.size()) {
        const Rational q = r.back() / bc.back();
        const std::size_t shift = r.size() - bc.size();
        for (std::size_t k = 0; k < bc.size(); ++k) r[shift + k] -= q * bc[k];
        r.pop_back();
        while (!r.empty() && r.back().is_zero()) r.pop_back();
      }
      a = b;
      b = QPoly(r);
    }
    g = a;
  }
  return msres::monic(g);
}

// -a03 (a12 + a13 (r1 + r2 + r3)) (a21 x + a20) for F0 = a03 prod (x - r_j),
// F1 cubic, F2 linear, delta = (1,1).
inline QPoly closed_form_s11(const Rational& a03, const std::vector<Rational>& roots, const QPoly& f1, const QPoly& f2) {
  const Rational sum = roots[0] + roots[1] + roots[2];
  const Rational k = -a03 * (f1.coeff(2) + f1.coeff(3) * sum);
  return f2.scaled(k);
}

inline std::vector<Rational> distinct_rationals(std::mt19937_64& rng, std::size_t n, int bound) {
  std::vector<Rational> out;
  while (out.size() < n) {
    auto r = msres::random_rational(rng, bound);
    if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
  }
  return out;
}

// Polynomial with the given roots and random nonzero leading coefficient.
inline QPoly rooted(std::mt19937_64& rng, const std::vector<Rational>& roots, int bound = 9) {
  return msres::from_roots<Rational>(msres::random_rational(rng, bound, true), roots);
}

}  // namespace oracle
