#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "msres/domain.hpp"
#include "msres/error.hpp"

namespace msres {

/// Dense univariate polynomial in x over a coefficient domain. Coefficient k
/// is the coefficient of x^k; the highest stored coefficient is nonzero and
/// the zero polynomial stores nothing.
template <Domain D>
class UPoly {
 public:
  using coefficient_type = D;

  UPoly() = default;
  template <std::integral I>
  UPoly(I c) : UPoly(D(c)) {}  // NOLINT: implicit
  UPoly(D c) {                 // NOLINT: implicit
    if (!is_zero_elem(c)) coeffs_.push_back(std::move(c));
  }
  explicit UPoly(std::vector<D> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static UPoly x() { return monomial(D(1), 1); }
  static UPoly monomial(D c, std::size_t k) {
    std::vector<D> v(k + 1, D(0));
    v[k] = std::move(c);
    return UPoly(std::move(v));
  }

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree of a nonzero polynomial; the zero polynomial has none.
  std::size_t degree() const {
    if (coeffs_.empty()) throw Error(Errc::zero_polynomial, "degree of the zero polynomial");
    return coeffs_.size() - 1;
  }
  /// Number of stored coefficients (0 for the zero polynomial).
  std::size_t size() const { return coeffs_.size(); }
  D coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : D(0); }
  const D& leading() const {
    if (coeffs_.empty()) throw Error(Errc::zero_polynomial, "leading coefficient of the zero polynomial");
    return coeffs_.back();
  }
  std::span<const D> coeffs() const { return coeffs_; }

  UPoly operator-() const {
    UPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }
  UPoly& operator+=(const UPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), D(0));
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] = coeffs_[k] + o.coeffs_[k];
    trim();
    return *this;
  }
  UPoly& operator-=(const UPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), D(0));
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] = coeffs_[k] - o.coeffs_[k];
    trim();
    return *this;
  }
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly();
    if (a.coeffs_.size() == 1) return b.scaled(a.coeffs_[0]);
    if (b.coeffs_.size() == 1) return a.scaled(b.coeffs_[0]);
    std::vector<D> r(a.coeffs_.size() + b.coeffs_.size() - 1, D(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] = r[i + j] + a.coeffs_[i] * b.coeffs_[j];
    return UPoly(std::move(r));
  }
  UPoly& operator*=(const UPoly& o) { return *this = *this * o; }
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.coeffs_ == b.coeffs_; }

  UPoly scaled(const D& c) const {
    std::vector<D> r;
    r.reserve(coeffs_.size());
    for (const auto& a : coeffs_) r.push_back(a * c);
    return UPoly(std::move(r));
  }
  /// Coefficient-wise exact division by a scalar; nullopt if any fails.
  std::optional<UPoly> try_scaled_down(const D& c) const {
    std::vector<D> r;
    r.reserve(coeffs_.size());
    for (const auto& a : coeffs_) {
      auto q = try_div(a, c);
      if (!q) return std::nullopt;
      r.push_back(*std::move(q));
    }
    return UPoly(std::move(r));
  }

  friend bool is_zero(const UPoly& p) { return p.is_zero(); }
  friend std::optional<UPoly> try_div(const UPoly& a, const UPoly& b) { return divide(a, b, nullptr); }
  friend UPoly exact_div(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw Error(Errc::division_not_exact, "polynomial division by zero");
    auto q = divide(a, b, nullptr);
    if (!q) throw Error(Errc::division_not_exact, "polynomial division leaves a remainder");
    return *std::move(q);
  }

  /// Long division where every step divides leading coefficients exactly in
  /// D. Returns nullopt when a step fails or, if `remainder` is null, when
  /// the remainder is nonzero.
  static std::optional<UPoly> divide(const UPoly& a, const UPoly& b, UPoly* remainder) {
    if (b.is_zero()) return std::nullopt;
    if (b.coeffs_.size() == 1 && !remainder) return a.try_scaled_down(b.coeffs_[0]);
    std::vector<D> rem = a.coeffs_;
    const std::size_t db = b.coeffs_.size() - 1;
    std::vector<D> quot(rem.size() > db ? rem.size() - db : 0, D(0));
    for (std::size_t top = rem.size(); top-- > db;) {
      if (is_zero_elem(rem[top])) continue;
      auto q = try_div(rem[top], b.coeffs_.back());
      if (!q) return std::nullopt;
      const std::size_t shift = top - db;
      for (std::size_t k = 0; k <= db; ++k) rem[shift + k] = rem[shift + k] - *q * b.coeffs_[k];
      quot[shift] = *std::move(q);
    }
    UPoly r(std::move(rem));
    if (remainder) {
      *remainder = std::move(r);
    } else if (!r.is_zero()) {
      return std::nullopt;
    }
    return UPoly(std::move(quot));
  }

 private:
  void trim() {
    while (!coeffs_.empty() && is_zero_elem(coeffs_.back())) coeffs_.pop_back();
  }

  std::vector<D> coeffs_;
};

template <Domain D>
UPoly<D> derivative(const UPoly<D>& p, unsigned order = 1) {
  UPoly<D> r = p;
  for (unsigned n = 0; n < order && !r.is_zero(); ++n) {
    std::vector<D> c;
    for (std::size_t k = 1; k < r.size(); ++k) c.push_back(r.coeff(k) * D(static_cast<int>(k)));
    r = UPoly<D>(std::move(c));
  }
  return r;
}

/// Horner evaluation at a domain element.
template <Domain D>
D eval(const UPoly<D>& p, const D& a) {
  D acc(0);
  for (std::size_t k = p.size(); k-- > 0;) acc = acc * a + p.coeff(k);
  return acc;
}

/// lc * prod (x - r).
template <Domain D>
UPoly<D> from_roots(const D& lc, std::span<const D> roots) {
  if (is_zero(lc)) throw Error(Errc::zero_leading_coefficient, "from_roots with zero leading coefficient");
  UPoly<D> p(lc);
  for (const auto& r : roots) p = p * UPoly<D>(std::vector<D>{-r, D(1)});
  return p;
}

/// p divided by its leading coefficient (exactly).
template <Domain D>
UPoly<D> monic(const UPoly<D>& p) {
  if (p.is_zero()) throw Error(Errc::zero_polynomial, "monic of the zero polynomial");
  auto q = p.try_scaled_down(p.leading());
  if (!q) throw Error(Errc::division_not_exact, "leading coefficient does not divide the polynomial");
  return *std::move(q);
}

template <Domain D>
UPoly<D> exact_div_poly(const UPoly<D>& a, const UPoly<D>& b) {
  return exact_div(a, b);
}

/// Monic gcd by Euclidean remainders over a field.
template <Field D>
UPoly<D> euclid_gcd(UPoly<D> a, UPoly<D> b) {
  if (a.is_zero() && b.is_zero()) throw Error(Errc::both_zero, "gcd of two zero polynomials");
  while (!b.is_zero()) {
    UPoly<D> r;
    UPoly<D>::divide(a, b, &r);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

/// Converts coefficients with a callable D -> E.
template <Domain E, Domain D, class Fn>
UPoly<E> map_coeffs(const UPoly<D>& p, Fn&& fn) {
  std::vector<E> c;
  c.reserve(p.size());
  for (const auto& a : p.coeffs()) c.push_back(fn(a));
  return UPoly<E>(std::move(c));
}

}  // namespace msres
