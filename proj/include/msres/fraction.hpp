#pragma once

#include <algorithm>
#include <optional>
#include <utility>

#include "msres/domain.hpp"
#include "msres/error.hpp"

namespace msres {

/// num / base^exponent over a domain D.
///
/// Every denominator produced by the companion-matrix construction is a power
/// of one designated element (the leading coefficient of F0), so fractions
/// carry that element and an exponent instead of a general denominator. After
/// each operation as many factors of the base as divide the numerator are
/// cancelled, which makes the representation canonical for a fixed base.
template <Domain D>
class Fraction {
 public:
  Fraction() : num_(0) {}
  template <std::integral I>
  Fraction(I c) : num_(c) {}         // NOLINT: implicit
  Fraction(D num) : num_(std::move(num)) {}  // NOLINT: implicit
  Fraction(D num, D base, unsigned exponent) : num_(std::move(num)), exponent_(exponent) {
    if (exponent_ > 0) {
      if (is_zero(base)) throw Error(Errc::division_not_exact, "fraction with zero denominator");
      base_ = std::move(base);
    }
    normalize();
  }

  const D& num() const { return num_; }
  unsigned exponent() const { return exponent_; }
  const std::optional<D>& base() const { return base_; }
  D den() const { return exponent_ ? ipow(*base_, exponent_) : D(1); }

  /// Numerator rescaled to the denominator base^target (target >= exponent()).
  D numerator_at(unsigned target) const {
    if (target == exponent_) return num_;
    return num_ * ipow(*base_, target - exponent_);
  }

  Fraction operator-() const {
    Fraction r = *this;
    r.num_ = -r.num_;
    return r;
  }

  friend Fraction operator+(const Fraction& a, const Fraction& b) { return combine(a, b, false); }
  friend Fraction operator-(const Fraction& a, const Fraction& b) { return combine(a, b, true); }
  friend Fraction operator*(const Fraction& a, const Fraction& b) {
    Fraction r;
    r.base_ = common_base(a, b);
    r.num_ = a.num_ * b.num_;
    r.exponent_ = a.exponent_ + b.exponent_;
    r.normalize();
    return r;
  }
  friend bool operator==(const Fraction& a, const Fraction& b) {
    if (a.exponent_ == 0 && b.exponent_ == 0) return a.num_ == b.num_;
    const auto base = common_base(a, b);
    return a.num_ * ipow(*base, b.exponent_) == b.num_ * ipow(*base, a.exponent_);
  }

  friend bool is_zero(const Fraction& a) { return is_zero(a.num_); }

  /// a / b when the quotient is again of the form num / base^k.
  friend std::optional<Fraction> try_div(const Fraction& a, const Fraction& b) {
    if (is_zero(b.num_)) return std::nullopt;
    const auto base = common_base(a, b);
    D scaled = b.exponent_ ? a.num_ * ipow(*base, b.exponent_) : a.num_;
    auto q = try_div(scaled, b.num_);
    if (!q) return std::nullopt;
    if (a.exponent_ == 0) return Fraction(*std::move(q));
    return Fraction(*std::move(q), *base, a.exponent_);
  }
  friend Fraction exact_div(const Fraction& a, const Fraction& b) {
    auto q = try_div(a, b);
    if (!q) throw Error(Errc::division_not_exact, "fraction quotient not representable");
    return *std::move(q);
  }

 private:
  static std::optional<D> common_base(const Fraction& a, const Fraction& b) {
    if (a.exponent_ == 0) return b.base_;
    if (b.exponent_ == 0) return a.base_;
    if (!(*a.base_ == *b.base_))
      throw Error(Errc::invalid_argument, "fractions with different designated denominators");
    return a.base_;
  }

  static Fraction combine(const Fraction& a, const Fraction& b, bool subtract) {
    Fraction r;
    r.base_ = common_base(a, b);
    r.exponent_ = std::max(a.exponent_, b.exponent_);
    D lhs = a.exponent_ == r.exponent_ ? a.num_ : a.num_ * ipow(*r.base_, r.exponent_ - a.exponent_);
    D rhs = b.exponent_ == r.exponent_ ? b.num_ : b.num_ * ipow(*r.base_, r.exponent_ - b.exponent_);
    r.num_ = subtract ? lhs - rhs : lhs + rhs;
    r.normalize();
    return r;
  }

  void normalize() {
    if (is_zero(num_)) exponent_ = 0;
    while (exponent_ > 0) {
      auto q = try_div(num_, *base_);
      if (!q) break;
      num_ = *std::move(q);
      --exponent_;
    }
    if (exponent_ == 0) base_.reset();
  }

  D num_;
  std::optional<D> base_;
  unsigned exponent_ = 0;
};

}  // namespace msres
