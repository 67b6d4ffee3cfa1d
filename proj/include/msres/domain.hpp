#pragma once

#include <concepts>
#include <optional>

#include "msres/rational.hpp"

namespace msres {

/// An exact integral domain with zero test and exact division.
template <class T>
concept Domain = std::copyable<T> && std::equality_comparable<T> && std::constructible_from<T, int> &&
                 requires(const T& a, const T& b) {
                   { a + b } -> std::convertible_to<T>;
                   { a - b } -> std::convertible_to<T>;
                   { a * b } -> std::convertible_to<T>;
                   { -a } -> std::convertible_to<T>;
                   { is_zero(a) } -> std::same_as<bool>;
                   { exact_div(a, b) } -> std::convertible_to<T>;
                   { try_div(a, b) } -> std::same_as<std::optional<T>>;
                 };

/// Unqualified is_zero, for use inside classes whose own is_zero member hides
/// the free function.
template <class T>
bool is_zero_elem(const T& a) {
  return is_zero(a);
}

template <class T>
inline constexpr bool is_field_v = false;
template <>
inline constexpr bool is_field_v<Rational> = true;

template <class T>
concept Field = Domain<T> && is_field_v<T>;

template <class T>
T ipow(const T& base, unsigned exponent) {
  T result(1);
  T b = base;
  while (exponent) {
    if (exponent & 1u) result = result * b;
    exponent >>= 1;
    if (exponent) b = b * b;
  }
  return result;
}

}  // namespace msres
