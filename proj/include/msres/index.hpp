#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "msres/error.hpp"

namespace msres {

/// A tuple delta = (delta_1, ..., delta_t) of naturals, t >= 1.
class DeltaIndex {
 public:
  explicit DeltaIndex(std::vector<unsigned> parts);
  static DeltaIndex zeros(std::size_t t) { return DeltaIndex(std::vector<unsigned>(t, 0)); }

  std::size_t size() const { return parts_.size(); }
  unsigned operator[](std::size_t i) const { return parts_[i]; }
  std::span<const unsigned> parts() const { return parts_; }
  unsigned total() const;
  bool all_zero() const { return total() == 0; }
  unsigned max() const;

  friend bool operator==(const DeltaIndex&, const DeltaIndex&) = default;

  /// "(2,1,0)".
  std::string str() const;
  /// "2,1,0".
  std::string csv() const;

 private:
  std::vector<unsigned> parts_;
};

/// Weakly decreasing list of naturals; may be empty.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<unsigned> parts);

  std::size_t size() const { return parts_.size(); }
  unsigned operator[](std::size_t i) const { return parts_[i]; }
  std::span<const unsigned> parts() const { return parts_; }
  unsigned total() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  std::string str() const;
  std::string csv() const;

 private:
  std::vector<unsigned> parts_;
};

/// Graded lexicographic order: larger sum first, then the first differing
/// coordinate decides.
std::strong_ordering glex_cmp(const DeltaIndex& a, const DeltaIndex& b);
/// Plain lexicographic order.
std::strong_ordering lex_cmp(const DeltaIndex& a, const DeltaIndex& b);

/// All delta in N^t with |delta| <= d0, strictly decreasing in glex order.
std::vector<DeltaIndex> enumerate_deltas(std::size_t t, unsigned d0);

/// All weakly decreasing lambda in N^t with |lambda| = t, strictly
/// decreasing in lex order.
std::vector<DeltaIndex> enumerate_partition_indices(std::size_t t);

/// conj_i = #{ j : delta_j >= i } for i = 1..max(delta). The all-zero tuple
/// has the empty conjugate.
Partition conjugate(const DeltaIndex& delta);
Partition conjugate(const Partition& p);

/// j-th elementary symmetric function of `values` (e_0 = 1).
template <class T>
T elem_sym(std::span<const T> values, std::size_t j) {
  if (j > values.size()) throw Error(Errc::index_out_of_range, "elementary symmetric index too large");
  std::vector<T> e(j + 1, T(0));
  e[0] = T(1);
  for (const auto& v : values)
    for (std::size_t k = j; k >= 1; --k) e[k] = e[k] + e[k - 1] * v;
  return e[j];
}

/// j-th elementary symmetric function of `values` with entry `skip` removed
/// (0-based).
template <class T>
T elem_sym_excluding(std::span<const T> values, std::size_t skip, std::size_t j) {
  if (skip >= values.size()) throw Error(Errc::index_out_of_range, "excluded index out of range");
  std::vector<T> rest;
  rest.reserve(values.size() - 1);
  for (std::size_t i = 0; i < values.size(); ++i)
    if (i != skip) rest.push_back(values[i]);
  return elem_sym(std::span<const T>(rest), j);
}

}  // namespace msres
