#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "msres/domain.hpp"
#include "msres/error.hpp"
#include "msres/fraction.hpp"
#include "msres/index.hpp"
#include "msres/upoly.hpp"

namespace msres {

/// Row-major dense matrix.
template <class T>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
  DenseMatrix(std::size_t rows, std::size_t cols, std::vector<T> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) throw Error(Errc::bad_dimensions, "entry count differs from rows*cols");
  }
  DenseMatrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    for (const auto& r : rows) {
      if (r.size() != cols_) throw Error(Errc::bad_dimensions, "ragged matrix literal");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static DenseMatrix identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<const T> entries() const { return data_; }

  void swap_rows(std::size_t a, std::size_t b) {
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

  DenseMatrix transposed() const {
    DenseMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols_ != b.rows_) throw Error(Errc::bad_dimensions, "matrix product shape mismatch");
    DenseMatrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) = r(i, j) + aik * b(k, j);
      }
    return r;
  }
  friend DenseMatrix operator+(DenseMatrix a, const DenseMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(Errc::bad_dimensions, "matrix sum shape mismatch");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] = a.data_[i] + b.data_[i];
    return a;
  }
  friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  template <class Fn>
  auto map(Fn&& fn) const -> DenseMatrix<decltype(fn(std::declval<const T&>()))> {
    using U = decltype(fn(std::declval<const T&>()));
    std::vector<U> out;
    out.reserve(data_.size());
    for (const auto& v : data_) out.push_back(fn(v));
    return DenseMatrix<U>(rows_, cols_, std::move(out));
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

namespace detail {

template <Domain T>
T det_laplace(const DenseMatrix<T>& m, std::vector<std::size_t>& cols, std::size_t row) {
  const std::size_t n = cols.size();
  if (n == 0) return T(1);
  if (n == 1) return m(row, cols[0]);
  T acc(0);
  for (std::size_t k = 0; k < n; ++k) {
    const T& a = m(row, cols[k]);
    if (is_zero(a)) continue;
    std::vector<std::size_t> rest;
    rest.reserve(n - 1);
    for (std::size_t j = 0; j < n; ++j)
      if (j != k) rest.push_back(cols[j]);
    T minor = det_laplace(m, rest, row + 1);
    acc = (k % 2 == 0) ? acc + a * minor : acc - a * minor;
  }
  return acc;
}

}  // namespace detail

/// Cofactor (Laplace) expansion along the first row.
template <Domain T>
T det_cofactor(const DenseMatrix<T>& m) {
  if (!m.square()) throw Error(Errc::not_square, "determinant of a non-square matrix");
  std::vector<std::size_t> cols(m.cols());
  for (std::size_t i = 0; i < cols.size(); ++i) cols[i] = i;
  return detail::det_laplace(m, cols, 0);
}

/// Fraction-free Bareiss elimination. The pivot is the first nonzero entry
/// at or below the diagonal in the current column; a column with no pivot
/// makes the determinant zero.
template <Domain T>
T det_bareiss(DenseMatrix<T> m) {
  if (!m.square()) throw Error(Errc::not_square, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return T(1);
  bool negate = false;
  T prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(m(k, k))) {
      std::size_t p = k + 1;
      while (p < n && is_zero(m(p, k))) ++p;
      if (p == n) return T(0);
      m.swap_rows(k, p);
      negate = !negate;
    }
    const T pivot = m(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const T lead = m(i, k);
      for (std::size_t j = k + 1; j < n; ++j) {
        T v = m(i, j) * pivot;
        if (!is_zero(lead) && !is_zero(m(k, j))) v = v - lead * m(k, j);
        m(i, j) = k == 0 ? std::move(v) : exact_div(v, prev);
      }
      m(i, k) = T(0);
    }
    prev = pivot;
  }
  T d = m(n - 1, n - 1);
  return negate ? T(-d) : d;
}

template <Domain T>
T det(const DenseMatrix<T>& m) {
  if (!m.square()) throw Error(Errc::not_square, "determinant of a non-square matrix");
  if (m.rows() <= 4) return det_cofactor(m);
  return det_bareiss(m);
}

/// Determinant of a matrix of fractions over a common designated base: each
/// row is brought to its largest denominator, the integral determinant is
/// taken, and the product of row denominators is restored.
template <Domain T>
Fraction<T> det(const DenseMatrix<Fraction<T>>& m) {
  if (!m.square()) throw Error(Errc::not_square, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  std::optional<T> base;
  unsigned total = 0;
  DenseMatrix<T> cleared(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    unsigned row_exp = 0;
    for (std::size_t c = 0; c < n; ++c) {
      const auto& f = m(r, c);
      if (f.exponent() > row_exp) row_exp = f.exponent();
      if (f.exponent() > 0 && !base) base = *f.base();
    }
    for (std::size_t c = 0; c < n; ++c) cleared(r, c) = m(r, c).numerator_at(row_exp);
    total += row_exp;
  }
  T d = det(cleared);
  if (total == 0) return Fraction<T>(std::move(d));
  return Fraction<T>(std::move(d), *base, total);
}

/// Companion matrix of p = a_n x^n + ... + a_0: ones on the subdiagonal and
/// last column (-a_0/a_n, ..., -a_{n-1}/a_n).
template <Domain D>
DenseMatrix<Fraction<D>> companion(const UPoly<D>& p) {
  if (p.is_zero() || p.degree() == 0)
    throw Error(Errc::zero_or_constant_polynomial, "companion matrix needs degree >= 1");
  const std::size_t n = p.degree();
  const D& lc = p.leading();
  DenseMatrix<Fraction<D>> c(n, n);
  for (std::size_t i = 1; i < n; ++i) c(i, i - 1) = Fraction<D>(D(1));
  for (std::size_t i = 0; i < n; ++i) c(i, n - 1) = Fraction<D>(-p.coeff(i), lc, 1);
  return c;
}

/// p(m) by Horner's rule; a constant c gives c*I.
template <Domain D, class T>
DenseMatrix<T> eval_matrix(const UPoly<D>& p, const DenseMatrix<T>& m) {
  if (!m.square() || m.rows() == 0) throw Error(Errc::not_square, "matrix polynomial needs a square matrix");
  const std::size_t n = m.rows();
  DenseMatrix<T> acc(n, n);
  for (std::size_t k = p.size(); k-- > 0;) {
    acc = acc * m;
    const T c(p.coeff(k));
    if (!is_zero(c))
      for (std::size_t i = 0; i < n; ++i) acc(i, i) = acc(i, i) + c;
  }
  return acc;
}

/// Bezout matrix M of (a, b): with l = max(deg a, deg b),
///   (a(x) b(y) - a(y) b(x)) / (x - y) = [y^0 .. y^{l-1}] M [x^{l-1} .. x^0]^T.
/// Built by expanding the divided difference term by term: the pair
/// x^p y^q - x^q y^p (p > q) divides to sum_{k<p-q} x^{q+k} y^{p-1-k}.
template <Domain D>
DenseMatrix<D> bezout_matrix(const UPoly<D>& a, const UPoly<D>& b) {
  const std::size_t la = a.is_zero() ? 0 : a.degree();
  const std::size_t lb = b.is_zero() ? 0 : b.degree();
  const std::size_t l = la > lb ? la : lb;
  if (l == 0) throw Error(Errc::both_constant, "Bezout matrix of two constants");
  DenseMatrix<D> m(l, l);
  for (std::size_t p = 1; p <= l; ++p)
    for (std::size_t q = 0; q < p; ++q) {
      const D c = a.coeff(p) * b.coeff(q) - a.coeff(q) * b.coeff(p);
      if (is_zero(c)) continue;
      for (std::size_t k = 0; k < p - q; ++k) {
        const std::size_t xpow = q + k, ypow = p - 1 - k;
        m(ypow, l - 1 - xpow) = m(ypow, l - 1 - xpow) + c;
      }
    }
  return m;
}

/// h x (d0 - |delta|) block with x on the diagonal and -1 just below it.
template <Domain D>
DenseMatrix<UPoly<D>> x_block(const DeltaIndex& delta, std::size_t h, std::size_t d0) {
  if (delta.total() > d0) throw Error(Errc::bad_dimensions, "|delta| exceeds d0");
  const std::size_t cols = d0 - delta.total();
  if (h < cols) throw Error(Errc::bad_dimensions, "x-block needs at least d0 - |delta| rows");
  DenseMatrix<UPoly<D>> m(h, cols);
  for (std::size_t k = 0; k < cols; ++k) {
    m(k, k) = UPoly<D>::x();
    if (k + 1 < h) m(k + 1, k) = UPoly<D>(D(-1));
  }
  return m;
}

}  // namespace msres
