#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <type_traits>
#include <vector>

#include "msres/domain.hpp"
#include "msres/error.hpp"
#include "msres/fraction.hpp"
#include "msres/index.hpp"
#include "msres/matrix.hpp"
#include "msres/rational.hpp"
#include "msres/upoly.hpp"

namespace msres {

enum class Method { sylvester, barnett, bezout, root_oracle };

const char* method_name(Method m);
/// Accepts "sylvester", "barnett", "bezout", "oracle" and "root_oracle".
std::optional<Method> parse_method(std::string_view name);

/// F = (F0, F1, ..., Ft), t >= 1, every F_i nonzero.
template <Domain D>
class PolyTuple {
 public:
  explicit PolyTuple(std::vector<UPoly<D>> polys) : polys_(std::move(polys)) {
    if (polys_.size() < 2) throw Error(Errc::invalid_argument, "need at least two polynomials (t >= 1)");
    for (const auto& p : polys_)
      if (p.is_zero()) throw Error(Errc::zero_polynomial, "input polynomials must be nonzero");
  }

  std::size_t t() const { return polys_.size() - 1; }
  const UPoly<D>& operator[](std::size_t i) const { return polys_[i]; }
  std::span<const UPoly<D>> polys() const { return polys_; }
  unsigned d0() const { return static_cast<unsigned>(polys_[0].degree()); }
  std::vector<unsigned> degrees() const {
    std::vector<unsigned> d;
    for (const auto& p : polys_) d.push_back(static_cast<unsigned>(p.degree()));
    return d;
  }
  const D& lc0() const { return polys_[0].leading(); }

 private:
  std::vector<UPoly<D>> polys_;
};

/// S_delta with its principal coefficient s_delta (the x^{epsilon-1}
/// coefficient) and the bookkeeping exponents.
template <Domain D>
struct SubresResult {
  UPoly<D> s_poly;
  D s_principal;
  int delta0 = 0;
  unsigned epsilon = 0;
  Method method = Method::sylvester;
};

/// max(delta_1 + d_1 - d_0, ..., delta_t + d_t - d_0, 1 - |delta|); may be
/// negative. `degrees` is (d_0, ..., d_t).
int delta0(const DeltaIndex& delta, std::span<const unsigned> degrees);
/// 1 + d0 - |delta|.
unsigned epsilon(const DeltaIndex& delta, unsigned d0);

/// Distinct rational roots of p when p splits over Q into distinct linear
/// factors; nullopt otherwise.
std::optional<std::vector<Rational>> distinct_rational_roots(const UPoly<Rational>& p);

namespace detail {

template <Domain D>
void check_delta(const PolyTuple<D>& F, const DeltaIndex& delta) {
  if (delta.size() != F.t()) throw Error(Errc::length_mismatch, "delta length must equal t");
  if (delta.total() > F.d0()) throw Error(Errc::delta_too_large, "|delta| exceeds deg F0");
}

/// Multiplies p by c^e for a possibly negative e; negative powers divide
/// exactly or fail with DivisionNotExact.
template <Domain D>
UPoly<D> times_power(const UPoly<D>& p, const D& c, int e) {
  if (e >= 0) return p.scaled(ipow(c, static_cast<unsigned>(e)));
  auto q = p.try_scaled_down(ipow(c, static_cast<unsigned>(-e)));
  if (!q) throw Error(Errc::division_not_exact, "leading-coefficient power does not divide the determinant");
  return *std::move(q);
}

template <Domain D>
void append_x_rows(DenseMatrix<UPoly<D>>& m, std::size_t first_row, const DeltaIndex& delta, std::size_t width,
                   unsigned d0) {
  const auto x = x_block<D>(delta, width, d0).transposed();
  for (std::size_t r = 0; r < x.rows(); ++r)
    for (std::size_t c = 0; c < width; ++c) m(first_row + r, c) = x(r, c);
}

}  // namespace detail

/// Extended Sylvester matrix: delta0 shifted coefficient rows of F0, then
/// delta_i shifted rows of each F_i (entry k of row j is the x^k coefficient
/// of x^j F_i), then the transposed x-block; (d0+delta0) square.
template <Domain D>
DenseMatrix<UPoly<D>> build_sylvester(const PolyTuple<D>& F, const DeltaIndex& delta) {
  detail::check_delta(F, delta);
  const auto degrees = F.degrees();
  const int shift_rows = delta0(delta, degrees);
  if (shift_rows < 0) throw Error(Errc::negative_delta0, "Sylvester matrix undefined for delta0 < 0");
  const std::size_t n = F.d0() + static_cast<std::size_t>(shift_rows);
  DenseMatrix<UPoly<D>> m(n, n);
  std::size_t row = 0;
  for (std::size_t i = 0; i <= F.t(); ++i) {
    const unsigned count = i == 0 ? static_cast<unsigned>(shift_rows) : delta[i - 1];
    for (unsigned j = 0; j < count; ++j, ++row)
      for (std::size_t k = 0; k < F[i].size(); ++k) m(row, j + k) = UPoly<D>(F[i].coeff(k));
  }
  detail::append_x_rows(m, row, delta, n, F.d0());
  return m;
}

/// Extended Barnett matrix: rows are the first delta_i columns of F_i(C0)
/// (C0 the companion matrix of F0), then the transposed x-block; d0 square.
template <Domain D>
DenseMatrix<Fraction<UPoly<D>>> build_barnett(const PolyTuple<D>& F, const DeltaIndex& delta) {
  detail::check_delta(F, delta);
  const unsigned d0 = F.d0();
  const auto c0 = companion(F[0]);
  using Entry = Fraction<UPoly<D>>;
  auto lift = [](const Fraction<D>& f) {
    if (f.exponent() == 0) return Entry(UPoly<D>(f.num()));
    return Entry(UPoly<D>(f.num()), UPoly<D>(*f.base()), f.exponent());
  };
  DenseMatrix<Entry> m(d0, d0);
  std::size_t row = 0;
  for (std::size_t i = 1; i <= F.t(); ++i) {
    if (delta[i - 1] == 0) continue;
    const auto fc = eval_matrix(F[i], c0);
    for (unsigned j = 0; j < delta[i - 1]; ++j, ++row)
      for (std::size_t r = 0; r < d0; ++r) m(row, r) = lift(fc(r, j));
  }
  const auto x = x_block<D>(delta, d0, d0).transposed();
  for (std::size_t r = 0; r < x.rows(); ++r)
    for (std::size_t c = 0; c < d0; ++c) m(row + r, c) = Entry(x(r, c));
  return m;
}

/// Extended Bezout matrix: rows are the first delta_i columns of the Bezout
/// matrix of (F0, F_i), then the transposed x-block; d0 square. Requires
/// deg F_i <= deg F0.
template <Domain D>
DenseMatrix<UPoly<D>> build_bezout(const PolyTuple<D>& F, const DeltaIndex& delta) {
  detail::check_delta(F, delta);
  const unsigned d0 = F.d0();
  for (std::size_t i = 1; i <= F.t(); ++i)
    if (F[i].degree() > d0) throw Error(Errc::degree_too_high, "Bezout construction needs deg F_i <= deg F0");
  DenseMatrix<UPoly<D>> m(d0, d0);
  std::size_t row = 0;
  for (std::size_t i = 1; i <= F.t(); ++i) {
    if (delta[i - 1] == 0) continue;
    const auto b = bezout_matrix(F[0], F[i]);
    for (unsigned j = 0; j < delta[i - 1]; ++j, ++row)
      for (std::size_t r = 0; r < d0; ++r) m(row, r) = UPoly<D>(b(r, j));
  }
  detail::append_x_rows(m, row, delta, d0, d0);
  return m;
}

template <Domain D>
UPoly<D> sylvester_determinant(const PolyTuple<D>& F, const DeltaIndex& delta) {
  return det(build_sylvester(F, delta));
}
template <Domain D>
Fraction<UPoly<D>> barnett_determinant(const PolyTuple<D>& F, const DeltaIndex& delta) {
  return det(build_barnett(F, delta));
}
template <Domain D>
UPoly<D> bezout_determinant(const PolyTuple<D>& F, const DeltaIndex& delta) {
  return det(build_bezout(F, delta));
}

/// S_delta from the root-based determinant ratio. Both the (1+d0)-square
/// numerator with the x^k column and the d0-square form with rows
/// alpha^k (x - alpha) are evaluated; they must agree.
template <Domain D>
SubresResult<D> subresultant_root_oracle(const D& lc, std::span<const D> roots, std::span<const UPoly<D>> rest,
                                         const DeltaIndex& delta) {
  if (is_zero(lc)) throw Error(Errc::zero_leading_coefficient, "root oracle needs lc != 0");
  if (delta.size() != rest.size()) throw Error(Errc::length_mismatch, "delta length must equal t");
  const std::size_t d0 = roots.size();
  for (std::size_t i = 0; i < d0; ++i)
    for (std::size_t j = i + 1; j < d0; ++j)
      if (roots[i] == roots[j]) throw Error(Errc::repeated_roots, "root oracle needs pairwise distinct roots");
  if (delta.total() > d0) throw Error(Errc::delta_too_large, "|delta| exceeds the number of roots");

  std::vector<unsigned> degrees{static_cast<unsigned>(d0)};
  for (const auto& f : rest) degrees.push_back(static_cast<unsigned>(f.degree()));
  const unsigned eps = epsilon(delta, static_cast<unsigned>(d0));
  const int shift = delta0(delta, degrees);

  // powers[j][k] = roots[j]^k
  const std::size_t max_pow = d0 + 1;
  std::vector<std::vector<D>> powers(d0, std::vector<D>(max_pow + 1, D(1)));
  for (std::size_t j = 0; j < d0; ++j)
    for (std::size_t k = 1; k <= max_pow; ++k) powers[j][k] = powers[j][k - 1] * roots[j];

  using P = UPoly<D>;
  DenseMatrix<P> full(d0 + 1, d0 + 1);
  DenseMatrix<P> reduced(d0, d0);
  std::size_t row = 0;
  for (std::size_t i = 0; i < rest.size(); ++i) {
    std::vector<D> values;
    for (std::size_t j = 0; j < d0; ++j) values.push_back(eval(rest[i], roots[j]));
    for (unsigned k = 0; k < delta[i]; ++k, ++row)
      for (std::size_t j = 0; j < d0; ++j) {
        full(row, j) = P(powers[j][k] * values[j]);
        reduced(row, j) = full(row, j);
      }
  }
  for (unsigned k = 0; k < eps; ++k) {
    for (std::size_t j = 0; j < d0; ++j) full(row + k, j) = P(powers[j][k]);
    full(row + k, d0) = P::monomial(D(1), k);
  }
  for (unsigned k = 0; k + 1 < eps; ++k)
    for (std::size_t j = 0; j < d0; ++j)
      reduced(row + k, j) = P(std::vector<D>{-powers[j][k + 1], powers[j][k]});

  DenseMatrix<D> vander(d0, d0);
  for (std::size_t k = 0; k < d0; ++k)
    for (std::size_t j = 0; j < d0; ++j) vander(k, j) = powers[j][k];
  const P v(det(vander));

  const P via_full = exact_div(det(full), v);
  const P via_reduced = exact_div(det(reduced), v);
  if (!(via_full == via_reduced))
    throw Error(Errc::consistency_failure, "root-based numerator forms disagree");

  SubresResult<D> r;
  r.s_poly = detail::times_power(via_full, lc, shift);
  r.s_principal = r.s_poly.coeff(eps - 1);
  r.delta0 = shift;
  r.epsilon = eps;
  r.method = Method::root_oracle;
  return r;
}

/// S_delta and s_delta by the chosen construction.
///
/// delta = (0,...,0) gives lc^{delta0-1} F0 directly; delta0 < 0 gives the
/// zero polynomial. Otherwise the determinant is scaled by (-1)^{d0 delta0}
/// (Sylvester), lc^{delta0} (Barnett) or lc^{delta0-|delta|} (Bezout).
/// The root oracle is available for rational tuples whose F0 splits into
/// distinct rational linear factors.
template <Domain D>
SubresResult<D> subresultant(const PolyTuple<D>& F, const DeltaIndex& delta, Method method = Method::sylvester) {
  detail::check_delta(F, delta);
  const unsigned d0 = F.d0();
  const auto degrees = F.degrees();
  const unsigned eps = epsilon(delta, d0);
  const int shift = delta0(delta, degrees);
  const D& lc = F.lc0();

  SubresResult<D> r;
  r.delta0 = shift;
  r.epsilon = eps;
  r.method = method;

  if (method == Method::root_oracle) {
    if constexpr (std::is_same_v<D, Rational>) {
      auto roots = distinct_rational_roots(F[0]);
      if (!roots) throw Error(Errc::repeated_roots, "F0 does not split into distinct rational roots");
      return subresultant_root_oracle<D>(lc, *roots, F.polys().subspan(1), delta);
    } else {
      throw Error(Errc::invalid_argument, "the root oracle needs rational coefficients");
    }
  }

  if (delta.all_zero()) {
    r.s_poly = detail::times_power(F[0], lc, shift - 1);
  } else if (shift < 0) {
    r.s_poly = UPoly<D>();
  } else {
    switch (method) {
      case Method::sylvester: {
        auto d = sylvester_determinant(F, delta);
        r.s_poly = (static_cast<long>(d0) * shift) % 2 == 0 ? std::move(d) : -d;
        break;
      }
      case Method::barnett: {
        const auto f = barnett_determinant(F, delta);
        r.s_poly = detail::times_power(f.num(), lc, shift - static_cast<int>(f.exponent()));
        break;
      }
      case Method::bezout:
        r.s_poly = detail::times_power(bezout_determinant(F, delta), lc, shift - static_cast<int>(delta.total()));
        break;
      case Method::root_oracle:
        break;
    }
  }
  if (!r.s_poly.is_zero() && r.s_poly.degree() + 1 > eps)
    throw Error(Errc::consistency_failure, "subresultant degree exceeds epsilon - 1");
  r.s_principal = r.s_poly.coeff(eps - 1);
  return r;
}

/// Classical i-th subresultant of (F0, F1) as the determinant polynomial of
/// the matrix with rows x^{d1-i-1} F0, ..., F0, x^{d0-i-1} F1, ..., F1
/// (coefficients ordered from the highest power down). For i = d0 >= d1 the
/// row set is empty and the convention sres_{d0} = F0 applies.
template <Domain D>
UPoly<D> classical_sres(const UPoly<D>& f0, const UPoly<D>& f1, std::size_t i) {
  const std::size_t d0 = f0.degree(), d1 = f1.degree();
  if (i > d0) throw Error(Errc::index_out_of_range, "classical subresultant index exceeds deg F0");
  const std::size_t rows0 = d1 > i ? d1 - i : 0;
  const std::size_t rows1 = d0 - i;
  const std::size_t r = rows0 + rows1;
  if (r == 0) return f0;
  const std::size_t width = r + i;
  // coefficient rows, indexed by power
  std::vector<std::vector<D>> rows;
  auto push = [&](const UPoly<D>& f, std::size_t count) {
    for (std::size_t s = count; s-- > 0;) {
      std::vector<D> row(width, D(0));
      for (std::size_t k = 0; k < f.size(); ++k) row[k + s] = f.coeff(k);
      rows.push_back(std::move(row));
    }
  };
  push(f0, rows0);
  push(f1, rows1);
  UPoly<D> result;
  for (std::size_t j = 0; j + r <= width; ++j) {
    DenseMatrix<D> m(r, r);
    for (std::size_t a = 0; a < r; ++a) {
      for (std::size_t c = 0; c + 1 < r; ++c) m(a, c) = rows[a][width - 1 - c];
      m(a, r - 1) = rows[a][j];
    }
    result += UPoly<D>::monomial(det(m), j);
  }
  return result;
}

}  // namespace msres
