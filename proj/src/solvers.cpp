#include "msres/solvers.hpp"

#include <algorithm>
#include <functional>

namespace msres {

GcdResult multi_gcd(const PolyTuple<Rational>& F, Method method) {
  GcdResult out;
  out.method = method;
  if (F.d0() == 0) {
    out.gcd = QPoly(Rational(1));
    out.s_value = F.lc0();
    return out;
  }
  for (const auto& delta : enumerate_deltas(F.t(), F.d0())) {
    auto r = subresultant(F, delta, method);
    if (is_zero(r.s_principal)) continue;
    auto g = r.s_poly.try_scaled_down(r.s_principal);
    if (!g || g->is_zero() || !(g->leading() == Rational(1)))
      throw Error(Errc::internal_non_monic, "S_delta / s_delta is not monic for delta = " + delta.str());
    out.gcd = *std::move(g);
    out.delta = delta;
    out.s_value = r.s_principal;
    return out;
  }
  throw Error(Errc::consistency_failure, "no delta with nonzero principal subresultant");
}

DeltaIndex icdeg_oracle(const PolyTuple<Rational>& F) {
  std::vector<unsigned> degs;
  QPoly g = monic(F[0]);
  for (std::size_t i = 1; i <= F.t(); ++i) {
    QPoly next = euclid_gcd(g, F[i]);
    degs.push_back(static_cast<unsigned>(g.degree() - next.degree()));
    g = std::move(next);
  }
  return DeltaIndex(std::move(degs));
}

PolyTuple<Rational> derivative_tuple(const QPoly& h) {
  if (h.is_zero() || h.degree() == 0) throw Error(Errc::constant_input, "multiplicity needs deg H >= 1");
  std::vector<QPoly> polys;
  for (unsigned k = 0; k <= h.degree(); ++k) polys.push_back(derivative(h, k));
  return PolyTuple<Rational>(std::move(polys));
}

MultResult multiplicity(const QPoly& h, Method method) {
  const auto F = derivative_tuple(h);
  for (const auto& lambda : enumerate_partition_indices(F.t())) {
    const auto r = subresultant(F, lambda, method);
    if (!is_zero(r.s_principal)) return MultResult{conjugate(lambda), lambda};
  }
  throw Error(Errc::consistency_failure, "no partition index with nonzero principal subresultant");
}

Partition mult_oracle(std::span<const std::pair<Rational, unsigned>> rootspec) {
  std::vector<unsigned> mults;
  for (std::size_t i = 0; i < rootspec.size(); ++i) {
    for (std::size_t j = i + 1; j < rootspec.size(); ++j)
      if (rootspec[i].first == rootspec[j].first)
        throw Error(Errc::repeated_roots, "root specification lists a root twice");
    mults.push_back(rootspec[i].second);
  }
  std::sort(mults.begin(), mults.end(), std::greater<>());
  return Partition(std::move(mults));
}

QPoly from_rootspec(const Rational& lc, std::span<const std::pair<Rational, unsigned>> rootspec) {
  std::vector<Rational> roots;
  for (const auto& [r, m] : rootspec) roots.insert(roots.end(), m, r);
  return from_roots<Rational>(lc, roots);
}

}  // namespace msres
