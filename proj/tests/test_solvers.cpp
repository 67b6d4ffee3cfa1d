#include <doctest.h>

#include <random>

#include "msres/check.hpp"
#include "msres/parse.hpp"
#include "msres/solvers.hpp"
#include "oracles.hpp"

using namespace msres;
using Q = UPoly<Rational>;

namespace {

Q P(const char* s) { return parse_rational_poly(s); }
DeltaIndex D(std::vector<unsigned> v) { return DeltaIndex(std::move(v)); }
using RootSpec = std::vector<std::pair<Rational, unsigned>>;

// Monic product over consecutive slices of a shared pool of distinct roots,
// so factors built from different slices are coprime.
struct RootPool {
  std::vector<Rational> roots;
  std::size_t next = 0;
  Q take(unsigned n) {
    std::vector<Rational> r(roots.begin() + static_cast<long>(next), roots.begin() + static_cast<long>(next + n));
    next += n;
    return from_roots<Rational>(Rational(1), r);
  }
};

}  // namespace

TEST_CASE("multi_gcd examples") {
  const PolyTuple<Rational> F({P("(x-1)*(x-2)"), P("(x-1)*(x-3)"), P("(x-1)*x")});
  for (Method m : {Method::sylvester, Method::barnett, Method::bezout, Method::root_oracle}) {
    const auto r = multi_gcd(F, m);
    CHECK(r.gcd == P("x - 1"));
    REQUIRE(r.delta);
    CHECK(*r.delta == D({1, 0}));
    CHECK(r.method == m);
  }
  CHECK(icdeg_oracle(F) == D({1, 0}));

  const Q f0 = P("3*x^3 - x + 2");
  const auto same = multi_gcd(PolyTuple<Rational>({f0, f0}));
  CHECK(same.gcd == monic(f0));
  CHECK(*same.delta == D({0}));

  const auto constant = multi_gcd(PolyTuple<Rational>({P("5"), P("x^2")}));
  CHECK(constant.gcd == Q(Rational(1)));
  CHECK_FALSE(constant.delta.has_value());

  CHECK(icdeg_oracle(PolyTuple<Rational>({P("x^4 + 1"), P("1")})) == D({4}));
  CHECK(multi_gcd(PolyTuple<Rational>({P("x^4 + 1"), P("1")})).gcd == Q(Rational(1)));
}

TEST_CASE("planted gcd with icdeg (3,2)") {
  std::mt19937_64 rng(40);
  for (int rep = 0; rep < 3; ++rep) {
    RootPool pool{oracle::distinct_rationals(rng, 20, 30)};
    const Q g2 = pool.take(2);
    const Q g1 = g2 * pool.take(2);
    const Q f0 = g1 * pool.take(3).scaled(random_rational(rng, 9, true));
    const Q f1 = g1 * pool.take(2).scaled(random_rational(rng, 9, true));
    const Q f2 = g2 * pool.take(4).scaled(random_rational(rng, 9, true));
    const PolyTuple<Rational> F({f0, f1, f2});
    CHECK(F.degrees() == std::vector<unsigned>{7, 6, 6});
    CHECK(icdeg_oracle(F) == D({3, 2}));
    const auto r = multi_gcd(F);
    CHECK(*r.delta == D({3, 2}));
    CHECK(r.gcd == g2);
  }
}

TEST_CASE("multiplicity examples") {
  const auto r = multiplicity(P("(x-1)^2*(x-2)^2*(x-3)"));
  CHECK(r.multiplicities == Partition({2, 2, 1}));
  CHECK(r.lambda == D({3, 2, 0, 0, 0}));
  const auto sf = multiplicity(P("(x-1)*(x-2)*(x-3)*(x+1)*(x+5)"));
  CHECK(sf.multiplicities == Partition({1, 1, 1, 1, 1}));
  CHECK(sf.lambda == D({5, 0, 0, 0, 0}));
  const auto pw = multiplicity(P("(2*x - 1)^4"));
  CHECK(pw.multiplicities == Partition({4}));
  CHECK(pw.lambda == D({1, 1, 1, 1}));
  CHECK(multiplicity(P("7*x + 1")).multiplicities == Partition({1}));
  CHECK_THROWS_AS(multiplicity(P("4")), Error);
  const Q h = P("(x-1)^2*(x-2)^2*(x-3)");
  CHECK(icdeg_oracle(derivative_tuple(h)) == D({3, 2, 0, 0, 0}));
}

TEST_CASE("multiplicity oracle") {
  CHECK(mult_oracle(RootSpec{{1, 2}, {2, 2}, {3, 1}}) == Partition({2, 2, 1}));
  CHECK(mult_oracle(RootSpec{{5, 7}}) == Partition({7}));
  CHECK(mult_oracle(RootSpec{{1, 1}, {2, 1}, {3, 1}}) == Partition({1, 1, 1}));
  CHECK(mult_oracle(RootSpec{{1, 1}, {2, 3}}) == Partition({3, 1}));
  CHECK_THROWS_AS(mult_oracle(RootSpec{{1, 1}, {1, 2}}), Error);
  CHECK(from_rootspec(Rational(2), RootSpec{{1, 2}}) == P("2*(x-1)^2"));
}

TEST_CASE("planted gcd on random tuples") {
  std::mt19937_64 rng(41);
  for (int rep = 0; rep < 40; ++rep) {
    const std::size_t t = 1 + static_cast<std::size_t>(rep % 3);
    RootPool pool{oracle::distinct_rationals(rng, 30, 40)};
    const Q g = pool.take(static_cast<unsigned>(rep % 4));
    std::vector<Q> polys;
    for (std::size_t i = 0; i <= t; ++i)
      polys.push_back(g * pool.take(static_cast<unsigned>(rng() % 4)).scaled(random_rational(rng, 9, true)));
    if (polys[0].degree() == 0) polys[0] = polys[0] * pool.take(1);
    const PolyTuple<Rational> F(polys);
    const auto theta = icdeg_oracle(F);
    const auto r = multi_gcd(F);
    CHECK(r.gcd == g);
    CHECK(r.gcd == oracle::chain_gcd(polys));
    REQUIRE(r.delta);
    CHECK(*r.delta == theta);
    for (const auto& p : polys) CHECK(try_div(p, r.gcd).has_value());
    CHECK_FALSE(is_zero(subresultant(F, theta).s_principal));
    for (const auto& delta : enumerate_deltas(t, F.d0())) {
      if (glex_cmp(delta, theta) <= 0) break;
      for (Method m : {Method::sylvester, Method::barnett, Method::bezout})
        if (m != Method::bezout || std::all_of(polys.begin() + 1, polys.end(),
                                               [&](const Q& p) { return p.degree() <= F.d0(); }))
          CHECK(subresultant(F, delta, m).s_poly.is_zero());
    }
  }
}

TEST_CASE("multiplicity for every partition up to degree 6") {
  std::mt19937_64 rng(42);
  for (unsigned t = 1; t <= 6; ++t)
    for (const auto& lambda : enumerate_partition_indices(t)) {
      const auto mu = conjugate(lambda);
      const auto roots = oracle::distinct_rationals(rng, mu.size(), 12);
      RootSpec spec;
      for (std::size_t i = 0; i < mu.size(); ++i) spec.emplace_back(roots[i], mu[i]);
      std::shuffle(spec.begin(), spec.end(), rng);
      const Q h = from_rootspec(random_rational(rng, 9, true), spec);
      const auto r = multiplicity(h);
      CHECK(r.multiplicities == mult_oracle(spec));
      CHECK(r.lambda == lambda);
      CHECK(r.multiplicities == conjugate(r.lambda));
      CHECK(r.multiplicities.total() == t);
    }
}
