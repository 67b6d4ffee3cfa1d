#include <doctest.h>

#include <random>

#include "msres/check.hpp"
#include "msres/parametric.hpp"
#include "msres/parse.hpp"
#include "msres/solvers.hpp"
#include "oracles.hpp"

using namespace msres;
using Q = UPoly<Rational>;

namespace {


// Generic tuple with degrees `degs`; coefficient names c<i>_<k>, listed
// polynomial by polynomial from x^0 upward.
struct GenericTuple {
  std::vector<std::string> names;
  VarList vars;
  std::vector<PPoly> polys;

  explicit GenericTuple(const std::vector<unsigned>& degs) {
    for (std::size_t i = 0; i < degs.size(); ++i)
      for (unsigned k = 0; k <= degs[i]; ++k) names.push_back("c" + std::to_string(i) + "_" + std::to_string(k));
    vars = make_vars(names);
    std::size_t at = 0;
    for (const unsigned d : degs) {
      std::vector<ParamPoly> c;
      for (unsigned k = 0; k <= d; ++k) c.push_back(ParamPoly::variable(vars, at++));
      polys.emplace_back(std::move(c));
    }
  }
  PolyTuple<ParamPoly> tuple() const { return PolyTuple<ParamPoly>(polys); }
  // Parameter values that specialize the tuple to `qs` (degrees may drop
  // for i >= 1).
  std::vector<Rational> values_for(const std::vector<Q>& qs) const {
    std::vector<Rational> v;
    for (std::size_t i = 0; i < polys.size(); ++i)
      for (std::size_t k = 0; k < polys[i].size(); ++k) v.push_back(qs[i].coeff(k));
    return v;
  }
};

std::vector<std::vector<unsigned>> deltas_of(const GcdTree& t) {
  std::vector<std::vector<unsigned>> out;
  for (const auto& b : t.branches) out.emplace_back(b.delta.parts().begin(), b.delta.parts().end());
  return out;
}

}  // namespace

TEST_CASE("gcd tree for two quadratics against the first") {
  const GenericTuple g({2, 2, 2});
  const auto tree = gcd_decision_tree(g.tuple());
  CHECK(deltas_of(tree) ==
        std::vector<std::vector<unsigned>>{{2, 0}, {1, 1}, {0, 2}, {1, 0}, {0, 1}, {0, 0}});
  CHECK(tree.assumption == g.polys[0].leading());
  for (std::size_t i = 0; i < tree.branches.size(); ++i) {
    const auto& b = tree.branches[i];
    CHECK_FALSE(b.dead);
    CHECK(b.fallback == (i + 1 == tree.branches.size()));
    CHECK(b.gcd_denominator == b.condition);
    CHECK(b.gcd_denominator == b.gcd_numerator.coeff(epsilon(b.delta, 2) - 1));
  }
}

TEST_CASE("branch counts") {
  for (const auto& degs : std::vector<std::vector<unsigned>>{{1, 1}, {2, 1}, {3, 2}, {2, 1, 1}, {3, 1, 2}, {1, 1, 1, 1}}) {
    const GenericTuple g(degs);
    const auto tree = gcd_decision_tree(g.tuple());
    CHECK(tree.branches.size() == oracle::binomial(degs[0] + degs.size() - 1, degs.size() - 1));
  }
}

TEST_CASE("t = 1 tree matches classical subresultants") {
  const GenericTuple g({2, 2});
  const auto tree = gcd_decision_tree(g.tuple());
  REQUIRE(tree.branches.size() == 3);
  CHECK(deltas_of(tree) == std::vector<std::vector<unsigned>>{{2}, {1}, {0}});
  for (unsigned i = 0; i <= 2; ++i) {
    const auto c = classical_sres(g.polys[0], g.polys[1], i);
    const auto& b = tree.branches[i];
    CHECK((b.gcd_numerator == c || b.gcd_numerator == -c));
  }
}

TEST_CASE("identical polynomials give dead branches") {
  const GenericTuple g({2});
  const PolyTuple<ParamPoly> F({g.polys[0], g.polys[0], g.polys[0]});
  const auto tree = gcd_decision_tree(F);
  for (const auto& b : tree.branches) {
    CHECK(b.dead == !b.delta.all_zero());
    CHECK(b.condition.is_zero() == b.dead);
  }
}

TEST_CASE("generic polynomial naming") {
  const auto h = generic_poly(2, {});
  CHECK(h.leading().str() == "a2");
  CHECK(h.coeff(0).str() == "a0");
  const std::vector<std::string> bc{"b", "c"};
  const auto m = generic_poly(2, bc);
  CHECK(m.leading() == ParamPoly(1));
  CHECK(m.coeff(1).str() == "b");
  const std::vector<std::string> wrong{"a"};
  CHECK_THROWS_AS(generic_poly(3, wrong), Error);
  CHECK_THROWS_AS(generic_poly(0, {}), Error);
}

TEST_CASE("multiplicity table shapes") {
  const auto t5 = mult_decision_table(5);
  const std::vector<std::vector<unsigned>> mults{{1, 1, 1, 1, 1}, {2, 1, 1, 1}, {2, 2, 1}, {3, 1, 1},
                                                 {3, 2},          {4, 1},       {5}};
  REQUIRE(t5.rows.size() == 7);
  const auto lambdas = enumerate_partition_indices(5);
  for (std::size_t i = 0; i < 7; ++i) {
    CHECK(t5.rows[i].lambda == lambdas[i]);
    CHECK(t5.rows[i].multiplicities == Partition(mults[i]));
    CHECK(t5.rows[i].fallback == (i == 6));
    CHECK_FALSE(t5.rows[i].dead);
  }
  const auto t1 = mult_decision_table(1);
  REQUIRE(t1.rows.size() == 1);
  CHECK(t1.rows[0].multiplicities == Partition({1}));
  for (unsigned n = 1; n <= 6; ++n) CHECK(mult_decision_table(n).rows.size() == oracle::partition_count(n));
}

TEST_CASE("degree 2 condition is a multiple of the discriminant") {
  const std::vector<std::string> bc{"b", "c"};
  const auto t = mult_decision_table(2, bc);
  const auto vars = t.h.coeff(0).variables();
  const auto b = ParamPoly::variable(vars, 0), c = ParamPoly::variable(vars, 1);
  const ParamPoly disc = b * b - 4 * c;
  const auto ratio = try_div(t.rows[0].condition, disc);
  REQUIRE(ratio.has_value());
  CHECK(ratio->is_constant());
  CHECK_FALSE(ratio->is_zero());
}

TEST_CASE("primitive option and serial execution give the same rows") {
  ParamOptions serial;
  serial.parallel = false;
  ParamOptions prim;
  prim.primitive_conditions = true;
  const auto a = mult_decision_table(4);
  const auto b = mult_decision_table(4, {}, serial);
  const auto c = mult_decision_table(4, {}, prim);
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    CHECK(a.rows[i].condition == b.rows[i].condition);
    CHECK(c.rows[i].condition == primitive_part(a.rows[i].condition));
  }
  const GenericTuple g({2, 1, 2});
  ParamOptions bar;
  bar.method = Method::barnett;
  const auto x = gcd_decision_tree(g.tuple());
  const auto y = gcd_decision_tree(g.tuple(), bar);
  for (std::size_t i = 0; i < x.branches.size(); ++i) CHECK(x.branches[i].gcd_numerator == y.branches[i].gcd_numerator);
}

TEST_CASE("specializing the gcd tree reproduces multi_gcd") {
  const GenericTuple g({3, 2, 2});
  const auto tree = gcd_decision_tree(g.tuple());
  std::mt19937_64 rng(50);
  for (int rep = 0; rep < 60; ++rep) {
    const auto roots = oracle::distinct_rationals(rng, 7, 5);
    const unsigned shared = static_cast<unsigned>(rep % 4);
    auto take = [&](std::size_t from, std::size_t n) {
      std::vector<Rational> r(roots.begin(), roots.begin() + static_cast<long>(shared));
      r.insert(r.end(), roots.begin() + static_cast<long>(from), roots.begin() + static_cast<long>(from + n));
      return r;
    };
    std::vector<Q> qs;
    qs.push_back(oracle::rooted(rng, take(3, 3 - shared)));
    for (int i = 0; i < 2; ++i) {
      Q f = shared <= 2 ? oracle::rooted(rng, take(3 + static_cast<std::size_t>(rng() % 2), 2 - std::min(shared, 2u)))
                        : random_poly(rng, 2, 5);
      if (rng() % 5 == 0) f = random_poly(rng, static_cast<unsigned>(rng() % 3), 3);
      qs.push_back(f);
    }
    const auto values = g.values_for(qs);
    const auto idx = select_branch(tree, values);
    const auto& br = tree.branches[idx];
    const auto r = multi_gcd(PolyTuple<Rational>(qs));
    REQUIRE(r.delta);
    CHECK(br.delta == *r.delta);
    const Q num = specialize(br.gcd_numerator, values);
    CHECK(num.try_scaled_down(br.gcd_denominator.eval(values)).value() == r.gcd);
  }
}

TEST_CASE("specializing the multiplicity table reproduces multiplicity") {
  const auto table = mult_decision_table(4);
  std::mt19937_64 rng(51);
  for (const auto& lambda : enumerate_partition_indices(4))
    for (int rep = 0; rep < 5; ++rep) {
      const auto mu = conjugate(lambda);
      const auto roots = oracle::distinct_rationals(rng, mu.size(), 6);
      std::vector<std::pair<Rational, unsigned>> spec;
      for (std::size_t i = 0; i < mu.size(); ++i) spec.emplace_back(roots[i], mu[i]);
      const Q h = from_rootspec(random_rational(rng, 5, true), spec);
      std::vector<Rational> values;
      for (std::size_t k = h.size(); k-- > 0;) values.push_back(h.coeff(k));
      const auto row = table.rows[select_row(table, values)];
      CHECK(row.multiplicities == multiplicity(h).multiplicities);
      CHECK(row.multiplicities == mu);
    }
}
