#include "msres/check.hpp"

#include <algorithm>

#include "msres/format.hpp"
#include "msres/parallel.hpp"

namespace msres {

Rational random_rational(std::mt19937_64& rng, int bound, bool nonzero) {
  std::uniform_int_distribution<int> num(-bound, bound);
  std::uniform_int_distribution<int> den(1, bound);
  int p = num(rng);
  while (nonzero && p == 0) p = num(rng);
  return Rational(mpz_class(p), mpz_class(den(rng)));
}

UPoly<Rational> random_poly(std::mt19937_64& rng, unsigned degree, int bound) {
  std::vector<Rational> c;
  for (unsigned k = 0; k < degree; ++k) c.push_back(random_rational(rng, bound));
  c.push_back(random_rational(rng, bound, true));
  return UPoly<Rational>(std::move(c));
}

std::vector<Rational> random_distinct_rationals(std::mt19937_64& rng, unsigned count, int bound) {
  std::vector<Rational> out;
  while (out.size() < count) {
    auto r = random_rational(rng, bound);
    if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(std::move(r));
  }
  return out;
}

UPoly<Rational> random_rooted_poly(std::mt19937_64& rng, unsigned count, int bound) {
  const auto roots = random_distinct_rationals(rng, count, bound);
  return from_roots<Rational>(random_rational(rng, bound, true), roots);
}

CheckCase make_check_case(const CheckOptions& opts, std::size_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(opts.seed), static_cast<std::uint32_t>(opts.seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  std::mt19937_64 rng(seq);
  const std::size_t t = std::uniform_int_distribution<std::size_t>(1, std::max<std::size_t>(opts.max_t, 1))(rng);
  const unsigned d0 = std::uniform_int_distribution<unsigned>(1, std::max(opts.max_degree, 1u))(rng);
  CheckCase c;
  c.rooted = std::bernoulli_distribution(0.5)(rng);
  if (c.rooted) {
    c.roots = random_distinct_rationals(rng, d0, opts.coeff_bound);
    c.polys.push_back(from_roots<Rational>(random_rational(rng, opts.coeff_bound, true), c.roots));
  } else {
    c.polys.push_back(random_poly(rng, d0, opts.coeff_bound));
  }
  for (std::size_t i = 0; i < t; ++i) {
    const unsigned di = std::uniform_int_distribution<unsigned>(0, d0)(rng);
    c.polys.push_back(random_poly(rng, di, opts.coeff_bound));
  }
  return c;
}

namespace {

struct CaseOutcome {
  std::size_t comparisons = 0;
  std::vector<Mismatch> mismatches;
};

CaseOutcome check_case(const CheckOptions& opts, std::size_t index) {
  CaseOutcome out;
  const auto c = make_check_case(opts, index);
  const PolyTuple<Rational> F(c.polys);
  std::vector<Method> methods{Method::sylvester, Method::barnett, Method::bezout};
  if (c.rooted) methods.push_back(Method::root_oracle);
  for (const auto& delta : enumerate_deltas(F.t(), F.d0())) {
    std::optional<UPoly<Rational>> ref;
    for (const Method m : methods) {
      try {
        const auto r = m == Method::root_oracle
                           ? subresultant_root_oracle<Rational>(F.lc0(), c.roots, F.polys().subspan(1), delta)
                           : subresultant(F, delta, m);
        if (!ref) {
          ref = r.s_poly;
          continue;
        }
        ++out.comparisons;
        if (!(r.s_poly == *ref))
          out.mismatches.push_back({index, delta.str(),
                                    std::string(method_name(m)) + " gives " + format_poly(r.s_poly) +
                                        ", sylvester gives " + format_poly(*ref)});
      } catch (const Error& e) {
        out.mismatches.push_back({index, delta.str(), std::string(method_name(m)) + ": " + e.what()});
      }
    }
  }
  return out;
}

CheckReport collect(const CheckOptions& opts, std::vector<CaseOutcome>& outcomes) {
  CheckReport report;
  report.cases = opts.cases;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    report.comparisons += outcomes[i].comparisons;
    if (outcomes[i].mismatches.empty()) ++report.agree;
    for (auto& m : outcomes[i].mismatches) report.mismatches.push_back(std::move(m));
  }
  for (std::size_t i = 0; i < opts.cases; ++i)
    if (make_check_case(opts, i).rooted) ++report.rooted;
  return report;
}

}  // namespace

CheckReport run_check(const CheckOptions& opts) {
  std::vector<CaseOutcome> outcomes(opts.cases);
  parallel_for(opts.cases, [&](std::size_t i) { outcomes[i] = check_case(opts, i); });
  return collect(opts, outcomes);
}

CheckReport run_check_serial(const CheckOptions& opts) {
  std::vector<CaseOutcome> outcomes(opts.cases);
  serial_for(opts.cases, [&](std::size_t i) { outcomes[i] = check_case(opts, i); });
  return collect(opts, outcomes);
}

}  // namespace msres
