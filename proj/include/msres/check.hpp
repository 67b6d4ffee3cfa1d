#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "msres/index.hpp"
#include "msres/rational.hpp"
#include "msres/subres.hpp"

namespace msres {

struct CheckOptions {
  std::uint64_t seed = 1;
  std::size_t cases = 100;
  unsigned max_degree = 6;
  std::size_t max_t = 3;
  int coeff_bound = 20;  // |p|, |q| <= bound for every random rational
};

struct CheckCase {
  std::vector<UPoly<Rational>> polys;
  bool rooted = false;             // F0 built from distinct rational roots
  std::vector<Rational> roots;     // those roots when rooted
};

struct Mismatch {
  std::size_t case_index = 0;
  std::string delta;
  std::string detail;
};

struct CheckReport {
  std::size_t cases = 0;
  std::size_t agree = 0;
  std::size_t rooted = 0;
  std::size_t comparisons = 0;
  std::vector<Mismatch> mismatches;
};

/// Random p/q with |p|, q <= bound, q >= 1.
Rational random_rational(std::mt19937_64& rng, int bound, bool nonzero = false);
/// Random polynomial of exact degree `degree`.
UPoly<Rational> random_poly(std::mt19937_64& rng, unsigned degree, int bound);
/// `count` distinct random rationals.
std::vector<Rational> random_distinct_rationals(std::mt19937_64& rng, unsigned count, int bound);
/// lc * prod (x - r_j) for `count` distinct random rational roots.
UPoly<Rational> random_rooted_poly(std::mt19937_64& rng, unsigned count, int bound);

/// Case `index` of the suite; depends only on (opts.seed, index).
CheckCase make_check_case(const CheckOptions& opts, std::size_t index);

/// Compares sylvester, barnett and bezout on every delta with |delta| <= d0,
/// and the root oracle when F0 was built from roots.
CheckReport run_check(const CheckOptions& opts);
CheckReport run_check_serial(const CheckOptions& opts);

}  // namespace msres
