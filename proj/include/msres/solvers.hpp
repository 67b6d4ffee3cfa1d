#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "msres/index.hpp"
#include "msres/rational.hpp"
#include "msres/subres.hpp"
#include "msres/upoly.hpp"

namespace msres {

using QPoly = UPoly<Rational>;

struct GcdResult {
  QPoly gcd;                         // monic
  std::optional<DeltaIndex> delta;   // empty when F0 is constant
  Rational s_value;
  Method method = Method::sylvester;
};

struct MultResult {
  Partition multiplicities;
  DeltaIndex lambda;
};

/// gcd(F) = S_delta / s_delta for the glex-largest delta with s_delta != 0,
/// scanning |delta| <= d0 from the top. A constant F0 gives gcd 1.
GcdResult multi_gcd(const PolyTuple<Rational>& F, Method method = Method::sylvester);

/// (deg C_1, ..., deg C_t) with C_i = gcd(F0..F_{i-1}) / gcd(F0..F_i), from
/// successive Euclidean gcds. Test oracle for multi_gcd.
DeltaIndex icdeg_oracle(const PolyTuple<Rational>& F);

/// (H, H', ..., H^(t)) for t = deg H.
PolyTuple<Rational> derivative_tuple(const QPoly& h);

/// Multiplicity structure of H as the conjugate of the lex-largest
/// partition-shaped lambda with s_lambda(H, H', ..., H^(t)) != 0.
MultResult multiplicity(const QPoly& h, Method method = Method::sylvester);

/// Multiplicities of a root specification sorted in decreasing order.
Partition mult_oracle(std::span<const std::pair<Rational, unsigned>> rootspec);

/// lc * prod (x - r)^m over a root specification.
QPoly from_rootspec(const Rational& lc, std::span<const std::pair<Rational, unsigned>> rootspec);

}  // namespace msres
