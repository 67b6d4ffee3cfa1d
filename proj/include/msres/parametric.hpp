#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "msres/index.hpp"
#include "msres/param_poly.hpp"
#include "msres/subres.hpp"
#include "msres/upoly.hpp"

namespace msres {

using PPoly = UPoly<ParamPoly>;

/// if condition != 0 then gcd = gcd_numerator / gcd_denominator.
struct GcdBranch {
  DeltaIndex delta;
  ParamPoly condition;
  PPoly gcd_numerator;
  ParamPoly gcd_denominator;
  bool dead = false;      // condition is identically zero
  bool fallback = false;  // the final else branch
};

struct GcdTree {
  std::vector<GcdBranch> branches;
  ParamPoly assumption;  // lc(F0), assumed nonzero
};

struct MultRow {
  DeltaIndex lambda;
  ParamPoly condition;
  Partition multiplicities;
  bool dead = false;
  bool fallback = false;
};

struct MultTable {
  PPoly h;
  std::vector<MultRow> rows;
  ParamPoly assumption;
};

struct ParamOptions {
  Method method = Method::sylvester;
  bool primitive_conditions = false;  // divide each condition by its rational content
  bool parallel = true;
};

/// One branch per delta with |delta| <= d0 in decreasing glex order.
GcdTree gcd_decision_tree(const PolyTuple<ParamPoly>& F, const ParamOptions& opts = {});

/// Generic H of the given degree. `coeff_names` lists the coefficients from
/// x^degree down to x^0; with only `degree` names H is taken monic; with no
/// names a<degree>, ..., a0 are used.
PPoly generic_poly(unsigned degree, std::span<const std::string> coeff_names);

/// Rows in decreasing lex order of lambda, one per partition of deg H.
MultTable mult_decision_table(const PPoly& h, const ParamOptions& opts = {});
MultTable mult_decision_table(unsigned degree, std::span<const std::string> coeff_names = {},
                              const ParamOptions& opts = {});

UPoly<Rational> specialize(const PPoly& p, std::span<const Rational> values);

/// Index of the first branch / row whose condition does not vanish at
/// `values`.
std::size_t select_branch(const GcdTree& tree, std::span<const Rational> values);
std::size_t select_row(const MultTable& table, std::span<const Rational> values);

}  // namespace msres
