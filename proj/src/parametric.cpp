#include "msres/parametric.hpp"

#include "msres/parallel.hpp"
#include "msres/solvers.hpp"

namespace msres {

namespace {

ParamPoly tidy(const ParamPoly& c, const ParamOptions& opts) {
  return opts.primitive_conditions ? primitive_part(c) : c;
}

template <class Fn>
void run(std::size_t n, bool parallel, Fn&& fn) {
  if (parallel)
    parallel_for(n, fn);
  else
    serial_for(n, fn);
}

}  // namespace

GcdTree gcd_decision_tree(const PolyTuple<ParamPoly>& F, const ParamOptions& opts) {
  const auto deltas = enumerate_deltas(F.t(), F.d0());
  std::vector<std::optional<GcdBranch>> slots(deltas.size());
  run(deltas.size(), opts.parallel, [&](std::size_t i) {
    const auto r = subresultant(F, deltas[i], opts.method);
    slots[i] = GcdBranch{deltas[i], tidy(r.s_principal, opts), r.s_poly, r.s_principal, r.s_principal.is_zero(),
                         i + 1 == deltas.size()};
  });
  GcdTree tree;
  tree.assumption = F.lc0();
  for (auto& s : slots) tree.branches.push_back(std::move(*s));
  return tree;
}

PPoly generic_poly(unsigned degree, std::span<const std::string> coeff_names) {
  if (degree == 0) throw Error(Errc::constant_input, "degree must be at least 1");
  std::vector<std::string> names(coeff_names.begin(), coeff_names.end());
  if (names.empty())
    for (unsigned k = degree + 1; k-- > 0;) names.push_back("a" + std::to_string(k));
  const bool is_monic = names.size() == degree;
  if (!is_monic && names.size() != degree + 1)
    throw Error(Errc::invalid_argument, "expected " + std::to_string(degree) + " or " + std::to_string(degree + 1) +
                                            " coefficient names");
  const auto vars = make_vars(names);
  std::vector<ParamPoly> c(degree + 1);
  if (is_monic) c[degree] = ParamPoly(1);
  for (std::size_t i = 0; i < names.size(); ++i) c[degree - (is_monic ? 1 : 0) - i] = ParamPoly::variable(vars, i);
  return PPoly(std::move(c));
}

MultTable mult_decision_table(const PPoly& h, const ParamOptions& opts) {
  if (h.is_zero() || h.degree() == 0) throw Error(Errc::constant_input, "multiplicity needs deg H >= 1");
  const auto t = h.degree();
  std::vector<PPoly> polys;
  for (unsigned k = 0; k <= t; ++k) polys.push_back(derivative(h, k));
  const PolyTuple<ParamPoly> F(std::move(polys));
  const auto lambdas = enumerate_partition_indices(t);
  std::vector<std::optional<MultRow>> slots(lambdas.size());
  run(lambdas.size(), opts.parallel, [&](std::size_t i) {
    const auto r = subresultant(F, lambdas[i], opts.method);
    slots[i] = MultRow{lambdas[i], tidy(r.s_principal, opts), conjugate(lambdas[i]), r.s_principal.is_zero(),
                       i + 1 == lambdas.size()};
  });
  MultTable table;
  table.h = h;
  table.assumption = h.leading();
  for (auto& s : slots) table.rows.push_back(std::move(*s));
  return table;
}

MultTable mult_decision_table(unsigned degree, std::span<const std::string> coeff_names, const ParamOptions& opts) {
  return mult_decision_table(generic_poly(degree, coeff_names), opts);
}

UPoly<Rational> specialize(const PPoly& p, std::span<const Rational> values) {
  return map_coeffs<Rational>(p, [&](const ParamPoly& c) { return c.eval(values); });
}

std::size_t select_branch(const GcdTree& tree, std::span<const Rational> values) {
  for (std::size_t i = 0; i < tree.branches.size(); ++i)
    if (!is_zero(tree.branches[i].condition.eval(values))) return i;
  throw Error(Errc::consistency_failure, "no branch condition holds at this point");
}

std::size_t select_row(const MultTable& table, std::span<const Rational> values) {
  for (std::size_t i = 0; i < table.rows.size(); ++i)
    if (!is_zero(table.rows[i].condition.eval(values))) return i;
  throw Error(Errc::consistency_failure, "no row condition holds at this point");
}

}  // namespace msres
