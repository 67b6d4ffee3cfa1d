#pragma once

#include <cstddef>
#include <exception>
#include <span>
#include <vector>

#include "msres/subres.hpp"

namespace msres {

/// Runs fn(i) for i in [0, n) across OpenMP threads. If any call throws, the
/// exception from the smallest index is rethrown after the loop.
template <class Fn>
void parallel_for(std::size_t n, Fn&& fn) {
  std::vector<std::exception_ptr> errors(n);
  const long count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < count; ++i) {
    try {
      fn(static_cast<std::size_t>(i));
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

template <class Fn>
void serial_for(std::size_t n, Fn&& fn) {
  for (std::size_t i = 0; i < n; ++i) fn(i);
}

/// S_delta for every delta in `deltas`, in the given order.
template <Domain D>
std::vector<SubresResult<D>> subresultant_table(const PolyTuple<D>& F, std::span<const DeltaIndex> deltas,
                                                Method method = Method::sylvester) {
  std::vector<SubresResult<D>> out(deltas.size());
  parallel_for(deltas.size(), [&](std::size_t i) { out[i] = subresultant(F, deltas[i], method); });
  return out;
}

template <Domain D>
std::vector<SubresResult<D>> subresultant_table_serial(const PolyTuple<D>& F, std::span<const DeltaIndex> deltas,
                                                       Method method = Method::sylvester) {
  std::vector<SubresResult<D>> out;
  out.reserve(deltas.size());
  for (const auto& d : deltas) out.push_back(subresultant(F, d, method));
  return out;
}

}  // namespace msres
