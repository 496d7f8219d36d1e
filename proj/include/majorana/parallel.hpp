#pragma once

#include <cstddef>
#include <type_traits>
#include <vector>

namespace majorana {

/// out[i] = f(i) for i < n, in order. Reference kernel for sweep_parallel.
template <class F>
auto sweep_serial(std::size_t n, F&& f) -> std::vector<std::invoke_result_t<F&, std::size_t>> {
  std::vector<std::invoke_result_t<F&, std::size_t>> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = f(i);
  return out;
}

/*!
 * Same contract as sweep_serial, iterations spread over OpenMP threads.
 * Each slot is written by exactly one iteration, so any reduction done
 * afterwards over the returned vector is independent of the thread count.
 * f must be safe to call concurrently.
 */
template <class F>
auto sweep_parallel(std::size_t n, F&& f) -> std::vector<std::invoke_result_t<F&, std::size_t>> {
  std::vector<std::invoke_result_t<F&, std::size_t>> out(n);
  const auto count = static_cast<long long>(n);
#pragma omp parallel for schedule(static)
  for (long long i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = f(static_cast<std::size_t>(i));
  return out;
}

}  // namespace majorana
