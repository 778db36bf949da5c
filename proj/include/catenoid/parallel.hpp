#pragma once

// Data-parallel kernels. Every OpenMP kernel has a serial reference with the
// same signature; the two must produce identical results element by element.

#include <omp.h>

#include <cstddef>
#include <cstdlib>
#include <exception>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

namespace catenoid::parallel {

//! requested > 0 wins; otherwise CATENOID_WORKERS; otherwise the OpenMP default.
inline int resolve_workers(int requested = 0) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("CATENOID_WORKERS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(v);
  }
  return omp_get_max_threads();
}

template <class T, class F>
auto map_serial(std::span<const T> in, F&& f) {
  using R = std::decay_t<std::invoke_result_t<F&, const T&>>;
  std::vector<R> out;
  out.reserve(in.size());
  for (const T& v : in) out.push_back(f(v));
  return out;
}

//! Parallel map; output order equals input order for any worker count.
/*! An exception from any element is rethrown after the loop, the one with
    the lowest input index winning, so failures are deterministic too. grain
    is the dynamic-schedule chunk; raise it for cheap per-element work. */
template <class T, class F>
auto map_omp(std::span<const T> in, F&& f, int workers = 0, int grain = 1) {
  using R = std::decay_t<std::invoke_result_t<F&, const T&>>;
  static_assert(std::is_default_constructible_v<R>);
  const auto n = static_cast<std::ptrdiff_t>(in.size());
  std::vector<R> out(in.size());
  std::ptrdiff_t first_bad = n;
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic, grain) num_threads(resolve_workers(workers))
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      out[i] = f(in[i]);
    } catch (...) {
#pragma omp critical(catenoid_map_error)
      if (i < first_bad) {
        first_bad = i;
        error = std::current_exception();
      }
    }
  }
  if (error) std::rethrow_exception(error);
  return out;
}

template <class T, class F>
auto map_serial(const std::vector<T>& in, F&& f) {
  return map_serial(std::span<const T>(in), std::forward<F>(f));
}

template <class T, class F>
auto map_omp(const std::vector<T>& in, F&& f, int workers = 0, int grain = 1) {
  return map_omp(std::span<const T>(in), std::forward<F>(f), workers, grain);
}

}  // namespace catenoid::parallel
