#pragma once

#include <exception>
#include <utility>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hodge {

// Serial is the reference implementation; Parallel uses OpenMP when the
// translation unit was compiled with it and silently degrades to the serial
// loop otherwise.
enum class ExecutionPolicy { Serial, Parallel };

#ifdef _OPENMP
inline bool parallel_available() { return true; }
inline int max_threads() { return omp_get_max_threads(); }
#else
inline bool parallel_available() { return false; }
inline int max_threads() { return 1; }
#endif

// Evaluates fn(i) for i in [0, n) and returns the results in index order,
// independent of the policy: every slot is written exactly once, so the
// output (and therefore anything serialized from it) is identical for
// serial and parallel runs. If any calls throw, the exception with the
// lowest index is rethrown, matching what the serial loop would surface.
template <typename T, typename Fn>
std::vector<T> sweep_map(int n, ExecutionPolicy policy, Fn&& fn) {
  std::vector<T> out(static_cast<std::size_t>(n > 0 ? n : 0));
  if (n <= 0) return out;

#ifdef _OPENMP
  if (policy == ExecutionPolicy::Parallel) {
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < n; ++i) {
      try {
        out[static_cast<std::size_t>(i)] = fn(i);
      } catch (...) {
        errors[static_cast<std::size_t>(i)] = std::current_exception();
      }
    }
    for (int i = 0; i < n; ++i)
      if (errors[static_cast<std::size_t>(i)])
        std::rethrow_exception(errors[static_cast<std::size_t>(i)]);
    return out;
  }
#else
  (void)policy;
#endif

  for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = fn(i);
  return out;
}

}  // namespace hodge
