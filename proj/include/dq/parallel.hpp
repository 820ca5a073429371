#pragma once

#include <cstddef>
#include <exception>
#include <mutex>

#include <omp.h>

namespace dq {

/// Execution knob for sweep kernels. jobs == 1 selects the serial reference
/// path; jobs == 0 lets OpenMP pick the thread count.
struct Exec {
  int jobs = 0;

  static Exec serial() { return {1}; }
  static Exec parallel(int jobs = 0) { return {jobs}; }
  bool is_serial() const { return jobs == 1; }
  int threads() const { return jobs > 0 ? jobs : omp_get_max_threads(); }
};

/// Calls fn(i) for i in [0, count). Each index must write only its own slot
/// of the output, so results do not depend on the schedule. The first
/// exception thrown by any iteration is rethrown after the loop.
template <class Fn>
void for_each_index(std::size_t count, const Exec& ex, Fn&& fn) {
  if (ex.is_serial()) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::exception_ptr err;
  std::mutex mu;
  const long n = static_cast<long>(count);
#pragma omp parallel for schedule(dynamic) num_threads(ex.threads())
  for (long i = 0; i < n; ++i) {
    try {
      fn(static_cast<std::size_t>(i));
    } catch (...) {
      std::lock_guard<std::mutex> lock(mu);
      if (!err) err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
}

}  // namespace dq
