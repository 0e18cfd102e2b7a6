#pragma once

#include <cstddef>
#include <exception>
#include <mutex>

namespace khov {

// Serial is the reference path; Parallel runs the same kernel under OpenMP.
enum class Exec { Serial, Parallel };

template <class F>
void parallel_for(Exec exec, std::size_t count, F&& body) {
  if (exec == Exec::Serial || count < 2) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::exception_ptr failure;
  std::mutex guard;
  const auto n = static_cast<std::ptrdiff_t>(count);
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
      std::lock_guard<std::mutex> lock(guard);
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace khov
