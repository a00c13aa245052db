#pragma once

#include <cstddef>
#include <exception>
#include <optional>
#include <vector>

namespace dualz {

enum class Execution { serial, parallel };

/// Evaluates fn(0), ..., fn(count - 1) and returns the results in index
/// order. The serial path is the reference; the parallel path spreads the
/// indices over OpenMP threads and must produce identical output. If any
/// call throws, the exception of the smallest failing index is rethrown.
template <class Fn>
auto run_indexed(std::size_t count, Fn fn, Execution ex)
    -> std::vector<decltype(fn(std::size_t{}))> {
  using R = decltype(fn(std::size_t{}));
  std::vector<std::optional<R>> slots(count);
  std::vector<std::exception_ptr> errors(count);
  const long n = static_cast<long>(count);
  if (ex == Execution::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < n; ++i) {
      try {
        slots[static_cast<std::size_t>(i)].emplace(fn(static_cast<std::size_t>(i)));
      } catch (...) {
        errors[static_cast<std::size_t>(i)] = std::current_exception();
      }
    }
  } else {
    for (long i = 0; i < n; ++i) {
      try {
        slots[static_cast<std::size_t>(i)].emplace(fn(static_cast<std::size_t>(i)));
      } catch (...) {
        errors[static_cast<std::size_t>(i)] = std::current_exception();
      }
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::vector<R> out;
  out.reserve(count);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

/// Number of OpenMP threads a parallel run would use.
int parallel_threads();

}  // namespace dualz
