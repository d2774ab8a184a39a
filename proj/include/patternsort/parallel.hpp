#pragma once

#include <cstddef>
#include <exception>
#include <utility>
#include <vector>

namespace patternsort {

/// Runs `task(i)` for i in [0, tasks) and concatenates the returned vectors in task
/// order, so the result does not depend on scheduling. Tasks run on OpenMP threads;
/// the first exception thrown by any task is rethrown after the join.
template <class T, class Task>
std::vector<T> parallel_collect(std::size_t tasks, Task&& task) {
  std::vector<std::vector<T>> parts(tasks);
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(tasks); ++i) {
    try {
      parts[static_cast<std::size_t>(i)] = task(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(patternsort_parallel_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  std::size_t total = 0;
  for (const auto& part : parts) total += part.size();
  std::vector<T> out;
  out.reserve(total);
  for (auto& part : parts) {
    for (auto& item : part) out.push_back(std::move(item));
  }
  return out;
}

/// Serial counterpart of parallel_collect, kept as the reference path.
template <class T, class Task>
std::vector<T> serial_collect(std::size_t tasks, Task&& task) {
  std::vector<T> out;
  for (std::size_t i = 0; i < tasks; ++i) {
    auto part = task(i);
    for (auto& item : part) out.push_back(std::move(item));
  }
  return out;
}

}  // namespace patternsort
