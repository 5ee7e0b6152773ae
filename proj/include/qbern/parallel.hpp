#pragma once

#include <exception>

namespace qbern {

/// Serial reference path or OpenMP path; both produce identical results.
enum class Exec { serial, parallel };

/// body(i) for i = 0..count-1. Under Exec::parallel the iterations are spread
/// over OpenMP threads and the first exception is rethrown after the loop.
template <class F>
void for_each_index(long count, Exec exec, F&& body) {
  if (exec == Exec::serial) {
    for (long i = 0; i < count; ++i) body(i);
    return;
  }
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < count; ++i) {
    try {
      body(i);
    } catch (...) {
#pragma omp critical(qbern_parallel_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace qbern
