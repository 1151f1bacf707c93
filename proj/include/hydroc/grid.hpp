// This file is part of hydroc, released under the MIT License.

#ifndef HYDROC_GRID_HPP
#define HYDROC_GRID_HPP

#include <cstddef>
#include <exception>
#include <utility>
#include <vector>

namespace hydroc {

/// Evaluate fn(i) for i in [0, count) into a vector, optionally across OpenMP
/// threads. Every grid point is independent and results land in their own
/// slot, so the parallel output is identical to the serial one bit for bit;
/// the serial path doubles as the reference implementation in tests and in
/// the benchmark. The first exception thrown by any point is rethrown after
/// the loop completes.
template <typename T, typename Fn>
std::vector<T> grid_map(std::size_t count, bool parallel, Fn&& fn) {
  std::vector<T> out(count);
  std::vector<std::exception_ptr> errors(count);

  if (parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < static_cast<long long>(count); ++i) {
      try {
        out[static_cast<std::size_t>(i)] = fn(static_cast<std::size_t>(i));
      } catch (...) {
        errors[static_cast<std::size_t>(i)] = std::current_exception();
      }
    }
  } else {
    for (std::size_t i = 0; i < count; ++i) {
      try {
        out[i] = fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  }

  for (const std::exception_ptr& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

}  // namespace hydroc

#endif
