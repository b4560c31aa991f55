#ifndef GENDERFLOW_PARALLEL_HPP
#define GENDERFLOW_PARALLEL_HPP

#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace genderflow::util {

/// Runs fn(i) for i in [0, n) on up to `workers` threads. Items are assigned
/// in contiguous chunks; callers write results by index so output order never
/// depends on scheduling. The first exception thrown by any worker is
/// rethrown after all threads join.
template <class F>
void parallel_for(std::size_t n, int workers, F&& fn) {
  if (n == 0) return;
  const std::size_t nw =
      workers <= 1 ? 1 : std::min<std::size_t>(static_cast<std::size_t>(workers), n);
  if (nw == 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> threads;
  std::vector<std::exception_ptr> errors(nw);
  const std::size_t chunk = (n + nw - 1) / nw;
  for (std::size_t w = 0; w < nw; ++w) {
    const std::size_t begin = w * chunk;
    const std::size_t end = std::min(n, begin + chunk);
    threads.emplace_back([&, w, begin, end] {
      try {
        for (std::size_t i = begin; i < end; ++i) fn(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

} // namespace genderflow::util

#endif
