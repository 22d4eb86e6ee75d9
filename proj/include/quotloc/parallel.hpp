// Minimal deterministic parallel map-reduce over an index range.
//
// Loci (and grid points) are pure, independent evaluations reduced by exact
// addition, so any schedule yields the same value; we nevertheless reduce
// per-thread partials in thread order to keep every byte of downstream
// output reproducible.  Thread count comes from the QUOTLOC_THREADS
// environment variable when set, otherwise hardware concurrency.

#pragma once

#include <cstdlib>
#include <exception>
#include <functional>
#include <string>
#include <thread>
#include <vector>

namespace quotloc {

inline unsigned thread_width() {
  if (const char* env = std::getenv("QUOTLOC_THREADS")) {
    try {
      const long w = std::stol(env);
      if (w >= 1) return static_cast<unsigned>(w);
    } catch (const std::exception&) {
      // fall through to the hardware default on unparsable values
    }
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

// Evaluates f(0), ..., f(count-1) and returns zero + sum of results.
// T needs operator+= and copy construction; f must be thread-safe.
template <class T, class F>
T parallel_sum(std::size_t count, const T& zero, F&& f) {
  const unsigned width = thread_width();
  if (width <= 1 || count <= 1) {
    T total = zero;
    for (std::size_t i = 0; i < count; ++i) total += f(i);
    return total;
  }
  const unsigned workers = static_cast<unsigned>(
      std::min<std::size_t>(width, count));
  std::vector<T> partial(workers, zero);
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      try {
        // Contiguous static partition: worker w takes [lo, hi).
        const std::size_t lo = count * w / workers;
        const std::size_t hi = count * (w + 1) / workers;
        for (std::size_t i = lo; i < hi; ++i) partial[w] += f(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  T total = zero;
  for (const auto& p : partial) total += p;
  return total;
}

}  // namespace quotloc
