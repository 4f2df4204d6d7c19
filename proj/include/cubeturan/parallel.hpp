#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace cubeturan {

inline unsigned default_threads() {
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

// Sums task(i) over i in [0, count) using `threads` workers with a strided
// split. The result does not depend on the worker count.
template <class Task>
std::uint64_t parallel_sum(std::uint64_t count, unsigned threads, Task&& task) {
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::min<std::uint64_t>(count, 256))));
  if (threads <= 1) {
    std::uint64_t total = 0;
    for (std::uint64_t i = 0; i < count; ++i) total += task(i);
    return total;
  }
  std::vector<std::uint64_t> partial(threads, 0);
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned w = 0; w < threads; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::uint64_t i = w; i < count; i += threads) partial[w] += task(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::uint64_t total = 0;
  for (auto p : partial) total += p;
  return total;
}

}  // namespace cubeturan
