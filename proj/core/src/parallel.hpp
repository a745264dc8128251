#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace symrec::detail {

// Runs fn(c) for c in [0, chunks) on up to `threads` workers; rethrows the
// first exception after all workers stop.
template <class Fn>
void parallel_chunks(std::uint64_t chunks, unsigned threads, Fn&& fn) {
  std::atomic<std::uint64_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto work = [&] {
    for (std::uint64_t c = next++; c < chunks && !failed; c = next++) {
      try {
        fn(c);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        failed = true;
      }
    }
  };
  threads = std::clamp(threads, 1u, 256u);
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace symrec::detail
