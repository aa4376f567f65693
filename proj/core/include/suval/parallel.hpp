#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace suval {

/// Worker count used when a caller passes 0: `SUVAL_WORKERS` if set,
/// otherwise the hardware concurrency.
unsigned default_workers();

/// Runs `body(chunk)` for chunk = 0..chunks-1 on up to `workers` threads and
/// returns the per-chunk results in chunk order. The chunk plan is fixed by
/// the caller, so results do not depend on the worker count.
template <typename Result, typename Body>
std::vector<Result> run_chunks(std::size_t chunks, unsigned workers, Body body) {
  std::vector<Result> out(chunks);
  if (workers == 0) workers = default_workers();
  workers = static_cast<unsigned>(std::min<std::size_t>(std::max(1u, workers), chunks));
  if (workers <= 1) {
    for (std::size_t c = 0; c < chunks; ++c) out[c] = body(c);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      try {
        for (std::size_t c = next++; c < chunks; c = next++) out[c] = body(c);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next = chunks;
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  return out;
}

}  // namespace suval
