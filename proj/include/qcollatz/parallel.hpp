// Deterministic chunked work distribution. Workers pull chunk indices from
// an atomic counter; results land in index order, so any merge that walks
// them sequentially is independent of the worker count.
#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace qcollatz {

// requested > 0 wins, else QCOLLATZ_THREADS, else hardware concurrency.
unsigned resolve_worker_count(unsigned requested);

template <typename Result, typename Fn>
std::vector<Result> run_indexed(std::uint64_t n_chunks, unsigned threads, Fn&& fn) {
  std::vector<Result> results(n_chunks);
  if (n_chunks == 0) return results;
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(
                                                         std::min<std::uint64_t>(n_chunks, 1024))));
  if (threads == 1) {
    for (std::uint64_t i = 0; i < n_chunks; ++i) results[i] = fn(i);
    return results;
  }

  std::atomic<std::uint64_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (;;) {
        std::uint64_t i = next.fetch_add(1);
        if (i >= n_chunks) return;
        try {
          results[i] = fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!first_error) first_error = std::current_exception();
          next.store(n_chunks);
          return;
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
  return results;
}

}  // namespace qcollatz
