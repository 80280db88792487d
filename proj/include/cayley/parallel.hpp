#pragma once

#include <cstdint>
#include <cstdlib>
#include <thread>
#include <vector>

namespace cayley {

// Worker count: CAYLEY_THREADS if set (>= 1), else hardware concurrency.
inline unsigned worker_count() {
  if (const char* env = std::getenv("CAYLEY_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

// Splits [0, n) into fixed chunks and evaluates work(begin, end) on each,
// returning per-chunk results in chunk order.  The chunk layout depends only
// on n and the worker count, and results are merged in chunk order, so any
// caller that combines them order-sensitively stays deterministic for a
// fixed CAYLEY_THREADS.  Falls back to a single in-thread call when there is
// nothing to gain.
template <class R, class Fn>
std::vector<R> parallel_chunks(uint64_t n, Fn&& work) {
  unsigned workers = worker_count();
  if (n == 0) return {};
  if (workers <= 1 || n < 1024) {
    std::vector<R> out;
    out.push_back(work(uint64_t{0}, n));
    return out;
  }
  uint64_t chunks = std::min<uint64_t>(workers, n);
  std::vector<R> results(static_cast<size_t>(chunks));
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(chunks));
  uint64_t per = n / chunks, rem = n % chunks, begin = 0;
  for (uint64_t c = 0; c < chunks; ++c) {
    uint64_t len = per + (c < rem ? 1 : 0);
    uint64_t end = begin + len;
    pool.emplace_back([&results, &work, c, begin, end] {
      results[static_cast<size_t>(c)] = work(begin, end);
    });
    begin = end;
  }
  for (auto& t : pool) t.join();
  return results;
}

}  // namespace cayley
