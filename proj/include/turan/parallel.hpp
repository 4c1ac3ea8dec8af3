#pragma once

// Deterministic parallel reduction. Indices are folded in fixed-size chunks
// and the chunk results combined in chunk order, so the answer depends only
// on (count, body, combine), never on the thread count or scheduling.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace turan {

inline constexpr std::uint64_t kReduceChunk = 256;

/// 0 means "use hardware concurrency".
inline unsigned resolve_threads(unsigned requested) {
  if (requested > 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

template <class T, class Body, class Combine>
T parallel_reduce(std::uint64_t count, unsigned threads, T init, Body&& body, Combine&& combine) {
  const std::uint64_t chunks = (count + kReduceChunk - 1) / kReduceChunk;
  std::vector<T> partial(static_cast<std::size_t>(chunks), init);
  auto run_chunk = [&](std::uint64_t c) {
    const std::uint64_t lo = c * kReduceChunk, hi = std::min(count, lo + kReduceChunk);
    T acc = init;
    for (std::uint64_t i = lo; i < hi; ++i) acc = combine(std::move(acc), body(i));
    partial[static_cast<std::size_t>(c)] = std::move(acc);
  };
  const unsigned workers = static_cast<unsigned>(std::min<std::uint64_t>(resolve_threads(threads), std::max<std::uint64_t>(chunks, 1)));
  if (workers <= 1) {
    for (std::uint64_t c = 0; c < chunks; ++c) run_chunk(c);
  } else {
    std::atomic<std::uint64_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (std::uint64_t c = next++; c < chunks; c = next++) {
          try {
            run_chunk(c);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
            next = chunks;
          }
        }
      });
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
  }
  T total = init;
  for (auto& part : partial) total = combine(std::move(total), std::move(part));
  return total;
}

/// Runs body(i) for i in [0, count) and returns the results in index order.
template <class Body>
auto parallel_map(std::uint64_t count, unsigned threads, Body&& body) {
  using T = decltype(body(std::uint64_t{0}));
  std::vector<T> out(static_cast<std::size_t>(count));
  parallel_reduce(count, threads, 0, [&](std::uint64_t i) {
    out[static_cast<std::size_t>(i)] = body(i);
    return 0;
  }, [](int a, int) { return a; });
  return out;
}

}  // namespace turan
