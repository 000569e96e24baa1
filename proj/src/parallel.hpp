#pragma once

#include <algorithm>
#include <cstdint>
#include <thread>
#include <vector>

namespace rso::detail {

/// Splits [0, count) into `threads` contiguous chunks, runs
/// fn(begin, end) -> T on each, and sums the results in chunk order.
/// T is an integer-valued aggregate, so the sum does not depend on the
/// partition.
template <class T, class Fn>
T partitioned_sum(std::uint64_t count, unsigned threads, Fn fn) {
  threads = std::max(1u, threads);
  if (threads == 1 || count < threads) return fn(std::uint64_t{0}, count);
  std::vector<T> partial(threads);
  std::vector<std::thread> pool;
  pool.reserve(threads);
  const std::uint64_t chunk = count / threads, extra = count % threads;
  std::uint64_t begin = 0;
  for (unsigned w = 0; w < threads; ++w) {
    const std::uint64_t end = begin + chunk + (w < extra ? 1 : 0);
    pool.emplace_back([&, w, begin, end] { partial[w] = fn(begin, end); });
    begin = end;
  }
  for (auto& t : pool) t.join();
  T total{};
  for (const auto& p : partial) total += p;
  return total;
}

}  // namespace rso::detail
