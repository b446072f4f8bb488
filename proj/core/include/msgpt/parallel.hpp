#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <thread>
#include <vector>

namespace msgpt {

/// Runs fn(k) for k in [begin, end) on up to `jobs` threads. Workers claim
/// small chunks from a shared counter, so uneven per-index cost balances out.
/// fn must only write state owned by index k. Ranges shorter than
/// `serial_below` run inline.
template <class Fn>
void parallel_for(std::int64_t begin, std::int64_t end, unsigned jobs, Fn&& fn,
                  std::int64_t serial_below = 256) {
  const std::int64_t total = end - begin;
  if (total <= 0) return;
  if (jobs <= 1 || total < serial_below) {
    for (std::int64_t k = begin; k < end; ++k) fn(k);
    return;
  }
  const auto workers = std::min<std::int64_t>(jobs, total);
  const std::int64_t chunk = std::max<std::int64_t>(1, total / (workers * 16));
  std::atomic<std::int64_t> next{begin};
  std::vector<std::jthread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (std::int64_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        const std::int64_t lo = next.fetch_add(chunk);
        if (lo >= end) return;
        const std::int64_t hi = std::min(end, lo + chunk);
        for (std::int64_t k = lo; k < hi; ++k) fn(k);
      }
    });
  }
}

}  // namespace msgpt
