#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace frobenius {

// Pairwise (cascade) summation of values[lo, hi).
template <class T>
T pairwise_sum(const std::vector<T>& values, std::size_t lo, std::size_t hi) {
  if (hi - lo <= 8) {
    T s{};
    for (std::size_t i = lo; i < hi; ++i) s += values[i];
    return s;
  }
  const std::size_t mid = lo + (hi - lo) / 2;
  return pairwise_sum(values, lo, mid) + pairwise_sum(values, mid, hi);
}

template <class T>
T pairwise_sum(const std::vector<T>& values) {
  return pairwise_sum(values, 0, values.size());
}

// Runs body(chunk) for chunk in [0, chunks) on up to `threads` workers.
template <class Body>
void for_each_chunk(std::size_t chunks, unsigned threads, Body body) {
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(chunks, 1))));
  if (threads == 1) {
    for (std::size_t c = 0; c < chunks; ++c) body(c);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t c = next++; c < chunks; c = next++) body(c);
    });
  }
  for (auto& th : pool) th.join();
}

// Σ_{i<count} term(i) split into fixed chunks of `chunk_size` terms. Each
// chunk is summed pairwise and the chunk totals are combined pairwise in
// chunk order, so the result depends on chunk_size but not on `threads`.
template <class T, class Term>
T chunked_sum(std::size_t count, std::size_t chunk_size, unsigned threads, Term term) {
  chunk_size = std::max<std::size_t>(chunk_size, 1);
  const std::size_t chunks = (count + chunk_size - 1) / chunk_size;
  std::vector<T> totals(chunks);
  for_each_chunk(chunks, threads, [&](std::size_t c) {
    const std::size_t lo = c * chunk_size;
    const std::size_t hi = std::min(count, lo + chunk_size);
    std::vector<T> local;
    local.reserve(hi - lo);
    for (std::size_t i = lo; i < hi; ++i) local.push_back(term(i));
    totals[c] = pairwise_sum(local);
  });
  return pairwise_sum(totals);
}

}  // namespace frobenius
