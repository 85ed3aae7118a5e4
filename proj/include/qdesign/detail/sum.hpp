#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <thread>
#include <vector>

namespace qdesign::detail {

/// Pairwise (tree) summation. The reduction order depends only on the number
/// of terms, never on thread count, so parallel callers that fill the term
/// vector concurrently still get bit-identical sums.
template <typename T>
T pairwise_sum(std::span<const T> terms) {
  if (terms.empty()) return T{};
  if (terms.size() <= 8) {
    T acc = terms[0];
    for (std::size_t i = 1; i < terms.size(); ++i) acc += terms[i];
    return acc;
  }
  const std::size_t half = terms.size() / 2;
  return pairwise_sum(terms.first(half)) + pairwise_sum(terms.subspan(half));
}

template <typename T>
T pairwise_sum(const std::vector<T>& terms) {
  return pairwise_sum(std::span<const T>(terms));
}

/// Runs fn(i) for i in [0, n). With threads <= 1 this is a plain loop.
/// Work is partitioned statically, so writes to disjoint slots indexed by i
/// are race-free and results are independent of the thread count.
inline void parallel_for(std::size_t n, unsigned threads,
                         const std::function<void(std::size_t)>& fn) {
  if (threads <= 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(threads, n));
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w]() {
      for (std::size_t i = w; i < n; i += workers) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace qdesign::detail
