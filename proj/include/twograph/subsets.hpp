#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <vector>

#include "twograph/graph.hpp"

namespace twograph {

/// C(n, k) for n <= 64; 0 when k is out of range.
std::uint64_t binomial(int n, int k);

/// The k-subset of {0..n-1} with the given colexicographic rank. Colex order
/// matches increasing mask value, so next_subset() walks the same sequence.
std::uint64_t unrank_subset(int n, int k, std::uint64_t rank);

/// Next mask with the same popcount (Gosper's hack).
inline std::uint64_t next_subset(std::uint64_t x) {
  const std::uint64_t c = x & (~x + 1);
  const std::uint64_t r = x + c;
  return (((r ^ x) >> 2) / c) | r;
}

/// Resolves a thread count: 0 means hardware concurrency.
int resolve_threads(int threads);

/// Splits [0, total) into a fixed number of chunks (independent of the thread
/// count) and runs body(chunk, begin, end) on a pool of workers. Chunk results
/// indexed by chunk id give schedule-independent reductions.
int chunk_count(std::uint64_t total);
void parallel_chunks(std::uint64_t total, int threads,
                     const std::function<void(int chunk, std::uint64_t begin, std::uint64_t end)>& body);

/// Calls fn(mask) for each m-subset of {0..n-1} with rank in [begin, end).
template <class Fn>
void for_each_subset_range(int n, int m, std::uint64_t begin, std::uint64_t end, Fn&& fn) {
  if (begin >= end) return;
  std::uint64_t mask = unrank_subset(n, m, begin);
  for (std::uint64_t r = begin; r < end; ++r) {
    fn(mask);
    if (r + 1 < end) mask = next_subset(mask);
  }
}

/// Neumaier-compensated running sum.
class KahanSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  void add(const KahanSum& other) {
    add(other.sum_);
    add(other.comp_);
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace twograph
