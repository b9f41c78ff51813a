#include "twograph/subsets.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <stdexcept>
#include <thread>

namespace twograph {

namespace {

struct BinomialTable {
  std::array<std::array<std::uint64_t, 65>, 65> c{};
  BinomialTable() {
    for (int n = 0; n <= 64; ++n) {
      c[n][0] = 1;
      for (int k = 1; k <= n; ++k) c[n][k] = c[n - 1][k - 1] + (k <= n - 1 ? c[n - 1][k] : 0);
    }
  }
};

const BinomialTable& table() {
  static const BinomialTable t;
  return t;
}

}  // namespace

std::uint64_t binomial(int n, int k) {
  if (n < 0 || n > 64 || k < 0 || k > n) return 0;
  return table().c[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

std::uint64_t unrank_subset(int n, int k, std::uint64_t rank) {
  if (rank >= binomial(n, k)) throw std::out_of_range("subset rank out of range");
  std::uint64_t mask = 0;
  int top = n;
  // colex: rank = sum_i C(c_i, i) over elements c_1 < ... < c_k
  for (int i = k; i >= 1; --i) {
    int c = i - 1;
    while (c + 1 < top && binomial(c + 1, i) <= rank) ++c;
    mask |= std::uint64_t{1} << c;
    rank -= binomial(c, i);
    top = c;
  }
  return mask;
}

int resolve_threads(int threads) {
  if (threads > 0) return threads;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

int chunk_count(std::uint64_t total) {
  return static_cast<int>(std::min<std::uint64_t>(total, 256));
}

void parallel_chunks(std::uint64_t total, int threads,
                     const std::function<void(int, std::uint64_t, std::uint64_t)>& body) {
  const int chunks = chunk_count(total);
  if (chunks == 0) return;
  auto bounds = [&](int i) { return total / static_cast<std::uint64_t>(chunks) * static_cast<std::uint64_t>(i) +
                                    std::min<std::uint64_t>(static_cast<std::uint64_t>(i), total % static_cast<std::uint64_t>(chunks)); };
  const int workers = std::min(resolve_threads(threads), chunks);
  if (workers <= 1) {
    for (int i = 0; i < chunks; ++i) body(i, bounds(i), bounds(i + 1));
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::jthread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (int i = next++; i < chunks; i = next++) body(i, bounds(i), bounds(i + 1));
    });
  }
}

}  // namespace twograph
