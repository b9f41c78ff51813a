#include "twograph/measures.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdio>
#include <map>
#include <stdexcept>
#include <string>

#include "twograph/spectral.hpp"
#include "twograph/subsets.hpp"

namespace twograph {

namespace {

// lambda_max of the Seidel block on the vertices of mask.
double block_lambda_max(const Graph& g, std::uint64_t mask, int m) {
  std::array<int, kMaxVertices> v{};
  int k = 0;
  for (std::uint64_t b = mask; b != 0; b &= b - 1) v[static_cast<std::size_t>(k++)] = std::countr_zero(b);
  std::array<double, kMaxVertices * kMaxVertices> a;
  for (int i = 0; i < m; ++i) {
    const std::uint64_t row = g.row(v[static_cast<std::size_t>(i)]);
    a[static_cast<std::size_t>(i * m + i)] = 0.0;
    for (int j = i + 1; j < m; ++j) {
      const double s = (row >> v[static_cast<std::size_t>(j)]) & 1U ? -1.0 : 1.0;
      a[static_cast<std::size_t>(i * m + j)] = s;
      a[static_cast<std::size_t>(j * m + i)] = s;
    }
  }
  return largest_eigenvalue_inplace(std::span<double>(a.data(), static_cast<std::size_t>(m * m)), m);
}

void check_m(const Graph& g, int m) {
  if (m < 1 || m > g.order()) {
    throw std::out_of_range("subset size m=" + std::to_string(m) + " outside 1.." + std::to_string(g.order()));
  }
}

}  // namespace

NormSpec parse_norm_spec(const std::string& text) {
  if (text == "inf" || text == "infinity" || text == "max") return NormSpec::infinity();
  if (text == "one" || text == "1" || text == "mean") return NormSpec::one();
  std::string rest;
  if (text.rfind("p=", 0) == 0) {
    rest = text.substr(2);
  } else if (text.rfind('p', 0) == 0) {
    rest = text.substr(1);
  } else {
    rest = text;
  }
  std::size_t used = 0;
  double p = 0.0;
  try {
    p = std::stod(rest, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != rest.size()) throw std::invalid_argument("unknown norm family '" + text + "'");
  if (!(p >= 1.0)) throw std::invalid_argument("norm exponent p must be >= 1");
  if (p == 1.0) return NormSpec::one();
  return NormSpec::power(p);
}

std::string norm_spec_name(const NormSpec& spec) {
  switch (spec.family) {
    case NormFamily::infinity:
      return "inf";
    case NormFamily::one:
      return "one";
    case NormFamily::p: {
      char buf[64];
      std::snprintf(buf, sizeof buf, "p=%.12g", spec.p);
      return buf;
    }
  }
  return "?";
}

double shift_constant(int n) { return n > 1 ? 1.0 / static_cast<double>(n - 1) : 0.0; }

double norm_upper_bound(int n, int m) { return 1.0 + static_cast<double>(m - 1) * shift_constant(n); }

SubsetSweep sweep_shifted_blocks(const Graph& g, int m, double diag, double coef, double p, int threads) {
  check_m(g, m);
  if (!(coef > 0.0)) throw std::invalid_argument("block coefficient must be positive");
  const int n = g.order();
  const std::uint64_t total = binomial(n, m);
  struct Part {
    double max = -1e300;
    KahanSum sum;
    KahanSum sum_pow;
  };
  std::vector<Part> parts(static_cast<std::size_t>(chunk_count(total)));
  parallel_chunks(total, threads, [&](int chunk, std::uint64_t begin, std::uint64_t end) {
    Part& part = parts[static_cast<std::size_t>(chunk)];
    for_each_subset_range(n, m, begin, end, [&](std::uint64_t mask) {
      const double v = diag + coef * block_lambda_max(g, mask, m);
      part.max = std::max(part.max, v);
      part.sum.add(v);
      if (p > 0.0) part.sum_pow.add(std::pow(v, p));
    });
  });
  SubsetSweep out;
  out.count = total;
  KahanSum sum;
  KahanSum sum_pow;
  out.max = -1e300;
  for (const Part& part : parts) {
    out.max = std::max(out.max, part.max);
    sum.add(part.sum);
    sum_pow.add(part.sum_pow);
  }
  const double count = static_cast<double>(total);
  out.mean = sum.value() / count;
  if (p > 0.0) out.power_mean = std::pow(sum_pow.value() / count, 1.0 / p);
  return out;
}

double subset_norm(const Graph& g, VertexSet subset) {
  if (subset.empty()) throw std::invalid_argument("subset_norm needs a nonempty subset");
  if ((subset.bits() & ~VertexSet::full(g.order()).bits()) != 0) {
    throw std::out_of_range("subset contains a vertex outside the graph");
  }
  return 1.0 + shift_constant(g.order()) * block_lambda_max(g, subset.bits(), subset.size());
}

double e_infinity(const Graph& g, int m, int threads) {
  check_m(g, m);
  if (g.order() == 1) return 1.0;
  return sweep_shifted_blocks(g, m, 1.0, shift_constant(g.order()), 0.0, threads).max;
}

double e_one(const Graph& g, int m, int threads) {
  check_m(g, m);
  if (g.order() == 1) return 1.0;
  return sweep_shifted_blocks(g, m, 1.0, shift_constant(g.order()), 0.0, threads).mean;
}

double e_p(const Graph& g, int m, double p, int threads) {
  if (!(p >= 1.0)) throw std::invalid_argument("norm exponent p must be >= 1");
  check_m(g, m);
  if (g.order() == 1) return 1.0;
  const SubsetSweep s = sweep_shifted_blocks(g, m, 1.0, shift_constant(g.order()), p, threads);
  return p == 1.0 ? s.mean : s.power_mean;
}

double e_measure(const Graph& g, int m, const NormSpec& spec, int threads) {
  switch (spec.family) {
    case NormFamily::infinity:
      return e_infinity(g, m, threads);
    case NormFamily::one:
      return e_one(g, m, threads);
    case NormFamily::p:
      return e_p(g, m, spec.p, threads);
  }
  throw std::logic_error("bad norm family");
}

NormProfile norm_profile(const Graph& g, const NormSpec& spec, int threads) {
  NormProfile prof;
  prof.n = g.order();
  prof.spec = spec;
  prof.c = shift_constant(g.order());
  for (int m = 1; m <= g.order(); ++m) prof.values.push_back(e_measure(g, m, spec, threads));
  return prof;
}

double profile_separation(const NormProfile& a, const NormProfile& b) {
  if (a.values.size() != b.values.size()) throw std::invalid_argument("profiles have different lengths");
  double gap = 0.0;
  for (std::size_t i = 0; i < a.values.size(); ++i) gap = std::max(gap, std::abs(a.values[i] - b.values[i]));
  return gap;
}

std::uint64_t NormDistribution::total() const {
  std::uint64_t t = 0;
  for (const auto& b : buckets) t += b.count;
  return t;
}

double NormDistribution::mean() const {
  KahanSum s;
  for (const auto& b : buckets) s.add(b.value * static_cast<double>(b.count));
  return s.value() / static_cast<double>(total());
}

NormDistribution norm_distribution(const Graph& g, int m, int threads) {
  check_m(g, m);
  const int n = g.order();
  const double c = shift_constant(n);
  const std::uint64_t total = binomial(n, m);
  struct Acc {
    KahanSum sum;
    std::uint64_t count = 0;
  };
  using KeyMap = std::map<long long, Acc>;
  std::vector<KeyMap> parts(static_cast<std::size_t>(chunk_count(total)));
  parallel_chunks(total, threads, [&](int chunk, std::uint64_t begin, std::uint64_t end) {
    KeyMap& local = parts[static_cast<std::size_t>(chunk)];
    for_each_subset_range(n, m, begin, end, [&](std::uint64_t mask) {
      const double v = 1.0 + c * block_lambda_max(g, mask, m);
      Acc& acc = local[std::llround(v * 1e9)];
      acc.sum.add(v);
      ++acc.count;
    });
  });
  KeyMap merged;
  for (const KeyMap& part : parts) {
    for (const auto& [key, acc] : part) {
      Acc& dst = merged[key];
      dst.sum.add(acc.sum);
      dst.count += acc.count;
    }
  }
  NormDistribution dist;
  dist.m = m;
  long long prev_key = 0;
  KahanSum run_sum;
  std::uint64_t run_count = 0;
  auto flush = [&] {
    if (run_count > 0) dist.buckets.push_back({run_sum.value() / static_cast<double>(run_count), run_count});
    run_sum = KahanSum{};
    run_count = 0;
  };
  for (const auto& [key, acc] : merged) {
    if (run_count > 0 && key - prev_key > 2) flush();
    run_sum.add(acc.sum);
    run_count += acc.count;
    prev_key = key;
  }
  flush();
  return dist;
}

bool is_complete_bipartite_or_empty(const Graph& g) {
  const int n = g.order();
  const std::uint64_t all = VertexSet::full(n).bits();
  // side A holds vertex 0 and its non-neighbours, side B its neighbours
  const std::uint64_t b_side = g.row(0);
  const std::uint64_t a_side = all & ~b_side;
  for (int v = 0; v < n; ++v) {
    const bool in_a = (a_side >> v) & 1U;
    const std::uint64_t want = in_a ? b_side : a_side;
    if (g.row(v) != want) return false;
  }
  return true;
}

bool attains_bound(const Graph& g, int m) {
  if (m < 2 || m > g.order()) {
    throw std::out_of_range("attains_bound needs 2 <= m <= n (got m=" + std::to_string(m) + ")");
  }
  const int n = g.order();
  bool found = false;
  for_each_subset_range(n, m, 0, binomial(n, m), [&](std::uint64_t mask) {
    if (!found && is_complete_bipartite_or_empty(induced(g, VertexSet(mask)))) found = true;
  });
  return found;
}

}  // namespace twograph
