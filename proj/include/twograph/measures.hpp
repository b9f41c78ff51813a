#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "twograph/graph.hpp"

namespace twograph {

enum class NormFamily { infinity, one, p };

struct NormSpec {
  NormFamily family = NormFamily::infinity;
  double p = 1.0;  // used by NormFamily::p only

  static NormSpec infinity() { return {NormFamily::infinity, 0.0}; }
  static NormSpec one() { return {NormFamily::one, 1.0}; }
  static NormSpec power(double p) { return {NormFamily::p, p}; }
};

/// "inf", "one", "p=<value>" (also "1", "infinity", "p<value>").
NormSpec parse_norm_spec(const std::string& text);
std::string norm_spec_name(const NormSpec& spec);

/// Reductions over every m-subset T of lambda_max(diag*I + coef*S[T]).
struct SubsetSweep {
  std::uint64_t count = 0;
  double max = 0.0;
  double mean = 0.0;
  double power_mean = 0.0;  // only when p > 0 was requested
};

/// Requires coef > 0 (so lambda_max shifts affinely). p <= 0 skips the power mean.
SubsetSweep sweep_shifted_blocks(const Graph& g, int m, double diag, double coef, double p = 0.0,
                                 int threads = 1);

/// 1/(n-1), or 0 for a single vertex.
double shift_constant(int n);

/// lambda_max(I + S[subset]/(n-1)). Throws for an empty subset.
double subset_norm(const Graph& g, VertexSet subset);

double e_infinity(const Graph& g, int m, int threads = 1);
double e_one(const Graph& g, int m, int threads = 1);
/// Power mean of the subset norms; throws for p < 1.
double e_p(const Graph& g, int m, double p, int threads = 1);
double e_measure(const Graph& g, int m, const NormSpec& spec, int threads = 1);

/// The bound 1 + (m-1)/(n-1).
double norm_upper_bound(int n, int m);

struct NormProfile {
  int n = 0;
  NormSpec spec;
  double c = 0.0;
  std::vector<double> values;  // values[m-1] = e_m for m = 1..n

  double at(int m) const { return values.at(static_cast<std::size_t>(m - 1)); }
};

NormProfile norm_profile(const Graph& g, const NormSpec& spec, int threads = 1);

/// Largest coordinate gap between two profiles of equal length.
double profile_separation(const NormProfile& a, const NormProfile& b);

struct NormBucket {
  double value;  // mean of the norms merged into the bucket
  std::uint64_t count;
};

struct NormDistribution {
  int m = 0;
  std::vector<NormBucket> buckets;  // ascending by value

  std::uint64_t total() const;
  double mean() const;
};

/// Buckets on a 1e-9 grid, merging neighbours within 2e-9.
NormDistribution norm_distribution(const Graph& g, int m, int threads = 1);

/// True iff some m-subset induces a complete bipartite (or empty) graph.
/// Purely combinatorial; 2 <= m <= n.
bool attains_bound(const Graph& g, int m);

/// Whether g is complete bipartite, one side possibly empty.
bool is_complete_bipartite_or_empty(const Graph& g);

}  // namespace twograph
