#pragma once

// Independent reference implementations used to cross-check the library.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "twograph/graph.hpp"
#include "twograph/spectral.hpp"

namespace oracle {

using twograph::Graph;

/// Uniform random labeled graph on n vertices.
Graph random_graph(int n, std::mt19937_64& rng);
/// Random subset of {0..n-1}; nonempty when asked.
twograph::VertexSet random_subset(int n, std::mt19937_64& rng, bool nonempty = false);
std::vector<int> random_permutation(int n, std::mt19937_64& rng);

/// Lexicographically least upper-triangle string over all n! relabelings.
std::vector<std::uint8_t> brute_canonical(const Graph& g);

/// Eigenvalues (descending) of a small integer symmetric matrix from its
/// exact characteristic polynomial (Faddeev-LeVerrier) and Sturm-sequence
/// bisection. Returns an empty vector when the polynomial has repeated roots.
std::vector<double> charpoly_eigenvalues(const std::vector<std::vector<long long>>& a);

/// lambda_max of the full n x n matrix D (I + S/(n-1)) D with D the 0/1
/// indicator of the subset, by Jacobi.
double full_matrix_subset_norm(const Graph& g, twograph::VertexSet subset);

/// Switching classes by brute force: all 2^n switchings times all n!
/// relabelings, least upper-triangle string.
std::vector<std::uint8_t> brute_class_form(const Graph& g);

}  // namespace oracle
