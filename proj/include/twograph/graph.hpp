#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace twograph {

/// Hard cap on vertex count; rows are single 64-bit words.
inline constexpr int kMaxVertices = 64;

/// A subset of {0..n-1} as a bitmask. Used both for switching sets and for
/// vertex subsets handed to induced() and the norm sweeps.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  VertexSet(std::initializer_list<int> vertices);

  static constexpr VertexSet full(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  void insert(int v) { bits_ |= std::uint64_t{1} << v; }
  void erase(int v) { bits_ &= ~(std::uint64_t{1} << v); }

  /// Members in increasing order.
  std::vector<int> members() const;

  friend constexpr bool operator==(VertexSet a, VertexSet b) = default;

 private:
  std::uint64_t bits_ = 0;
};

using SwitchingSet = VertexSet;

/// Simple undirected graph on vertices 0..n-1.
class Graph {
 public:
  Graph() = default;
  /// Edgeless graph on n vertices; 1 <= n <= kMaxVertices.
  explicit Graph(int n);
  /// Builds from adjacency row masks; throws unless symmetric and loop-free.
  static Graph from_rows(int n, std::span<const std::uint64_t> rows);

  int order() const { return n_; }
  bool adjacent(int u, int v) const { return (rows_[u] >> v) & 1U; }
  std::uint64_t row(int v) const { return rows_[v]; }
  int degree(int v) const { return std::popcount(rows_[v]); }
  VertexSet neighbors(int v) const { return VertexSet(rows_[v]); }
  int edge_count() const;

  /// 0-based pairs (u < v), lexicographic.
  std::vector<std::pair<int, int>> edges() const;

  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  void toggle_edge(int u, int v);

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  int n_ = 0;
  std::array<std::uint64_t, kMaxVertices> rows_{};
};

/// Symmetric {-1,0,+1} matrix with zero diagonal and +-1 off the diagonal.
class SeidelMatrix {
 public:
  SeidelMatrix() = default;
  /// Validates the entries; throws std::invalid_argument on a bad diagonal,
  /// an off-diagonal entry outside {-1,+1}, or asymmetry.
  SeidelMatrix(int n, std::vector<int> entries);

  int order() const { return n_; }
  int operator()(int i, int j) const { return entries_[static_cast<std::size_t>(i * n_ + j)]; }
  std::span<const int> entries() const { return entries_; }

  friend bool operator==(const SeidelMatrix&, const SeidelMatrix&) = default;

 private:
  int n_ = 0;
  std::vector<int> entries_;
};

/// Edges are 0-based. Duplicates collapse; loops and out-of-range vertices throw.
Graph graph_from_edges(int n, std::span<const std::pair<int, int>> edges);
Graph graph_from_edges(int n, std::initializer_list<std::pair<int, int>> edges);
/// Same, but with 1-based labels as printed in figures.
Graph graph_from_edges_1based(int n, std::initializer_list<std::pair<int, int>> edges);

SeidelMatrix seidel_matrix(const Graph& g);
Graph graph_of_seidel(const SeidelMatrix& s);

/// Complements every pair with exactly one endpoint in t.
Graph switch_graph(const Graph& g, SwitchingSet t);
/// Relabels the subset 0..|subset|-1 in increasing order.
Graph induced(const Graph& g, VertexSet subset);
Graph delete_vertex(const Graph& g, int v);
Graph complement(const Graph& g);
/// Vertex i of g becomes perm[i].
Graph relabel(const Graph& g, std::span<const int> perm);
/// Disjoint union of an isolated vertex 0 with h shifted up by one.
Graph add_isolated_vertex(const Graph& h);

Graph empty_graph(int n);
Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);

/// Bordered symmetric conference matrix of order q+1 from the quadratic
/// character of GF(q), q in {5, 9, 13, 17, 25, 29}. GF(9) = GF(3)[x]/(x^2+1),
/// GF(25) = GF(5)[x]/(x^2-2); element a + b*x has core index a + p*b.
SeidelMatrix paley_conference_seidel(int q);

}  // namespace twograph
