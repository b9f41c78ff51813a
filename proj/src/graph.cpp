#include "twograph/graph.hpp"

#include <algorithm>
#include <string>

namespace twograph {

namespace {

void check_vertex(int n, int v) {
  if (v < 0 || v >= n) {
    throw std::invalid_argument("vertex " + std::to_string(v) + " out of range for n=" +
                                std::to_string(n));
  }
}

}  // namespace

VertexSet::VertexSet(std::initializer_list<int> vertices) {
  for (int v : vertices) {
    if (v < 0 || v >= kMaxVertices) throw std::invalid_argument("vertex out of range");
    insert(v);
  }
}

std::vector<int> VertexSet::members() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
  return out;
}

Graph::Graph(int n) : n_(n) {
  if (n < 1 || n > kMaxVertices) {
    throw std::invalid_argument("vertex count must be in 1.." + std::to_string(kMaxVertices) +
                                ", got " + std::to_string(n));
  }
}

Graph Graph::from_rows(int n, std::span<const std::uint64_t> rows) {
  Graph g(n);
  if (static_cast<int>(rows.size()) != n) throw std::invalid_argument("row count mismatch");
  const std::uint64_t all = VertexSet::full(n).bits();
  for (int v = 0; v < n; ++v) {
    std::uint64_t r = rows[static_cast<std::size_t>(v)];
    if ((r & ~all) != 0 || ((r >> v) & 1U)) throw std::invalid_argument("bad adjacency row");
    for (std::uint64_t b = r; b != 0; b &= b - 1) {
      if (((rows[static_cast<std::size_t>(std::countr_zero(b))] >> v) & 1U) == 0) {
        throw std::invalid_argument("adjacency rows are not symmetric");
      }
    }
    g.rows_[static_cast<std::size_t>(v)] = r;
  }
  return g;
}

int Graph::edge_count() const {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += std::popcount(rows_[v]);
  return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u) {
    std::uint64_t higher = rows_[u] & ~((std::uint64_t{2} << u) - 1);
    for (; higher != 0; higher &= higher - 1) out.emplace_back(u, std::countr_zero(higher));
  }
  return out;
}

void Graph::add_edge(int u, int v) {
  check_vertex(n_, u);
  check_vertex(n_, v);
  if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
  rows_[u] |= std::uint64_t{1} << v;
  rows_[v] |= std::uint64_t{1} << u;
}

void Graph::remove_edge(int u, int v) {
  check_vertex(n_, u);
  check_vertex(n_, v);
  rows_[u] &= ~(std::uint64_t{1} << v);
  rows_[v] &= ~(std::uint64_t{1} << u);
}

void Graph::toggle_edge(int u, int v) {
  check_vertex(n_, u);
  check_vertex(n_, v);
  if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
  rows_[u] ^= std::uint64_t{1} << v;
  rows_[v] ^= std::uint64_t{1} << u;
}

bool operator==(const Graph& a, const Graph& b) {
  if (a.n_ != b.n_) return false;
  return std::equal(a.rows_.begin(), a.rows_.begin() + a.n_, b.rows_.begin());
}

SeidelMatrix::SeidelMatrix(int n, std::vector<int> entries) : n_(n), entries_(std::move(entries)) {
  if (n < 1 || n > kMaxVertices) throw std::invalid_argument("Seidel matrix order out of range");
  if (entries_.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {
    throw std::invalid_argument("Seidel matrix needs n*n entries");
  }
  for (int i = 0; i < n; ++i) {
    if ((*this)(i, i) != 0) {
      throw std::invalid_argument("Seidel matrix diagonal entry (" + std::to_string(i + 1) +
                                  ") is nonzero");
    }
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      int e = (*this)(i, j);
      if (e != 1 && e != -1) {
        throw std::invalid_argument("Seidel matrix entry (" + std::to_string(i + 1) + "," +
                                    std::to_string(j + 1) + ") is not +-1");
      }
      if (e != (*this)(j, i)) {
        throw std::invalid_argument("Seidel matrix is not symmetric at (" + std::to_string(i + 1) +
                                    "," + std::to_string(j + 1) + ")");
      }
    }
  }
}

Graph graph_from_edges(int n, std::span<const std::pair<int, int>> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

Graph graph_from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
  return graph_from_edges(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
}

Graph graph_from_edges_1based(int n, std::initializer_list<std::pair<int, int>> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u - 1, v - 1);
  return g;
}

SeidelMatrix seidel_matrix(const Graph& g) {
  const int n = g.order();
  std::vector<int> e(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j) e[static_cast<std::size_t>(i * n + j)] = g.adjacent(i, j) ? -1 : 1;
    }
  }
  return SeidelMatrix(n, std::move(e));
}

Graph graph_of_seidel(const SeidelMatrix& s) {
  Graph g(s.order());
  for (int i = 0; i < s.order(); ++i) {
    for (int j = i + 1; j < s.order(); ++j) {
      if (s(i, j) == -1) g.add_edge(i, j);
    }
  }
  return g;
}

Graph switch_graph(const Graph& g, SwitchingSet t) {
  const int n = g.order();
  const std::uint64_t all = VertexSet::full(n).bits();
  const std::uint64_t in = t.bits() & all;
  if (in != t.bits()) throw std::invalid_argument("switching set exceeds the vertex set");
  const std::uint64_t out = all & ~in;
  std::array<std::uint64_t, kMaxVertices> rows{};
  for (int v = 0; v < n; ++v) {
    std::uint64_t flip = ((in >> v) & 1U) ? out : in;
    rows[static_cast<std::size_t>(v)] = g.row(v) ^ flip;
  }
  return Graph::from_rows(n, std::span<const std::uint64_t>(rows.data(), static_cast<std::size_t>(n)));
}

Graph induced(const Graph& g, VertexSet subset) {
  if (subset.empty()) throw std::invalid_argument("induced subgraph needs a nonempty subset");
  if ((subset.bits() & ~VertexSet::full(g.order()).bits()) != 0) {
    throw std::invalid_argument("subset exceeds the vertex set");
  }
  const auto verts = subset.members();
  const int m = static_cast<int>(verts.size());
  std::array<std::uint64_t, kMaxVertices> rows{};
  for (int i = 0; i < m; ++i) {
    const std::uint64_t r = g.row(verts[static_cast<std::size_t>(i)]);
    std::uint64_t packed = 0;
    for (int j = 0; j < m; ++j) {
      if ((r >> verts[static_cast<std::size_t>(j)]) & 1U) packed |= std::uint64_t{1} << j;
    }
    rows[static_cast<std::size_t>(i)] = packed;
  }
  return Graph::from_rows(m, std::span<const std::uint64_t>(rows.data(), static_cast<std::size_t>(m)));
}

Graph delete_vertex(const Graph& g, int v) {
  check_vertex(g.order(), v);
  VertexSet rest = VertexSet::full(g.order());
  rest.erase(v);
  return induced(g, rest);
}

Graph complement(const Graph& g) {
  const int n = g.order();
  Graph h(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!g.adjacent(u, v)) h.add_edge(u, v);
    }
  }
  return h;
}

Graph relabel(const Graph& g, std::span<const int> perm) {
  const int n = g.order();
  if (static_cast<int>(perm.size()) != n) throw std::invalid_argument("permutation size mismatch");
  Graph h(n);
  for (auto [u, v] : g.edges()) {
    h.add_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
  }
  return h;
}

Graph add_isolated_vertex(const Graph& h) {
  Graph g(h.order() + 1);
  for (auto [u, v] : h.edges()) g.add_edge(u + 1, v + 1);
  return g;
}

Graph empty_graph(int n) { return Graph(n); }

Graph complete_graph(int n) { return complement(Graph(n)); }

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  Graph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph path_graph(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

namespace {

// GF(p) or GF(p^2) = GF(p)[x]/(x^2 - r); elements a + b*x stored as index a + p*b.
struct SmallField {
  int p;
  int degree;
  int nonresidue;  // r, only for degree 2

  int size() const { return degree == 1 ? p : p * p; }

  int sub(int x, int y) const {
    int a = ((x % p) - (y % p) + p) % p;
    int b = degree == 1 ? 0 : (((x / p) - (y / p)) % p + p) % p;
    return a + p * b;
  }

  int mul(int x, int y) const {
    if (degree == 1) return (x * y) % p;
    int a1 = x % p, b1 = x / p, a2 = y % p, b2 = y / p;
    int a = (a1 * a2 + nonresidue * b1 * b2) % p;
    int b = (a1 * b2 + a2 * b1) % p;
    return a + p * b;
  }
};

}  // namespace

SeidelMatrix paley_conference_seidel(int q) {
  SmallField f{};
  switch (q) {
    case 5:
    case 13:
    case 17:
    case 29:
      f = {q, 1, 0};
      break;
    case 9:
      f = {3, 2, 2};  // x^2 = -1
      break;
    case 25:
      f = {5, 2, 2};  // x^2 = 2
      break;
    default:
      throw std::invalid_argument("paley: q=" + std::to_string(q) +
                                  " unsupported (need q in {5,9,13,17,25,29}, q = 1 mod 4)");
  }
  const int size = f.size();
  std::vector<bool> square(static_cast<std::size_t>(size), false);
  for (int x = 1; x < size; ++x) square[static_cast<std::size_t>(f.mul(x, x))] = true;

  const int n = q + 1;
  std::vector<int> e(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  auto at = [&](int i, int j) -> int& { return e[static_cast<std::size_t>(i * n + j)]; };
  for (int i = 1; i < n; ++i) {
    at(0, i) = 1;
    at(i, 0) = 1;
  }
  for (int a = 0; a < q; ++a) {
    for (int b = 0; b < q; ++b) {
      if (a == b) continue;
      at(a + 1, b + 1) = square[static_cast<std::size_t>(f.sub(a, b))] ? 1 : -1;
    }
  }
  return SeidelMatrix(n, std::move(e));
}

}  // namespace twograph
