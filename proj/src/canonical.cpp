#include "twograph/canonical.hpp"

#include <algorithm>
#include <array>
#include <climits>
#include <cstring>
#include <numeric>

namespace twograph {

namespace {

using Rows = std::array<std::uint64_t, kMaxVertices>;
using Perm = std::array<std::uint8_t, kMaxVertices>;

constexpr int kNoUnwind = INT_MAX;

// Trace prefix of a node relative to the current best leaf's trace.
enum class Rel { less, equal, greater };
constexpr std::size_t kMaxGenerators = 256;

std::uint64_t mix(std::uint64_t h, std::uint64_t x) {
  std::uint64_t z = h ^ (x + 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Ordered partition of the vertex set; cells[0..ncells) are disjoint masks.
struct Partition {
  int ncells = 0;
  std::array<std::uint64_t, kMaxVertices> cells{};
};

// Refines p to the coarsest equitable partition below it, splitting each cell
// by neighbor counts into splitter cells (pieces ordered by ascending count).
// The returned trace hashes every split event and depends only on structure.
std::uint64_t refine(const Graph& g, Partition& p, std::uint64_t first_splitter) {
  std::array<std::uint64_t, 4 * kMaxVertices> queue;
  std::size_t head = 0;
  std::size_t tail = 0;
  queue[tail++] = first_splitter;

  std::array<int, kMaxVertices> count{};
  std::array<std::uint64_t, kMaxVertices + 1> groups{};
  std::uint64_t trace = 0x2545f4914f6cdd1dULL;

  while (head < tail) {
    const std::uint64_t w = queue[head++];
    for (int ci = 0; ci < p.ncells; ++ci) {
      const std::uint64_t c = p.cells[static_cast<std::size_t>(ci)];
      if ((c & (c - 1)) == 0) continue;
      int lo = kMaxVertices + 1;
      int hi = -1;
      for (std::uint64_t b = c; b != 0; b &= b - 1) {
        int v = std::countr_zero(b);
        int k = std::popcount(g.row(v) & w);
        count[static_cast<std::size_t>(v)] = k;
        lo = std::min(lo, k);
        hi = std::max(hi, k);
      }
      if (lo == hi) continue;
      for (int k = lo; k <= hi; ++k) groups[static_cast<std::size_t>(k)] = 0;
      for (std::uint64_t b = c; b != 0; b &= b - 1) {
        int v = std::countr_zero(b);
        groups[static_cast<std::size_t>(count[static_cast<std::size_t>(v)])] |= std::uint64_t{1} << v;
      }
      std::array<std::uint64_t, kMaxVertices> pieces;
      int np = 0;
      trace = mix(trace, static_cast<std::uint64_t>(ci));
      for (int k = lo; k <= hi; ++k) {
        std::uint64_t piece = groups[static_cast<std::size_t>(k)];
        if (piece == 0) continue;
        pieces[static_cast<std::size_t>(np++)] = piece;
        trace = mix(trace, (static_cast<std::uint64_t>(k) << 8) | static_cast<std::uint64_t>(std::popcount(piece)));
      }
      // make room for np-1 new cells after ci
      std::memmove(&p.cells[static_cast<std::size_t>(ci + np)], &p.cells[static_cast<std::size_t>(ci + 1)],
                   sizeof(std::uint64_t) * static_cast<std::size_t>(p.ncells - ci - 1));
      for (int k = 0; k < np; ++k) {
        p.cells[static_cast<std::size_t>(ci + k)] = pieces[static_cast<std::size_t>(k)];
        queue[tail++] = pieces[static_cast<std::size_t>(k)];
      }
      p.ncells += np - 1;
      ci += np - 1;
    }
  }
  return mix(trace, static_cast<std::uint64_t>(p.ncells));
}

class CanonSearch {
 public:
  explicit CanonSearch(const Graph& g) : g_(g), n_(g.order()) {}

  CanonicalLabeling run() {
    Partition root;
    root.ncells = 1;
    root.cells[0] = VertexSet::full(n_).bits();
    trace_[0] = refine(g_, root, root.cells[0]);
    dfs(root, 0, Rel::equal, /*eq_first=*/true);

    CanonicalLabeling out;
    out.graph = Graph::from_rows(n_, std::span<const std::uint64_t>(best_rows_.data(), static_cast<std::size_t>(n_)));
    out.order.assign(best_lab_.begin(), best_lab_.begin() + n_);
    return out;
  }

 private:
  // Returns the depth to unwind to, or kNoUnwind.
  int dfs(const Partition& p, int depth, Rel rel, bool eq_first) {
    if (p.ncells == n_) return leaf(p, depth, rel, eq_first);

    int target = -1;
    int target_size = INT_MAX;
    for (int ci = 0; ci < p.ncells; ++ci) {
      int size = std::popcount(p.cells[static_cast<std::size_t>(ci)]);
      if (size > 1 && size < target_size) {
        target = ci;
        target_size = size;
      }
    }
    const std::uint64_t cell = p.cells[static_cast<std::size_t>(target)];

    std::uint64_t explored = 0;
    for (std::uint64_t b = cell; b != 0; b &= b - 1) {
      const int v = std::countr_zero(b);
      if (explored != 0 && in_orbit_of(v, explored, depth)) continue;
      explored |= std::uint64_t{1} << v;

      Partition child = p;
      std::memmove(&child.cells[static_cast<std::size_t>(target + 2)], &child.cells[static_cast<std::size_t>(target + 1)],
                   sizeof(std::uint64_t) * static_cast<std::size_t>(p.ncells - target - 1));
      child.cells[static_cast<std::size_t>(target)] = std::uint64_t{1} << v;
      child.cells[static_cast<std::size_t>(target + 1)] = cell & ~(std::uint64_t{1} << v);
      child.ncells = p.ncells + 1;
      const std::uint64_t t = mix(refine(g_, child, std::uint64_t{1} << v), static_cast<std::uint64_t>(target));

      path_[static_cast<std::size_t>(depth)] = v;
      trace_[static_cast<std::size_t>(depth + 1)] = t;

      Rel child_rel = rel;
      if (have_best_ && rel == Rel::equal) {
        const std::size_t d = static_cast<std::size_t>(depth + 1);
        if (d >= best_depth_plus_one_ || t > best_trace_[d]) {
          child_rel = Rel::greater;
        } else if (t < best_trace_[d]) {
          child_rel = Rel::less;
        }
      }
      const bool first_pending = !have_first_;
      const bool child_eq_first = first_pending || (eq_first && static_cast<std::size_t>(depth + 1) < first_depth_plus_one_ &&
                                                    t == first_trace_[static_cast<std::size_t>(depth + 1)]);
      if (child_rel == Rel::greater && !child_eq_first) continue;

      const std::uint64_t best_version = best_version_;
      const int r = dfs(child, depth + 1, child_rel, child_eq_first);
      if (best_version_ != best_version) rel = Rel::equal;  // the new best lies below this node
      if (r < depth) return r;
    }
    return kNoUnwind;
  }

  int leaf(const Partition& p, int depth, Rel rel, bool eq_first) {
    Perm lab{};
    std::array<int, kMaxVertices> pos{};
    for (int i = 0; i < n_; ++i) {
      int v = std::countr_zero(p.cells[static_cast<std::size_t>(i)]);
      lab[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(v);
      pos[static_cast<std::size_t>(v)] = i;
    }
    Rows rows{};
    for (int i = 0; i < n_; ++i) {
      std::uint64_t r = g_.row(lab[static_cast<std::size_t>(i)]);
      std::uint64_t out = 0;
      for (; r != 0; r &= r - 1) out |= std::uint64_t{1} << pos[static_cast<std::size_t>(std::countr_zero(r))];
      rows[static_cast<std::size_t>(i)] = out;
    }

    if (!have_first_) {
      have_first_ = true;
      first_rows_ = rows;
      first_lab_ = lab;
      first_path_ = path_;
      first_depth_plus_one_ = static_cast<std::size_t>(depth + 1);
      first_trace_.assign(trace_.begin(), trace_.begin() + depth + 1);
      set_best(rows, lab, depth);
      return kNoUnwind;
    }

    if (eq_first && same_rows(rows, first_rows_)) {
      if (int k = record_automorphism(lab, first_lab_, first_path_, depth); k != kNoUnwind) return k;
    }

    if (rel == Rel::less) {
      set_best(rows, lab, depth);
      return kNoUnwind;
    }
    if (rel == Rel::greater) return kNoUnwind;
    if (static_cast<std::size_t>(depth + 1) != best_depth_plus_one_) return kNoUnwind;
    const int c = compare_rows(rows, best_rows_);
    if (c < 0) {
      set_best(rows, lab, depth);
    } else if (c == 0) {
      return record_automorphism(lab, best_lab_, best_path_, depth);
    }
    return kNoUnwind;
  }

  bool same_rows(const Rows& a, const Rows& b) const { return compare_rows(a, b) == 0; }

  int compare_rows(const Rows& a, const Rows& b) const {
    for (int i = 0; i < n_; ++i) {
      if (a[static_cast<std::size_t>(i)] != b[static_cast<std::size_t>(i)]) {
        return a[static_cast<std::size_t>(i)] < b[static_cast<std::size_t>(i)] ? -1 : 1;
      }
    }
    return 0;
  }

  void set_best(const Rows& rows, const Perm& lab, int depth) {
    have_best_ = true;
    best_rows_ = rows;
    best_lab_ = lab;
    best_path_ = path_;
    best_depth_plus_one_ = static_cast<std::size_t>(depth + 1);
    best_trace_.assign(trace_.begin(), trace_.begin() + depth + 1);
    ++best_version_;
  }

  // lab and target_lab give the same relabeled graph, so v -> target at equal
  // positions is an automorphism. Unwinds to where the two paths diverge when
  // the automorphism carries the current path onto the other one.
  int record_automorphism(const Perm& lab, const Perm& target_lab, const std::array<int, kMaxVertices>& target_path,
                          int depth) {
    Perm gamma{};
    for (int i = 0; i < n_; ++i) gamma[lab[static_cast<std::size_t>(i)]] = target_lab[static_cast<std::size_t>(i)];
    bool identity = true;
    for (int v = 0; v < n_; ++v) identity = identity && gamma[static_cast<std::size_t>(v)] == v;
    if (identity) return kNoUnwind;
    if (generators_.size() < kMaxGenerators) generators_.push_back(gamma);

    int diverge = 0;
    while (diverge < depth && path_[static_cast<std::size_t>(diverge)] == target_path[static_cast<std::size_t>(diverge)]) {
      ++diverge;
    }
    for (int d = 0; d < depth; ++d) {
      if (gamma[static_cast<std::size_t>(path_[static_cast<std::size_t>(d)])] != target_path[static_cast<std::size_t>(d)]) {
        return kNoUnwind;
      }
    }
    return diverge;
  }

  // Orbits of the group generated by stored automorphisms that fix the first
  // `depth` individualized vertices.
  bool in_orbit_of(int v, std::uint64_t explored, int depth) {
    std::array<int, kMaxVertices> parent;
    std::iota(parent.begin(), parent.begin() + n_, 0);
    auto find = [&](int x) {
      while (parent[static_cast<std::size_t>(x)] != x) {
        parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        x = parent[static_cast<std::size_t>(x)];
      }
      return x;
    };
    bool any = false;
    for (const Perm& gamma : generators_) {
      bool fixes = true;
      for (int d = 0; d < depth && fixes; ++d) {
        int w = path_[static_cast<std::size_t>(d)];
        fixes = gamma[static_cast<std::size_t>(w)] == w;
      }
      if (!fixes) continue;
      any = true;
      for (int x = 0; x < n_; ++x) {
        int a = find(x);
        int b = find(gamma[static_cast<std::size_t>(x)]);
        if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
      }
    }
    if (!any) return false;
    const int root = find(v);
    for (std::uint64_t b = explored; b != 0; b &= b - 1) {
      if (find(std::countr_zero(b)) == root) return true;
    }
    return false;
  }

  const Graph& g_;
  const int n_;

  std::array<std::uint64_t, kMaxVertices + 1> trace_{};
  std::array<int, kMaxVertices> path_{};

  bool have_first_ = false;
  Rows first_rows_{};
  Perm first_lab_{};
  std::array<int, kMaxVertices> first_path_{};
  std::vector<std::uint64_t> first_trace_;
  std::size_t first_depth_plus_one_ = 0;

  bool have_best_ = false;
  Rows best_rows_{};
  Perm best_lab_{};
  std::array<int, kMaxVertices> best_path_{};
  std::vector<std::uint64_t> best_trace_;
  std::size_t best_depth_plus_one_ = 0;
  std::uint64_t best_version_ = 0;

  std::vector<Perm> generators_;
};

}  // namespace

std::string ClassCertificate::hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (std::uint8_t b : bytes) {
    out += kDigits[b >> 4];
    out += kDigits[b & 0xF];
  }
  return out;
}

std::vector<std::uint8_t> encode_upper_triangle(const Graph& g) {
  const int n = g.order();
  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
  std::vector<std::uint8_t> out(2 + (bits + 7) / 8, 0);
  out[0] = static_cast<std::uint8_t>(n >> 8);
  out[1] = static_cast<std::uint8_t>(n & 0xFF);
  std::size_t k = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++k) {
      if (g.adjacent(i, j)) out[2 + k / 8] |= static_cast<std::uint8_t>(0x80U >> (k % 8));
    }
  }
  return out;
}

CanonicalLabeling canonical_labeling(const Graph& g) { return CanonSearch(g).run(); }

ClassCertificate canonical_form(const Graph& g) {
  return {CertificateKind::isomorphism, encode_upper_triangle(canonical_labeling(g).graph)};
}

bool is_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
  return canonical_form(g) == canonical_form(h);
}

bool is_euler(const Graph& g) {
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) % 2 != 0) return false;
  }
  return true;
}

Graph euler_representative(const Graph& g) {
  if (g.order() % 2 == 0) {
    throw std::invalid_argument("Euler representative needs an odd vertex count, got " +
                                std::to_string(g.order()));
  }
  VertexSet even;
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) % 2 == 0) even.insert(v);
  }
  return switch_graph(g, even);
}

Graph descendant(const Graph& g, int v) {
  if (g.order() < 2) throw std::invalid_argument("descendant needs at least 2 vertices");
  if (v < 0 || v >= g.order()) throw std::invalid_argument("descendant vertex out of range");
  return delete_vertex(switch_graph(g, g.neighbors(v)), v);
}

ClassCertificate class_certificate(const Graph& g) {
  const int n = g.order();
  if (n < 2) throw std::invalid_argument("class certificate needs at least 2 vertices");
  std::vector<std::uint8_t> least;
  for (int v = 0; v < n; ++v) {
    auto bytes = canonical_form(descendant(g, v)).bytes;
    if (v == 0 || bytes < least) least = std::move(bytes);
  }
  ClassCertificate cert{CertificateKind::switching_equivalence, {}};
  cert.bytes.reserve(2 + least.size());
  cert.bytes.push_back(static_cast<std::uint8_t>(n >> 8));
  cert.bytes.push_back(static_cast<std::uint8_t>(n & 0xFF));
  cert.bytes.insert(cert.bytes.end(), least.begin(), least.end());
  return cert;
}

bool are_switching_equivalent(const Graph& g, const Graph& h) {
  if (g.order() != h.order()) return false;
  if (g.order() < 2) return true;
  return class_certificate(g) == class_certificate(h);
}

}  // namespace twograph
