#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "twograph/graph.hpp"

namespace twograph {

enum class CertificateKind : std::uint8_t { isomorphism, switching_equivalence };

/// Canonical byte string for a graph class.
///
/// Layout: 2-byte big-endian vertex count, then the upper triangle of the
/// canonically labeled adjacency matrix, row-major ((0,1), (0,2), ...,
/// (1,2), ...), packed MSB-first and zero-padded to a byte boundary. A
/// switching-equivalence certificate is the parent's 2-byte n followed by the
/// lexicographically least descendant certificate.
struct ClassCertificate {
  CertificateKind kind = CertificateKind::isomorphism;
  std::vector<std::uint8_t> bytes;

  std::string hex() const;

  friend bool operator==(const ClassCertificate&, const ClassCertificate&) = default;
  friend std::strong_ordering operator<=>(const ClassCertificate& a, const ClassCertificate& b) {
    if (auto c = a.kind <=> b.kind; c != 0) return c;
    return a.bytes <=> b.bytes;
  }
};

/// Canonical relabeling of g together with the labeling used.
struct CanonicalLabeling {
  Graph graph;              // g relabeled canonically
  std::vector<int> order;   // order[i] = vertex of g placed at canonical position i
};

/// Individualization-refinement search: equitable partition refinement with
/// degree-count splitting, branching on the first smallest non-singleton cell,
/// automorphism pruning and refinement-trace ordering.
CanonicalLabeling canonical_labeling(const Graph& g);

ClassCertificate canonical_form(const Graph& g);
bool is_isomorphic(const Graph& g, const Graph& h);

/// Switch on the even-degree vertices; the result has all degrees even.
/// Throws for even n.
Graph euler_representative(const Graph& g);
bool is_euler(const Graph& g);

/// Switch on N(v) so v becomes isolated, then delete v. Throws for n = 1.
Graph descendant(const Graph& g, int v);

/// Complete switching-equivalence invariant; throws for n < 2.
ClassCertificate class_certificate(const Graph& g);
bool are_switching_equivalent(const Graph& g, const Graph& h);

/// Raw certificate bytes for an already canonically labeled graph.
std::vector<std::uint8_t> encode_upper_triangle(const Graph& g);

}  // namespace twograph
