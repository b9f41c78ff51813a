#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "support/oracles.hpp"
#include "twograph/canonical.hpp"
#include "twograph/figures.hpp"
#include "twograph/graph.hpp"

using namespace twograph;

namespace {

Graph graph_from_code(int n, std::uint64_t code) {
  Graph g(n);
  int bit = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++bit) {
      if ((code >> bit) & 1U) g.add_edge(i, j);
    }
  }
  return g;
}

}  // namespace

TEST_CASE("certificate layout") {
  // n = 3, K3: 2-byte count then bits 111 padded
  const ClassCertificate c = canonical_form(complete_graph(3));
  REQUIRE(c.bytes.size() == 3);
  CHECK(c.bytes[0] == 0);
  CHECK(c.bytes[1] == 3);
  CHECK(c.bytes[2] == 0xE0);
  CHECK(c.hex() == "0003e0");
  CHECK(c.kind == CertificateKind::isomorphism);
  CHECK(canonical_form(Graph(1)).bytes == std::vector<std::uint8_t>{0, 1});
  CHECK(class_certificate(empty_graph(4)).kind == CertificateKind::switching_equivalence);
}

TEST_CASE("canonical labeling is a relabeling of the input") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 300; ++i) {
    const int n = 1 + static_cast<int>(rng() % 20);
    const Graph g = oracle::random_graph(n, rng);
    const CanonicalLabeling lab = canonical_labeling(g);
    REQUIRE(static_cast<int>(lab.order.size()) == n);
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        CHECK(lab.graph.adjacent(a, b) ==
              g.adjacent(lab.order[static_cast<std::size_t>(a)], lab.order[static_cast<std::size_t>(b)]));
      }
    }
  }
}

TEST_CASE("canonical form is invariant under relabeling") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 500; ++i) {
    const int n = 1 + static_cast<int>(rng() % 24);
    const Graph g = oracle::random_graph(n, rng);
    const Graph h = relabel(g, oracle::random_permutation(n, rng));
    CHECK(canonical_form(g) == canonical_form(h));
    CHECK(canonical_labeling(g).graph == canonical_labeling(h).graph);
  }
  // highly symmetric inputs stress automorphism pruning
  for (const Graph& g : {cycle_graph(24), complete_graph(30), empty_graph(30), graph_of_seidel(paley_conference_seidel(25)),
                         graph_of_seidel(paley_conference_seidel(29))}) {
    const Graph h = relabel(g, oracle::random_permutation(g.order(), rng));
    CHECK(canonical_form(g) == canonical_form(h));
  }
}

TEST_CASE("exhaustive agreement with the brute-force oracle for n <= 5") {
  for (int n = 1; n <= 5; ++n) {
    CAPTURE(n);
    std::map<std::vector<std::uint8_t>, ClassCertificate> seen;
    std::set<ClassCertificate> certs;
    const std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
    for (std::uint64_t code = 0; code < total; ++code) {
      const Graph g = graph_from_code(n, code);
      const auto brute = oracle::brute_canonical(g);
      const ClassCertificate cert = canonical_form(g);
      auto [it, inserted] = seen.try_emplace(brute, cert);
      if (!inserted) CHECK(it->second == cert);
      certs.insert(cert);
    }
    CHECK(seen.size() == certs.size());
  }
}

TEST_CASE("random pairs agree with the brute-force oracle for n = 6, 7") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 300; ++i) {
    const int n = 6 + static_cast<int>(rng() % 2);
    // sparse-ish edits of one graph give many isomorphic and near-miss pairs
    const Graph g = oracle::random_graph(n, rng);
    Graph h = relabel(g, oracle::random_permutation(n, rng));
    if (rng() % 2) {
      const int u = static_cast<int>(rng() % n);
      int v = static_cast<int>(rng() % n);
      if (u == v) v = (v + 1) % n;
      h.toggle_edge(u, v);
    }
    const bool oracle_iso = oracle::brute_canonical(g) == oracle::brute_canonical(h);
    CHECK(is_isomorphic(g, h) == oracle_iso);
  }
}

TEST_CASE("class counts for small n") {
  const std::pair<int, std::size_t> expected[] = {{3, 2}, {4, 3}, {5, 7}, {6, 16}};
  for (auto [n, classes] : expected) {
    CAPTURE(n);
    std::set<ClassCertificate> iso;
    std::set<ClassCertificate> cls;
    const std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
    for (std::uint64_t code = 0; code < total; ++code) {
      const Graph g = graph_from_code(n, code);
      iso.insert(canonical_form(g));
      cls.insert(class_certificate(g));
    }
    CHECK(cls.size() == classes);
  }
}

TEST_CASE("class certificate agrees with brute-force switching classes (n <= 5)") {
  for (int n = 2; n <= 5; ++n) {
    CAPTURE(n);
    std::map<std::vector<std::uint8_t>, ClassCertificate> seen;
    std::set<ClassCertificate> certs;
    const std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
    for (std::uint64_t code = 0; code < total; ++code) {
      const Graph g = graph_from_code(n, code);
      const auto brute = oracle::brute_class_form(g);
      const ClassCertificate cert = class_certificate(g);
      auto [it, inserted] = seen.try_emplace(brute, cert);
      if (!inserted) CHECK(it->second == cert);
      certs.insert(cert);
    }
    CHECK(seen.size() == certs.size());
  }
}

TEST_CASE("three-vertex example classes") {
  const Graph& x1 = named_figure("x1-3");
  const Graph& x2 = named_figure("x2-3");
  const Graph& x3 = named_figure("x3-3");
  const Graph& x4 = named_figure("x4-3");
  CHECK(are_switching_equivalent(x1, x2));
  CHECK(are_switching_equivalent(x3, x4));
  CHECK_FALSE(are_switching_equivalent(x1, x3));
  CHECK_FALSE(is_isomorphic(x1, x2));
}

TEST_CASE("four-vertex example classes") {
  std::set<ClassCertificate> cls;
  std::set<ClassCertificate> iso;
  for (int i = 1; i <= 6; ++i) {
    const Graph& g = named_figure("x" + std::to_string(i) + "-4");
    cls.insert(class_certificate(g));
    iso.insert(canonical_form(g));
    iso.insert(canonical_form(complement(g)));
  }
  CHECK(iso.size() == 11);
  CHECK(cls.size() == 3);
  CHECK(are_switching_equivalent(named_figure("x2-4"), named_figure("x3-4")));
  CHECK_FALSE(are_switching_equivalent(named_figure("x1-4"), named_figure("x2-4")));
  CHECK_FALSE(are_switching_equivalent(named_figure("x2-4"), named_figure("x4-4")));
}

TEST_CASE("the six-vertex pair lies in different classes") {
  const Graph& x1 = named_figure("x1-6");
  const Graph& x2 = named_figure("x2-6");
  CHECK_FALSE(are_switching_equivalent(x1, x2));
  CHECK(class_certificate(x1) != class_certificate(x2));
}

TEST_CASE("Euler representatives and descendants") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 300; ++i) {
    const int n = 2 * static_cast<int>(rng() % 6) + 1;
    const Graph g = oracle::random_graph(n, rng);
    const Graph e = euler_representative(g);
    CHECK(is_euler(e));
    CHECK(are_switching_equivalent(g, e));
    if (is_euler(g)) CHECK(e == g);
  }
  CHECK_THROWS_AS(euler_representative(empty_graph(4)), std::invalid_argument);

  const Graph& x1 = named_figure("x1-6");
  for (int v = 0; v < 6; ++v) {
    const Graph d = descendant(x1, v);
    CHECK(d.order() == 5);
    // isolating v then deleting it equals deleting v from the switched graph
    CHECK(d == delete_vertex(switch_graph(x1, x1.neighbors(v)), v));
  }
  CHECK_THROWS_AS(descendant(Graph(1), 0), std::invalid_argument);
  CHECK_THROWS_AS(class_certificate(Graph(1)), std::invalid_argument);
}
