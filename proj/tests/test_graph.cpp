#include <doctest.h>

#include <random>

#include "support/oracles.hpp"
#include "twograph/graph.hpp"
#include "twograph/io.hpp"
#include "twograph/spectral.hpp"

using namespace twograph;

namespace {

const Graph kX1 = graph_from_edges_1based(6, {{1, 2}, {1, 3}, {2, 4}, {3, 4}});

}  // namespace

TEST_CASE("graph_from_edges builds exactly the listed edges") {
  const Graph e3 = graph_from_edges(3, {});
  CHECK(e3.order() == 3);
  CHECK(e3.edge_count() == 0);

  const Graph x2 = graph_from_edges_1based(3, {{1, 2}, {1, 3}});
  CHECK(x2.adjacent(0, 1));
  CHECK(x2.adjacent(0, 2));
  CHECK_FALSE(x2.adjacent(1, 2));
  CHECK(x2.edge_count() == 2);

  const Graph dup = graph_from_edges(3, {{0, 1}, {1, 0}, {0, 1}});
  CHECK(dup.edge_count() == 1);

  CHECK_THROWS_AS(graph_from_edges_1based(3, {{1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(graph_from_edges(3, {{0, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(0), std::invalid_argument);
  CHECK_THROWS_AS(Graph(65), std::invalid_argument);
}

TEST_CASE("Seidel matrix entries and the inverse map") {
  const SeidelMatrix se = seidel_matrix(empty_graph(3));
  const SeidelMatrix sk = seidel_matrix(complete_graph(3));
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      CHECK(se(i, j) == (i == j ? 0 : 1));
      CHECK(sk(i, j) == (i == j ? 0 : -1));
    }
  }
  const SeidelMatrix s1 = seidel_matrix(graph_from_edges_1based(3, {{1, 2}}));
  CHECK(s1(0, 1) == -1);
  CHECK(s1(0, 2) == 1);
  CHECK(s1(1, 2) == 1);

  CHECK(graph_of_seidel(SeidelMatrix(4, std::vector<int>{0, 1, 1, 1, 1, 0, 1, 1, 1, 1, 0, 1, 1, 1, 1, 0})) == empty_graph(4));
  std::vector<int> ij(25, -1);
  for (int i = 0; i < 5; ++i) ij[static_cast<std::size_t>(i * 5 + i)] = 0;
  CHECK(graph_of_seidel(SeidelMatrix(5, ij)) == complete_graph(5));
  CHECK(graph_of_seidel(seidel_matrix(kX1)) == kX1);

  CHECK_THROWS_AS(SeidelMatrix(2, std::vector<int>{1, 1, 1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(SeidelMatrix(2, std::vector<int>{0, 2, 2, 0}), std::invalid_argument);
  CHECK_THROWS_AS(SeidelMatrix(2, std::vector<int>{0, 1, -1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(SeidelMatrix(2, std::vector<int>{0, 0, 0, 0}), std::invalid_argument);
}

TEST_CASE("switching complements the cut edges") {
  // K3 switched on one vertex leaves the opposite edge
  const Graph sw = switch_graph(complete_graph(3), VertexSet{0});
  CHECK(sw == graph_from_edges(3, {{1, 2}}));
  CHECK(switch_graph(kX1, VertexSet{}) == kX1);

  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const int n = 1 + static_cast<int>(rng() % 12);
    const Graph g = oracle::random_graph(n, rng);
    const VertexSet t = oracle::random_subset(n, rng);
    CHECK(switch_graph(switch_graph(g, t), t) == g);
  }
  CHECK_THROWS_AS(switch_graph(empty_graph(3), VertexSet{3}), std::invalid_argument);
}

TEST_CASE("induced subgraphs relabel in order") {
  CHECK(induced(kX1, VertexSet{0, 4, 5}) == empty_graph(3));
  CHECK(induced(complete_graph(6), VertexSet{1, 3, 4, 5}) == complete_graph(4));
  CHECK(induced(kX1, VertexSet::full(6)) == kX1);
  const Graph sub = induced(kX1, VertexSet{0, 1, 3});
  CHECK(sub == graph_from_edges(3, {{0, 1}, {1, 2}}));
  CHECK_THROWS_AS(induced(kX1, VertexSet{}), std::invalid_argument);
}

TEST_CASE("complement") {
  CHECK(complement(empty_graph(5)) == complete_graph(5));
  CHECK(complement(complement(kX1)) == kX1);
  // triangle plus an isolated vertex goes to the star centred at that vertex
  const Graph x5 = graph_from_edges_1based(4, {{1, 2}, {2, 3}, {3, 1}});
  CHECK(complement(x5) == graph_from_edges_1based(4, {{4, 1}, {4, 2}, {4, 3}}));
}

TEST_CASE("relabel, delete_vertex, add_isolated_vertex") {
  const Graph p3 = path_graph(3);  // 0-1-2
  const std::vector<int> perm{2, 0, 1};
  const Graph r = relabel(p3, perm);
  CHECK(r.adjacent(2, 0));
  CHECK(r.adjacent(0, 1));
  CHECK_FALSE(r.adjacent(2, 1));
  CHECK(delete_vertex(p3, 1) == empty_graph(2));
  const Graph a = add_isolated_vertex(p3);
  CHECK(a.order() == 4);
  CHECK(a.degree(0) == 0);
  CHECK(a.adjacent(1, 2));
  CHECK(cycle_graph(5).edge_count() == 5);
  CHECK_THROWS(cycle_graph(2));
}

TEST_CASE("Paley conference matrices") {
  for (int q : {5, 9, 13, 17, 25, 29}) {
    CAPTURE(q);
    const SeidelMatrix s = paley_conference_seidel(q);
    const int n = q + 1;
    REQUIRE(s.order() == n);
    for (int j = 1; j < n; ++j) CHECK(s(0, j) == 1);
    // S S^T = q I
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      for (int j = 0; j < n && ok; ++j) {
        int dot = 0;
        for (int t = 0; t < n; ++t) dot += s(i, t) * s(j, t);
        ok = dot == (i == j ? q : 0);
      }
    }
    CHECK(ok);
  }
  const Spectrum sp9 = seidel_spectrum(paley_conference_seidel(9));
  const auto c9 = sp9.clusters(1e-6);
  REQUIRE(c9.size() == 2);
  CHECK(c9[0].value == doctest::Approx(3.0).epsilon(1e-10));
  CHECK(c9[0].multiplicity == 5);
  CHECK(c9[1].value == doctest::Approx(-3.0).epsilon(1e-10));

  const auto c25 = seidel_spectrum(paley_conference_seidel(25)).clusters(1e-6);
  REQUIRE(c25.size() == 2);
  CHECK(c25[0].multiplicity == 13);
  CHECK(c25[0].value == doctest::Approx(5.0).epsilon(1e-10));
  CHECK(c25[1].value == doctest::Approx(-5.0).epsilon(1e-10));

  CHECK_THROWS_AS(paley_conference_seidel(7), std::invalid_argument);
  CHECK_THROWS_AS(paley_conference_seidel(49), std::invalid_argument);
}

TEST_CASE("file formats round-trip bit-exactly") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    const int n = 1 + static_cast<int>(rng() % 30);
    const Graph g = oracle::random_graph(n, rng);
    for (GraphFormat f : {GraphFormat::edge_list, GraphFormat::adjacency, GraphFormat::seidel, GraphFormat::graph6}) {
      CAPTURE(format_name(f));
      const std::string text = format_graph(g, f);
      CHECK(parse_graph(text, f) == g);
      CHECK(format_graph(parse_graph(text, f), f) == text);
    }
    CHECK(parse_graph_literal(format_graph_literal(g)) == g);
  }
}

TEST_CASE("edge-list parsing details and errors") {
  const Graph g = parse_graph("# X1\n6\n1 2\n1 3  # comment\n2 4\n3 4\n", GraphFormat::edge_list);
  CHECK(g == kX1);
  CHECK(parse_graph_literal("n=6;12,13,24,34") == kX1);
  CHECK(parse_graph_literal("n=6;1-2,1-3,2-4,3-4") == kX1);
  CHECK(parse_graph_literal("n=4") == empty_graph(4));

  auto kind_of = [](std::string_view text, GraphFormat f) {
    try {
      parse_graph(text, f);
    } catch (const ParseError& e) {
      return e.kind();
    }
    FAIL("expected a parse error");
    return ParseErrorKind::bad_token;
  };
  CHECK(kind_of("3\n1 1\n", GraphFormat::edge_list) == ParseErrorKind::loop);
  CHECK(kind_of("3\n1 4\n", GraphFormat::edge_list) == ParseErrorKind::out_of_range);
  CHECK(kind_of("3 3\n", GraphFormat::edge_list) == ParseErrorKind::malformed_header);
  CHECK(kind_of("3\n1 x\n", GraphFormat::edge_list) == ParseErrorKind::bad_token);
  CHECK(kind_of("0 1\n0 0\n", GraphFormat::adjacency) == ParseErrorKind::asymmetric);
  CHECK(kind_of("1 1\n1 0\n", GraphFormat::adjacency) == ParseErrorKind::bad_diagonal);
  CHECK(kind_of("0 1\n1\n", GraphFormat::adjacency) == ParseErrorKind::wrong_row_length);
  CHECK(kind_of("0 1\n", GraphFormat::adjacency) == ParseErrorKind::wrong_row_count);
  CHECK(kind_of("0 2\n2 0\n", GraphFormat::seidel) == ParseErrorKind::bad_entry);

  try {
    parse_graph("3\n1 2\n2 5\n", GraphFormat::edge_list);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() == 3);
  }
}

TEST_CASE("graph6 matches the reference encoding") {
  // the path 1-2-3 is "Bg" and the empty 1-vertex graph is "@"
  CHECK(format_graph(graph_from_edges_1based(3, {{1, 2}, {2, 3}}), GraphFormat::graph6) == "Bg\n");
  CHECK(format_graph(Graph(1), GraphFormat::graph6) == "@\n");
  CHECK(parse_graph("Bw\n", GraphFormat::graph6) == complete_graph(3));
  CHECK_THROWS_AS(parse_graph("B~\n", GraphFormat::graph6), ParseError);  // padding bits set
}

TEST_CASE("format detection") {
  CHECK(detect_format("3\n1 2\n") == GraphFormat::edge_list);
  CHECK(detect_format("Bw\n") == GraphFormat::graph6);
  CHECK(detect_format("0 -1\n-1 0\n") == GraphFormat::seidel);
  CHECK_THROWS_AS(detect_format("0 1\n1 0\n"), ParseError);
}
