#include <doctest.h>

#include <random>

#include "support/oracles.hpp"
#include "twograph/canonical.hpp"
#include "twograph/decks.hpp"
#include "twograph/figures.hpp"
#include "twograph/graph.hpp"

using namespace twograph;

TEST_CASE("deck cards are the vertex-deleted subgraphs") {
  const Deck d = deck(empty_graph(3));
  CHECK(d.n == 3);
  REQUIRE(d.cards.size() == 3);
  for (const Graph& c : d.cards) CHECK(c == empty_graph(2));

  std::mt19937_64 rng(79);
  for (int t = 0; t < 100; ++t) {
    const int n = 2 + static_cast<int>(rng() % 10);
    const Graph g = oracle::random_graph(n, rng);
    const Deck dg = deck(g);
    REQUIRE(static_cast<int>(dg.cards.size()) == n);
    for (int v = 0; v < n; ++v) CHECK(dg.cards[static_cast<std::size_t>(v)] == delete_vertex(g, v));
  }
  CHECK_THROWS_AS(deck(Graph(1)), std::invalid_argument);
}

TEST_CASE("six-vertex pair decks") {
  const Graph& x1 = named_figure("x1-6");
  const Graph& x2 = named_figure("x2-6");
  const auto types = deck_isomorphism_types(x1);
  REQUIRE(types.size() == 2);
  std::vector<int> mult{types[0].multiplicity, types[1].multiplicity};
  std::sort(mult.begin(), mult.end());
  CHECK(mult == std::vector<int>{2, 4});
  CHECK(deck_isomorphism_types(x2).size() == 4);
  CHECK(deck_class_count(x1) == 1);
  CHECK_FALSE(decks_isomorphic(x1, x2));
  CHECK_FALSE(decks_switching_equivalent(x1, x2));
}

TEST_CASE("eight-vertex cospectral decks are pairwise distinct") {
  const Graph& y1 = named_figure("y1-8");
  const Graph& y2 = named_figure("y2-8");
  const Graph& y3 = named_figure("y3-8");
  CHECK_FALSE(decks_switching_equivalent(y1, y2));
  CHECK_FALSE(decks_switching_equivalent(y1, y3));
  CHECK_FALSE(decks_switching_equivalent(y2, y3));
}

TEST_CASE("deck relations under relabeling and switching") {
  CHECK_FALSE(decks_isomorphic(empty_graph(3), complete_graph(3)));
  CHECK_FALSE(decks_isomorphic(empty_graph(3), empty_graph(4)));
  CHECK_FALSE(decks_switching_equivalent(empty_graph(3), empty_graph(4)));
  CHECK(deck_class_count(empty_graph(7)) == 1);
  CHECK_THROWS_AS(deck_class_count(empty_graph(2)), std::invalid_argument);

  std::mt19937_64 rng(83);
  for (int t = 0; t < 150; ++t) {
    const int n = 3 + static_cast<int>(rng() % 7);
    const Graph g = oracle::random_graph(n, rng);
    const Graph r = relabel(g, oracle::random_permutation(n, rng));
    const Graph s = switch_graph(g, oracle::random_subset(n, rng));
    CHECK(decks_isomorphic(g, r));
    CHECK(decks_switching_equivalent(g, r));
    CHECK(decks_switching_equivalent(g, s));
    CHECK(decks_switching_equivalent(s, g));
    const Graph h = oracle::random_graph(n, rng);
    if (decks_isomorphic(g, h)) CHECK(decks_switching_equivalent(g, h));
    // the card of the switched graph is the restricted switch of the card
    const int v = static_cast<int>(rng() % n);
    CHECK(are_switching_equivalent(delete_vertex(g, v), delete_vertex(s, v)));
  }
}

TEST_CASE("odd cards: class certificates agree with Euler canonical forms") {
  std::mt19937_64 rng(89);
  for (int t = 0; t < 100; ++t) {
    const int n = 2 * (2 + static_cast<int>(rng() % 3));  // parents on 4, 6, 8 vertices
    const Graph g = oracle::random_graph(n, rng);
    const Graph h = oracle::random_graph(n, rng);
    const Graph cg = delete_vertex(g, 0);
    const Graph ch = relabel(switch_graph(delete_vertex(h, 0), oracle::random_subset(n - 1, rng)), oracle::random_permutation(n - 1, rng));
    const bool by_cert = class_certificate(cg) == class_certificate(ch);
    const bool by_euler = canonical_form(euler_representative(cg)) == canonical_form(euler_representative(ch));
    CHECK(by_cert == by_euler);
  }
}
