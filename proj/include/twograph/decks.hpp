#pragma once

#include <cstdint>
#include <vector>

#include "twograph/canonical.hpp"
#include "twograph/graph.hpp"

namespace twograph {

/// The n vertex-deleted subgraphs; cards[v] = g with vertex v removed.
struct Deck {
  int n = 0;
  std::vector<Graph> cards;
};

Deck deck(const Graph& g);

struct CardGroup {
  ClassCertificate certificate;
  int multiplicity;
  int example_vertex;  // a deleted vertex that produces this card type
};

/// Sorted multiset of card isomorphism certificates, grouped.
std::vector<CardGroup> deck_isomorphism_types(const Graph& g, int threads = 1);
/// Sorted multiset of card switching-equivalence certificates, grouped.
/// Needs n >= 3.
std::vector<CardGroup> deck_switching_types(const Graph& g, int threads = 1);

bool decks_isomorphic(const Graph& g, const Graph& h, int threads = 1);
bool decks_switching_equivalent(const Graph& g, const Graph& h, int threads = 1);

/// Number of distinct switching-equivalence classes among the cards (n >= 3).
int deck_class_count(const Graph& g, int threads = 1);

}  // namespace twograph
