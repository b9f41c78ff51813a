#include "twograph/decks.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "twograph/subsets.hpp"

namespace twograph {

namespace {

template <class CertFn>
std::vector<CardGroup> group_cards(const Graph& g, int threads, CertFn cert) {
  const Deck d = deck(g);
  std::vector<ClassCertificate> certs(d.cards.size());
  parallel_chunks(d.cards.size(), threads, [&](int, std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t v = begin; v < end; ++v) certs[v] = cert(d.cards[v]);
  });
  std::vector<int> order(certs.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return certs[static_cast<std::size_t>(a)] < certs[static_cast<std::size_t>(b)];
  });
  std::vector<CardGroup> groups;
  for (int v : order) {
    const ClassCertificate& c = certs[static_cast<std::size_t>(v)];
    if (!groups.empty() && groups.back().certificate == c) {
      ++groups.back().multiplicity;
    } else {
      groups.push_back({c, 1, v});
    }
  }
  return groups;
}

bool same_multiset(const std::vector<CardGroup>& a, const std::vector<CardGroup>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].certificate != b[i].certificate || a[i].multiplicity != b[i].multiplicity) return false;
  }
  return true;
}

}  // namespace

Deck deck(const Graph& g) {
  if (g.order() < 2) throw std::invalid_argument("a deck needs at least 2 vertices");
  Deck d;
  d.n = g.order();
  d.cards.reserve(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) d.cards.push_back(delete_vertex(g, v));
  return d;
}

std::vector<CardGroup> deck_isomorphism_types(const Graph& g, int threads) {
  return group_cards(g, threads, [](const Graph& card) { return canonical_form(card); });
}

std::vector<CardGroup> deck_switching_types(const Graph& g, int threads) {
  if (g.order() < 3) {
    throw std::invalid_argument("switching classes of cards need n >= 3 (got n=" + std::to_string(g.order()) + ")");
  }
  return group_cards(g, threads, [](const Graph& card) { return class_certificate(card); });
}

bool decks_isomorphic(const Graph& g, const Graph& h, int threads) {
  if (g.order() != h.order()) return false;
  return same_multiset(deck_isomorphism_types(g, threads), deck_isomorphism_types(h, threads));
}

bool decks_switching_equivalent(const Graph& g, const Graph& h, int threads) {
  if (g.order() != h.order()) return false;
  return same_multiset(deck_switching_types(g, threads), deck_switching_types(h, threads));
}

int deck_class_count(const Graph& g, int threads) {
  return static_cast<int>(deck_switching_types(g, threads).size());
}

}  // namespace twograph
