#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "twograph/canonical.hpp"
#include "twograph/graph.hpp"

namespace twograph {

inline constexpr int kMaxIsoCensus = 7;
inline constexpr int kMaxClassCensus = 8;

/// Distinct canonical forms over all 2^C(n,2) labeled graphs. 1 <= n <= 7;
/// larger n is refused (2^28 labeled graphs at n = 8).
std::uint64_t count_isomorphism_classes(int n, int threads = 1);

/// One canonical graph per isomorphism class, grown vertex by vertex (every
/// graph on n vertices is some class on n-1 vertices plus a vertex with an
/// arbitrary neighbourhood). Sorted by certificate. 1 <= n <= 8.
std::vector<Graph> isomorphism_class_representatives(int n, int threads = 1);

/// 2^((n-1)(n-2)/2); throws when it does not fit in 64 bits.
std::uint64_t switching_class_count(int n);

struct ClassEntry {
  ClassCertificate certificate;
  Graph representative;  // vertex 0 isolated
  std::uint64_t found = 0;  // labeled (n-1)-vertex candidates landing in this class
};

struct ClassTable {
  int n = 0;
  std::vector<ClassEntry> classes;  // sorted by certificate
  std::uint64_t iso_classes = 0;
  std::uint64_t switching_classes = 0;

  std::size_t switching_equiv_classes() const { return classes.size(); }
  /// Index of the class containing g, or -1.
  int find(const Graph& g) const;
};

/// Every class has a member with vertex 0 isolated, so the candidates are the
/// labeled graphs on n-1 vertices. Class certificates are memoized on the
/// candidate's canonical form. 3 <= n <= 8.
ClassTable enumerate_class_representatives(int n, int threads = 1);

/// Tab-separated: certificate hex, representative literal, found count.
void write_class_table(const ClassTable& table, const std::filesystem::path& path);
ClassTable read_class_table(const std::filesystem::path& path);
/// Loads census_<n>.tsv from dir when present and consistent, otherwise
/// enumerates (and writes the file when dir is non-empty).
ClassTable load_or_enumerate(int n, const std::filesystem::path& dir, int threads = 1);

/// Isomorphism classes of graphs with all degrees even.
std::uint64_t count_euler_isomorphism_classes(int n, int threads = 1);

struct ClassPair {
  int a;
  int b;
  double gap;  // largest profile coordinate gap (0 when not applicable)
};

/// Groups of at least two classes sharing a Seidel spectrum (within tol).
std::vector<std::vector<int>> verify_spectral_determination(const ClassTable& table, double tol = 1e-8);

struct ProfileVerdict {
  bool holds = true;
  std::vector<ClassPair> collisions;  // class pairs whose profiles agree within 1e-6
  double min_separation = 0.0;        // smallest pairwise largest-gap
  ClassPair closest{-1, -1, 0.0};
};

/// e^inf profile over m = 3..n; holds iff it separates every class pair.
ProfileVerdict verify_infinity_norm_separation(const ClassTable& table, int threads = 1);
/// e^1 profile over m = 1..n.
ProfileVerdict verify_one_norm_conjecture(const ClassTable& table, int threads = 1);

struct DeckVerdict {
  bool holds = true;
  std::vector<ClassPair> collisions;    // distinct classes with switching-equivalent decks
  std::vector<int> unstable_classes;    // classes whose deck changed under switching/relabeling
  int members_checked = 0;
};

/// Deck certificate multisets must be pairwise distinct across classes and
/// unchanged on random members of each class (seeded, deterministic).
DeckVerdict verify_deck_conjecture(const ClassTable& table, int samples_per_class = 4,
                                   std::uint64_t seed = 0x5eed, int threads = 1);

}  // namespace twograph
