#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <random>
#include <set>

#include "support/oracles.hpp"
#include "twograph/canonical.hpp"
#include "twograph/census.hpp"
#include "twograph/figures.hpp"
#include "twograph/graph.hpp"

using namespace twograph;

TEST_CASE("isomorphism class counts") {
  const std::uint64_t expected[] = {1, 2, 4, 11, 34, 156};
  for (int n = 1; n <= 6; ++n) CHECK(count_isomorphism_classes(n) == expected[n - 1]);
  CHECK_THROWS_AS(count_isomorphism_classes(8), std::out_of_range);
  for (int n = 1; n <= 6; ++n) CHECK(isomorphism_class_representatives(n).size() == expected[n - 1]);
}

TEST_CASE("switching class counts") {
  CHECK(switching_class_count(3) == 2);
  CHECK(switching_class_count(5) == 64);
  CHECK(switching_class_count(8) == (std::uint64_t{1} << 21));
  CHECK(switching_class_count(12) == (std::uint64_t{1} << 55));
  CHECK_THROWS(switching_class_count(14));
}

TEST_CASE("class representatives for small n") {
  const std::size_t expected[] = {2, 3, 7, 16};
  for (int n = 3; n <= 6; ++n) {
    CAPTURE(n);
    const ClassTable t = enumerate_class_representatives(n);
    CHECK(t.n == n);
    CHECK(t.switching_equiv_classes() == expected[n - 3]);
    CHECK(t.switching_classes == switching_class_count(n));
    std::uint64_t found = 0;
    for (const ClassEntry& e : t.classes) {
      CHECK(e.representative.degree(0) == 0);
      CHECK(class_certificate(e.representative) == e.certificate);
      found += e.found;
    }
    CHECK(found == (std::uint64_t{1} << ((n - 1) * (n - 2) / 2)));
    CHECK(std::is_sorted(t.classes.begin(), t.classes.end(),
                         [](const ClassEntry& a, const ClassEntry& b) { return a.certificate < b.certificate; }));
  }
  CHECK_THROWS_AS(enumerate_class_representatives(2), std::out_of_range);
  CHECK_THROWS_AS(enumerate_class_representatives(9), std::out_of_range);
}

TEST_CASE("partition property: every labeled graph lands in exactly one class (n <= 6)") {
  for (int n = 3; n <= 6; ++n) {
    CAPTURE(n);
    const ClassTable t = enumerate_class_representatives(n);
    std::vector<std::uint64_t> hits(t.classes.size(), 0);
    const std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
    bool all_found = true;
    for (std::uint64_t code = 0; code < total; ++code) {
      Graph g(n);
      int bit = 0;
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j, ++bit) {
          if ((code >> bit) & 1U) g.add_edge(i, j);
        }
      }
      const int idx = t.find(g);
      if (idx < 0) {
        all_found = false;
        continue;
      }
      ++hits[static_cast<std::size_t>(idx)];
    }
    CHECK(all_found);
    for (std::uint64_t h : hits) CHECK(h > 0);
  }
}

TEST_CASE("odd n: classes match isomorphism classes of Euler graphs") {
  for (int n : {3, 5, 7}) {
    CAPTURE(n);
    CHECK(count_euler_isomorphism_classes(n) == enumerate_class_representatives(n).switching_equiv_classes());
  }
}

TEST_CASE("census is independent of the thread count") {
  const ClassTable a = enumerate_class_representatives(6, 1);
  const ClassTable b = enumerate_class_representatives(6, 3);
  REQUIRE(a.classes.size() == b.classes.size());
  for (std::size_t i = 0; i < a.classes.size(); ++i) {
    CHECK(a.classes[i].certificate == b.classes[i].certificate);
    CHECK(a.classes[i].found == b.classes[i].found);
  }
  CHECK(a.iso_classes == b.iso_classes);
}

TEST_CASE("class tables round-trip through TSV") {
  const auto dir = std::filesystem::temp_directory_path() / "twograph_census_test";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  const ClassTable t = enumerate_class_representatives(5);
  write_class_table(t, dir / "census_5.tsv");
  const ClassTable r = read_class_table(dir / "census_5.tsv");
  CHECK(r.n == 5);
  CHECK(r.iso_classes == t.iso_classes);
  CHECK(r.switching_classes == t.switching_classes);
  REQUIRE(r.classes.size() == t.classes.size());
  for (std::size_t i = 0; i < t.classes.size(); ++i) {
    CHECK(r.classes[i].certificate == t.classes[i].certificate);
    CHECK(r.classes[i].representative == t.classes[i].representative);
    CHECK(r.classes[i].found == t.classes[i].found);
  }
  const ClassTable l = load_or_enumerate(5, dir);
  CHECK(l.classes.size() == 7);
  CHECK_THROWS(read_class_table(dir / "missing.tsv"));
  std::filesystem::remove_all(dir);
}

TEST_CASE("spectral determination for n <= 7") {
  for (int n = 3; n <= 7; ++n) {
    CAPTURE(n);
    CHECK(verify_spectral_determination(enumerate_class_representatives(n)).empty());
  }
}

TEST_CASE("infinity-norm separation") {
  for (int n = 3; n <= 5; ++n) {
    CAPTURE(n);
    const ProfileVerdict v = verify_infinity_norm_separation(enumerate_class_representatives(n));
    CHECK(v.holds);
    CHECK(v.collisions.empty());
  }
  const ClassTable t6 = enumerate_class_representatives(6);
  const ProfileVerdict v6 = verify_infinity_norm_separation(t6);
  CHECK_FALSE(v6.holds);
  const int a = t6.find(named_figure("x1-6"));
  const int b = t6.find(named_figure("x2-6"));
  REQUIRE(a >= 0);
  REQUIRE(b >= 0);
  const bool witnessed = std::any_of(v6.collisions.begin(), v6.collisions.end(), [&](const ClassPair& p) {
    return (p.a == a && p.b == b) || (p.a == b && p.b == a);
  });
  CHECK(witnessed);
}

TEST_CASE("one-norm conjecture for n <= 6") {
  for (int n = 3; n <= 6; ++n) {
    CAPTURE(n);
    const ProfileVerdict v = verify_one_norm_conjecture(enumerate_class_representatives(n));
    CHECK(v.holds);
    CHECK(v.min_separation > 1e-6);
  }
}

TEST_CASE("deck conjecture for n = 4..6") {
  for (int n = 4; n <= 6; ++n) {
    CAPTURE(n);
    const DeckVerdict v = verify_deck_conjecture(enumerate_class_representatives(n));
    CHECK(v.holds);
    CHECK(v.collisions.empty());
    CHECK(v.unstable_classes.empty());
    CHECK(v.members_checked > 0);
  }
  CHECK_THROWS_AS(verify_deck_conjecture(enumerate_class_representatives(3)), std::out_of_range);
}
