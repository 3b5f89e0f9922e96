#include <random>

#include "doctest.h"
#include "kchord/canonical_sets.hpp"
#include "kchord/spectrum.hpp"
#include "oracles.hpp"

using namespace kchord;

TEST_SUITE_BEGIN("spectrum");

TEST_CASE("bare cycle has exactly one cycle") {
  auto s = enumerate_cycles(make_diagram(6, {}));
  CHECK(s.total_cycles == 1);
  CHECK(s.by_chord_count == std::map<int, std::set<int>>{{0, {6}}});
}

TEST_CASE("two chords at a shared vertex: the worked spectrum") {
  auto s = enumerate_cycles(parse_chords("6: 1-3,1-4"));
  CHECK(s.total_cycles == 6);
  CHECK(s.lengths(0) == std::set<int>{6});
  CHECK(s.lengths(1) == std::set<int>{3, 4, 5});
  CHECK(s.lengths(2) == std::set<int>{3});
}

TEST_CASE("two crossing chords reach the cycle-count ceiling") {
  auto s = enumerate_cycles(parse_chords("6: 1-4,2-5"));
  CHECK(s.total_cycles == 7);  // = 2^{2+1}-1
}

TEST_CASE("cycles through all chords of a subset") {
  auto d = parse_chords("6: 1-3,1-4");
  CHECK(cycles_through_all(d, {{1, 3}, {1, 4}}) == 1);  // adjacent chords
  CHECK(cycles_through_all(parse_chords("6: 1-4,2-5"), {{1, 4}, {2, 5}}) == 2);
  CHECK(cycles_through_all(parse_chords("8: 1-4,5-8"), {{1, 4}, {5, 8}}) == 1);
  CHECK_THROWS_AS(cycles_through_all(d, {{2, 5}}), error);  // not a subset
}

TEST_CASE("spectrum is invariant under all dihedral maps") {
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 6 + static_cast<int>(rng() % 5);
    ChordUniverse U = ChordUniverse::build(n);
    std::vector<Chord> chords;
    for (int i = 0; i < 1 + static_cast<int>(rng() % 4); ++i)
      chords.push_back(U.chords[rng() % U.size()]);
    ChordDiagram d = make_diagram(n, chords);
    d.chords.erase(std::unique(d.chords.begin(), d.chords.end()), d.chords.end());

    auto base = enumerate_cycles(d);
    for (int g = 0; g < 2 * n; ++g) CHECK(enumerate_cycles(apply_dihedral(d, g)) == base);
  }
}

TEST_CASE("single chord realizes a complementary length pair") {
  for (int n = 6; n <= 12; ++n)
    for (int dist = 2; dist <= n / 2; ++dist) {
      auto s = enumerate_cycles(make_diagram(n, {{1, 1 + dist}}));
      std::set<int> expect{dist + 1, n - dist + 1};
      CHECK(s.lengths(1) == expect);
    }
}

TEST_CASE("cycle counts sit inside the sandwich on every small diagram") {
  for (int n : {6, 7, 8}) {
    ChordUniverse U = ChordUniverse::build(n);
    for (int p = 0; p <= 3; ++p) {
      for_each_canonical_set(U, p, [&](std::span<const int> ids) {
        auto s = enumerate_cycles(diagram_from_ids(U, ids));
        auto [lo, hi] = std::pair<long long, long long>{(p + 2) * (p + 1) / 2,
                                                        (1ll << (p + 1)) - 1};
        CHECK(s.total_cycles >= lo);
        CHECK(s.total_cycles <= hi);
        return Walk::Continue;
      });
    }
  }
}

TEST_CASE("k-stratum helper agrees with the full spectrum") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 6 + static_cast<int>(rng() % 4);
    ChordUniverse U = ChordUniverse::build(n);
    std::vector<Chord> chords;
    for (int i = 0; i < 1 + static_cast<int>(rng() % 4); ++i)
      chords.push_back(U.chords[rng() % U.size()]);
    ChordDiagram d = make_diagram(n, chords);
    d.chords.erase(std::unique(d.chords.begin(), d.chords.end()), d.chords.end());

    auto s = enumerate_cycles(d);
    for (int k = 0; k <= static_cast<int>(d.chords.size()); ++k)
      CHECK(k_chord_lengths(d, k) == s.lengths(k));
  }
}

TEST_CASE("completion enumerator matches the DFS oracle on small diagrams") {
  // spot grid here; the acceptance suite runs the full n <= 8, p <= 4 sweep
  for (int n : {6, 7}) {
    ChordUniverse U = ChordUniverse::build(n);
    for (int p = 0; p <= 3; ++p) {
      for_each_canonical_set(U, p, [&](std::span<const int> ids) {
        ChordDiagram d = diagram_from_ids(U, ids);
        CycleTally ours = enumerate_cycles_tally(d);
        oracle::Tally ref = oracle::dfs_cycle_tally(d);
        CHECK(ours.spectrum.total_cycles == ref.total);
        CHECK(ours.count_by_chords_and_length == ref.by_chords_and_length);
        return Walk::Continue;
      });
    }
  }
}

TEST_CASE("chord limit is enforced") {
  std::vector<Chord> chords;
  for (int i = 1; i <= 10; ++i) chords.push_back(make_chord(i, i + 2));
  ChordDiagram d = make_diagram(30, chords);
  CHECK_THROWS_AS(enumerate_cycles(d, 5), error);
  CHECK_NOTHROW(enumerate_cycles(d, 10));

  chords.clear();
  for (int i = 1; i <= 25; ++i) chords.push_back(make_chord(i, i + 2));
  CHECK_THROWS_AS(enumerate_cycles(make_diagram(60, chords)), error);  // default cap 24
}

TEST_SUITE_END();
