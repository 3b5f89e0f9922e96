#include "kchord/constructions.hpp"

#include <algorithm>
#include <functional>
#include <vector>

#include "kchord/search.hpp"

namespace kchord {

ChordDiagram example1(int n, int stage) {
  if (n != 6) throw error(errc::invalid_argument, "example1 is the n=6 family");
  std::vector<Chord> chords = {{1, 3}, {1, 4}};
  switch (stage) {
    case 1:
      break;
    case 2:
      chords.push_back({2, 6});
      break;
    case 3:
      chords.insert(chords.end(), {{2, 6}, {2, 4}, {4, 6}});
      break;
    case 4: {
      SearchOutcome r = search_c(6, 4);
      return *r.witness;  // 6-chord minimal witness; no explicit set is prescribed
    }
    default:
      throw error(errc::bad_stage, "stage must be 1..4");
  }
  return make_diagram(n, std::move(chords));
}

namespace {

// Hamilton cycle in the chord graph of C_n (edges = all valid chords),
// anchored at vertex 1, lexicographically first, direction-canonical.
std::vector<int> chord_hamilton_order(int n) {
  std::vector<int> order{1};
  std::vector<char> used(n + 1, 0);
  used[1] = 1;
  auto is_chord = [n](int u, int v) {
    int g = cyclic_gap(n, u, v);
    return g >= 2 && g <= n - 2;
  };
  std::function<bool()> rec = [&]() -> bool {
    if (static_cast<int>(order.size()) == n)
      return is_chord(order.back(), 1) && order[1] < order.back();
    for (int v = 2; v <= n; ++v) {
      if (used[v] || !is_chord(order.back(), v)) continue;
      used[v] = 1;
      order.push_back(v);
      if (rec()) return true;
      order.pop_back();
      used[v] = 0;
    }
    return false;
  };
  if (!rec()) throw error(errc::invalid_argument, "no all-chord Hamilton cycle at this n");
  return order;
}

}  // namespace

ChordDiagram all_chord_hamilton(int n) {
  if (n < 6) throw error(errc::n_too_small, "need n >= 6");
  std::vector<int> order = chord_hamilton_order(n);
  std::vector<Chord> chords;
  chords.reserve(n);
  for (int i = 0; i < n; ++i) chords.push_back(make_chord(order[i], order[(i + 1) % n]));
  return make_diagram(n, std::move(chords));
}

ChordDiagram lemma3_construction(int n) {
  if (n < 7) throw error(errc::n_too_small, "need n >= 7");
  int base = n - 1;
  ChordDiagram ham = all_chord_hamilton(base);

  // chords at the split vertex v=1 of C_{n-1}: x (smaller partner), y (larger)
  std::vector<int> partners;
  std::vector<Chord> rest;
  for (const auto& c : ham.chords) {
    if (c.u == 1)
      partners.push_back(c.v);
    else
      rest.push_back(c);
  }
  int x = std::min(partners[0], partners[1]);
  int y = std::max(partners[0], partners[1]);

  // split: old 1 becomes the adjacent pair {1, n} on C_n (1 keeps the old
  // clockwise neighbour 2, n keeps the old counter-clockwise neighbour n-1);
  // x reattaches to 1, y to n, and the extra chord x-n closes the short cycle.
  std::vector<Chord> chords = std::move(rest);
  chords.push_back(make_chord(1, x));
  chords.push_back(make_chord(y, n));
  chords.push_back(make_chord(x, n));
  return make_diagram(n, std::move(chords));
}

ChordDiagram noncrossing_family(int n, int p) {
  if (p < 1) throw error(errc::invalid_argument, "p >= 1 required");
  if (n < 2 * p + 2) throw error(errc::n_too_small_for_family, "need n >= 2p+2");
  // nested chords: any >= 3 of them admit no joint cycle (both arc
  // assignments split), so subsets contribute 1 + 2p + C(p,2) cycles total.
  // A chain like (1,3),(3,5),... is also non-crossing but overshoots: its
  // full subsets still complete jointly.
  std::vector<Chord> chords;
  for (int i = 1; i <= p; ++i) chords.push_back({i, 2 * p + 2 - i});
  return make_diagram(n, std::move(chords));
}

ChordDiagram crossing_family(int n, int p) {
  if (p < 2) throw error(errc::invalid_argument, "p >= 2 required");
  if (n < 2 * p) throw error(errc::n_too_small_for_family, "need n >= 2p");
  std::vector<Chord> chords;
  for (int i = 1; i <= p; ++i) chords.push_back({i, i + p});
  return make_diagram(n, std::move(chords));
}

ChordDiagram k1_fan(int n) {
  if (n < 6) throw error(errc::n_too_small, "need n >= 6");
  int count = (n - 2) / 2;  // ceil((n-3)/2)
  std::vector<Chord> chords;
  for (int d = 2; d < 2 + count; ++d) chords.push_back({1, 1 + d});
  return make_diagram(n, std::move(chords));
}

}  // namespace kchord
