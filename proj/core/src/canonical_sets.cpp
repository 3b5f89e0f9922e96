#include "kchord/canonical_sets.hpp"

#include <algorithm>

namespace kchord {

ChordUniverse ChordUniverse::build(int n) {
  ChordUniverse U;
  U.n = n;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) {
      int g = cyclic_gap(n, u, v);
      if (g >= 2 && g <= n - 2) U.chords.push_back(Chord{u, v});
    }
  // already lexicographic by construction
  U.chord_map.assign(2 * n, std::vector<int>(U.chords.size()));
  for (int g = 0; g < 2 * n; ++g)
    for (int id = 0; id < U.size(); ++id) {
      int img = U.id_of(apply_dihedral(n, g, U.chords[id]));
      U.chord_map[g][id] = img;
    }
  return U;
}

int ChordUniverse::id_of(const Chord& c) const {
  auto it = std::lower_bound(chords.begin(), chords.end(), c);
  if (it == chords.end() || !(*it == c)) return -1;
  return static_cast<int>(it - chords.begin());
}

namespace {

constexpr int kMaxSetSize = 64;

// image of ids under map g, insertion-sorted into buf; returns <0, 0, >0 as in
// lexicographic comparison image vs ids.
int compare_image(const ChordUniverse& U, std::span<const int> ids, int g, int* buf) {
  const auto& perm = U.chord_map[g];
  int p = static_cast<int>(ids.size());
  for (int i = 0; i < p; ++i) {
    int x = perm[ids[i]];
    int j = i;
    while (j > 0 && buf[j - 1] > x) {
      buf[j] = buf[j - 1];
      --j;
    }
    buf[j] = x;
  }
  for (int i = 0; i < p; ++i) {
    if (buf[i] != ids[i]) return buf[i] < ids[i] ? -1 : 1;
  }
  return 0;
}

}  // namespace

bool is_canonical_id_set(const ChordUniverse& U, std::span<const int> ids) {
  int buf[kMaxSetSize];
  for (int g = 1; g < 2 * U.n; ++g)
    if (compare_image(U, ids, g, buf) < 0) return false;
  return true;
}

int stabilizer_size_of_id_set(const ChordUniverse& U, std::span<const int> ids) {
  int buf[kMaxSetSize];
  int stab = 1;  // identity
  for (int g = 1; g < 2 * U.n; ++g)
    if (compare_image(U, ids, g, buf) == 0) ++stab;
  return stab;
}

namespace {

Walk dfs(const ChordUniverse& U, int p, std::vector<int>& ids, int next_id,
         const std::function<Walk(std::span<const int>)>& visit) {
  if (static_cast<int>(ids.size()) == p) return visit(ids);
  int m = U.size();
  int remaining = p - static_cast<int>(ids.size());
  for (int id = next_id; id + remaining <= m; ++id) {
    ids.push_back(id);
    if (is_canonical_id_set(U, ids)) {
      if (dfs(U, p, ids, id + 1, visit) == Walk::Stop) {
        ids.pop_back();
        return Walk::Stop;
      }
    }
    ids.pop_back();
  }
  return Walk::Continue;
}

}  // namespace

Walk for_each_canonical_set(const ChordUniverse& U, int p,
                            const std::function<Walk(std::span<const int>)>& visit) {
  if (p == 0) return visit(std::span<const int>{});
  std::vector<int> ids;
  ids.reserve(p);
  return dfs(U, p, ids, 0, visit);
}

Walk for_each_canonical_set_in_branch(const ChordUniverse& U, int p, int first_id,
                                      const std::function<Walk(std::span<const int>)>& visit) {
  if (p == 0) return Walk::Continue;
  if (first_id + p > U.size()) return Walk::Continue;
  std::vector<int> ids;
  ids.reserve(p);
  ids.push_back(first_id);
  if (!is_canonical_id_set(U, ids)) return Walk::Continue;
  return dfs(U, p, ids, first_id + 1, visit);
}

ChordDiagram diagram_from_ids(const ChordUniverse& U, std::span<const int> ids) {
  std::vector<Chord> chords;
  chords.reserve(ids.size());
  for (int id : ids) chords.push_back(U.chords[id]);
  return ChordDiagram{U.n, std::move(chords)};
}

}  // namespace kchord
