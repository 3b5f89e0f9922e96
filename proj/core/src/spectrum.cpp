#include "kchord/spectrum.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace kchord {

namespace {

constexpr int kMaxSubset = 32;
constexpr int kMaxEndpoints = 2 * kMaxSubset;

// At most two ways to close the chord set S into a single cycle: every arc of
// C_n between consecutive chord endpoints is used fully or not at all, each
// endpoint needs 2 - (#incident chords) used arcs beside it, and that
// constraint propagates around the cycle from one free choice. A propagated
// assignment is kept only if chords + used arcs form ONE cycle, not several.
int subset_completions(int n, const Chord* S, int s, int out_len[2]) {
  if (s == 0) {
    out_len[0] = n;
    return 1;  // the base cycle
  }

  int8_t deg[kMaxVertices + 1];
  int idx[kMaxVertices + 1];
  int ep[kMaxEndpoints];

  for (int j = 0; j < s; ++j) deg[S[j].u] = deg[S[j].v] = 0;
  for (int j = 0; j < s; ++j) {
    ++deg[S[j].u];
    ++deg[S[j].v];
  }
  for (int j = 0; j < s; ++j)
    if (deg[S[j].u] > 2 || deg[S[j].v] > 2) return 0;

  // collect distinct endpoints in cyclic (label) order
  int m = 0;
  for (int j = 0; j < s; ++j) {
    ep[m++] = S[j].u;
    ep[m++] = S[j].v;
  }
  std::sort(ep, ep + m);
  m = static_cast<int>(std::unique(ep, ep + m) - ep);
  for (int i = 0; i < m; ++i) idx[ep[i]] = i;

  int arc_len[kMaxEndpoints];
  for (int i = 0; i < m; ++i) {
    int next = ep[(i + 1) % m];
    arc_len[i] = cyclic_gap(n, ep[i], next);
  }

  int found = 0;
  for (int a0 = 0; a0 <= 1; ++a0) {
    int8_t used[kMaxEndpoints];
    used[0] = static_cast<int8_t>(a0);
    bool ok = true;
    for (int i = 1; i < m; ++i) {
      int need = 2 - deg[ep[i]];
      int u = need - used[i - 1];
      if (u < 0 || u > 1) {
        ok = false;
        break;
      }
      used[i] = static_cast<int8_t>(u);
    }
    if (!ok) continue;
    if (used[m - 1] + used[0] != 2 - deg[ep[0]]) continue;

    // single-cycle check on the endpoint multigraph (chords + used arcs)
    int peer[kMaxEndpoints][2];
    int eid[kMaxEndpoints][2];
    int wt[kMaxEndpoints][2];
    int8_t cnt[kMaxEndpoints];
    for (int i = 0; i < m; ++i) cnt[i] = 0;
    auto add_edge = [&](int a, int b, int id, int w) {
      peer[a][cnt[a]] = b;
      eid[a][cnt[a]] = id;
      wt[a][cnt[a]] = w;
      ++cnt[a];
      peer[b][cnt[b]] = a;
      eid[b][cnt[b]] = id;
      wt[b][cnt[b]] = w;
      ++cnt[b];
    };
    for (int j = 0; j < s; ++j) add_edge(idx[S[j].u], idx[S[j].v], j, 1);
    for (int i = 0; i < m; ++i)
      if (used[i]) add_edge(i, (i + 1) % m, s + i, arc_len[i]);

    int total = wt[0][0];
    int came = eid[0][0];
    int cur = peer[0][0];
    int visited = 1;
    while (cur != 0) {
      int slot = (eid[cur][0] == came) ? 1 : 0;
      total += wt[cur][slot];
      came = eid[cur][slot];
      cur = peer[cur][slot];
      ++visited;
    }
    if (visited == m) out_len[found++] = total;
  }
  return found;
}

void check_enumerable(const ChordDiagram& d, int chord_limit) {
  require_valid(d);
  if (d.n > kMaxVertices)
    throw error(errc::instance_too_large, "n exceeds " + std::to_string(kMaxVertices));
  int limit = std::min(chord_limit, kMaxSubset);
  if (static_cast<int>(d.chords.size()) > limit)
    throw error(errc::chord_limit_exceeded,
                std::to_string(d.chords.size()) + " chords exceed limit " + std::to_string(limit));
}

// next mask with the same popcount (Gosper)
inline std::uint32_t next_combination(std::uint32_t x) {
  std::uint32_t c = x & -x;
  std::uint32_t r = x + c;
  return (((r ^ x) >> 2) / c) | r;
}

}  // namespace

const std::set<int>& CycleSpectrum::lengths(int k) const {
  static const std::set<int> empty;
  auto it = by_chord_count.find(k);
  return it == by_chord_count.end() ? empty : it->second;
}

CycleTally enumerate_cycles_tally(const ChordDiagram& d, int chord_limit) {
  check_enumerable(d, chord_limit);
  int p = static_cast<int>(d.chords.size());

  CycleTally tally;
  auto record = [&tally](int k, int len, long long c) {
    tally.spectrum.by_chord_count[k].insert(len);
    tally.count_by_chord_count[k] += c;
    tally.count_by_chords_and_length[{k, len}] += c;
    tally.spectrum.total_cycles += c;
  };
  record(0, d.n, 1);

  Chord sub[kMaxSubset];
  int lens[2];
  for (std::uint32_t mask = 1; mask < (1u << p); ++mask) {
    std::uint32_t bits = mask;
    int s = 0;
    while (bits) {
      sub[s++] = d.chords[std::countr_zero(bits)];
      bits &= bits - 1;
    }
    int c = subset_completions(d.n, sub, s, lens);
    for (int i = 0; i < c; ++i) record(s, lens[i], 1);
  }
  return tally;
}

CycleSpectrum enumerate_cycles(const ChordDiagram& d, int chord_limit) {
  return enumerate_cycles_tally(d, chord_limit).spectrum;
}

Completions complete_all_chords(const ChordDiagram& d) {
  check_enumerable(d, kMaxSubset);
  Completions out;
  out.count = subset_completions(d.n, d.chords.data(), static_cast<int>(d.chords.size()),
                                 out.lengths);
  return out;
}

int cycles_through_all(const ChordDiagram& d, const std::vector<Chord>& X) {
  require_valid(d);
  for (const auto& c : X)
    if (!std::binary_search(d.chords.begin(), d.chords.end(), c))
      throw error(errc::invalid_argument, "X is not a subset of the diagram's chords");
  return complete_all_chords(make_diagram(d.n, X)).count;
}

std::set<int> k_chord_lengths(const ChordDiagram& d, int k) {
  check_enumerable(d, kMaxSubset);
  int p = static_cast<int>(d.chords.size());
  std::set<int> out;
  if (k < 0 || k > p) return out;
  if (k == 0) {
    out.insert(d.n);
    return out;
  }
  Chord sub[kMaxSubset];
  int lens[2];
  std::uint32_t end = 1u << p;
  for (std::uint32_t mask = (1u << k) - 1; mask < end; mask = next_combination(mask)) {
    std::uint32_t bits = mask;
    int s = 0;
    while (bits) {
      sub[s++] = d.chords[std::countr_zero(bits)];
      bits &= bits - 1;
    }
    int c = subset_completions(d.n, sub, s, lens);
    for (int i = 0; i < c; ++i) out.insert(lens[i]);
    if (mask == end - 1) break;  // Gosper overflows past the last combination
  }
  return out;
}

bool covers_lengths_with_k_chords(const ChordDiagram& d, int k, const std::set<int>& required) {
  if (required.empty()) return true;
  int p = static_cast<int>(d.chords.size());
  if (k < 0 || k > p) return false;
  if (k == 0) return required.size() == 1 && *required.begin() == d.n;

  std::uint64_t want = 0;
  for (int l : required) {
    if (l < 0 || l > 63) {  // fall back for huge n; search instances never hit this
      auto got = k_chord_lengths(d, k);
      return std::includes(got.begin(), got.end(), required.begin(), required.end());
    }
    want |= 1ull << l;
  }

  Chord sub[kMaxSubset];
  int lens[2];
  std::uint32_t end = 1u << p;
  for (std::uint32_t mask = (1u << k) - 1; mask < end; mask = next_combination(mask)) {
    std::uint32_t bits = mask;
    int s = 0;
    while (bits) {
      sub[s++] = d.chords[std::countr_zero(bits)];
      bits &= bits - 1;
    }
    int c = subset_completions(d.n, sub, s, lens);
    for (int i = 0; i < c; ++i)
      if (lens[i] <= 63) want &= ~(1ull << lens[i]);
    if (want == 0) return true;
    if (mask == end - 1) break;
  }
  return false;
}

}  // namespace kchord
