#ifndef KCHORD_SPECTRUM_HPP
#define KCHORD_SPECTRUM_HPP

#include <functional>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "kchord/chords.hpp"

namespace kchord {

inline constexpr int kDefaultChordLimit = 24;  // subset enumeration is Theta(2^p)
inline constexpr int kMaxVertices = 512;

// Which cycle lengths are achievable with exactly k chords, for every k, plus
// the exact number of cycles in C_n + chords.
struct CycleSpectrum {
  std::map<int, std::set<int>> by_chord_count;  // k -> sorted lengths (edge counts)
  long long total_cycles = 0;

  const std::set<int>& lengths(int k) const;  // empty set if k absent

  bool operator==(const CycleSpectrum&) const = default;
};

// Spectrum plus exact per-stratum cycle counts (empirical maxima and the
// oracle-equivalence tests need counts, not just length sets).
struct CycleTally {
  CycleSpectrum spectrum;
  std::map<int, long long> count_by_chord_count;
  std::map<std::pair<int, int>, long long> count_by_chords_and_length;
};

// Exhaustive enumeration over all chord subsets S: each S admits at most two
// assignments of the arcs between consecutive chord endpoints that close S
// into a cycle; completions splitting into two or more disjoint cycles are
// rejected. Work is Theta(2^p * poly).
CycleSpectrum enumerate_cycles(const ChordDiagram& d, int chord_limit = kDefaultChordLimit);
CycleTally enumerate_cycles_tally(const ChordDiagram& d, int chord_limit = kDefaultChordLimit);

// The <=2 single-cycle completions using every chord of the diagram.
struct Completions {
  int count = 0;
  int lengths[2] = {0, 0};
};
Completions complete_all_chords(const ChordDiagram& d);

// Number of cycles in C_n + X passing all chords of X (and no other chord).
// Always <= 2; <= 1 when two chords of X share an endpoint.
int cycles_through_all(const ChordDiagram& d, const std::vector<Chord>& X);

// Lengths achieved with exactly k chords, enumerating only size-k subsets.
std::set<int> k_chord_lengths(const ChordDiagram& d, int k);

// Early-exit check used by the search inner loop: does the diagram achieve
// every length in `required` with exactly k chords?
bool covers_lengths_with_k_chords(const ChordDiagram& d, int k, const std::set<int>& required);

}  // namespace kchord

#endif
