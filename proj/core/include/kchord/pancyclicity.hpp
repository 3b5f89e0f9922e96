#ifndef KCHORD_PANCYCLICITY_HPP
#define KCHORD_PANCYCLICITY_HPP

#include <set>

#include "kchord/spectrum.hpp"

namespace kchord {

// Target lengths L(n,k): all l with max(3,k) <= l <= n, minus n itself when
// k = 1 (a Hamilton cycle cannot use exactly one chord of another).
std::set<int> required_lengths(int n, int k);

struct VerifyReport {
  bool complete = false;
  std::set<int> required;
  std::set<int> achieved;
  std::set<int> missing;  // required \ achieved
};

// Is the diagram k-chord pancyclic? achieved is the full k stratum of the
// cycle spectrum. k = 0 is rejected.
VerifyReport verify(const ChordDiagram& d, int k);

// Fast path used in search loops: completeness only, early exit.
bool verify_complete(const ChordDiagram& d, int k);

// Exhaustive realizability oracle (n <= 9): true iff some valid chord set on
// C_n yields an l-cycle using exactly k chords. Any such cycle already lives
// in the k-chord set of its own chords, so k-chord sets suffice.
bool realizable(int n, int k, int l);
std::set<int> realizable_lengths(int n, int k);

inline constexpr int kOracleMaxN = 9;

}  // namespace kchord

#endif
