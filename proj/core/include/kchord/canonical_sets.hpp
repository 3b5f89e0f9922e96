#ifndef KCHORD_CANONICAL_SETS_HPP
#define KCHORD_CANONICAL_SETS_HPP

#include <functional>
#include <span>
#include <vector>

#include "kchord/chords.hpp"

namespace kchord {

// All valid chords of C_n in lexicographic order, plus the dihedral action as
// permutations of chord ids. Shared by every exhaustive enumeration.
struct ChordUniverse {
  int n = 0;
  std::vector<Chord> chords;
  std::vector<std::vector<int>> chord_map;  // [2n][m] image ids

  int size() const { return static_cast<int>(chords.size()); }
  int id_of(const Chord& c) const;  // -1 if not a valid chord

  static ChordUniverse build(int n);
};

// A chord-id set is canonical iff it is lexicographically minimal (as a sorted
// id vector) among its 2n dihedral images. Prefixes of canonical sets are
// canonical, which makes prefix pruning sound.
bool is_canonical_id_set(const ChordUniverse& U, std::span<const int> ids);
int stabilizer_size_of_id_set(const ChordUniverse& U, std::span<const int> ids);

enum class Walk { Continue, Stop };

// Visits every canonical p-subset of U.chords exactly once, in lexicographic
// order of the ascending id vectors. Each dihedral orbit of p-chord sets is
// therefore seen exactly once. Returns Walk::Stop if the visitor stopped.
Walk for_each_canonical_set(const ChordUniverse& U, int p,
                            const std::function<Walk(std::span<const int>)>& visit);

// Same enumeration split over the top-level branches (first chord id); used by
// the parallel search. branch_index selects first_id = branch_index.
Walk for_each_canonical_set_in_branch(const ChordUniverse& U, int p, int first_id,
                                      const std::function<Walk(std::span<const int>)>& visit);

ChordDiagram diagram_from_ids(const ChordUniverse& U, std::span<const int> ids);

}  // namespace kchord

#endif
