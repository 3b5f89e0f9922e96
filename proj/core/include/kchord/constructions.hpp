#ifndef KCHORD_CONSTRUCTIONS_HPP
#define KCHORD_CONSTRUCTIONS_HPP

#include "kchord/chords.hpp"

namespace kchord {

// The staged n=6 chord sets: stage 1 ({1-3,1-4}, complete for k=1), stage 2
// (adds 2-6, k=2), stage 3 (adds 2-4 and 4-6, k=3), stage 4 (a minimal
// 6-chord set for k=4, recovered by search).
ChordDiagram example1(int n, int stage);

// n chords forming a single Hamilton cycle whose consecutive vertices are
// non-adjacent on C_n; found by backtracking, lexicographically first.
ChordDiagram all_chord_hamilton(int n);

// n-chord diagram whose k = n-1 stratum contains both n-1 and n: take the
// all-chord Hamilton construction on n-1 vertices, split vertex 1 into two
// adjacent vertices (relabelled 1 and n), reattach its chords, and add one
// extra chord closing the short (n-1)-cycle. Needs n >= 7.
ChordDiagram lemma3_construction(int n);

// Extremal families for the cycle-count sandwich. The nested non-crossing
// chords (i, 2p+2-i) realize the lower bound C(p+2,2) exactly. The pairwise
// crossing chords (i, i+p) realize 2^{p+1}-1 for p <= 3 and the crossing-
// family maximum 1 + 2^p + p(p-1) beyond: every 4-subset of pairwise
// crossing chords has fully interleaved endpoints, and both of its arc
// assignments close early into two cycles, so the crude ceiling is
// unreachable once p >= 4.
ChordDiagram noncrossing_family(int n, int p);
ChordDiagram crossing_family(int n, int p);

// ceil((n-3)/2) chords fanned out of vertex 1, one per complementary length
// pair {l, n+2-l}; the standard minimal witness for k = 1.
ChordDiagram k1_fan(int n);

}  // namespace kchord

#endif
