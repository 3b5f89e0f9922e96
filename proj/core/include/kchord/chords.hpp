#ifndef KCHORD_CHORDS_HPP
#define KCHORD_CHORDS_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kchord/errors.hpp"

namespace kchord {

// Unordered pair of distinct vertices, stored with u < v. Doubles as a plain
// graph edge in the relativity code.
struct VertexPair {
  int u = 0;
  int v = 0;
  auto operator<=>(const VertexPair&) const = default;
};

using Chord = VertexPair;
using Edge = VertexPair;

// Normalizes endpoint order; endpoints must be distinct.
Chord make_chord(int u, int v);

// An n-cycle C_n with vertices 1..n in cyclic order, plus a set of chords.
struct ChordDiagram {
  int n = 0;
  std::vector<Chord> chords;  // kept sorted; validate() rejects duplicates

  bool operator==(const ChordDiagram&) const = default;
};

ChordDiagram make_diagram(int n, std::vector<Chord> chords);

// (v - u) mod n, walking clockwise from u to v.
int cyclic_gap(int n, int u, int v);
// Shorter of the two arc lengths between the endpoints.
int chord_distance(int n, const Chord& c);

struct Invalid {
  errc code;
  std::string what;
};

// ok (nullopt) iff: vertices in 1..n, endpoints non-adjacent on C_n, no
// duplicates, chord count <= n(n-3)/2.
std::optional<Invalid> validate(const ChordDiagram& d);
void require_valid(const ChordDiagram& d);  // throws error on failure

// True iff the endpoints strictly interleave around the cycle; chords sharing
// an endpoint do not cross.
bool crossing(const Chord& a, const Chord& b, int n);

// ---- dihedral action -------------------------------------------------------
// The 2n symmetry maps of C_n, indexed g in [0, 2n): g < n is rotation by g,
// g >= n is the reflection v -> n+2-v followed by rotation by g-n.

int dihedral_vertex(int n, int g, int v);
Chord apply_dihedral(int n, int g, const Chord& c);
ChordDiagram apply_dihedral(const ChordDiagram& d, int g);

struct CanonicalForm {
  ChordDiagram representative;
  int stabilizer_size = 1;  // divides 2n; orbit size = 2n / stabilizer_size
};

// Lexicographically least image of the diagram under the 2n dihedral maps.
CanonicalForm canonicalize(const ChordDiagram& d);
bool is_canonical(const ChordDiagram& d);

// ---- text format -----------------------------------------------------------
// "n: u1-v1,u2-v2,..."  e.g. "6: 1-3,1-4". Whitespace-insensitive, pairs
// unordered. parse_chords throws error(parse_error) naming the bad token.

std::string format_chords(const ChordDiagram& d);
ChordDiagram parse_chords(std::string_view text);

}  // namespace kchord

#endif
