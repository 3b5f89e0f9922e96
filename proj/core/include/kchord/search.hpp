#ifndef KCHORD_SEARCH_HPP
#define KCHORD_SEARCH_HPP

#include <cstdint>
#include <optional>

#include "kchord/canonical_sets.hpp"
#include "kchord/pancyclicity.hpp"

namespace kchord {

struct SearchLimits {
  int max_p = -1;                   // -1: up to n(n-3)/2
  std::int64_t time_budget_ms = 0;  // 0: unlimited
  int threads = 1;
  bool any_witness = false;  // stop the feasible level at the first witness
};

enum class SearchStatus { Exact, LowerBoundOnly, Timeout };
const char* to_string(SearchStatus s);

struct SearchOutcome {
  int n = 0;
  int k = 0;
  int value = 0;
  SearchStatus status = SearchStatus::LowerBoundOnly;
  std::optional<ChordDiagram> witness;  // canonical, lexicographically least
  std::int64_t nodes_explored = 0;      // canonical sets tested
  std::int64_t elapsed_ms = 0;
};

// First level worth searching: max of k and the applicable closed-form lower
// bound (ceil((n-3)/2) for k=1, the pair bound p(p-1) >= n-2 for k=2, the
// k-cycle-cap threshold for k >= 3). Levels below are certified infeasible by
// the bound, not by exhaustion.
int search_start_level(int n, int k);

// Exact c(n,k) by iterative deepening over p: every level is either fully
// exhausted over canonical chord sets (one per dihedral orbit) or the outcome
// degrades honestly to LowerBoundOnly/Timeout with value = the smallest p not
// yet ruled out.
SearchOutcome search_c(int n, int k, const SearchLimits& limits = {});

struct LevelOutcome {
  bool feasible = false;
  std::int64_t canonical_sets = 0;  // deterministic when the scan completed
  std::optional<ChordDiagram> witness;
  bool timed_out = false;
  bool stopped_early = false;  // any_witness cut the scan short
};

// Certificate that level p is fully searched for (n,k).
LevelOutcome exhaust_level(int n, int k, int p, const SearchLimits& limits = {});

// Empirical counterpart of the k-cycle cap: largest number of cycles passing
// exactly k chords over all p-chord sets (one representative per orbit).
// For k >= 3 the reported max_cycles ranges over sets whose chords contain a
// k-cycle (the cap's hypothesis; a set realizing length k always does);
// max_over_all_sets drops that restriction and can exceed the cap.
struct EmpiricalMax {
  int n = 0, k = 0, p = 0;
  long long max_cycles = 0;
  long long max_over_all_sets = 0;
  bool hypothesis_at_max = false;  // some unrestricted maximizer contains a k-cycle of chords
  std::optional<ChordDiagram> witness;  // attains max_cycles
};

EmpiricalMax empirical_k_cycle_max(int n, int k, int p);

// Do the diagram's chords, on their own, contain a cycle of exactly k chord
// edges?
bool has_chord_k_cycle(const ChordDiagram& d, int k);

}  // namespace kchord

#endif
