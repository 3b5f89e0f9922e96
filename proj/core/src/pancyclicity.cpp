#include "kchord/pancyclicity.hpp"

#include <algorithm>

#include "kchord/canonical_sets.hpp"

namespace kchord {

std::set<int> required_lengths(int n, int k) {
  if (n < 6) throw error(errc::n_too_small, "c(n,k) is defined for n >= 6");
  if (k < 1) throw error(errc::invalid_argument, "k >= 1 required");
  if (k > n) throw error(errc::k_too_large, "c(n,k) is undefined for k > n");
  std::set<int> out;
  int hi = (k == 1) ? n - 1 : n;
  for (int l = std::max(3, k); l <= hi; ++l) out.insert(l);
  return out;
}

VerifyReport verify(const ChordDiagram& d, int k) {
  require_valid(d);
  VerifyReport rep;
  rep.required = required_lengths(d.n, k);
  rep.achieved = k_chord_lengths(d, k);
  std::set_difference(rep.required.begin(), rep.required.end(), rep.achieved.begin(),
                      rep.achieved.end(), std::inserter(rep.missing, rep.missing.begin()));
  rep.complete = rep.missing.empty();
  return rep;
}

bool verify_complete(const ChordDiagram& d, int k) {
  return covers_lengths_with_k_chords(d, k, required_lengths(d.n, k));
}

std::set<int> realizable_lengths(int n, int k) {
  if (n > kOracleMaxN) throw error(errc::n_too_large_for_oracle, "oracle capped at n <= 9");
  if (n < 6) throw error(errc::n_too_small, "need n >= 6");
  if (k < 1) throw error(errc::invalid_argument, "k >= 1 required");
  if (k > n) throw error(errc::k_too_large, "k > n");
  ChordUniverse U = ChordUniverse::build(n);
  std::set<int> out;
  for_each_canonical_set(U, k, [&](std::span<const int> ids) {
    Completions c = complete_all_chords(diagram_from_ids(U, ids));
    for (int i = 0; i < c.count; ++i) out.insert(c.lengths[i]);
    return Walk::Continue;
  });
  return out;
}

bool realizable(int n, int k, int l) {
  if (l < 3 || l > n) throw error(errc::invalid_argument, "need 3 <= l <= n");
  return realizable_lengths(n, k).count(l) > 0;
}

}  // namespace kchord
