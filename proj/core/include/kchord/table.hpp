#ifndef KCHORD_TABLE_HPP
#define KCHORD_TABLE_HPP

#include <string>
#include <vector>

#include "kchord/search.hpp"

namespace kchord {

// One c(n,k) cell: exact when certified by search or by a verified
// construction meeting the matching lower bound, otherwise the closed-form
// lower bound.
struct TableCell {
  int n = 0;
  int k = 0;
  int value = 0;
  enum class Kind { Exact, LowerBound } kind = Kind::LowerBound;
  enum class Source { Search, ClosedForm, ConstructionBound } source = Source::ClosedForm;
};

const char* to_string(TableCell::Kind k);
const char* to_string(TableCell::Source s);

// Cells for all n in [n_min, n_max], 1 <= k <= n. k=1 closes by the ceiling
// form plus the fan witness; k=n and k=n-1 close by the all-chord and
// vertex-split constructions meeting the cap threshold; everything else is
// searched within the per-cell limits and degrades to the closed-form
// threshold on timeout.
std::vector<TableCell> compute_table(int n_min, int n_max, const SearchLimits& per_cell = {});

std::string table_tsv(const std::vector<TableCell>& cells);  // n k value kind source

}  // namespace kchord

#endif
