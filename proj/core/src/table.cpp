#include "kchord/table.hpp"

#include <sstream>

#include "kchord/bounds.hpp"
#include "kchord/constructions.hpp"

namespace kchord {

const char* to_string(TableCell::Kind k) {
  return k == TableCell::Kind::Exact ? "exact" : "lower_bound";
}

const char* to_string(TableCell::Source s) {
  switch (s) {
    case TableCell::Source::Search: return "search";
    case TableCell::Source::ClosedForm: return "closed_form";
    case TableCell::Source::ConstructionBound: return "construction+bound";
  }
  return "?";
}

namespace {

TableCell cell_for(int n, int k, const SearchLimits& limits) {
  TableCell cell;
  cell.n = n;
  cell.k = k;

  if (k == n || (k == n - 1 && n >= 7)) {
    ChordDiagram d = (k == n) ? all_chord_hamilton(n) : lemma3_construction(n);
    if (chord_lower_bound(n, k) == n && verify_complete(d, k)) {
      cell.value = n;
      cell.kind = TableCell::Kind::Exact;
      cell.source = TableCell::Source::ConstructionBound;
      return cell;
    }
  }

  if (k == 1) {
    if (verify_complete(k1_fan(n), 1)) {
      cell.value = c_value_k1(n);
      cell.kind = TableCell::Kind::Exact;
      cell.source = TableCell::Source::ClosedForm;
      return cell;
    }
  }

  SearchOutcome r = search_c(n, k, limits);
  if (r.status == SearchStatus::Exact) {
    cell.value = r.value;
    cell.kind = TableCell::Kind::Exact;
    cell.source = TableCell::Source::Search;
    return cell;
  }

  cell.kind = TableCell::Kind::LowerBound;
  cell.source = TableCell::Source::ClosedForm;
  cell.value = (k == 1)   ? c_lower_bound_k1(n)
               : (k == 2) ? c_lower_bound_k2(n)
                          : chord_lower_bound(n, k);
  return cell;
}

}  // namespace

std::vector<TableCell> compute_table(int n_min, int n_max, const SearchLimits& per_cell) {
  std::vector<TableCell> out;
  for (int n = n_min; n <= n_max; ++n)
    for (int k = 1; k <= n; ++k) out.push_back(cell_for(n, k, per_cell));
  return out;
}

std::string table_tsv(const std::vector<TableCell>& cells) {
  std::ostringstream out;
  out << "n\tk\tvalue\tkind\tsource\n";
  for (const auto& c : cells)
    out << c.n << '\t' << c.k << '\t' << c.value << '\t' << to_string(c.kind) << '\t'
        << to_string(c.source) << '\n';
  return out.str();
}

}  // namespace kchord
