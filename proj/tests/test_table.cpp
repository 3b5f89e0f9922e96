#include "doctest.h"
#include "kchord/bounds.hpp"
#include "kchord/constructions.hpp"
#include "kchord/table.hpp"

using namespace kchord;

namespace {

const TableCell* find_cell(const std::vector<TableCell>& cells, int n, int k) {
  for (const auto& c : cells)
    if (c.n == n && c.k == k) return &c;
  return nullptr;
}

}  // namespace

TEST_SUITE_BEGIN("table");

TEST_CASE("row n=6 closes every cell") {
  auto cells = compute_table(6, 6);
  REQUIRE(cells.size() == 6);
  const int expect[6] = {2, 3, 5, 6, 6, 6};
  for (int k = 1; k <= 6; ++k) {
    auto* c = find_cell(cells, 6, k);
    REQUIRE(c != nullptr);
    CHECK(c->value == expect[k - 1]);
    CHECK(c->kind == TableCell::Kind::Exact);
  }
  CHECK(find_cell(cells, 6, 1)->source == TableCell::Source::ClosedForm);
  CHECK(find_cell(cells, 6, 3)->source == TableCell::Source::Search);
  CHECK(find_cell(cells, 6, 5)->source == TableCell::Source::Search);  // split needs n >= 7
  CHECK(find_cell(cells, 6, 6)->source == TableCell::Source::ConstructionBound);
}

TEST_CASE("top-of-row closures hold out to n=13 without search") {
  for (int n : {11, 13}) {
    CHECK(chord_lower_bound(n, n) == n);
    CHECK(verify_complete(all_chord_hamilton(n), n));
    CHECK(chord_lower_bound(n, n - 1) == n);
    CHECK(verify_complete(lemma3_construction(n), n - 1));
  }
}

TEST_CASE("cells degrade to the printed thresholds under a tight budget") {
  SearchLimits lim;
  lim.time_budget_ms = 1;
  auto cells = compute_table(13, 13, lim);

  auto* c6 = find_cell(cells, 13, 6);
  REQUIRE(c6 != nullptr);
  CHECK(c6->kind == TableCell::Kind::LowerBound);
  CHECK(c6->value == 8);
  CHECK(c6->source == TableCell::Source::ClosedForm);

  CHECK(find_cell(cells, 13, 1)->kind == TableCell::Kind::Exact);
  CHECK(find_cell(cells, 13, 1)->value == 5);
  CHECK(find_cell(cells, 13, 2)->value == 4);  // threshold even when unsearched
  CHECK(find_cell(cells, 13, 12)->value == 13);
  CHECK(find_cell(cells, 13, 12)->kind == TableCell::Kind::Exact);
  CHECK(find_cell(cells, 13, 13)->value == 13);
}

TEST_CASE("tsv shape") {
  auto tsv = table_tsv(compute_table(6, 6));
  CHECK(tsv.find("n\tk\tvalue\tkind\tsource\n") == 0);
  CHECK(tsv.find("6\t3\t5\texact\tsearch\n") != std::string::npos);
}

TEST_SUITE_END();
