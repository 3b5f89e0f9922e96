// End-to-end acceptance suite: runs every headline check and prints one
// PASS/FAIL line per criterion. Exit code is the number of failures.
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "kchord/bounds.hpp"
#include "kchord/constructions.hpp"
#include "kchord/relativity.hpp"
#include "kchord/search.hpp"
#include "kchord/table.hpp"
#include "oracles.hpp"

using namespace kchord;

namespace {

int failures = 0;

void criterion(int idx, const std::string& label,
               const std::function<bool(std::string&)>& body) {
  bool ok = false;
  std::string detail;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  std::printf("%s  criterion %2d: %s%s%s\n", ok ? "PASS" : "FAIL", idx, label.c_str(),
              detail.empty() ? "" : " -- ", detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::map<std::pair<int, int>, int> table_values(int n_min, int n_max) {
  std::map<std::pair<int, int>, int> out;
  for (const auto& c : compute_table(n_min, n_max)) {
    if (c.kind == TableCell::Kind::Exact) out[{c.n, c.k}] = c.value;
  }
  return out;
}

bool rows_6_to_9(std::string& detail) {
  const std::map<int, std::vector<int>> expect = {
      {6, {2, 3, 5, 6, 6, 6}},
      {7, {2, 3, 5, 6, 6, 7, 7}},
      {8, {3, 4, 5, 6, 6, 7, 8, 8}},
      {9, {3, 4, 5, 6, 7, 8, 8, 9, 9}},
  };
  auto got = table_values(6, 9);
  std::ostringstream bad;
  for (const auto& [n, row] : expect)
    for (int k = 1; k <= n; ++k) {
      auto it = got.find({n, k});
      if (!bad.str().empty() && (it == got.end() || it->second != row[k - 1])) bad << "; ";
      if (it == got.end())
        bad << "cell (" << n << "," << k << ") not exact";
      else if (it->second != row[k - 1])
        bad << "cell (" << n << "," << k << ") = " << it->second << ", printed "
            << row[k - 1];
    }
  if (!bad.str().empty()) {
    detail = bad.str() +
             " [this is the table's only divergent cell: two independent enumerators "
             "certify that no 6-chord set on C_8 covers lengths {5,6,7,8} with "
             "exactly-5-chord cycles (best is 3 of 4 over all 38760 sets), so "
             "c(8,5) = 7]";
    return false;
  }
  return true;
}

bool row_10(std::string& detail) {
  const int expect[4] = {4, 4, 5, 6};
  for (int k = 1; k <= 4; ++k) {
    SearchLimits lim;
    lim.time_budget_ms = 3600 * 1000;
    lim.threads = 2;
    auto r = search_c(10, k, lim);
    if (r.status != SearchStatus::Exact || r.value != expect[k - 1]) {
      detail = "search_c(10," + std::to_string(k) + ") gave " + std::to_string(r.value) +
               " (" + to_string(r.status) + ")";
      return false;
    }
  }
  if (chord_lower_bound(10, 9) != 10 || !verify_complete(lemma3_construction(10), 9)) {
    detail = "k=9 closure failed";
    return false;
  }
  if (chord_lower_bound(10, 10) != 10 || !verify_complete(all_chord_hamilton(10), 10)) {
    detail = "k=10 closure failed";
    return false;
  }
  return true;
}

bool printed_bound_cells(std::string& detail) {
  // (n, k) -> printed value for every bound-form cell of the n=10..13 rows
  const std::map<std::pair<int, int>, int> expect = {
      {{10, 1}, 4},  {{11, 1}, 4},  {{12, 1}, 5},  {{13, 1}, 5},   // k=1 exact forms
      {{10, 2}, 4},  {{11, 2}, 4},  {{12, 2}, 4},  {{13, 2}, 4},   // k=2 thresholds
      {{10, 5}, 6},  {{10, 6}, 7},  {{10, 7}, 8},  {{10, 8}, 9},
      {{11, 3}, 5},  {{11, 4}, 6},  {{11, 5}, 7},  {{11, 6}, 7},
      {{11, 7}, 8},  {{11, 8}, 9},  {{11, 9}, 10},
      {{12, 3}, 5},  {{12, 4}, 6},  {{12, 5}, 7},  {{12, 6}, 7},
      {{12, 7}, 8},  {{12, 8}, 9},  {{12, 9}, 10}, {{12, 10}, 11},
      {{13, 3}, 5},  {{13, 4}, 6},  {{13, 5}, 7},  {{13, 6}, 8},
      {{13, 7}, 8},  {{13, 8}, 9},  {{13, 9}, 10}, {{13, 10}, 11}, {{13, 11}, 12},
  };
  for (const auto& [nk, want] : expect) {
    auto [n, k] = nk;
    int got = (k == 1) ? c_value_k1(n) : (k == 2) ? c_lower_bound_k2(n) : chord_lower_bound(n, k);
    if (got != want) {
      detail = "(" + std::to_string(n) + "," + std::to_string(k) + ") -> " +
               std::to_string(got) + ", printed " + std::to_string(want);
      return false;
    }
  }
  return true;
}

bool cap_equals_sum(std::string& detail) {
  for (int k = 3; k <= 10; ++k)
    for (int p = k; p <= 40; ++p)
      if (k_cycle_cap(k, p) != k_cycle_cap_sum_form(k, p)) {
        detail = "mismatch at k=" + std::to_string(k) + ", p=" + std::to_string(p);
        return false;
      }
  return true;
}

bool extremal_families(std::string& detail) {
  std::ostringstream bad;
  for (int p = 1; p <= 8; ++p) {
    long long lo = enumerate_cycles(noncrossing_family(2 * p + 2, p)).total_cycles;
    if (lo != (p + 2) * (p + 1) / 2) {
      if (!bad.str().empty()) bad << "; ";
      bad << "noncrossing p=" << p << " gave " << lo << " != " << (p + 2) * (p + 1) / 2;
    }
    if (p >= 2) {
      long long hi = enumerate_cycles(crossing_family(2 * p, p)).total_cycles;
      if (hi != (1ll << (p + 1)) - 1) {
        if (!bad.str().empty()) bad << "; ";
        bad << "crossing p=" << p << " gave " << hi << " != " << ((1ll << (p + 1)) - 1);
      }
    }
  }
  if (!bad.str().empty()) {
    detail = "any 4 pairwise-crossing chords interleave and their joint completions split, "
             "capping crossing families at 1+2^p+p(p-1): " + bad.str();
    return false;
  }
  return true;
}

// the joint-cycle count depends only on X, so sweeping every chord set X of
// size <= 4 covers every (diagram, subset) pair at these sizes
bool joint_cycle_cap(std::string& detail) {
  for (int n = 6; n <= 8; ++n) {
    auto chords = oracle::all_chords(n);
    int m = static_cast<int>(chords.size());
    std::vector<int> pick;
    bool ok = true;
    std::function<void(int, int)> rec = [&](int from, int want) {
      if (!ok) return;
      if (static_cast<int>(pick.size()) == want) {
        std::vector<Chord> X;
        for (int id : pick) X.push_back(chords[id]);
        ChordDiagram d = make_diagram(n, X);
        int count = complete_all_chords(d).count;
        bool shared = false;
        for (size_t i = 0; i < X.size() && !shared; ++i)
          for (size_t j = i + 1; j < X.size() && !shared; ++j)
            shared = X[i].u == X[j].u || X[i].u == X[j].v || X[i].v == X[j].u ||
                     X[i].v == X[j].v;
        int cap = shared ? 1 : 2;
        if (count > cap) {
          detail = "X = " + format_chords(d) + " admits " + std::to_string(count) + " cycles";
          ok = false;
        }
        return;
      }
      for (int id = from; id + (want - static_cast<int>(pick.size())) <= m; ++id) {
        pick.push_back(id);
        rec(id + 1, want);
        pick.pop_back();
      }
    };
    for (int p = 1; p <= 4 && ok; ++p) rec(0, p);
    if (!ok) return false;
  }
  return true;
}

bool oracle_equivalence(std::string& detail) {
  for (int n = 6; n <= 8; ++n) {
    auto chords = oracle::all_chords(n);
    int m = static_cast<int>(chords.size());
    std::vector<int> pick;
    bool ok = true;
    std::function<void(int, int)> rec = [&](int from, int want) {
      if (!ok) return;
      if (static_cast<int>(pick.size()) == want) {
        std::vector<Chord> sub;
        for (int id : pick) sub.push_back(chords[id]);
        ChordDiagram d = make_diagram(n, sub);
        CycleTally ours = enumerate_cycles_tally(d);
        oracle::Tally ref = oracle::dfs_cycle_tally(d);
        if (ours.spectrum.total_cycles != ref.total ||
            ours.count_by_chords_and_length != ref.by_chords_and_length) {
          detail = "spectrum mismatch on " + format_chords(d);
          ok = false;
        }
        return;
      }
      for (int id = from; id + (want - static_cast<int>(pick.size())) <= m; ++id) {
        pick.push_back(id);
        rec(id + 1, want);
        pick.pop_back();
      }
    };
    for (int p = 0; p <= 4 && ok; ++p) rec(0, p);
    if (!ok) return false;
  }
  return true;
}

bool lambert_crossover(std::string& detail) {
  auto r10 = crossover(10);
  if (std::abs(r10.upper_solution - 3.4e15) > 0.05 * 3.4e15) {
    detail = "upper(10) = " + std::to_string(r10.upper_solution);
    return false;
  }
  for (int k = 3; k <= 11; ++k) {
    auto r = crossover(k);
    for (double s : {r.lower_solution, r.upper_solution}) {
      double root = std::pow(s, 1.0 / k);
      if (std::abs(std::log(s) - root) > 1e-9 * root) {
        detail = "residual at k=" + std::to_string(k);
        return false;
      }
    }
  }
  std::ostringstream bad;
  for (int k = 3; k <= 10; ++k) {
    double ratio = crossover(k + 1).upper_solution / crossover(k).upper_solution;
    if (ratio < 100.0) {
      if (!bad.str().empty()) bad << ", ";
      char buf[64];
      std::snprintf(buf, sizeof buf, "upper(%d)/upper(%d)=%.2f", k + 1, k, ratio);
      bad << buf;
    }
  }
  if (!bad.str().empty()) {
    detail = "hundredfold-per-step claim fails below k=7: " + bad.str();
    return false;
  }
  return true;
}

bool relativity_witness(std::string& detail) {
  auto w = find_relativity_witness(10, 1, 4);
  if (!w) {
    detail = "no witness found at (10,1,4)";
    return false;
  }
  auto rep = relativity_report(*w, 1);
  if (rep.invariant_flag) {
    detail = "witness report is invariant";
    return false;
  }
  std::ostringstream msg;
  msg << "witness " << format_graph(*w) << "; failing base misses lengths {";
  for (const auto& per : rep.per_cycle)
    if (!per.complete) {
      bool first = true;
      for (int l : per.missing) {
        msg << (first ? "" : ",") << l;
        first = false;
      }
      break;
    }
  msg << "}";
  detail = msg.str();
  return true;
}

bool discrepancy_audit(std::string& detail) {
  auto r = search_c(6, 1);
  int floor_form = k1_printed_floor_form(6);
  if (!(r.status == SearchStatus::Exact && r.value == 2 && floor_form == 1)) {
    detail = "search_c(6,1) = " + std::to_string(r.value) + ", floor form = " +
             std::to_string(floor_form);
    return false;
  }
  auto e = empirical_k_cycle_max(6, 2, 3);
  if (!(e.max_cycles == 6 && two_chord_cap(3) == 5)) {
    detail = "empirical(6,2,3) = " + std::to_string(e.max_cycles) + ", printed cap = " +
             std::to_string(two_chord_cap(3));
    return false;
  }
  detail = "c(6,1)=2 != floor form 1; empirical(6,2,3)=6 > printed cap 5";
  return true;
}

}  // namespace

int main() {
  criterion(1, "table rows n=6..9 exact, cell for cell", rows_6_to_9);
  criterion(2, "n=10: k=1..4 closed by search, k=9,10 by construction+bound", row_10);
  criterion(3, "printed bound cells for n=10..13 reproduced exactly", printed_bound_cells);
  criterion(4, "cap closed form equals the double sum, 3<=k<=10, k<=p<=40", cap_equals_sum);
  criterion(5, "extremal families meet the cycle-count sandwich exactly, p=1..8",
            extremal_families);
  criterion(6, "joint-cycle cap: <=2 always, <=1 with a shared endpoint (n<=8, |X|<=4)",
            joint_cycle_cap);
  criterion(7, "completion enumerator == DFS oracle on all diagrams n<=8, p<=4",
            oracle_equivalence);
  criterion(8, "lambert crossover: value, residuals, growth per unit k", lambert_crossover);
  criterion(9, "relativity witness at (10,1,4) breaks base-cycle invariance",
            relativity_witness);
  criterion(10, "known-discrepancy audit (k=1 floor form, k=2 printed cap)", discrepancy_audit);

  if (failures == 0)
    std::printf("all criteria passed\n");
  else
    std::printf("%d criteria failed\n", failures);
  return failures;
}
