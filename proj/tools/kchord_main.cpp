// kchord: exact solver, verifier and bounds engine for k-chord pancyclicity
// on an n-cycle with added chords.
//
// Exit codes: 0 success / complete, 1 well-formed negative answer, 2 usage or
// validation error.
#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "kchord/bounds.hpp"
#include "kchord/constructions.hpp"
#include "kchord/relativity.hpp"
#include "kchord/search.hpp"
#include "kchord/serialize.hpp"
#include "kchord/table.hpp"

using namespace kchord;

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

struct VerifyArgs {
  int n = 0, k = 0;
  std::string chords;
  bool pretty = false;
};

int run_verify(const VerifyArgs& a) {
  ChordDiagram d = parse_chords(std::to_string(a.n) + ": " + a.chords);
  require_valid(d);
  VerifyReport rep = verify(d, a.k);
  std::cout << to_json(rep, a.pretty ? 2 : -1) << "\n";
  return rep.complete ? kOk : kNegative;
}

struct SearchArgs {
  int n = 0, k = 0;
  int max_p = -1;
  std::int64_t time_limit_ms = 0;
  int threads = 1;
  bool any_witness = false;
  bool json = false;
};

int run_search(const SearchArgs& a) {
  SearchLimits lim;
  lim.max_p = a.max_p;
  lim.time_budget_ms = a.time_limit_ms;
  lim.threads = a.threads;
  lim.any_witness = a.any_witness;
  SearchOutcome r = search_c(a.n, a.k, lim);
  if (a.json) {
    std::cout << to_json(r) << "\n";
  } else {
    std::cout << "c(" << r.n << "," << r.k << ")";
    if (r.status == SearchStatus::Exact)
      std::cout << " = " << r.value;
    else
      std::cout << " >= " << r.value;
    std::cout << "  [" << to_string(r.status) << "]";
    if (r.witness) std::cout << "  witness " << format_chords(*r.witness);
    std::cout << "  (" << r.nodes_explored << " canonical sets, " << r.elapsed_ms << " ms)\n";
  }
  return r.status == SearchStatus::Exact ? kOk : kNegative;
}

struct TableArgs {
  int n_min = 6, n_max = 13;
  std::int64_t time_limit_ms = 60'000;
  int threads = 1;
};

int run_table(const TableArgs& a) {
  SearchLimits lim;
  lim.time_budget_ms = a.time_limit_ms;
  lim.threads = a.threads;
  std::cout << table_tsv(compute_table(a.n_min, a.n_max, lim));
  return kOk;
}

int run_bounds(int n, int k, bool json) {
  BoundReport rep = bound_report(n, k);
  if (json) {
    std::cout << to_json(rep) << "\n";
    return kOk;
  }
  std::cout << "c(" << n << "," << k << ") >= " << rep.p_threshold << "\n";
  if (rep.k1_closed_form) std::cout << "k=1 closed form: " << *rep.k1_closed_form << "\n";
  if (rep.k2_threshold) std::cout << "k=2 threshold: " << *rep.k2_threshold << "\n";
  if (k >= 3)
    std::cout << "largest real root of the cap polynomial: " << corollary1_real_root(n, k)
              << "\n";
  std::cout << "pancyclic edge floor: " << rep.bondy_edge_bound << "\n";
  if (!rep.notes.empty()) std::cout << "note: " << rep.notes << "\n";
  return kOk;
}

int run_crossover(int k, bool json) {
  CrossoverResult r = crossover(k);
  if (json) {
    std::cout << to_json(r) << "\n";
    return kOk;
  }
  std::printf("ln n = n^(1/%d) at n = %.6g and n = %.6g\n", k, r.lower_solution,
              r.upper_solution);
  std::printf("W0(-1/%d) = %.15g, W-1(-1/%d) = %.15g\n", k, r.w0_value, k, r.wm1_value);
  std::printf("log bound beats the root bound for %.6g < n < %.6g\n", r.lower_solution,
              r.upper_solution);
  return kOk;
}

struct ConstructArgs {
  std::string kind;
  int n = 0, stage = 1, p = 2;
  bool json = false;
};

int run_construct(const ConstructArgs& a) {
  ChordDiagram d;
  int verify_k = -1;
  long long expected_total = -1;
  if (a.kind == "example1") {
    d = example1(a.n == 0 ? 6 : a.n, a.stage);
    verify_k = a.stage <= 3 ? a.stage : 4;
  } else if (a.kind == "lemma3") {
    d = lemma3_construction(a.n);
    verify_k = a.n - 1;
  } else if (a.kind == "hamilton") {
    d = all_chord_hamilton(a.n);
    verify_k = a.n;
  } else if (a.kind == "k1-fan") {
    d = k1_fan(a.n);
    verify_k = 1;
  } else if (a.kind == "noncrossing") {
    d = noncrossing_family(a.n, a.p);
    expected_total = (a.p + 2) * (a.p + 1) / 2;
  } else if (a.kind == "crossing") {
    d = crossing_family(a.n, a.p);
    expected_total = (1ll << (a.p + 1)) - 1;
  } else {
    throw error(errc::invalid_argument,
                "kind must be example1|lemma3|hamilton|k1-fan|noncrossing|crossing");
  }

  bool ok;
  std::string check;
  if (verify_k >= 0) {
    ok = verify_complete(d, verify_k);
    check = "k=" + std::to_string(verify_k) + (ok ? " complete" : " INCOMPLETE");
  } else {
    long long total = enumerate_cycles(d).total_cycles;
    ok = total == expected_total;
    check = "total_cycles=" + std::to_string(total) + " expected=" +
            std::to_string(expected_total);
  }
  if (a.json) {
    std::cout << "{\"diagram\":\"" << format_chords(d) << "\",\"check\":\"" << check
              << "\",\"ok\":" << (ok ? "true" : "false") << "}\n";
  } else {
    std::cout << format_chords(d) << "\n" << check << "\n";
  }
  return ok ? kOk : kNegative;
}

struct RelArgs {
  std::string graph;
  int k = 1;
  bool find = false;
  int n = 0, p = 0;
  bool json = false;
};

int run_relativity(const RelArgs& a) {
  if (a.find) {
    auto w = find_relativity_witness(a.n, a.k, a.p);
    if (!w) {
      std::cout << (a.json ? "{\"witness\":null}" : "no witness found") << "\n";
      return kNegative;
    }
    RelativityReport rep = relativity_report(*w, a.k);
    if (a.json)
      std::cout << to_json(rep) << "\n";
    else
      std::cout << format_graph(*w) << "\n"
                << rep.hamilton_cycles.size() << " hamilton cycles, invariant_flag="
                << (rep.invariant_flag ? "true" : "false") << "\n";
    return kOk;
  }
  RelativityReport rep = relativity_report(parse_graph(a.graph), a.k);
  if (a.json) {
    std::cout << to_json(rep) << "\n";
  } else {
    std::cout << rep.hamilton_cycles.size() << " hamilton cycles\n";
    for (size_t i = 0; i < rep.per_cycle.size(); ++i)
      std::cout << "base " << i << ": "
                << (rep.per_cycle[i].complete ? "complete" : "incomplete") << "\n";
    std::cout << "invariant_flag=" << (rep.invariant_flag ? "true" : "false") << "\n";
  }
  return kOk;
}

struct OracleArgs {
  int n = 0, k = 0, l = -1;
  bool json = false;
};

int run_oracle(const OracleArgs& a) {
  if (a.l >= 0) {
    bool yes = realizable(a.n, a.k, a.l);
    if (a.json)
      std::cout << "{\"n\":" << a.n << ",\"k\":" << a.k << ",\"l\":" << a.l
                << ",\"realizable\":" << (yes ? "true" : "false") << "}\n";
    else
      std::cout << (yes ? "realizable" : "not realizable") << "\n";
    return yes ? kOk : kNegative;
  }
  auto lens = realizable_lengths(a.n, a.k);
  if (a.json) {
    std::cout << "{\"n\":" << a.n << ",\"k\":" << a.k << ",\"lengths\":[";
    bool first = true;
    for (int l : lens) {
      std::cout << (first ? "" : ",") << l;
      first = false;
    }
    std::cout << "]}\n";
  } else {
    std::cout << "realizable lengths:";
    for (int l : lens) std::cout << " " << l;
    std::cout << "\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"k-chord pancyclicity toolkit: exact c(n,k) search, verification and bounds"};
  app.require_subcommand(1);

  VerifyArgs va;
  auto* verify_cmd = app.add_subcommand("verify", "check k-chord pancyclicity of a chord set");
  verify_cmd->add_option("--n", va.n, "cycle length")->required();
  verify_cmd->add_option("--k", va.k, "chords per cycle")->required();
  verify_cmd->add_option("--chords", va.chords, "comma-separated pairs, e.g. 1-3,1-4")
      ->required();
  verify_cmd->add_flag("--pretty", va.pretty, "indent the JSON report");

  SearchArgs sa;
  auto* search_cmd = app.add_subcommand("search", "exact minimum chord count c(n,k)");
  search_cmd->add_option("--n", sa.n)->required();
  search_cmd->add_option("--k", sa.k)->required();
  search_cmd->add_option("--max-p", sa.max_p, "largest level to exhaust");
  search_cmd->add_option("--time-limit-ms", sa.time_limit_ms, "0 = unlimited");
  search_cmd->add_option("--threads", sa.threads);
  search_cmd->add_flag("--any-witness", sa.any_witness,
                       "stop the feasible level at the first witness");
  search_cmd->add_flag("--json", sa.json);

  TableArgs ta;
  auto* table_cmd = app.add_subcommand("table", "c(n,k) table as TSV");
  table_cmd->add_option("--n-min", ta.n_min);
  table_cmd->add_option("--n-max", ta.n_max);
  table_cmd->add_option("--time-limit-ms", ta.time_limit_ms, "per cell");
  table_cmd->add_option("--threads", ta.threads);

  int bn = 0, bk = 0;
  bool bjson = false;
  auto* bounds_cmd = app.add_subcommand("bounds", "closed-form lower bounds for c(n,k)");
  bounds_cmd->add_option("--n", bn)->required();
  bounds_cmd->add_option("--k", bk)->required();
  bounds_cmd->add_flag("--json", bjson);

  int ck = 0;
  bool cjson = false;
  auto* cross_cmd = app.add_subcommand("crossover", "solutions of ln n = n^(1/k)");
  cross_cmd->add_option("--k", ck)->required();
  cross_cmd->add_flag("--json", cjson);

  ConstructArgs ca;
  auto* construct_cmd = app.add_subcommand("construct", "generate and self-check a chord set");
  construct_cmd
      ->add_option("--kind", ca.kind, "example1|lemma3|hamilton|k1-fan|noncrossing|crossing")
      ->required();
  construct_cmd->add_option("--n", ca.n);
  construct_cmd->add_option("--stage", ca.stage, "example1 stage 1..4");
  construct_cmd->add_option("--p", ca.p, "family size");
  construct_cmd->add_flag("--json", ca.json);

  RelArgs ra;
  auto* rel_cmd = app.add_subcommand("relativity",
                                     "k-chord pancyclicity across hamilton re-bases");
  rel_cmd->add_option("--graph", ra.graph, "e.g. '6; edges: 1-2,2-3,...'");
  rel_cmd->add_option("--k", ra.k);
  rel_cmd->add_flag("--find-witness", ra.find, "search for a non-invariant graph");
  rel_cmd->add_option("--n", ra.n);
  rel_cmd->add_option("--p", ra.p);
  rel_cmd->add_flag("--json", ra.json);

  OracleArgs oa;
  auto* oracle_cmd =
      app.add_subcommand("oracle", "exhaustive realizability of (n,k,l), n <= 9");
  oracle_cmd->add_option("--n", oa.n)->required();
  oracle_cmd->add_option("--k", oa.k)->required();
  oracle_cmd->add_option("--l", oa.l, "specific length (omit for full set)");
  oracle_cmd->add_flag("--json", oa.json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*verify_cmd) return run_verify(va);
    if (*search_cmd) return run_search(sa);
    if (*table_cmd) return run_table(ta);
    if (*bounds_cmd) return run_bounds(bn, bk, bjson);
    if (*cross_cmd) return run_crossover(ck, cjson);
    if (*construct_cmd) return run_construct(ca);
    if (*rel_cmd) return run_relativity(ra);
    if (*oracle_cmd) return run_oracle(oa);
  } catch (const error& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
