#include "kchord/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>
#include <vector>

#include "kchord/bounds.hpp"

namespace kchord {

const char* to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::Exact: return "exact";
    case SearchStatus::LowerBoundOnly: return "lower_bound";
    case SearchStatus::Timeout: return "timeout";
  }
  return "?";
}

int search_start_level(int n, int k) {
  if (n < 6) throw error(errc::n_too_small, "need n >= 6");
  if (k < 1) throw error(errc::invalid_argument, "k >= 1 required");
  if (k > n) throw error(errc::k_too_large, "k > n");
  int bound;
  if (k == 1)
    bound = c_lower_bound_k1(n);
  else if (k == 2)
    bound = pair_lower_bound_k2(n);
  else
    bound = chord_lower_bound(n, k);
  return std::max(k, bound);
}

namespace {

using Clock = std::chrono::steady_clock;

struct LevelScan {
  const ChordUniverse& U;
  int k;
  int p;
  bool any_witness;
  Clock::time_point deadline;  // time_point::max() when unlimited
  std::atomic<int> next_branch{0};
  std::atomic<bool> stop{false};
  std::atomic<bool> timed_out{false};

  struct PerThread {
    bool feasible = false;
    std::optional<ChordDiagram> witness;
    std::int64_t count = 0;
  };

  void worker(PerThread& out) {
    const std::set<int> required = required_lengths(U.n, k);
    int tick = 0;
    for (;;) {
      int b = next_branch.fetch_add(1, std::memory_order_relaxed);
      if (b >= U.size() || stop.load(std::memory_order_relaxed)) return;
      for_each_canonical_set_in_branch(U, p, b, [&](std::span<const int> ids) {
        if ((++tick & 1023) == 0) {
          if (stop.load(std::memory_order_relaxed)) return Walk::Stop;
          if (Clock::now() >= deadline) {
            timed_out.store(true, std::memory_order_relaxed);
            stop.store(true, std::memory_order_relaxed);
            return Walk::Stop;
          }
        }
        ++out.count;
        ChordDiagram d = diagram_from_ids(U, ids);
        if (covers_lengths_with_k_chords(d, k, required)) {
          out.feasible = true;
          if (!out.witness || d.chords < out.witness->chords) out.witness = d;
          if (any_witness) {
            stop.store(true, std::memory_order_relaxed);
            return Walk::Stop;
          }
        }
        return Walk::Continue;
      });
    }
  }
};

LevelOutcome run_level(const ChordUniverse& U, int k, int p, const SearchLimits& lim,
                       Clock::time_point deadline) {
  LevelScan scan{U, k, p, lim.any_witness, deadline};
  int threads = std::max(1, lim.threads);
  std::vector<LevelScan::PerThread> results(threads);
  if (threads == 1) {
    scan.worker(results[0]);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t)
      pool.emplace_back([&scan, &results, t] { scan.worker(results[t]); });
    for (auto& th : pool) th.join();
  }

  LevelOutcome out;
  out.timed_out = scan.timed_out.load();
  for (const auto& r : results) {
    out.canonical_sets += r.count;
    out.feasible |= r.feasible;
    if (r.witness && (!out.witness || r.witness->chords < out.witness->chords))
      out.witness = r.witness;
  }
  out.stopped_early = scan.stop.load() && !out.timed_out;
  return out;
}

Clock::time_point deadline_from(const SearchLimits& lim, Clock::time_point start) {
  if (lim.time_budget_ms <= 0) return Clock::time_point::max();
  return start + std::chrono::milliseconds(lim.time_budget_ms);
}

}  // namespace

LevelOutcome exhaust_level(int n, int k, int p, const SearchLimits& limits) {
  search_start_level(n, k);  // argument validation
  if (p < 0) throw error(errc::invalid_argument, "p >= 0 required");
  ChordUniverse U = ChordUniverse::build(n);
  return run_level(U, k, p, limits, deadline_from(limits, Clock::now()));
}

SearchOutcome search_c(int n, int k, const SearchLimits& limits) {
  auto start = Clock::now();
  auto deadline = deadline_from(limits, start);

  SearchOutcome out;
  out.n = n;
  out.k = k;
  int p0 = search_start_level(n, k);

  ChordUniverse U = ChordUniverse::build(n);
  int max_p = limits.max_p >= 0 ? std::min(limits.max_p, U.size()) : U.size();

  int p = p0;
  for (; p <= max_p; ++p) {
    LevelOutcome level = run_level(U, k, p, limits, deadline);
    out.nodes_explored += level.canonical_sets;
    if (level.feasible) {
      out.value = p;
      out.status = SearchStatus::Exact;
      out.witness = level.witness;
      break;
    }
    if (level.timed_out) {
      out.value = p;  // levels p0..p-1 exhausted, p is still open
      out.status = SearchStatus::Timeout;
      break;
    }
  }
  if (p > max_p) {
    out.value = max_p + 1;
    out.status = SearchStatus::LowerBoundOnly;
  }
  out.elapsed_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
  return out;
}

bool has_chord_k_cycle(const ChordDiagram& d, int k) {
  int p = static_cast<int>(d.chords.size());
  if (k < 3 || k > p) return false;
  std::vector<int> pick(k);
  // enumerate k-subsets; a chord k-cycle is a full-set completion of length k
  std::function<bool(int, int)> rec = [&](int pos, int from) -> bool {
    if (pos == k) {
      std::vector<Chord> sub;
      sub.reserve(k);
      for (int id : pick) sub.push_back(d.chords[id]);
      Completions c = complete_all_chords(ChordDiagram{d.n, std::move(sub)});
      for (int i = 0; i < c.count; ++i)
        if (c.lengths[i] == k) return true;
      return false;
    }
    for (int id = from; id + (k - pos) <= p; ++id) {
      pick[pos] = id;
      if (rec(pos + 1, id + 1)) return true;
    }
    return false;
  };
  return rec(0, 0);
}

EmpiricalMax empirical_k_cycle_max(int n, int k, int p) {
  if (n < 6 || n > 9 || p > 6)
    throw error(errc::instance_too_large, "empirical maxima are capped at n <= 9, p <= 6");
  if (k < 1 || p < 1) throw error(errc::invalid_argument, "need k >= 1, p >= 1");

  EmpiricalMax result;
  result.n = n;
  result.k = k;
  result.p = p;

  ChordUniverse U = ChordUniverse::build(n);
  bool restricted = (k >= 3);
  for_each_canonical_set(U, p, [&](std::span<const int> ids) {
    ChordDiagram d = diagram_from_ids(U, ids);
    CycleTally tally = enumerate_cycles_tally(d);
    auto it = tally.count_by_chord_count.find(k);
    long long cnt = it == tally.count_by_chord_count.end() ? 0 : it->second;
    bool hyp = restricted && has_chord_k_cycle(d, k);

    if (cnt > result.max_over_all_sets) {
      result.max_over_all_sets = cnt;
      result.hypothesis_at_max = restricted ? hyp : false;
    } else if (cnt == result.max_over_all_sets && restricted && hyp) {
      result.hypothesis_at_max = true;
    }

    if (!restricted || hyp) {
      if (!result.witness || cnt > result.max_cycles) {
        result.max_cycles = cnt;
        result.witness = d;
      }
    }
    return Walk::Continue;
  });
  return result;
}

}  // namespace kchord
