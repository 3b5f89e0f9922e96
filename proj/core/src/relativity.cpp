#include "kchord/relativity.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "kchord/canonical_sets.hpp"

namespace kchord {

Graph make_graph(int n, std::vector<Edge> edges) {
  for (auto& e : edges) e = make_chord(e.u, e.v);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  for (const auto& e : edges)
    if (e.u < 1 || e.v > n)
      throw error(errc::vertex_out_of_range,
                  std::to_string(e.u) + "-" + std::to_string(e.v) + " on n=" + std::to_string(n));
  return Graph{n, std::move(edges)};
}

std::string format_graph(const Graph& g) {
  std::ostringstream out;
  out << g.n << "; edges:";
  for (size_t i = 0; i < g.edges.size(); ++i)
    out << (i == 0 ? " " : ",") << g.edges[i].u << "-" << g.edges[i].v;
  return out.str();
}

Graph parse_graph(std::string_view text) {
  size_t semi = text.find(';');
  if (semi == std::string_view::npos)
    throw error(errc::parse_error, "expected 'n; edges: u-v,...', missing ';'");
  std::string head(text.substr(0, semi));
  std::string tail(text.substr(semi + 1));
  size_t label = tail.find("edges:");
  if (label == std::string_view::npos)
    throw error(errc::parse_error, "missing 'edges:' section");
  // reuse the chord list parser on "n: <pairs>"
  ChordDiagram d = parse_chords(head + ":" + tail.substr(label + 6));
  return make_graph(d.n, d.chords);
}

namespace {

std::vector<std::vector<char>> adjacency(const Graph& g) {
  std::vector<std::vector<char>> adj(g.n + 1, std::vector<char>(g.n + 1, 0));
  for (const auto& e : g.edges) adj[e.u][e.v] = adj[e.v][e.u] = 1;
  return adj;
}

}  // namespace

std::vector<std::vector<int>> hamilton_cycles(const Graph& g) {
  if (g.n > kHamiltonMaxN)
    throw error(errc::graph_too_large, "Hamilton enumeration capped at n <= 16");
  if (g.n < 3) throw error(errc::n_too_small, "need n >= 3");
  auto adj = adjacency(g);

  std::vector<std::vector<int>> cycles;
  std::vector<int> path{1};
  std::vector<char> used(g.n + 1, 0);
  used[1] = 1;
  std::function<void()> rec = [&]() {
    if (static_cast<int>(path.size()) == g.n) {
      if (adj[path.back()][1] && path[1] < path.back()) cycles.push_back(path);
      return;
    }
    for (int v = 2; v <= g.n; ++v) {
      if (used[v] || !adj[path.back()][v]) continue;
      used[v] = 1;
      path.push_back(v);
      rec();
      path.pop_back();
      used[v] = 0;
    }
  };
  rec();
  if (cycles.empty()) throw error(errc::no_hamilton_cycle, "graph has no Hamilton cycle");
  return cycles;  // DFS order is lexicographic
}

ChordDiagram rebase(const Graph& g, const std::vector<int>& order) {
  if (static_cast<int>(order.size()) != g.n)
    throw error(errc::invalid_argument, "order must list all n vertices");
  std::vector<int> label(g.n + 1, 0);
  for (int i = 0; i < g.n; ++i) label[order[i]] = i + 1;

  std::vector<Chord> chords;
  for (const auto& e : g.edges) {
    int lu = label[e.u], lv = label[e.v];
    int gap = cyclic_gap(g.n, std::min(lu, lv), std::max(lu, lv));
    if (gap == 1 || gap == g.n - 1) continue;  // base cycle edge
    chords.push_back(make_chord(lu, lv));
  }
  return make_diagram(g.n, std::move(chords));
}

RelativityReport relativity_report(const Graph& g, int k) {
  RelativityReport rep;
  rep.graph = g;
  rep.hamilton_cycles = hamilton_cycles(g);
  rep.per_cycle.reserve(rep.hamilton_cycles.size());
  for (const auto& h : rep.hamilton_cycles) rep.per_cycle.push_back(verify(rebase(g, h), k));
  for (const auto& r : rep.per_cycle)
    if (r.complete != rep.per_cycle.front().complete) rep.invariant_flag = false;
  return rep;
}

namespace {

Graph graph_of(const ChordDiagram& d) {
  std::vector<Edge> edges = d.chords;
  for (int v = 1; v <= d.n; ++v) edges.push_back(make_chord(v, v % d.n + 1));
  return make_graph(d.n, std::move(edges));
}

}  // namespace

std::optional<Graph> find_relativity_witness(int n, int k, int p) {
  if (n > 10) throw error(errc::graph_too_large, "witness search capped at n <= 10");
  ChordUniverse U = ChordUniverse::build(n);
  std::optional<Graph> found;
  for_each_canonical_set(U, p, [&](std::span<const int> ids) {
    ChordDiagram d = diagram_from_ids(U, ids);
    if (!verify_complete(d, k)) return Walk::Continue;
    Graph g = graph_of(d);
    for (const auto& h : hamilton_cycles(g)) {
      if (!verify_complete(rebase(g, h), k)) {
        found = g;
        return Walk::Stop;
      }
    }
    return Walk::Continue;
  });
  return found;
}

}  // namespace kchord
