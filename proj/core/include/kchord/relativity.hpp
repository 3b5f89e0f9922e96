#ifndef KCHORD_RELATIVITY_HPP
#define KCHORD_RELATIVITY_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kchord/pancyclicity.hpp"

namespace kchord {

inline constexpr int kHamiltonMaxN = 16;

// Plain simple graph; edges include the base cycle when one is intended.
struct Graph {
  int n = 0;
  std::vector<Edge> edges;  // sorted, u < v

  bool operator==(const Graph&) const = default;
};

Graph make_graph(int n, std::vector<Edge> edges);

// "n; edges: u-v,..."
std::string format_graph(const Graph& g);
Graph parse_graph(std::string_view text);

// All Hamilton cycles up to direction and rotation: each is a vertex order
// starting at vertex 1 with the lexicographically smaller direction, listed
// in lexicographic order. Throws NoHamiltonCycle / TooLarge.
std::vector<std::vector<int>> hamilton_cycles(const Graph& g);

// Relabels vertices so the given Hamilton cycle becomes the base C_n; the
// remaining edges become the chord set.
ChordDiagram rebase(const Graph& g, const std::vector<int>& hamilton_order);

// Whether k-chord pancyclicity survives every choice of base Hamilton cycle
// in the fixed graph.
struct RelativityReport {
  Graph graph;
  std::vector<std::vector<int>> hamilton_cycles;
  std::vector<VerifyReport> per_cycle;
  bool invariant_flag = true;  // all per_cycle agree on completeness
};

RelativityReport relativity_report(const Graph& g, int k);

// First (in canonical order) p-chord diagram on C_n that is complete for k
// but whose underlying graph fails verification under some other Hamilton
// cycle; nullopt if no such graph exists at this size.
std::optional<Graph> find_relativity_witness(int n, int k, int p);

}  // namespace kchord

#endif
