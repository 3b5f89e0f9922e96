#include "kchord/serialize.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

namespace kchord {

namespace {

using nlohmann::json;

std::string dump(const json& j, int indent) { return j.dump(indent); }

json edge_strings(const std::vector<int>& order, int n) {
  std::vector<std::string> edges;
  edges.reserve(order.size());
  for (int i = 0; i < n; ++i) {
    Edge e = make_chord(order[i], order[(i + 1) % n]);
    edges.push_back(std::to_string(e.u) + "-" + std::to_string(e.v));
  }
  std::sort(edges.begin(), edges.end());
  return json(edges);
}

json verify_json(const VerifyReport& r) {
  return json{{"complete", r.complete},
              {"required", r.required},
              {"achieved", r.achieved},
              {"missing", r.missing}};
}

}  // namespace

std::string to_json(const VerifyReport& r, int indent) { return dump(verify_json(r), indent); }

std::string to_json(const SearchOutcome& r, int indent) {
  json j{{"n", r.n},
         {"k", r.k},
         {"value", r.value},
         {"status", to_string(r.status)},
         {"witness", nullptr},
         {"nodes", r.nodes_explored},
         {"ms", r.elapsed_ms}};
  if (r.witness) j["witness"] = format_chords(*r.witness);
  return dump(j, indent);
}

std::string to_json(const BoundReport& r, int indent) {
  json j{{"n", r.n},
         {"k", r.k},
         {"p_threshold", r.p_threshold},
         {"bondy_edge_bound", r.bondy_edge_bound},
         {"notes", r.notes}};
  if (r.k1_closed_form) j["k1_closed_form"] = *r.k1_closed_form;
  if (r.k2_threshold) j["k2_threshold"] = *r.k2_threshold;
  return dump(j, indent);
}

std::string to_json(const CrossoverResult& r, int indent) {
  json j{{"k", r.k},
         {"lower_solution", r.lower_solution},
         {"upper_solution", r.upper_solution},
         {"w0_value", r.w0_value},
         {"wm1_value", r.wm1_value}};
  return dump(j, indent);
}

std::string to_json(const RelativityReport& r, int indent) {
  json cycles = json::array();
  for (const auto& h : r.hamilton_cycles) cycles.push_back(edge_strings(h, r.graph.n));
  json per = json::array();
  for (const auto& v : r.per_cycle) per.push_back(verify_json(v));
  json j{{"graph", format_graph(r.graph)},
         {"hamilton_cycles", cycles},
         {"per_cycle", per},
         {"invariant_flag", r.invariant_flag}};
  return dump(j, indent);
}

std::string to_json(const CycleSpectrum& s, int indent) {
  json by;
  for (const auto& [k, lens] : s.by_chord_count) by[std::to_string(k)] = lens;
  json j{{"by_chord_count", by}, {"total_cycles", s.total_cycles}};
  return dump(j, indent);
}

std::string to_json(const EmpiricalMax& r, int indent) {
  json j{{"n", r.n},
         {"k", r.k},
         {"p", r.p},
         {"max_cycles", r.max_cycles},
         {"max_over_all_sets", r.max_over_all_sets},
         {"hypothesis_at_max", r.hypothesis_at_max},
         {"witness", nullptr}};
  if (r.witness) j["witness"] = format_chords(*r.witness);
  return dump(j, indent);
}

}  // namespace kchord
