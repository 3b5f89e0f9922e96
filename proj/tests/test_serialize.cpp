#include <nlohmann/json.hpp>

#include "doctest.h"
#include "kchord/search.hpp"
#include "kchord/serialize.hpp"

using namespace kchord;
using nlohmann::json;

TEST_SUITE_BEGIN("serialize");

TEST_CASE("search outcome uses the frozen field names") {
  auto r = search_c(6, 1);
  json j = json::parse(to_json(r));
  CHECK(j.at("n") == 6);
  CHECK(j.at("k") == 1);
  CHECK(j.at("value") == 2);
  CHECK(j.at("status") == "exact");
  CHECK(j.at("witness") == "6: 1-3,1-4");
  CHECK(j.contains("nodes"));
  CHECK(j.contains("ms"));
}

TEST_CASE("verify report fields") {
  json j = json::parse(to_json(verify(parse_chords("6: 1-3"), 1)));
  CHECK(j.at("complete") == false);
  CHECK(j.at("required") == json::array({3, 4, 5}));
  CHECK(j.at("achieved") == json::array({3, 5}));
  CHECK(j.at("missing") == json::array({4}));
}

TEST_CASE("bound report fields") {
  json j = json::parse(to_json(bound_report(10, 5)));
  CHECK(j.at("p_threshold") == 6);
  CHECK(j.contains("bondy_edge_bound"));
  CHECK_FALSE(j.contains("k1_closed_form"));
  json j1 = json::parse(to_json(bound_report(10, 1)));
  CHECK(j1.at("k1_closed_form") == 4);
}

TEST_CASE("crossover fields") {
  json j = json::parse(to_json(crossover(10)));
  for (const char* key : {"k", "lower_solution", "upper_solution", "w0_value", "wm1_value"})
    CHECK(j.contains(key));
}

TEST_CASE("spectrum serialization") {
  json j = json::parse(to_json(enumerate_cycles(parse_chords("6: 1-3,1-4"))));
  CHECK(j.at("total_cycles") == 6);
  CHECK(j.at("by_chord_count").at("1") == json::array({3, 4, 5}));
}

TEST_SUITE_END();
