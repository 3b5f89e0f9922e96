#include "kchord/chords.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>
#include <utility>

namespace kchord {

const char* errc_name(errc c) {
  switch (c) {
    case errc::vertex_out_of_range: return "VertexOutOfRange";
    case errc::adjacent_endpoints: return "AdjacentEndpoints";
    case errc::duplicate_chord: return "DuplicateChord";
    case errc::chord_limit_exceeded: return "ChordLimitExceeded";
    case errc::k_too_large: return "KTooLarge";
    case errc::n_too_small: return "NTooSmall";
    case errc::k_below_3: return "KBelow3";
    case errc::instance_too_large: return "InstanceTooLarge";
    case errc::n_too_large_for_oracle: return "NTooLargeForOracle";
    case errc::bad_stage: return "BadStage";
    case errc::n_too_small_for_family: return "NTooSmallForFamily";
    case errc::no_hamilton_cycle: return "NoHamiltonCycle";
    case errc::graph_too_large: return "TooLarge";
    case errc::domain_error: return "DomainError";
    case errc::parse_error: return "ParseError";
    case errc::invalid_argument: return "InvalidArgument";
    case errc::overflow: return "Overflow";
  }
  return "UnknownError";
}

Chord make_chord(int u, int v) {
  if (u == v) throw error(errc::invalid_argument, "chord endpoints coincide");
  return u < v ? Chord{u, v} : Chord{v, u};
}

ChordDiagram make_diagram(int n, std::vector<Chord> chords) {
  for (auto& c : chords) c = make_chord(c.u, c.v);
  std::sort(chords.begin(), chords.end());
  return ChordDiagram{n, std::move(chords)};
}

int cyclic_gap(int n, int u, int v) {
  int g = (v - u) % n;
  return g < 0 ? g + n : g;
}

int chord_distance(int n, const Chord& c) {
  int g = cyclic_gap(n, c.u, c.v);
  return std::min(g, n - g);
}

std::optional<Invalid> validate(const ChordDiagram& d) {
  if (d.n < 4)
    return Invalid{errc::n_too_small, "need n >= 4, got " + std::to_string(d.n)};
  for (const auto& c : d.chords) {
    if (c.u < 1 || c.u > d.n || c.v < 1 || c.v > d.n || c.u == c.v)
      return Invalid{errc::vertex_out_of_range,
                     std::to_string(c.u) + "-" + std::to_string(c.v) + " on n=" + std::to_string(d.n)};
    int g = cyclic_gap(d.n, c.u, c.v);
    if (g < 2 || g > d.n - 2)
      return Invalid{errc::adjacent_endpoints,
                     std::to_string(c.u) + "-" + std::to_string(c.v) + " is a cycle edge of C_" +
                         std::to_string(d.n)};
  }
  std::vector<Chord> sorted;
  sorted.reserve(d.chords.size());
  for (const auto& c : d.chords) sorted.push_back(c.u < c.v ? c : Chord{c.v, c.u});
  std::sort(sorted.begin(), sorted.end());
  for (size_t i = 0; i + 1 < sorted.size(); ++i)
    if (sorted[i] == sorted[i + 1])
      return Invalid{errc::duplicate_chord,
                     std::to_string(sorted[i].u) + "-" + std::to_string(sorted[i].v)};
  // distinct valid chords are automatically within the n(n-3)/2 capacity
  return std::nullopt;
}

void require_valid(const ChordDiagram& d) {
  if (auto bad = validate(d)) throw error(bad->code, bad->what);
}

bool crossing(const Chord& a, const Chord& b, int n) {
  if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) return false;
  // b's endpoints must straddle the arc a.u -> a.v.
  int bu = cyclic_gap(n, a.u, b.u);
  int bv = cyclic_gap(n, a.u, b.v);
  int av = cyclic_gap(n, a.u, a.v);
  return (bu < av) != (bv < av);
}

int dihedral_vertex(int n, int g, int v) {
  if (g >= n) {
    v = n + 2 - v;
    if (v > n) v -= n;  // v was 1
    g -= n;
  }
  v += g;
  if (v > n) v -= n;
  return v;
}

Chord apply_dihedral(int n, int g, const Chord& c) {
  return make_chord(dihedral_vertex(n, g, c.u), dihedral_vertex(n, g, c.v));
}

ChordDiagram apply_dihedral(const ChordDiagram& d, int g) {
  std::vector<Chord> out;
  out.reserve(d.chords.size());
  for (const auto& c : d.chords) out.push_back(apply_dihedral(d.n, g, c));
  std::sort(out.begin(), out.end());
  return ChordDiagram{d.n, std::move(out)};
}

CanonicalForm canonicalize(const ChordDiagram& d) {
  CanonicalForm best{apply_dihedral(d, 0), 0};
  std::vector<Chord> self = best.representative.chords;  // sorted input
  int stab = 0;
  for (int g = 0; g < 2 * d.n; ++g) {
    ChordDiagram img = apply_dihedral(d, g);
    if (img.chords == self) ++stab;
    if (img.chords < best.representative.chords) best.representative = std::move(img);
  }
  best.stabilizer_size = stab;
  return best;
}

bool is_canonical(const ChordDiagram& d) {
  std::vector<Chord> sorted = d.chords;
  std::sort(sorted.begin(), sorted.end());
  for (int g = 1; g < 2 * d.n; ++g) {
    ChordDiagram img = apply_dihedral(d, g);
    if (img.chords < sorted) return false;
  }
  return true;
}

std::string format_chords(const ChordDiagram& d) {
  std::ostringstream out;
  out << d.n << ":";
  for (size_t i = 0; i < d.chords.size(); ++i)
    out << (i == 0 ? " " : ",") << d.chords[i].u << "-" << d.chords[i].v;
  return out.str();
}

namespace {

std::string strip_ws(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char ch : s)
    if (!std::isspace(static_cast<unsigned char>(ch))) out.push_back(ch);
  return out;
}

int parse_int(std::string_view tok, std::string_view full_token) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw error(errc::parse_error, "bad number in token '" + std::string(full_token) + "'");
  return value;
}

}  // namespace

ChordDiagram parse_chords(std::string_view text) {
  std::string s = strip_ws(text);
  size_t colon = s.find(':');
  if (colon == std::string::npos)
    throw error(errc::parse_error, "expected 'n: u-v,...', missing ':'");
  int n = parse_int(std::string_view(s).substr(0, colon), s.substr(0, colon));
  std::vector<Chord> chords;
  std::string_view rest = std::string_view(s).substr(colon + 1);
  while (!rest.empty()) {
    size_t comma = rest.find(',');
    std::string_view tok = rest.substr(0, comma);
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    if (tok.empty()) throw error(errc::parse_error, "empty chord token");
    size_t dash = tok.find('-');
    if (dash == std::string_view::npos || dash == 0 || dash == tok.size() - 1)
      throw error(errc::parse_error, "bad chord token '" + std::string(tok) + "'");
    int u = parse_int(tok.substr(0, dash), tok);
    int v = parse_int(tok.substr(dash + 1), tok);
    if (u == v) throw error(errc::parse_error, "degenerate chord token '" + std::string(tok) + "'");
    chords.push_back(make_chord(u, v));
  }
  std::sort(chords.begin(), chords.end());
  return ChordDiagram{n, std::move(chords)};
}

}  // namespace kchord
