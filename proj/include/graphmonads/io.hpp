#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "graphmonads/graph.hpp"

namespace graphmonads {

// Edge-list text format:
//   - UTF-8 lines; blank lines and lines whose first non-space character
//     is '#' are ignored
//   - an optional header "vertices: t1 t2 ..." declares isolated vertices
//   - every other line holds exactly two whitespace-separated labels
// Errors carry the 1-based line number.
Graph parse_edge_list(std::string_view text);

// Canonical form: one "vertices:" header when isolated vertices exist,
// then one edge per line in canonical order. parse(serialize(g)) == g.
std::string serialize_edge_list(const Graph& g);

// Optional highlights for to_dot: matched edges are drawn bold, triple
// groups are coloured per group (one colour per triple).
struct DotDecorations {
  std::vector<Edge> matched_edges;
  std::vector<std::array<VertexLabel, 3>> triples;
};

std::string to_dot(const Graph& g);
std::string to_dot(const Graph& g, const DotDecorations& deco);

}  // namespace graphmonads
