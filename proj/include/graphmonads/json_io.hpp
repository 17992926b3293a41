#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "graphmonads/matching.hpp"
#include "graphmonads/steiner.hpp"

namespace graphmonads {

// JSON shapes used by the CLI and the bindings:
//   hom       {"map": {"a": "b", ...}}
//   matching  {"graph": <edge-list text or file reference>,
//              "matching": {"a": "b", ...}}   (full symmetric map)
//   psts      {"points": ["a", ...], "triples": [["a","b","c"], ...]}
//   algebra   {"graph": <edge-list text>, "alpha": {"a~0": "a", ...}}
// Labels are rendered in their canonical textual form throughout, and
// objects serialize with sorted keys, so output is byte-stable.

std::string read_text_file(const std::filesystem::path& path);

// A "graph" field holds either inline edge-list text or the name of a
// file containing one (resolved against base_dir). Text containing a
// newline is always inline; otherwise an existing file wins.
Graph graph_from_json_field(const nlohmann::json& field, const std::filesystem::path& base_dir);

nlohmann::json label_map_to_json(const LabelMap& m);
LabelMap label_map_from_json(const nlohmann::json& obj);

nlohmann::json hom_to_json(const Hom& h);

// Raw matching document: graph plus the (possibly invalid) partner map,
// so validators can report violations instead of refusing to load.
struct MatchingDoc {
  Graph graph;
  LabelMap partner;
};

MatchingDoc matching_doc_from_json(const nlohmann::json& doc,
                                   const std::optional<Graph>& graph_override = {},
                                   const std::filesystem::path& base_dir = {});
nlohmann::json matching_to_json(const PerfectMatching& pm);
PerfectMatching matching_from_json(const nlohmann::json& doc,
                                   const std::optional<Graph>& graph_override = {},
                                   const std::filesystem::path& base_dir = {});

struct PstsDoc {
  std::vector<VertexLabel> points;
  std::vector<Triple> triples;
};

PstsDoc psts_doc_from_json(const nlohmann::json& doc);
nlohmann::json psts_to_json(const Psts& p);
Psts psts_from_json(const nlohmann::json& doc);

nlohmann::json t_algebra_to_json(const TAlgebra& alg);
TAlgebra t_algebra_from_json(const nlohmann::json& doc,
                             const std::filesystem::path& base_dir = {});
nlohmann::json s_algebra_to_json(const SAlgebra& alg);
SAlgebra s_algebra_from_json(const nlohmann::json& doc,
                             const std::filesystem::path& base_dir = {});

}  // namespace graphmonads
