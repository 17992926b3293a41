#include "graphmonads/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "graphmonads/errors.hpp"
#include "graphmonads/io.hpp"

namespace graphmonads {

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw GraphError("cannot open file " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Graph graph_from_json_field(const nlohmann::json& field, const std::filesystem::path& base_dir) {
  if (!field.is_string()) {
    throw GraphError("\"graph\" field must be a string");
  }
  std::string value = field.get<std::string>();
  if (!value.empty() && value.find('\n') == std::string::npos) {
    std::filesystem::path candidate = base_dir / value;
    if (std::filesystem::exists(candidate) && !std::filesystem::is_directory(candidate)) {
      return parse_edge_list(read_text_file(candidate));
    }
  }
  return parse_edge_list(value);
}

nlohmann::json label_map_to_json(const LabelMap& m) {
  nlohmann::json obj = nlohmann::json::object();
  for (const auto& [k, v] : m) {
    obj[k.str()] = v.str();
  }
  return obj;
}

LabelMap label_map_from_json(const nlohmann::json& obj) {
  if (!obj.is_object()) {
    throw GraphError("expected a JSON object of label pairs");
  }
  LabelMap out;
  for (const auto& [k, v] : obj.items()) {
    if (!v.is_string()) {
      throw GraphError("value for key \"" + k + "\" must be a string");
    }
    out.emplace(VertexLabel::parse(k), VertexLabel::parse(v.get<std::string>()));
  }
  return out;
}

nlohmann::json hom_to_json(const Hom& h) {
  return nlohmann::json{{"map", label_map_to_json(h.map())}};
}

MatchingDoc matching_doc_from_json(const nlohmann::json& doc,
                                   const std::optional<Graph>& graph_override,
                                   const std::filesystem::path& base_dir) {
  if (!doc.is_object() || !doc.contains("matching")) {
    throw GraphError("matching document needs a \"matching\" object");
  }
  Graph graph;
  if (graph_override) {
    graph = *graph_override;
  } else if (doc.contains("graph")) {
    graph = graph_from_json_field(doc.at("graph"), base_dir);
  } else {
    throw GraphError("matching document needs a \"graph\" field or an explicit graph");
  }
  return MatchingDoc{std::move(graph), label_map_from_json(doc.at("matching"))};
}

nlohmann::json matching_to_json(const PerfectMatching& pm) {
  return nlohmann::json{{"graph", serialize_edge_list(pm.graph())},
                        {"matching", label_map_to_json(pm.partner_map())}};
}

PerfectMatching matching_from_json(const nlohmann::json& doc,
                                   const std::optional<Graph>& graph_override,
                                   const std::filesystem::path& base_dir) {
  MatchingDoc raw = matching_doc_from_json(doc, graph_override, base_dir);
  return PerfectMatching(std::move(raw.graph), std::move(raw.partner));
}

PstsDoc psts_doc_from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("points") || !doc.contains("triples")) {
    throw GraphError("triple-system document needs \"points\" and \"triples\"");
  }
  PstsDoc out;
  for (const auto& p : doc.at("points")) {
    if (!p.is_string()) throw GraphError("points must be strings");
    out.points.push_back(VertexLabel::parse(p.get<std::string>()));
  }
  for (const auto& t : doc.at("triples")) {
    if (!t.is_array() || t.size() != 3) {
      throw GraphError("each triple must be an array of three labels");
    }
    std::array<VertexLabel, 3> triple{VertexLabel::parse(t.at(0).get<std::string>()),
                                      VertexLabel::parse(t.at(1).get<std::string>()),
                                      VertexLabel::parse(t.at(2).get<std::string>())};
    std::sort(triple.begin(), triple.end());
    out.triples.push_back(std::move(triple));
  }
  return out;
}

nlohmann::json psts_to_json(const Psts& p) {
  nlohmann::json points = nlohmann::json::array();
  for (const VertexLabel& v : p.points()) points.push_back(v.str());
  nlohmann::json triples = nlohmann::json::array();
  for (const Triple& t : p.triples()) {
    triples.push_back({t[0].str(), t[1].str(), t[2].str()});
  }
  return nlohmann::json{{"points", std::move(points)}, {"triples", std::move(triples)}};
}

Psts psts_from_json(const nlohmann::json& doc) {
  PstsDoc raw = psts_doc_from_json(doc);
  return Psts(std::move(raw.points), std::move(raw.triples));
}

nlohmann::json t_algebra_to_json(const TAlgebra& alg) {
  return nlohmann::json{{"graph", serialize_edge_list(alg.graph())},
                        {"alpha", label_map_to_json(alg.alpha().map())}};
}

TAlgebra t_algebra_from_json(const nlohmann::json& doc, const std::filesystem::path& base_dir) {
  if (!doc.is_object() || !doc.contains("graph") || !doc.contains("alpha")) {
    throw GraphError("algebra document needs \"graph\" and \"alpha\"");
  }
  Graph graph = graph_from_json_field(doc.at("graph"), base_dir);
  Hom alpha(T_on_objects(graph), graph, label_map_from_json(doc.at("alpha")));
  return TAlgebra(std::move(graph), std::move(alpha));
}

nlohmann::json s_algebra_to_json(const SAlgebra& alg) {
  return nlohmann::json{{"graph", serialize_edge_list(alg.graph())},
                        {"alpha", label_map_to_json(alg.alpha().map())}};
}

SAlgebra s_algebra_from_json(const nlohmann::json& doc, const std::filesystem::path& base_dir) {
  if (!doc.is_object() || !doc.contains("graph") || !doc.contains("alpha")) {
    throw GraphError("algebra document needs \"graph\" and \"alpha\"");
  }
  Graph graph = graph_from_json_field(doc.at("graph"), base_dir);
  Hom alpha(S_on_objects(graph), graph, label_map_from_json(doc.at("alpha")));
  return SAlgebra(std::move(graph), std::move(alpha));
}

}  // namespace graphmonads
