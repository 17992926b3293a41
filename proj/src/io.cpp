#include "graphmonads/io.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "graphmonads/errors.hpp"

namespace graphmonads {

namespace {

std::vector<std::string> split_tokens(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

VertexLabel parse_label_at(const std::string& tok, int line_no) {
  try {
    return VertexLabel::parse(tok);
  } catch (const InvalidLabel& e) {
    throw ParseError(e.what(), line_no);
  }
}

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::vector<VertexLabel> vertices;
  std::vector<std::pair<VertexLabel, VertexLabel>> edges;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string line(text.substr(pos, nl == std::string_view::npos ? std::string_view::npos
                                                                   : nl - pos));
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();

    std::size_t first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;

    std::vector<std::string> toks = split_tokens(line);
    if (toks[0] == "vertices:") {
      for (std::size_t i = 1; i < toks.size(); ++i) {
        vertices.push_back(parse_label_at(toks[i], line_no));
      }
      continue;
    }
    if (toks.size() != 2) {
      throw ParseError("expected two vertex tokens, got " + std::to_string(toks.size()), line_no);
    }
    VertexLabel u = parse_label_at(toks[0], line_no);
    VertexLabel v = parse_label_at(toks[1], line_no);
    if (u == v) {
      throw LoopEdge("line " + std::to_string(line_no) + ": loop edge at vertex " + u.str());
    }
    vertices.push_back(u);
    vertices.push_back(v);
    edges.emplace_back(std::move(u), std::move(v));
  }
  return make_graph(std::move(vertices), std::move(edges));
}

std::string serialize_edge_list(const Graph& g) {
  std::vector<VertexLabel> isolated;
  for (const VertexLabel& v : g.vertices()) {
    bool covered = false;
    for (const Edge& e : g.edges()) {
      if (e.contains(v)) {
        covered = true;
        break;
      }
    }
    if (!covered) isolated.push_back(v);
  }

  std::string out;
  if (!isolated.empty()) {
    out += "vertices:";
    for (const VertexLabel& v : isolated) {
      out += ' ';
      out += v.str();
    }
    out += '\n';
  }
  for (const Edge& e : g.edges()) {
    out += e.lo().str();
    out += ' ';
    out += e.hi().str();
    out += '\n';
  }
  return out;
}

std::string to_dot(const Graph& g) { return to_dot(g, DotDecorations{}); }

std::string to_dot(const Graph& g, const DotDecorations& deco) {
  static const char* kPalette[] = {"red",    "blue",   "forestgreen", "darkorange",
                                   "purple", "brown",  "deeppink",    "teal"};
  constexpr std::size_t kPaletteSize = sizeof(kPalette) / sizeof(kPalette[0]);

  std::map<Edge, std::string> attrs;
  for (const Edge& e : deco.matched_edges) {
    attrs[e] = " [style=bold, color=red]";
  }
  for (std::size_t i = 0; i < deco.triples.size(); ++i) {
    const auto& t = deco.triples[i];
    const char* color = kPalette[i % kPaletteSize];
    for (int a = 0; a < 3; ++a) {
      for (int b = a + 1; b < 3; ++b) {
        if (t[a] == t[b]) continue;
        Edge e(t[a], t[b]);
        attrs[e] = std::string(" [color=") + color + "]";
      }
    }
  }

  std::string out = "graph {\n";
  for (const VertexLabel& v : g.vertices()) {
    out += "  " + quote(v.str()) + ";\n";
  }
  for (const Edge& e : g.edges()) {
    out += "  " + quote(e.lo().str()) + " -- " + quote(e.hi().str());
    auto it = attrs.find(e);
    if (it != attrs.end()) out += it->second;
    out += ";\n";
  }
  out += "}\n";
  return out;
}

}  // namespace graphmonads
