#include "graphmonads/graph.hpp"

#include <algorithm>

#include "graphmonads/errors.hpp"

namespace graphmonads {

Edge::Edge(const VertexLabel& a, const VertexLabel& b) : lo_(a), hi_(b) {
  if (a == b) {
    throw LoopEdge("loop edge at vertex " + a.str());
  }
  if (hi_ < lo_) std::swap(lo_, hi_);
}

const VertexLabel& Edge::other(const VertexLabel& v) const {
  if (v == lo_) return hi_;
  if (v == hi_) return lo_;
  throw VertexNotInGraph("vertex " + v.str() + " is not an endpoint of " + str());
}

bool Graph::has_vertex(const VertexLabel& v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Graph::adjacent(const VertexLabel& u, const VertexLabel& v) const {
  if (u == v) return false;
  Edge e(u, v);
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

std::vector<VertexLabel> Graph::neighbors(const VertexLabel& v) const {
  if (!has_vertex(v)) {
    throw VertexNotInGraph("vertex " + v.str() + " is not in the graph");
  }
  std::vector<VertexLabel> out;
  for (const Edge& e : edges_) {
    if (e.contains(v)) out.push_back(e.other(v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VertexLabel> Graph::common_neighbors(const VertexLabel& u,
                                                 const VertexLabel& v) const {
  std::vector<VertexLabel> nu = neighbors(u);
  std::vector<VertexLabel> nv = neighbors(v);
  std::vector<VertexLabel> out;
  std::set_intersection(nu.begin(), nu.end(), nv.begin(), nv.end(), std::back_inserter(out));
  return out;
}

Graph make_graph(std::vector<VertexLabel> vertices,
                 std::vector<std::pair<VertexLabel, VertexLabel>> edge_pairs) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());

  std::vector<Edge> edges;
  edges.reserve(edge_pairs.size());
  for (const auto& [a, b] : edge_pairs) {
    Edge e(a, b);  // rejects loops
    if (!std::binary_search(vertices.begin(), vertices.end(), e.lo())) {
      throw EdgeEndpointMissing("edge endpoint " + e.lo().str() + " is not a declared vertex");
    }
    if (!std::binary_search(vertices.begin(), vertices.end(), e.hi())) {
      throw EdgeEndpointMissing("edge endpoint " + e.hi().str() + " is not a declared vertex");
    }
    edges.push_back(std::move(e));
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  Graph g;
  g.vertices_ = std::move(vertices);
  g.edges_ = std::move(edges);
  return g;
}

Graph graph_product(const Graph& a, const Graph& b) {
  std::vector<VertexLabel> vertices;
  vertices.reserve(a.vertex_count() * b.vertex_count());
  for (const VertexLabel& va : a.vertices()) {
    for (const VertexLabel& vb : b.vertices()) {
      vertices.push_back(VertexLabel::pair(va, vb));
    }
  }
  std::vector<std::pair<VertexLabel, VertexLabel>> edges;
  for (const Edge& ea : a.edges()) {
    for (const Edge& eb : b.edges()) {
      // both orientations of the second coordinate
      edges.emplace_back(VertexLabel::pair(ea.lo(), eb.lo()), VertexLabel::pair(ea.hi(), eb.hi()));
      edges.emplace_back(VertexLabel::pair(ea.lo(), eb.hi()), VertexLabel::pair(ea.hi(), eb.lo()));
    }
  }
  return make_graph(std::move(vertices), std::move(edges));
}

Graph induced_subgraph(const Graph& g, const std::vector<VertexLabel>& keep) {
  for (const VertexLabel& v : keep) {
    if (!g.has_vertex(v)) {
      throw VertexNotInGraph("vertex " + v.str() + " is not in the graph");
    }
  }
  std::vector<VertexLabel> vertices = keep;
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());

  std::vector<std::pair<VertexLabel, VertexLabel>> edges;
  for (const Edge& e : g.edges()) {
    if (std::binary_search(vertices.begin(), vertices.end(), e.lo()) &&
        std::binary_search(vertices.begin(), vertices.end(), e.hi())) {
      edges.emplace_back(e.lo(), e.hi());
    }
  }
  return make_graph(std::move(vertices), std::move(edges));
}

}  // namespace graphmonads
