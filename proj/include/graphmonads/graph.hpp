#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "graphmonads/label.hpp"

namespace graphmonads {

// Unordered pair of distinct labels, stored with lo() < hi() so that
// set-of-edges equality is plain structural equality.
class Edge {
 public:
  Edge(const VertexLabel& a, const VertexLabel& b);  // throws LoopEdge when a == b

  const VertexLabel& lo() const { return lo_; }
  const VertexLabel& hi() const { return hi_; }

  bool contains(const VertexLabel& v) const { return v == lo_ || v == hi_; }
  const VertexLabel& other(const VertexLabel& v) const;

  std::string str() const { return "{" + lo_.str() + "," + hi_.str() + "}"; }

  friend std::strong_ordering operator<=>(const Edge& a, const Edge& b) {
    if (auto c = a.lo_ <=> b.lo_; c != 0) return c;
    return a.hi_ <=> b.hi_;
  }
  friend bool operator==(const Edge& a, const Edge& b) { return (a <=> b) == 0; }

 private:
  VertexLabel lo_;
  VertexLabel hi_;
};

// Finite simple loopless undirected graph. Immutable after construction;
// vertex and edge lists are kept sorted in canonical label order, and the
// empty graph is a valid value.
class Graph {
 public:
  Graph() = default;

  const std::vector<VertexLabel>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  bool has_vertex(const VertexLabel& v) const;
  bool adjacent(const VertexLabel& u, const VertexLabel& v) const;
  // Sorted list of neighbours; throws VertexNotInGraph for unknown v.
  std::vector<VertexLabel> neighbors(const VertexLabel& v) const;
  std::vector<VertexLabel> common_neighbors(const VertexLabel& u, const VertexLabel& v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
  }

 private:
  friend Graph make_graph(std::vector<VertexLabel> vertices,
                          std::vector<std::pair<VertexLabel, VertexLabel>> edge_pairs);

  std::vector<VertexLabel> vertices_;
  std::vector<Edge> edges_;
};

// Validates the graph invariants: every endpoint present, no loops.
// Duplicate vertices and edges are deduplicated by set semantics.
Graph make_graph(std::vector<VertexLabel> vertices,
                 std::vector<std::pair<VertexLabel, VertexLabel>> edge_pairs);

// Categorical (tensor) product: vertices are all (a,b) pairs and
// (a1,b1) ~ (a2,b2) iff a1 ~ a2 and b1 ~ b2.
Graph graph_product(const Graph& a, const Graph& b);

// Subgraph on `keep` with every edge whose endpoints both survive.
// Throws VertexNotInGraph when keep is not a subset of the vertices.
Graph induced_subgraph(const Graph& g, const std::vector<VertexLabel>& keep);

}  // namespace graphmonads
