#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "graphmonads/check.hpp"
#include "graphmonads/hom.hpp"

namespace graphmonads {

// ---------------------------------------------------------------------
// The triangle endofunctor S: vertices of S(G) are the singletons {u}
// and the edges {u,v} of G; every edge of G grows into a triangle
// {u},{v},{u,v}.
// ---------------------------------------------------------------------

Graph S_on_objects(const Graph& g);
Hom S_on_morphisms(const Hom& f);

// Unit v -> {v}; multiplication takes a vertex of S^2(G) (a set of sets)
// to the symmetric difference of its member sets.
Hom eta_S(const Graph& g);
Hom mu_S(const Graph& g);

// Symmetric difference of the member sets of a nested set label; the
// computation behind mu. Throws MalformedNestedLabel unless the input is
// a set label whose elements are set labels.
VertexLabel mu_S_vertex(const VertexLabel& nested);

// Unit triangles pointwise on V(S(G)); associativity square pointwise on
// V(S^3(G)) (triply nested set labels).
LawReport check_monad_laws_S(const Graph& g);

// ---------------------------------------------------------------------
// Partial Steiner triple systems
// ---------------------------------------------------------------------

// Canonically sorted 3-element subset.
using Triple = std::array<VertexLabel, 3>;

Triple make_triple(const VertexLabel& a, const VertexLabel& b, const VertexLabel& c);
std::string triple_str(const Triple& t);

// The defining conditions: triples are 3-subsets of the point set and
// every pair of points lies in at most one triple.
CheckResult check_psts(const std::vector<VertexLabel>& points, const std::vector<Triple>& triples);

class Psts {
 public:
  Psts(std::vector<VertexLabel> points, std::vector<Triple> triples);  // throws InvalidTripleSystem

  const std::vector<VertexLabel>& points() const { return points_; }
  const std::vector<Triple>& triples() const { return triples_; }

  friend bool operator==(const Psts& a, const Psts& b) {
    return a.points_ == b.points_ && a.triples_ == b.triples_;
  }
  friend bool operator<(const Psts& a, const Psts& b) {
    if (a.points_ != b.points_) return a.points_ < b.points_;
    return a.triples_ < b.triples_;
  }

 private:
  std::vector<VertexLabel> points_;
  std::vector<Triple> triples_;
};

// Complete (a Steiner triple system) when every pair of points lies in
// exactly one triple.
bool is_complete_sts(const Psts& p);

// Graph joining exactly the pairs covered by some triple.
Graph support_graph(const Psts& p);

// Point maps sending every triple to a triple (hence injective on each
// triple). Throws MapNotTotal / ImageOutsideTarget on structural defects.
CheckResult is_psts_morphism(const LabelMap& f, const Psts& p, const Psts& q);

// ---------------------------------------------------------------------
// Algebras for S and the PSTS correspondence
// ---------------------------------------------------------------------

CheckResult is_S_algebra(const Graph& g, const Hom& alpha);

class SAlgebra {
 public:
  SAlgebra(Graph graph, Hom alpha);  // throws DomainMismatch / NotAnAlgebra

  const Graph& graph() const { return graph_; }
  const Hom& alpha() const { return alpha_; }

  friend bool operator==(const SAlgebra& a, const SAlgebra& b) {
    return a.graph_ == b.graph_ && a.alpha_ == b.alpha_;
  }
  friend bool operator<(const SAlgebra& a, const SAlgebra& b) {
    return a.alpha_ < b.alpha_;
  }

 private:
  Graph graph_;
  Hom alpha_;
};

// The bijection: triples are {u, v, alpha({u,v})} over the edges; the
// inverse completes each covered pair inside its unique triple. Both
// round-trips are identities.
Psts algebra_to_psts(const SAlgebra& alg);
SAlgebra psts_to_algebra(const Psts& p);

// Product in the category of partial Steiner triple systems, computed
// through the completion maps of the factors:
//   gamma({(a1,b1),(a2,b2)}) = (alpha({a1,a2}), beta({b1,b2})).
// Equivalently the 3-subsets of the point product whose projections are
// triples of the factors; the test suite holds that second computation
// as an independent oracle.
Psts product_psts(const Psts& p, const Psts& q);

inline constexpr std::size_t kDefaultStsVertexCap = 9;

// All partial Steiner triple systems whose support graph is exactly G,
// by backtracking triangle assignment over the edges.
std::vector<Psts> enumerate_psts_on(const Graph& g, std::size_t vertex_cap = kDefaultStsVertexCap);

// Independent enumeration of S-algebras: singleton images are pinned by
// the unit law; edge-vertex images range over common neighbours and are
// filtered by the algebra diagrams.
std::vector<SAlgebra> enumerate_S_algebras(const Graph& g,
                                           std::size_t vertex_cap = kDefaultStsVertexCap);

std::vector<LabelMap> enumerate_psts_morphisms(const Psts& p, const Psts& q,
                                               std::uint64_t candidate_cap = kDefaultHomCandidateCap);

}  // namespace graphmonads
