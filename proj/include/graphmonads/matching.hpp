#pragma once

#include <cstddef>
#include <vector>

#include "graphmonads/check.hpp"
#include "graphmonads/hom.hpp"

namespace graphmonads {

// ---------------------------------------------------------------------
// The pendant-edge endofunctor T: every vertex x becomes the pair of
// vertices x~0 (the original) and x~1 (a new leaf attached to it).
// ---------------------------------------------------------------------

Graph T_on_objects(const Graph& a);
Hom T_on_morphisms(const Hom& f);

// Unit x -> x~0 and multiplication (v~i)~j -> v~(i xor j).
Hom eta_T(const Graph& a);
Hom mu_T(const Graph& a);

// Evaluates both unit triangles and the associativity square pointwise,
// on V(T(A)) and V(T^3(A)) respectively.
LawReport check_monad_laws_T(const Graph& a);

// A perfect matching in functional form: an involution m with {x,m(x)}
// always an edge (so m has no fixed points).
CheckResult is_perfect_matching(const Graph& g, const LabelMap& partner);

class PerfectMatching {
 public:
  PerfectMatching(Graph graph, LabelMap partner);  // throws InvalidMatching

  const Graph& graph() const { return graph_; }
  const LabelMap& partner_map() const { return partner_; }
  const VertexLabel& partner(const VertexLabel& v) const;

  friend bool operator==(const PerfectMatching& a, const PerfectMatching& b) {
    return a.graph_ == b.graph_ && a.partner_ == b.partner_;
  }
  friend bool operator<(const PerfectMatching& a, const PerfectMatching& b) {
    return a.partner_ < b.partner_;
  }

 private:
  Graph graph_;
  LabelMap partner_;
};

// Eilenberg-Moore algebra for T: alpha : T(A) -> A satisfying the unit
// triangle and the multiplication square.
CheckResult is_T_algebra(const Graph& a, const Hom& alpha);

class TAlgebra {
 public:
  TAlgebra(Graph graph, Hom alpha);  // throws DomainMismatch / NotAnAlgebra

  const Graph& graph() const { return graph_; }
  const Hom& alpha() const { return alpha_; }

  friend bool operator==(const TAlgebra& a, const TAlgebra& b) {
    return a.graph_ == b.graph_ && a.alpha_ == b.alpha_;
  }
  friend bool operator<(const TAlgebra& a, const TAlgebra& b) {
    return a.alpha_ < b.alpha_;
  }

 private:
  Graph graph_;
  Hom alpha_;
};

// Morphisms of matched graphs: homomorphisms with f(m(x)) = m'(f(x)).
CheckResult is_perf_morphism(const Hom& f, const PerfectMatching& a, const PerfectMatching& b);

// The two directions of the algebra/matching bijection; both round-trips
// are identities.
TAlgebra matching_to_algebra(const PerfectMatching& pm);
PerfectMatching algebra_to_matching(const TAlgebra& alg);

// Product in the category of matched graphs: the tensor product of the
// underlying graphs with m(a,b) = (m(a), m'(b)).
PerfectMatching product_perf(const PerfectMatching& a, const PerfectMatching& b);

// Equalizer of two matched-graph morphisms f,g : (A,m) -> (B,m'): the
// restriction of m to the induced subgraph on {v : f(v) = g(v)}.
struct PerfEqualizer {
  PerfectMatching object;
  Hom inclusion;
};

PerfEqualizer equalizer_perf(const Hom& f, const Hom& g, const PerfectMatching& a,
                             const PerfectMatching& b);

inline constexpr std::size_t kDefaultMatchingVertexCap = 12;

// Backtracking enumeration of all perfect matchings, in lexicographic
// order of the partner maps. Throws SearchSpaceTooLarge above the cap.
std::vector<PerfectMatching> enumerate_matchings(const Graph& g,
                                                 std::size_t vertex_cap = kDefaultMatchingVertexCap);

// Independent enumeration of T-algebras: the unit law pins alpha on the
// originals, so only pendant images are searched (each must be a
// neighbour); candidates are filtered by the algebra diagrams.
std::vector<TAlgebra> enumerate_T_algebras(const Graph& g,
                                           std::size_t vertex_cap = kDefaultMatchingVertexCap);

std::vector<Hom> enumerate_perf_morphisms(const PerfectMatching& a, const PerfectMatching& b,
                                          std::uint64_t candidate_cap = kDefaultHomCandidateCap);

}  // namespace graphmonads
