#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "graphmonads/check.hpp"
#include "graphmonads/graph.hpp"

namespace graphmonads {

using LabelMap = std::map<VertexLabel, VertexLabel>;

// Checks the edge-preservation law for a total map V(src) -> V(dst).
// Structural defects (map not total on V(src), image outside V(dst))
// throw MapNotTotal / ImageOutsideTarget; a law failure returns ok=false
// with the first offending edge in canonical order.
CheckResult is_homomorphism(const Graph& src, const Graph& dst, const LabelMap& map);

// A validated graph homomorphism. Construction enforces totality, image
// containment and the edge law; values are immutable afterwards.
class Hom {
 public:
  Hom(Graph src, Graph dst, LabelMap map);

  const Graph& src() const { return src_; }
  const Graph& dst() const { return dst_; }
  const LabelMap& map() const { return map_; }

  const VertexLabel& operator()(const VertexLabel& v) const;

  friend bool operator==(const Hom& a, const Hom& b) {
    return a.src_ == b.src_ && a.dst_ == b.dst_ && a.map_ == b.map_;
  }
  // Ordering for deterministic enumeration output; compares the maps.
  friend bool operator<(const Hom& a, const Hom& b) { return a.map_ < b.map_; }

 private:
  Graph src_;
  Graph dst_;
  LabelMap map_;
};

Hom identity_hom(const Graph& g);

// g after f; throws DomainMismatch unless dst(f) == src(g).
Hom compose(const Hom& g, const Hom& f);

// A composite written in application order: steps[0] is applied first.
struct HomPath {
  std::vector<Hom> steps;
};

Hom compose_path(const HomPath& path);

// True iff all composites agree pointwise; they must share source and
// target. The witness is the first disagreeing vertex in canonical order.
CheckResult diagram_commutes(const std::vector<HomPath>& paths);

inline constexpr std::uint64_t kDefaultHomCandidateCap = 10'000'000;

// All homomorphisms src -> dst in lexicographic order of the underlying
// maps (complete and duplicate-free). Throws SearchSpaceTooLarge when
// |V(dst)|^|V(src)| exceeds candidate_cap.
std::vector<Hom> enumerate_homs(const Graph& src, const Graph& dst,
                                std::uint64_t candidate_cap = kDefaultHomCandidateCap);

// Projections of the categorical product and the pairing <f,g> realizing
// its universal property.
Hom product_projection_left(const Graph& a, const Graph& b);
Hom product_projection_right(const Graph& a, const Graph& b);
Hom pair_into_product(const Hom& f, const Hom& g);

}  // namespace graphmonads
