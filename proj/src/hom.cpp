#include "graphmonads/hom.hpp"

#include <algorithm>

#include "graphmonads/errors.hpp"

namespace graphmonads {

CheckResult is_homomorphism(const Graph& src, const Graph& dst, const LabelMap& map) {
  for (const auto& [v, image] : map) {
    if (!src.has_vertex(v)) {
      throw MapNotTotal("map is defined on " + v.str() + ", which is not a source vertex");
    }
    if (!dst.has_vertex(image)) {
      throw ImageOutsideTarget("image " + image.str() + " of " + v.str() +
                               " is not a target vertex");
    }
  }
  for (const VertexLabel& v : src.vertices()) {
    if (!map.contains(v)) {
      throw MapNotTotal("map is undefined on source vertex " + v.str());
    }
  }
  for (const Edge& e : src.edges()) {
    const VertexLabel& fu = map.at(e.lo());
    const VertexLabel& fv = map.at(e.hi());
    if (fu == fv || !dst.adjacent(fu, fv)) {
      return CheckResult::fail("edge " + e.str() + " maps to non-edge {" + fu.str() + "," +
                               fv.str() + "}");
    }
  }
  return CheckResult::pass();
}

Hom::Hom(Graph src, Graph dst, LabelMap map)
    : src_(std::move(src)), dst_(std::move(dst)), map_(std::move(map)) {
  CheckResult law = is_homomorphism(src_, dst_, map_);
  if (!law) {
    throw HomomorphismViolation(law.witness);
  }
}

const VertexLabel& Hom::operator()(const VertexLabel& v) const {
  auto it = map_.find(v);
  if (it == map_.end()) {
    throw VertexNotInGraph("vertex " + v.str() + " is not in the source of the homomorphism");
  }
  return it->second;
}

Hom identity_hom(const Graph& g) {
  LabelMap map;
  for (const VertexLabel& v : g.vertices()) map.emplace(v, v);
  return Hom(g, g, std::move(map));
}

Hom compose(const Hom& g, const Hom& f) {
  if (!(f.dst() == g.src())) {
    throw DomainMismatch("compose: target of the first factor differs from source of the second");
  }
  LabelMap map;
  for (const auto& [v, mid] : f.map()) {
    map.emplace(v, g(mid));
  }
  return Hom(f.src(), g.dst(), std::move(map));
}

Hom compose_path(const HomPath& path) {
  if (path.steps.empty()) {
    throw DomainMismatch("empty composite");
  }
  Hom acc = path.steps.front();
  for (std::size_t i = 1; i < path.steps.size(); ++i) {
    acc = compose(path.steps[i], acc);
  }
  return acc;
}

CheckResult diagram_commutes(const std::vector<HomPath>& paths) {
  if (paths.empty()) return CheckResult::pass();
  std::vector<Hom> composites;
  composites.reserve(paths.size());
  for (const HomPath& p : paths) composites.push_back(compose_path(p));
  const Hom& first = composites.front();
  for (std::size_t i = 1; i < composites.size(); ++i) {
    if (!(composites[i].src() == first.src()) || !(composites[i].dst() == first.dst())) {
      throw DomainMismatch("diagram paths do not share source and target");
    }
  }
  for (const VertexLabel& v : first.src().vertices()) {
    for (std::size_t i = 1; i < composites.size(); ++i) {
      if (composites[i](v) != first(v)) {
        return CheckResult::fail("vertex " + v.str() + ": path 0 gives " + first(v).str() +
                                 ", path " + std::to_string(i) + " gives " +
                                 composites[i](v).str());
      }
    }
  }
  return CheckResult::pass();
}

std::vector<Hom> enumerate_homs(const Graph& src, const Graph& dst,
                                std::uint64_t candidate_cap) {
  const auto& sv = src.vertices();
  const auto& dv = dst.vertices();
  const std::size_t n = sv.size();
  const std::size_t m = dv.size();

  std::uint64_t candidates = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (m != 0 && candidates > candidate_cap / m) {
      throw SearchSpaceTooLarge("candidate maps exceed cap of " + std::to_string(candidate_cap));
    }
    candidates *= m;
  }

  std::vector<Hom> out;
  if (n == 0) {
    out.emplace_back(src, dst, LabelMap{});
    return out;
  }
  if (m == 0) return out;

  // index-based adjacency for the DFS inner loop
  std::vector<std::vector<char>> dst_adj(m, std::vector<char>(m, 0));
  for (const Edge& e : dst.edges()) {
    auto i = std::lower_bound(dv.begin(), dv.end(), e.lo()) - dv.begin();
    auto j = std::lower_bound(dv.begin(), dv.end(), e.hi()) - dv.begin();
    dst_adj[i][j] = dst_adj[j][i] = 1;
  }
  // for each source vertex, the earlier vertices it is adjacent to
  std::vector<std::vector<std::size_t>> earlier(n);
  for (const Edge& e : src.edges()) {
    auto i = std::lower_bound(sv.begin(), sv.end(), e.lo()) - sv.begin();
    auto j = std::lower_bound(sv.begin(), sv.end(), e.hi()) - sv.begin();
    earlier[std::max(i, j)].push_back(std::min(i, j));
  }

  std::vector<std::size_t> image(n, 0);
  auto emit = [&] {
    LabelMap map;
    for (std::size_t i = 0; i < n; ++i) map.emplace(sv[i], dv[image[i]]);
    out.emplace_back(src, dst, std::move(map));
  };
  // lexicographic DFS over image choices
  std::size_t depth = 0;
  std::vector<std::size_t> next(n, 0);
  while (true) {
    if (next[depth] == m) {
      if (depth == 0) break;
      next[depth] = 0;
      --depth;
      ++next[depth];
      continue;
    }
    image[depth] = next[depth];
    bool ok = true;
    for (std::size_t j : earlier[depth]) {
      if (!dst_adj[image[depth]][image[j]]) {
        ok = false;
        break;
      }
    }
    if (!ok) {
      ++next[depth];
      continue;
    }
    if (depth + 1 == n) {
      emit();
      ++next[depth];
    } else {
      ++depth;
      next[depth] = 0;
    }
  }
  return out;
}

Hom product_projection_left(const Graph& a, const Graph& b) {
  Graph prod = graph_product(a, b);
  LabelMap map;
  for (const VertexLabel& v : prod.vertices()) map.emplace(v, v.left());
  return Hom(std::move(prod), a, std::move(map));
}

Hom product_projection_right(const Graph& a, const Graph& b) {
  Graph prod = graph_product(a, b);
  LabelMap map;
  for (const VertexLabel& v : prod.vertices()) map.emplace(v, v.right());
  return Hom(std::move(prod), b, std::move(map));
}

Hom pair_into_product(const Hom& f, const Hom& g) {
  if (!(f.src() == g.src())) {
    throw DomainMismatch("pairing requires homomorphisms with a common source");
  }
  Graph prod = graph_product(f.dst(), g.dst());
  LabelMap map;
  for (const VertexLabel& v : f.src().vertices()) {
    map.emplace(v, VertexLabel::pair(f(v), g(v)));
  }
  return Hom(f.src(), std::move(prod), std::move(map));
}

}  // namespace graphmonads
