#include "graphmonads/steiner.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "graphmonads/errors.hpp"

namespace graphmonads {

Graph S_on_objects(const Graph& g) {
  std::vector<VertexLabel> vertices;
  vertices.reserve(g.vertex_count() + g.edge_count());
  for (const VertexLabel& v : g.vertices()) {
    vertices.push_back(VertexLabel::set({v}));
  }
  std::vector<std::pair<VertexLabel, VertexLabel>> edges;
  edges.reserve(3 * g.edge_count());
  for (const Edge& e : g.edges()) {
    VertexLabel su = VertexLabel::set({e.lo()});
    VertexLabel sv = VertexLabel::set({e.hi()});
    VertexLabel suv = VertexLabel::set({e.lo(), e.hi()});
    edges.emplace_back(su, sv);
    edges.emplace_back(suv, su);
    edges.emplace_back(suv, sv);
    vertices.push_back(std::move(suv));
  }
  return make_graph(std::move(vertices), std::move(edges));
}

Hom S_on_morphisms(const Hom& f) {
  Graph src = S_on_objects(f.src());
  Graph dst = S_on_objects(f.dst());
  LabelMap map;
  for (const VertexLabel& v : f.src().vertices()) {
    map.emplace(VertexLabel::set({v}), VertexLabel::set({f(v)}));
  }
  for (const Edge& e : f.src().edges()) {
    map.emplace(VertexLabel::set({e.lo(), e.hi()}),
                VertexLabel::set({f(e.lo()), f(e.hi())}));
  }
  return Hom(std::move(src), std::move(dst), std::move(map));
}

Hom eta_S(const Graph& g) {
  LabelMap map;
  for (const VertexLabel& v : g.vertices()) {
    map.emplace(v, VertexLabel::set({v}));
  }
  return Hom(g, S_on_objects(g), std::move(map));
}

VertexLabel mu_S_vertex(const VertexLabel& nested) {
  if (!nested.is_set()) {
    throw MalformedNestedLabel("expected a set label, got " + nested.str());
  }
  // symmetric difference: keep the elements occurring an odd number of times
  std::map<VertexLabel, int> count;
  for (const VertexLabel& member : nested.elems()) {
    if (!member.is_set()) {
      throw MalformedNestedLabel("member " + member.str() + " of " + nested.str() +
                                 " is not a set label");
    }
    for (const VertexLabel& x : member.elems()) {
      ++count[x];
    }
  }
  std::vector<VertexLabel> odd;
  for (const auto& [x, c] : count) {
    if (c % 2 == 1) odd.push_back(x);
  }
  if (odd.empty() || odd.size() > 2) {
    throw MalformedNestedLabel("symmetric difference of " + nested.str() + " has " +
                               std::to_string(odd.size()) + " elements");
  }
  return VertexLabel::set(std::move(odd));
}

Hom mu_S(const Graph& g) {
  Graph sg = S_on_objects(g);
  Graph s2g = S_on_objects(sg);
  LabelMap map;
  for (const VertexLabel& w : s2g.vertices()) {
    map.emplace(w, mu_S_vertex(w));
  }
  return Hom(std::move(s2g), std::move(sg), std::move(map));
}

LawReport check_monad_laws_S(const Graph& g) {
  Graph sg = S_on_objects(g);
  Hom mu = mu_S(g);
  Hom id_sg = identity_hom(sg);

  LawReport report;
  report.entries.push_back(
      {"mu . S(eta) = id", diagram_commutes({{{S_on_morphisms(eta_S(g)), mu}}, {{id_sg}}})});
  report.entries.push_back({"mu . eta = id", diagram_commutes({{{eta_S(sg), mu}}, {{id_sg}}})});
  report.entries.push_back(
      {"mu . S(mu) = mu . mu", diagram_commutes({{{S_on_morphisms(mu), mu}}, {{mu_S(sg), mu}}})});
  return report;
}

Triple make_triple(const VertexLabel& a, const VertexLabel& b, const VertexLabel& c) {
  Triple t{a, b, c};
  std::sort(t.begin(), t.end());
  if (t[0] == t[1] || t[1] == t[2]) {
    throw InvalidTripleSystem("triple {" + a.str() + "," + b.str() + "," + c.str() +
                              "} has repeated points");
  }
  return t;
}

std::string triple_str(const Triple& t) {
  return "{" + t[0].str() + "," + t[1].str() + "," + t[2].str() + "}";
}

CheckResult check_psts(const std::vector<VertexLabel>& points,
                       const std::vector<Triple>& triples) {
  std::vector<VertexLabel> sorted = points;
  std::sort(sorted.begin(), sorted.end());
  auto known = [&](const VertexLabel& v) {
    return std::binary_search(sorted.begin(), sorted.end(), v);
  };

  std::map<std::pair<VertexLabel, VertexLabel>, Triple> pair_owner;
  for (const Triple& t : triples) {
    if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2]) {
      return CheckResult::fail("triple " + triple_str(t) + " has repeated points");
    }
    for (const VertexLabel& x : t) {
      if (!known(x)) {
        return CheckResult::fail("triple " + triple_str(t) + " uses unknown point " + x.str());
      }
    }
    for (int i = 0; i < 3; ++i) {
      for (int j = i + 1; j < 3; ++j) {
        auto key = std::make_pair(std::min(t[i], t[j]), std::max(t[i], t[j]));
        auto [it, inserted] = pair_owner.emplace(key, t);
        if (!inserted && !(it->second == t)) {
          return CheckResult::fail("pair {" + key.first.str() + "," + key.second.str() +
                                   "} lies in " + triple_str(it->second) + " and " +
                                   triple_str(t));
        }
      }
    }
  }
  return CheckResult::pass();
}

Psts::Psts(std::vector<VertexLabel> points, std::vector<Triple> triples)
    : points_(std::move(points)), triples_(std::move(triples)) {
  std::sort(points_.begin(), points_.end());
  points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
  std::sort(triples_.begin(), triples_.end());
  triples_.erase(std::unique(triples_.begin(), triples_.end()), triples_.end());
  CheckResult check = check_psts(points_, triples_);
  if (!check) {
    throw InvalidTripleSystem(check.witness);
  }
}

bool is_complete_sts(const Psts& p) {
  const auto& pts = p.points();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      bool covered = false;
      for (const Triple& t : p.triples()) {
        if (std::binary_search(t.begin(), t.end(), pts[i]) &&
            std::binary_search(t.begin(), t.end(), pts[j])) {
          covered = true;
          break;
        }
      }
      if (!covered) return false;
    }
  }
  return true;
}

Graph support_graph(const Psts& p) {
  std::vector<std::pair<VertexLabel, VertexLabel>> edges;
  for (const Triple& t : p.triples()) {
    edges.emplace_back(t[0], t[1]);
    edges.emplace_back(t[0], t[2]);
    edges.emplace_back(t[1], t[2]);
  }
  return make_graph(p.points(), std::move(edges));
}

CheckResult is_psts_morphism(const LabelMap& f, const Psts& p, const Psts& q) {
  std::vector<VertexLabel> qpts = q.points();
  for (const auto& [x, y] : f) {
    if (!std::binary_search(p.points().begin(), p.points().end(), x)) {
      throw MapNotTotal("map is defined on " + x.str() + ", which is not a point");
    }
    if (!std::binary_search(qpts.begin(), qpts.end(), y)) {
      throw ImageOutsideTarget("image " + y.str() + " of " + x.str() + " is not a point");
    }
  }
  for (const VertexLabel& x : p.points()) {
    if (!f.contains(x)) {
      throw MapNotTotal("map is undefined on point " + x.str());
    }
  }
  std::vector<Triple> qt = q.triples();
  for (const Triple& t : p.triples()) {
    const VertexLabel& a = f.at(t[0]);
    const VertexLabel& b = f.at(t[1]);
    const VertexLabel& c = f.at(t[2]);
    if (a == b || b == c || a == c) {
      return CheckResult::fail("triple " + triple_str(t) + " collapses under the map");
    }
    if (!std::binary_search(qt.begin(), qt.end(), make_triple(a, b, c))) {
      return CheckResult::fail("image of " + triple_str(t) + " is " +
                               triple_str(make_triple(a, b, c)) + ", not a triple of the target");
    }
  }
  return CheckResult::pass();
}

CheckResult is_S_algebra(const Graph& g, const Hom& alpha) {
  if (!(alpha.src() == S_on_objects(g)) || !(alpha.dst() == g)) {
    throw DomainMismatch("structure map must go from S(G) to G");
  }
  CheckResult unit = diagram_commutes({{{eta_S(g), alpha}}, {{identity_hom(g)}}});
  if (!unit) {
    return CheckResult::fail("unit triangle: " + unit.witness);
  }
  Hom mu = mu_S(g);
  CheckResult square = diagram_commutes({{{S_on_morphisms(alpha), alpha}}, {{mu, alpha}}});
  if (!square) {
    return CheckResult::fail("multiplication square: " + square.witness);
  }
  return CheckResult::pass();
}

SAlgebra::SAlgebra(Graph graph, Hom alpha) : graph_(std::move(graph)), alpha_(std::move(alpha)) {
  CheckResult check = is_S_algebra(graph_, alpha_);
  if (!check) {
    throw NotAnAlgebra(check.witness);
  }
}

Psts algebra_to_psts(const SAlgebra& alg) {
  std::vector<Triple> triples;
  for (const Edge& e : alg.graph().edges()) {
    const VertexLabel& w = alg.alpha()(VertexLabel::set({e.lo(), e.hi()}));
    triples.push_back(make_triple(e.lo(), e.hi(), w));
  }
  return Psts(alg.graph().vertices(), std::move(triples));
}

SAlgebra psts_to_algebra(const Psts& p) {
  Graph g = support_graph(p);

  std::map<std::pair<VertexLabel, VertexLabel>, VertexLabel> completion;
  for (const Triple& t : p.triples()) {
    completion.emplace(std::make_pair(t[0], t[1]), t[2]);
    completion.emplace(std::make_pair(t[0], t[2]), t[1]);
    completion.emplace(std::make_pair(t[1], t[2]), t[0]);
  }

  LabelMap map;
  for (const VertexLabel& v : g.vertices()) {
    map.emplace(VertexLabel::set({v}), v);
  }
  for (const Edge& e : g.edges()) {
    auto it = completion.find(std::make_pair(e.lo(), e.hi()));
    if (it == completion.end()) {
      throw UncoveredEdge("covered pair " + e.str() + " has no completing triple");
    }
    map.emplace(VertexLabel::set({e.lo(), e.hi()}), it->second);
  }
  Hom alpha(S_on_objects(g), g, std::move(map));
  return SAlgebra(std::move(g), std::move(alpha));
}

Psts product_psts(const Psts& p, const Psts& q) {
  std::vector<VertexLabel> points;
  points.reserve(p.points().size() * q.points().size());
  for (const VertexLabel& a : p.points()) {
    for (const VertexLabel& b : q.points()) {
      points.push_back(VertexLabel::pair(a, b));
    }
  }

  // covered pair -> completing point, for each factor
  auto completions = [](const Psts& sys) {
    std::map<std::pair<VertexLabel, VertexLabel>, VertexLabel> out;
    for (const Triple& t : sys.triples()) {
      out.emplace(std::make_pair(t[0], t[1]), t[2]);
      out.emplace(std::make_pair(t[0], t[2]), t[1]);
      out.emplace(std::make_pair(t[1], t[2]), t[0]);
    }
    return out;
  };
  auto cp = completions(p);
  auto cq = completions(q);

  std::vector<Triple> triples;
  for (const auto& [pa, a3] : cp) {
    const auto& [a1, a2] = pa;
    for (const auto& [pb, b3] : cq) {
      const auto& [b1, b2] = pb;
      triples.push_back(make_triple(VertexLabel::pair(a1, b1), VertexLabel::pair(a2, b2),
                                    VertexLabel::pair(a3, b3)));
      triples.push_back(make_triple(VertexLabel::pair(a1, b2), VertexLabel::pair(a2, b1),
                                    VertexLabel::pair(a3, b3)));
    }
  }
  return Psts(std::move(points), std::move(triples));
}

std::vector<Psts> enumerate_psts_on(const Graph& g, std::size_t vertex_cap) {
  if (g.vertex_count() > vertex_cap) {
    throw SearchSpaceTooLarge("triple-system enumeration capped at " +
                              std::to_string(vertex_cap) + " vertices, graph has " +
                              std::to_string(g.vertex_count()));
  }
  const auto& es = g.edges();
  const std::size_t m = es.size();

  std::vector<Psts> out;
  std::vector<char> covered(m, 0);
  std::vector<Triple> chosen;

  auto edge_index = [&](const VertexLabel& u, const VertexLabel& v) {
    Edge e(u, v);
    return static_cast<std::size_t>(std::lower_bound(es.begin(), es.end(), e) - es.begin());
  };

  std::function<void()> rec = [&] {
    std::size_t first = m;
    for (std::size_t i = 0; i < m; ++i) {
      if (!covered[i]) {
        first = i;
        break;
      }
    }
    if (first == m) {
      out.emplace_back(g.vertices(), chosen);
      return;
    }
    const Edge& e = es[first];
    for (const VertexLabel& w : g.common_neighbors(e.lo(), e.hi())) {
      std::size_t i1 = edge_index(e.lo(), w);
      std::size_t i2 = edge_index(e.hi(), w);
      if (covered[i1] || covered[i2]) continue;
      covered[first] = covered[i1] = covered[i2] = 1;
      chosen.push_back(make_triple(e.lo(), e.hi(), w));
      rec();
      chosen.pop_back();
      covered[first] = covered[i1] = covered[i2] = 0;
    }
  };
  rec();
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SAlgebra> enumerate_S_algebras(const Graph& g, std::size_t vertex_cap) {
  if (g.vertex_count() > vertex_cap) {
    throw SearchSpaceTooLarge("algebra enumeration capped at " + std::to_string(vertex_cap) +
                              " vertices, graph has " + std::to_string(g.vertex_count()));
  }
  Graph sg = S_on_objects(g);
  const auto& es = g.edges();
  const std::size_t m = es.size();

  std::vector<std::vector<VertexLabel>> candidates;
  candidates.reserve(m);
  for (const Edge& e : es) {
    candidates.push_back(g.common_neighbors(e.lo(), e.hi()));
  }

  std::vector<SAlgebra> out;
  std::map<Edge, VertexLabel> assigned;
  std::map<Edge, VertexLabel> forced;

  auto passes_square = [&](const LabelMap& alpha) {
    // only edge vertices {X,Y} of S(G) are non-trivial for the square law
    for (const Edge& se : sg.edges()) {
      const VertexLabel& ax = alpha.at(se.lo());
      const VertexLabel& ay = alpha.at(se.hi());
      if (ax == ay) return false;
      const VertexLabel& lhs = alpha.at(VertexLabel::set({ax, ay}));
      const VertexLabel& rhs = alpha.at(mu_S_vertex(VertexLabel::set({se.lo(), se.hi()})));
      if (lhs != rhs) return false;
    }
    return true;
  };

  std::function<void(std::size_t)> rec = [&](std::size_t depth) {
    if (depth == m) {
      LabelMap alpha;
      for (const VertexLabel& v : g.vertices()) {
        alpha.emplace(VertexLabel::set({v}), v);
      }
      for (const auto& [e, w] : assigned) {
        alpha.emplace(VertexLabel::set({e.lo(), e.hi()}), w);
      }
      if (!is_homomorphism(sg, g, alpha)) return;
      if (!passes_square(alpha)) return;
      out.emplace_back(g, Hom(sg, g, std::move(alpha)));
      return;
    }
    const Edge& e = es[depth];
    for (const VertexLabel& w : candidates[depth]) {
      if (auto it = forced.find(e); it != forced.end() && it->second != w) continue;
      // the square law makes the triple {lo,hi,w} mutually consistent
      Edge d1(e.lo(), w);
      Edge d2(e.hi(), w);
      auto consistent = [&](const Edge& d, const VertexLabel& z) {
        if (auto it = assigned.find(d); it != assigned.end()) return it->second == z;
        if (auto it = forced.find(d); it != forced.end()) return it->second == z;
        return true;
      };
      if (!consistent(d1, e.hi()) || !consistent(d2, e.lo())) continue;

      auto saved_forced = forced;
      forced.insert_or_assign(d1, e.hi());
      forced.insert_or_assign(d2, e.lo());
      assigned.emplace(e, w);
      rec(depth + 1);
      assigned.erase(e);
      forced = std::move(saved_forced);
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<LabelMap> enumerate_psts_morphisms(const Psts& p, const Psts& q,
                                               std::uint64_t candidate_cap) {
  const auto& src = p.points();
  const auto& dst = q.points();
  const std::size_t n = src.size();
  const std::size_t m = dst.size();

  std::uint64_t candidates = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (m != 0 && candidates > candidate_cap / m) {
      throw SearchSpaceTooLarge("candidate maps exceed cap of " + std::to_string(candidate_cap));
    }
    candidates *= m;
  }

  std::vector<LabelMap> out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  if (m == 0) return out;

  std::vector<std::size_t> image(n, 0);
  while (true) {
    LabelMap f;
    for (std::size_t i = 0; i < n; ++i) f.emplace(src[i], dst[image[i]]);
    if (is_psts_morphism(f, p, q)) {
      out.push_back(std::move(f));
    }
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (++image[i] < m) break;
      image[i] = 0;
      if (i == 0) return out;
    }
  }
}

}  // namespace graphmonads
