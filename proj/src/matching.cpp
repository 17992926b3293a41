#include "graphmonads/matching.hpp"

#include <algorithm>
#include <functional>

#include "graphmonads/errors.hpp"

namespace graphmonads {

Graph T_on_objects(const Graph& a) {
  std::vector<VertexLabel> vertices;
  vertices.reserve(2 * a.vertex_count());
  std::vector<std::pair<VertexLabel, VertexLabel>> edges;
  edges.reserve(a.edge_count() + a.vertex_count());
  for (const VertexLabel& x : a.vertices()) {
    VertexLabel x0 = VertexLabel::tagged(x, 0);
    VertexLabel x1 = VertexLabel::tagged(x, 1);
    edges.emplace_back(x0, x1);
    vertices.push_back(std::move(x0));
    vertices.push_back(std::move(x1));
  }
  for (const Edge& e : a.edges()) {
    edges.emplace_back(VertexLabel::tagged(e.lo(), 0), VertexLabel::tagged(e.hi(), 0));
  }
  return make_graph(std::move(vertices), std::move(edges));
}

Hom T_on_morphisms(const Hom& f) {
  Graph src = T_on_objects(f.src());
  Graph dst = T_on_objects(f.dst());
  LabelMap map;
  for (const VertexLabel& x : f.src().vertices()) {
    for (int i = 0; i < 2; ++i) {
      map.emplace(VertexLabel::tagged(x, i), VertexLabel::tagged(f(x), i));
    }
  }
  return Hom(std::move(src), std::move(dst), std::move(map));
}

Hom eta_T(const Graph& a) {
  LabelMap map;
  for (const VertexLabel& x : a.vertices()) {
    map.emplace(x, VertexLabel::tagged(x, 0));
  }
  return Hom(a, T_on_objects(a), std::move(map));
}

Hom mu_T(const Graph& a) {
  Graph ta = T_on_objects(a);
  Graph t2a = T_on_objects(ta);
  LabelMap map;
  for (const VertexLabel& w : t2a.vertices()) {
    // w = (v~i)~j folds to v~(i xor j)
    const VertexLabel& inner = w.base();
    map.emplace(w, VertexLabel::tagged(inner.base(), inner.bit() ^ w.bit()));
  }
  return Hom(std::move(t2a), std::move(ta), std::move(map));
}

LawReport check_monad_laws_T(const Graph& a) {
  Graph ta = T_on_objects(a);
  Hom mu = mu_T(a);
  Hom id_ta = identity_hom(ta);

  LawReport report;
  report.entries.push_back(
      {"mu . T(eta) = id", diagram_commutes({{{T_on_morphisms(eta_T(a)), mu}}, {{id_ta}}})});
  report.entries.push_back({"mu . eta = id", diagram_commutes({{{eta_T(ta), mu}}, {{id_ta}}})});
  report.entries.push_back(
      {"mu . T(mu) = mu . mu", diagram_commutes({{{T_on_morphisms(mu), mu}}, {{mu_T(ta), mu}}})});
  return report;
}

CheckResult is_perfect_matching(const Graph& g, const LabelMap& partner) {
  for (const auto& [v, w] : partner) {
    if (!g.has_vertex(v)) {
      return CheckResult::fail("matching mentions unknown vertex " + v.str());
    }
    if (!g.has_vertex(w)) {
      return CheckResult::fail("partner " + w.str() + " of " + v.str() + " is not a vertex");
    }
  }
  for (const VertexLabel& v : g.vertices()) {
    auto it = partner.find(v);
    if (it == partner.end()) {
      return CheckResult::fail("vertex " + v.str() + " has no partner");
    }
    const VertexLabel& w = it->second;
    if (v == w || !g.adjacent(v, w)) {
      return CheckResult::fail("vertex " + v.str() + " pairs with " + w.str() +
                               " but {" + v.str() + "," + w.str() + "} is not an edge");
    }
    auto back = partner.find(w);
    if (back == partner.end()) {
      return CheckResult::fail("vertex " + w.str() + " has no partner");
    }
    if (back->second != v) {
      return CheckResult::fail("not an involution at " + v.str() + ": m(" + w.str() + ") = " +
                               back->second.str());
    }
  }
  return CheckResult::pass();
}

PerfectMatching::PerfectMatching(Graph graph, LabelMap partner)
    : graph_(std::move(graph)), partner_(std::move(partner)) {
  CheckResult check = is_perfect_matching(graph_, partner_);
  if (!check) {
    throw InvalidMatching(check.witness);
  }
}

const VertexLabel& PerfectMatching::partner(const VertexLabel& v) const {
  auto it = partner_.find(v);
  if (it == partner_.end()) {
    throw VertexNotInGraph("vertex " + v.str() + " is not in the matched graph");
  }
  return it->second;
}

CheckResult is_T_algebra(const Graph& a, const Hom& alpha) {
  if (!(alpha.src() == T_on_objects(a)) || !(alpha.dst() == a)) {
    throw DomainMismatch("structure map must go from T(A) to A");
  }
  CheckResult unit = diagram_commutes({{{eta_T(a), alpha}}, {{identity_hom(a)}}});
  if (!unit) {
    return CheckResult::fail("unit triangle: " + unit.witness);
  }
  Hom mu = mu_T(a);
  CheckResult square = diagram_commutes({{{T_on_morphisms(alpha), alpha}}, {{mu, alpha}}});
  if (!square) {
    return CheckResult::fail("multiplication square: " + square.witness);
  }
  return CheckResult::pass();
}

TAlgebra::TAlgebra(Graph graph, Hom alpha) : graph_(std::move(graph)), alpha_(std::move(alpha)) {
  CheckResult check = is_T_algebra(graph_, alpha_);
  if (!check) {
    throw NotAnAlgebra(check.witness);
  }
}

CheckResult is_perf_morphism(const Hom& f, const PerfectMatching& a, const PerfectMatching& b) {
  if (!(f.src() == a.graph()) || !(f.dst() == b.graph())) {
    throw DomainMismatch("morphism endpoints do not match the matched graphs");
  }
  for (const VertexLabel& x : a.graph().vertices()) {
    if (f(a.partner(x)) != b.partner(f(x))) {
      return CheckResult::fail("vertex " + x.str() + ": f(m(x)) = " + f(a.partner(x)).str() +
                               " but m'(f(x)) = " + b.partner(f(x)).str());
    }
  }
  return CheckResult::pass();
}

TAlgebra matching_to_algebra(const PerfectMatching& pm) {
  const Graph& a = pm.graph();
  LabelMap map;
  for (const VertexLabel& x : a.vertices()) {
    map.emplace(VertexLabel::tagged(x, 0), x);
    map.emplace(VertexLabel::tagged(x, 1), pm.partner(x));
  }
  return TAlgebra(a, Hom(T_on_objects(a), a, std::move(map)));
}

PerfectMatching algebra_to_matching(const TAlgebra& alg) {
  LabelMap partner;
  for (const VertexLabel& x : alg.graph().vertices()) {
    partner.emplace(x, alg.alpha()(VertexLabel::tagged(x, 1)));
  }
  return PerfectMatching(alg.graph(), std::move(partner));
}

PerfectMatching product_perf(const PerfectMatching& a, const PerfectMatching& b) {
  Graph prod = graph_product(a.graph(), b.graph());
  LabelMap partner;
  for (const VertexLabel& v : prod.vertices()) {
    partner.emplace(v, VertexLabel::pair(a.partner(v.left()), b.partner(v.right())));
  }
  return PerfectMatching(std::move(prod), std::move(partner));
}

PerfEqualizer equalizer_perf(const Hom& f, const Hom& g, const PerfectMatching& a,
                             const PerfectMatching& b) {
  if (!(f.src() == a.graph()) || !(f.dst() == b.graph()) || !(g.src() == a.graph()) ||
      !(g.dst() == b.graph())) {
    throw DomainMismatch("equalizer takes two parallel morphisms (A,m) -> (B,m')");
  }
  if (CheckResult c = is_perf_morphism(f, a, b); !c) {
    throw NotEquivariant("f is not a matched-graph morphism: " + c.witness);
  }
  if (CheckResult c = is_perf_morphism(g, a, b); !c) {
    throw NotEquivariant("g is not a matched-graph morphism: " + c.witness);
  }

  std::vector<VertexLabel> agree;
  for (const VertexLabel& v : a.graph().vertices()) {
    if (f(v) == g(v)) agree.push_back(v);
  }
  Graph sub = induced_subgraph(a.graph(), agree);
  LabelMap partner;
  for (const VertexLabel& v : sub.vertices()) {
    // closed under m: f(m(v)) = m'(f(v)) = m'(g(v)) = g(m(v))
    partner.emplace(v, a.partner(v));
  }
  PerfectMatching object(std::move(sub), std::move(partner));

  LabelMap incl;
  for (const VertexLabel& v : object.graph().vertices()) incl.emplace(v, v);
  Hom inclusion(object.graph(), a.graph(), std::move(incl));
  return PerfEqualizer{std::move(object), std::move(inclusion)};
}

std::vector<PerfectMatching> enumerate_matchings(const Graph& g, std::size_t vertex_cap) {
  if (g.vertex_count() > vertex_cap) {
    throw SearchSpaceTooLarge("matching enumeration capped at " + std::to_string(vertex_cap) +
                              " vertices, graph has " + std::to_string(g.vertex_count()));
  }
  std::vector<PerfectMatching> out;
  LabelMap partner;
  const auto& vs = g.vertices();

  std::function<void()> rec = [&] {
    const VertexLabel* u = nullptr;
    for (const VertexLabel& v : vs) {
      if (!partner.contains(v)) {
        u = &v;
        break;
      }
    }
    if (u == nullptr) {
      out.emplace_back(g, partner);
      return;
    }
    for (const VertexLabel& w : g.neighbors(*u)) {
      if (partner.contains(w)) continue;
      partner.emplace(*u, w);
      partner.emplace(w, *u);
      rec();
      partner.erase(*u);
      partner.erase(w);
    }
  };
  rec();
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<TAlgebra> enumerate_T_algebras(const Graph& g, std::size_t vertex_cap) {
  if (g.vertex_count() > vertex_cap) {
    throw SearchSpaceTooLarge("algebra enumeration capped at " + std::to_string(vertex_cap) +
                              " vertices, graph has " + std::to_string(g.vertex_count()));
  }
  Graph ta = T_on_objects(g);
  const auto& vs = g.vertices();
  const std::size_t n = vs.size();

  std::vector<std::vector<VertexLabel>> candidates;
  candidates.reserve(n);
  for (const VertexLabel& x : vs) {
    candidates.push_back(g.neighbors(x));  // alpha maps the pendant edge to an edge at x
  }

  std::vector<TAlgebra> out;
  std::vector<VertexLabel> leaf_image;
  leaf_image.reserve(n);

  auto passes_square = [&](const LabelMap& alpha) {
    // alpha(alpha(x_i)_j) == alpha(x_(i xor j)) pointwise
    for (const VertexLabel& xi : ta.vertices()) {
      for (int j = 0; j < 2; ++j) {
        const VertexLabel& lhs = alpha.at(VertexLabel::tagged(alpha.at(xi), j));
        const VertexLabel& rhs =
            alpha.at(VertexLabel::tagged(xi.base(), xi.bit() ^ j));
        if (lhs != rhs) return false;
      }
    }
    return true;
  };

  std::function<void(std::size_t)> rec = [&](std::size_t depth) {
    if (depth == n) {
      LabelMap alpha;
      for (std::size_t i = 0; i < n; ++i) {
        alpha.emplace(VertexLabel::tagged(vs[i], 0), vs[i]);
        alpha.emplace(VertexLabel::tagged(vs[i], 1), leaf_image[i]);
      }
      if (!is_homomorphism(ta, g, alpha)) return;
      if (!passes_square(alpha)) return;
      out.emplace_back(g, Hom(ta, g, std::move(alpha)));
      return;
    }
    for (const VertexLabel& w : candidates[depth]) {
      leaf_image.push_back(w);
      rec(depth + 1);
      leaf_image.pop_back();
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Hom> enumerate_perf_morphisms(const PerfectMatching& a, const PerfectMatching& b,
                                          std::uint64_t candidate_cap) {
  const auto& sv = a.graph().vertices();
  const auto& dv = b.graph().vertices();
  const std::size_t n = sv.size();
  const std::size_t m = dv.size();

  std::uint64_t candidates = 1;
  for (std::size_t i = 0; i + 1 < n; i += 2) {  // partner images are forced
    if (m != 0 && candidates > candidate_cap / m) {
      throw SearchSpaceTooLarge("candidate maps exceed cap of " + std::to_string(candidate_cap));
    }
    candidates *= m;
  }

  std::vector<Hom> out;
  if (n == 0) {
    out.emplace_back(a.graph(), b.graph(), LabelMap{});
    return out;
  }
  if (m == 0) return out;

  auto src_index = [&](const VertexLabel& v) {
    return static_cast<std::size_t>(std::lower_bound(sv.begin(), sv.end(), v) - sv.begin());
  };
  auto dst_index = [&](const VertexLabel& v) {
    return static_cast<std::size_t>(std::lower_bound(dv.begin(), dv.end(), v) - dv.begin());
  };

  std::vector<std::size_t> src_partner(n), dst_partner(m);
  for (std::size_t i = 0; i < n; ++i) src_partner[i] = src_index(a.partner(sv[i]));
  for (std::size_t j = 0; j < m; ++j) dst_partner[j] = dst_index(b.partner(dv[j]));

  std::vector<std::vector<char>> dst_adj(m, std::vector<char>(m, 0));
  for (const Edge& e : b.graph().edges()) {
    std::size_t i = dst_index(e.lo());
    std::size_t j = dst_index(e.hi());
    dst_adj[i][j] = dst_adj[j][i] = 1;
  }
  std::vector<std::vector<std::size_t>> earlier(n);
  for (const Edge& e : a.graph().edges()) {
    std::size_t i = src_index(e.lo());
    std::size_t j = src_index(e.hi());
    earlier[std::max(i, j)].push_back(std::min(i, j));
  }

  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> image(n, kUnset);

  std::function<void(std::size_t)> rec = [&](std::size_t depth) {
    if (depth == n) {
      LabelMap map;
      for (std::size_t i = 0; i < n; ++i) map.emplace(sv[i], dv[image[i]]);
      out.emplace_back(a.graph(), b.graph(), std::move(map));
      return;
    }
    auto edges_ok = [&](std::size_t j) {
      for (std::size_t k : earlier[depth]) {
        if (!dst_adj[j][image[k]]) return false;
      }
      return true;
    };
    if (image[depth] != kUnset) {
      // forced by the partner assigned earlier
      if (edges_ok(image[depth])) rec(depth + 1);
      return;
    }
    std::size_t p = src_partner[depth];  // always > depth here
    for (std::size_t j = 0; j < m; ++j) {
      if (!edges_ok(j)) continue;
      image[depth] = j;
      image[p] = dst_partner[j];  // equivariance pins the partner
      rec(depth + 1);
      image[depth] = kUnset;
      image[p] = kUnset;
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace graphmonads
