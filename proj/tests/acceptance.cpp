// Acceptance suite: one criterion per section, each timed against its
// budget and reported as a single PASS/FAIL line. Exits nonzero when any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "graphmonads/errors.hpp"
#include "graphmonads/families.hpp"
#include "graphmonads/io.hpp"
#include "graphmonads/matching.hpp"
#include "graphmonads/steiner.hpp"
#include "unit/oracles.hpp"

using namespace graphmonads;

namespace {

VertexLabel L(const char* text) { return VertexLabel::parse(text); }

struct Criterion {
  int id;
  std::string name;
  double budget_seconds;
  std::function<void(std::string&)> run;  // appends failure details
};

constexpr std::uint32_t kSweepSeed = 20240513;

// ----------------------------------------------------------------- 1
void criterion_square_chord_matchings(std::string& fail) {
  std::vector<PerfectMatching> ms = enumerate_matchings(square_with_chord());
  if (ms.size() != 2) {
    fail += "expected 2 matchings, got " + std::to_string(ms.size());
    return;
  }
  LabelMap first{{L("a"), L("b")}, {L("b"), L("a")}, {L("c"), L("d")}, {L("d"), L("c")}};
  LabelMap second{{L("a"), L("c")}, {L("c"), L("a")}, {L("b"), L("d")}, {L("d"), L("b")}};
  if (ms[0].partner_map() != first) fail += "first matching is not a-b, c-d; ";
  if (ms[1].partner_map() != second) fail += "second matching is not a-c, b-d; ";
}

// --------------------------------------------------------------- 2, 3
void sweep_monad_laws(const std::string& monad, std::string& fail) {
  auto run_one = [&](const Graph& g) {
    LawReport report = monad == "T" ? check_monad_laws_T(g) : check_monad_laws_S(g);
    if (!report.all_ok()) {
      fail += "laws fail on graph:\n" + serialize_edge_list(g) + report.summary();
    }
  };
  for (std::size_t n = 0; n <= 5; ++n) {
    for_each_labeled_graph(n, run_one);
  }
  for (const Graph& g : random_graphs(100, 6, 9, kSweepSeed)) {
    run_one(g);
  }
}

// ----------------------------------------------------------------- 4
void criterion_matching_bijection(std::string& fail) {
  for (std::size_t n = 0; n <= 5; ++n) {
    for_each_labeled_graph(n, [&](const Graph& g) {
      std::vector<PerfectMatching> ms = enumerate_matchings(g);
      std::vector<TAlgebra> as = enumerate_T_algebras(g);
      if (ms.size() != as.size()) {
        fail += "count mismatch (" + std::to_string(ms.size()) + " matchings, " +
                std::to_string(as.size()) + " algebras) on:\n" + serialize_edge_list(g);
        return;
      }
      std::vector<PerfectMatching> mapped;
      mapped.reserve(as.size());
      for (const TAlgebra& a : as) {
        PerfectMatching pm = algebra_to_matching(a);
        if (!(matching_to_algebra(pm) == a)) {
          fail += "algebra round trip fails on:\n" + serialize_edge_list(g);
          return;
        }
        mapped.push_back(std::move(pm));
      }
      std::sort(mapped.begin(), mapped.end());
      if (!(mapped == ms)) {
        fail += "bijection does not map algebras onto matchings on:\n" + serialize_edge_list(g);
        return;
      }
      for (const PerfectMatching& pm : ms) {
        if (!(algebra_to_matching(matching_to_algebra(pm)) == pm)) {
          fail += "matching round trip fails on:\n" + serialize_edge_list(g);
          return;
        }
      }
    });
    if (!fail.empty()) return;
  }
}

// ----------------------------------------------------------------- 5
void criterion_steiner_bijection(std::string& fail) {
  for (std::size_t n = 0; n <= 6; ++n) {
    for_each_labeled_graph(n, [&](const Graph& g) {
      if (!fail.empty()) return;
      std::vector<Psts> systems = enumerate_psts_on(g);
      std::vector<SAlgebra> algebras = enumerate_S_algebras(g);
      if (systems.size() != algebras.size()) {
        fail += "count mismatch (" + std::to_string(systems.size()) + " systems, " +
                std::to_string(algebras.size()) + " algebras) on:\n" + serialize_edge_list(g);
        return;
      }
      std::vector<Psts> derived;
      derived.reserve(algebras.size());
      for (const SAlgebra& a : algebras) {
        Psts p = algebra_to_psts(a);
        if (!(psts_to_algebra(p) == a)) {
          fail += "algebra round trip fails on:\n" + serialize_edge_list(g);
          return;
        }
        derived.push_back(std::move(p));
      }
      std::sort(derived.begin(), derived.end());
      if (!(derived == systems)) {
        fail += "bijection does not map algebras onto systems on:\n" + serialize_edge_list(g);
        return;
      }
      for (const Psts& p : systems) {
        if (!(algebra_to_psts(psts_to_algebra(p)) == p)) {
          fail += "system round trip fails on:\n" + serialize_edge_list(g);
          return;
        }
      }
    });
    if (!fail.empty()) return;
  }
}

// ----------------------------------------------------------------- 6
std::vector<PerfectMatching> matched_structures_upto4() {
  std::vector<PerfectMatching> out;
  for (std::size_t n = 0; n <= 4; ++n) {
    for_each_labeled_graph(n, [&](const Graph& g) {
      for (PerfectMatching& pm : enumerate_matchings(g)) out.push_back(std::move(pm));
    });
  }
  return out;
}

std::vector<PerfectMatching> perf_cones() {
  std::vector<PerfectMatching> cones;
  cones.emplace_back(Graph{}, LabelMap{});
  Graph k2 = parse_edge_list("a b");
  cones.emplace_back(k2, LabelMap{{L("a"), L("b")}, {L("b"), L("a")}});
  Graph two_edges = parse_edge_list("a b\nc d");
  cones.emplace_back(two_edges, LabelMap{{L("a"), L("b")},
                                         {L("b"), L("a")},
                                         {L("c"), L("d")},
                                         {L("d"), L("c")}});
  Graph c4 = cycle_graph(4);
  cones.emplace_back(c4, LabelMap{{L("a"), L("b")},
                                  {L("b"), L("a")},
                                  {L("c"), L("d")},
                                  {L("d"), L("c")}});
  cones.emplace_back(square_with_chord(), LabelMap{{L("a"), L("b")},
                                                   {L("b"), L("a")},
                                                   {L("c"), L("d")},
                                                   {L("d"), L("c")}});
  Graph k4 = complete_graph(4);
  cones.emplace_back(k4, LabelMap{{L("a"), L("d")},
                                  {L("d"), L("a")},
                                  {L("b"), L("c")},
                                  {L("c"), L("b")}});
  return cones;
}

std::vector<Psts> psts_structures_upto4() {
  std::vector<Psts> out;
  std::vector<VertexLabel> pool = atom_range(4);
  for (std::size_t k = 0; k <= 4; ++k) {
    std::vector<VertexLabel> pts(pool.begin(), pool.begin() + k);
    out.emplace_back(pts, std::vector<Triple>{});
    if (k == 3) {
      out.emplace_back(pts, std::vector<Triple>{make_triple(pts[0], pts[1], pts[2])});
    }
    if (k == 4) {
      for (std::size_t skip = 0; skip < 4; ++skip) {
        std::vector<VertexLabel> tri;
        for (std::size_t i = 0; i < 4; ++i) {
          if (i != skip) tri.push_back(pts[i]);
        }
        out.emplace_back(pts, std::vector<Triple>{make_triple(tri[0], tri[1], tri[2])});
      }
    }
  }
  return out;
}

void criterion_products(std::string& fail) {
  // matched graphs: validator + universal property via exhaustive counts
  std::vector<PerfectMatching> structures = matched_structures_upto4();
  std::vector<PerfectMatching> cones = perf_cones();
  for (const PerfectMatching& a : structures) {
    for (const PerfectMatching& b : structures) {
      PerfectMatching prod = product_perf(a, b);
      if (!is_perfect_matching(prod.graph(), prod.partner_map())) {
        fail += "perf product fails validation";
        return;
      }
      Hom pa = product_projection_left(a.graph(), b.graph());
      Hom pb = product_projection_right(a.graph(), b.graph());
      if (!is_perf_morphism(pa, prod, a) || !is_perf_morphism(pb, prod, b)) {
        fail += "projections are not matched-graph morphisms";
        return;
      }
      for (const PerfectMatching& x : cones) {
        std::vector<Hom> fs = enumerate_perf_morphisms(x, a);
        std::vector<Hom> gs = enumerate_perf_morphisms(x, b);
        std::vector<Hom> hs = enumerate_perf_morphisms(x, prod);
        if (hs.size() != fs.size() * gs.size()) {
          fail += "mediating count " + std::to_string(hs.size()) + " != cone count " +
                  std::to_string(fs.size() * gs.size());
          return;
        }
        for (const Hom& f : fs) {
          for (const Hom& g : gs) {
            Hom h = pair_into_product(f, g);
            if (!is_perf_morphism(h, x, prod) || !(compose(pa, h) == f) ||
                !(compose(pb, h) == g)) {
              fail += "pairing is not a mediating matched-graph morphism";
              return;
            }
          }
        }
      }
    }
  }

  // triple systems: validator, agreement with the independent filter
  // oracle, universal property via exhaustive counts
  std::vector<Psts> systems = psts_structures_upto4();
  Psts point_cone({L("x")}, {});
  Psts triple_cone({L("x"), L("y"), L("z")}, {make_triple(L("x"), L("y"), L("z"))});
  std::vector<Psts> psts_cones = {Psts({}, {}), point_cone, triple_cone};
  for (const Psts& a : systems) {
    for (const Psts& b : systems) {
      Psts prod = product_psts(a, b);
      if (!check_psts(prod.points(), prod.triples())) {
        fail += "psts product fails validation";
        return;
      }
      std::vector<Triple> filtered = oracles::product_triples_by_filter(a, b);
      std::sort(filtered.begin(), filtered.end());
      if (!(filtered == prod.triples())) {
        fail += "psts product disagrees with the 3-subset filter oracle";
        return;
      }
      for (const Psts& x : psts_cones) {
        std::vector<LabelMap> fs = enumerate_psts_morphisms(x, a);
        std::vector<LabelMap> gs = enumerate_psts_morphisms(x, b);
        std::vector<LabelMap> hs = enumerate_psts_morphisms(x, prod);
        if (hs.size() != fs.size() * gs.size()) {
          fail += "psts mediating count " + std::to_string(hs.size()) + " != cone count " +
                  std::to_string(fs.size() * gs.size());
          return;
        }
        for (const LabelMap& f : fs) {
          for (const LabelMap& g : gs) {
            LabelMap h;
            for (const VertexLabel& pt : x.points()) {
              h.emplace(pt, VertexLabel::pair(f.at(pt), g.at(pt)));
            }
            if (!is_psts_morphism(h, x, prod) ||
                std::find(hs.begin(), hs.end(), h) == hs.end()) {
              fail += "psts pairing is not a mediating morphism";
              return;
            }
          }
        }
      }
    }
  }
}

// ----------------------------------------------------------------- 7
void criterion_equalizers(std::string& fail) {
  std::vector<PerfectMatching> structures = matched_structures_upto4();
  std::vector<PerfectMatching> cones;
  cones.emplace_back(Graph{}, LabelMap{});
  Graph k2 = parse_edge_list("a b");
  cones.emplace_back(k2, LabelMap{{L("a"), L("b")}, {L("b"), L("a")}});
  cones.emplace_back(square_with_chord(), LabelMap{{L("a"), L("b")},
                                                   {L("b"), L("a")},
                                                   {L("c"), L("d")},
                                                   {L("d"), L("c")}});

  std::size_t pairs_checked = 0;
  for (const PerfectMatching& a : structures) {
    for (const PerfectMatching& b : structures) {
      std::vector<Hom> fs = enumerate_perf_morphisms(a, b);
      for (const Hom& f : fs) {
        for (const Hom& g : fs) {
          PerfEqualizer eq = equalizer_perf(f, g, a, b);
          ++pairs_checked;
          if (!is_perfect_matching(eq.object.graph(), eq.object.partner_map())) {
            fail += "equalizer object is not a matched graph";
            return;
          }
          if (!is_perf_morphism(eq.inclusion, eq.object, a)) {
            fail += "inclusion is not a matched-graph morphism";
            return;
          }
          if (!(compose(f, eq.inclusion) == compose(g, eq.inclusion))) {
            fail += "inclusion does not equalize f and g";
            return;
          }
          for (const PerfectMatching& x : cones) {
            std::vector<Hom> ks = enumerate_perf_morphisms(x, eq.object);
            for (const Hom& h : enumerate_perf_morphisms(x, a)) {
              if (!(compose(f, h) == compose(g, h))) continue;
              std::size_t factorizations = 0;
              for (const Hom& k : ks) {
                if (compose(eq.inclusion, k) == h) ++factorizations;
              }
              if (factorizations != 1) {
                fail += "equalizing morphism has " + std::to_string(factorizations) +
                        " factorizations through the equalizer";
                return;
              }
            }
          }
        }
      }
    }
  }
  if (pairs_checked < 100) {
    fail += "only " + std::to_string(pairs_checked) + " morphism pairs exercised";
  }
}

// ----------------------------------------------------------------- 8
void criterion_fano(std::string& fail) {
  Psts fano = fano_plane();
  if (!is_complete_sts(fano)) {
    fail += "fano fixture is not complete";
    return;
  }
  Psts prod = product_psts(fano, fano);
  if (prod.points().size() != 49) {
    fail += "fano product does not have 49 points";
    return;
  }
  if (!check_psts(prod.points(), prod.triples())) {
    fail += "fano product fails validation";
    return;
  }
  std::vector<Triple> filtered = oracles::product_triples_by_filter(fano, fano);
  if (filtered.size() != prod.triples().size()) {
    fail += "triple count " + std::to_string(prod.triples().size()) +
            " != filter oracle count " + std::to_string(filtered.size());
    return;
  }
  std::sort(filtered.begin(), filtered.end());
  if (!(filtered == prod.triples())) {
    fail += "triples differ from the filter oracle";
    return;
  }
  // covered pairs are exactly those differing in both coordinates
  std::set<std::pair<VertexLabel, VertexLabel>> covered;
  for (const Triple& t : prod.triples()) {
    for (int i = 0; i < 3; ++i) {
      for (int j = i + 1; j < 3; ++j) {
        covered.emplace(std::min(t[i], t[j]), std::max(t[i], t[j]));
      }
    }
  }
  for (const VertexLabel& u : prod.points()) {
    for (const VertexLabel& v : prod.points()) {
      if (!(u < v)) continue;
      bool expect = u.left() != v.left() && u.right() != v.right();
      bool got = covered.contains({u, v});
      if (expect != got) {
        fail += "coverage of pair {" + u.str() + "," + v.str() + "} is wrong";
        return;
      }
    }
  }
}

// ----------------------------------------------------------------- 9
void criterion_degenerate(std::string& fail) {
  for (std::size_t n = 0; n <= 5; ++n) {
    for_each_labeled_graph(n, [&](const Graph& g) {
      if (!fail.empty()) return;
      bool odd = g.vertex_count() % 2 == 1;
      bool isolated = false;
      for (const VertexLabel& v : g.vertices()) {
        if (g.neighbors(v).empty()) {
          isolated = true;
          break;
        }
      }
      if (odd || isolated) {
        if (!enumerate_matchings(g).empty()) {
          fail += "matching found on a degenerate graph:\n" + serialize_edge_list(g);
          return;
        }
      }
      bool triangle = false;
      for (const Edge& e : g.edges()) {
        if (!g.common_neighbors(e.lo(), e.hi()).empty()) {
          triangle = true;
          break;
        }
      }
      if (!triangle && g.edge_count() > 0) {
        if (!enumerate_psts_on(g).empty()) {
          fail += "triple system found on a triangle-free graph:\n" + serialize_edge_list(g);
          return;
        }
      }
    });
  }
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "square with chord has exactly its two known matchings", 1.0,
       criterion_square_chord_matchings},
      {2, "pendant-edge monad laws, exhaustive <=5 plus 100 random 6-9", 60.0,
       [](std::string& f) { sweep_monad_laws("T", f); }},
      {3, "triangle monad laws, exhaustive <=5 plus 100 random 6-9", 120.0,
       [](std::string& f) { sweep_monad_laws("S", f); }},
      {4, "matchings <-> T-algebras bijection, all graphs <=5", 120.0,
       criterion_matching_bijection},
      {5, "triple systems <-> S-algebras bijection, all graphs <=6", 300.0,
       criterion_steiner_bijection},
      {6, "products: validators and universal property", 120.0, criterion_products},
      {7, "equalizers of matched-graph morphisms", 60.0, criterion_equalizers},
      {8, "fano sanity: completeness and the 49-point product", 10.0, criterion_fano},
      {9, "degenerate cases: parity, isolation, triangle-freeness", 60.0, criterion_degenerate},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    std::string fail;
    auto start = std::chrono::steady_clock::now();
    try {
      c.run(fail);
    } catch (const std::exception& e) {
      fail += std::string("exception: ") + e.what();
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (fail.empty() && seconds > c.budget_seconds) {
      fail = "exceeded budget of " + std::to_string(c.budget_seconds) + " s";
    }
    std::printf("%s  criterion %d: %s (%.2f s)\n", fail.empty() ? "PASS" : "FAIL", c.id,
                c.name.c_str(), seconds);
    if (!fail.empty()) {
      std::printf("      %s\n", fail.c_str());
      ++failures;
    }
  }
  if (failures) {
    std::printf("%d of %zu criteria failed\n", failures, criteria.size());
    return 1;
  }
  std::printf("all %zu criteria passed\n", criteria.size());
  return 0;
}
