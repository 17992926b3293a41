#include "graphmonads/families.hpp"

#include <string>

#include "graphmonads/errors.hpp"

namespace graphmonads {

std::vector<VertexLabel> atom_range(std::size_t n) {
  if (n > 26) {
    throw SearchSpaceTooLarge("letter atoms are limited to 26 vertices");
  }
  std::vector<VertexLabel> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(VertexLabel::atom(std::string(1, static_cast<char>('a' + i))));
  }
  return out;
}

Graph edgeless_graph(std::size_t n) { return make_graph(atom_range(n), {}); }

Graph complete_graph(std::size_t n) {
  std::vector<VertexLabel> vs = atom_range(n);
  std::vector<std::pair<VertexLabel, VertexLabel>> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      edges.emplace_back(vs[i], vs[j]);
    }
  }
  return make_graph(std::move(vs), std::move(edges));
}

Graph path_graph(std::size_t n) {
  std::vector<VertexLabel> vs = atom_range(n);
  std::vector<std::pair<VertexLabel, VertexLabel>> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    edges.emplace_back(vs[i], vs[i + 1]);
  }
  return make_graph(std::move(vs), std::move(edges));
}

Graph cycle_graph(std::size_t n) {
  std::vector<VertexLabel> vs = atom_range(n);
  std::vector<std::pair<VertexLabel, VertexLabel>> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    edges.emplace_back(vs[i], vs[i + 1]);
  }
  if (n >= 3) {
    edges.emplace_back(vs[n - 1], vs[0]);
  }
  return make_graph(std::move(vs), std::move(edges));
}

Graph square_with_chord() {
  VertexLabel a = VertexLabel::atom("a");
  VertexLabel b = VertexLabel::atom("b");
  VertexLabel c = VertexLabel::atom("c");
  VertexLabel d = VertexLabel::atom("d");
  return make_graph({a, b, c, d}, {{a, b}, {b, d}, {d, c}, {c, a}, {b, c}});
}

Psts fano_plane() {
  std::vector<VertexLabel> pts;
  pts.reserve(7);
  for (int i = 1; i <= 7; ++i) {
    pts.push_back(VertexLabel::atom("p" + std::to_string(i)));
  }
  auto p = [&](int i) { return pts[i - 1]; };
  std::vector<Triple> triples;
  for (int i = 1; i <= 7; ++i) {
    for (int j = i + 1; j <= 7; ++j) {
      int k = i ^ j;
      if (k > j) {
        triples.push_back(make_triple(p(i), p(j), p(k)));
      }
    }
  }
  return Psts(std::move(pts), std::move(triples));
}

void for_each_labeled_graph(std::size_t n, const std::function<void(const Graph&)>& fn) {
  if (n > 6) {
    throw SearchSpaceTooLarge("exhaustive graph family capped at 6 vertices");
  }
  std::vector<VertexLabel> vs = atom_range(n);
  std::vector<std::pair<VertexLabel, VertexLabel>> slots;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      slots.emplace_back(vs[i], vs[j]);
    }
  }
  const std::size_t bits = slots.size();
  for (std::uint64_t mask = 0; mask < (1ULL << bits); ++mask) {
    std::vector<std::pair<VertexLabel, VertexLabel>> edges;
    for (std::size_t b = 0; b < bits; ++b) {
      if (mask & (1ULL << b)) edges.push_back(slots[b]);
    }
    fn(make_graph(vs, std::move(edges)));
  }
}

std::vector<Graph> all_labeled_graphs(std::size_t n) {
  std::vector<Graph> out;
  for_each_labeled_graph(n, [&](const Graph& g) { out.push_back(g); });
  return out;
}

Graph random_graph(std::size_t n, std::mt19937& rng, double edge_prob) {
  std::vector<VertexLabel> vs = atom_range(n);
  std::bernoulli_distribution keep(edge_prob);
  std::vector<std::pair<VertexLabel, VertexLabel>> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (keep(rng)) edges.emplace_back(vs[i], vs[j]);
    }
  }
  return make_graph(std::move(vs), std::move(edges));
}

std::vector<Graph> random_graphs(std::size_t count, std::size_t min_n, std::size_t max_n,
                                 std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<std::size_t> size(min_n, max_n);
  std::vector<Graph> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(random_graph(size(rng), rng));
  }
  return out;
}

}  // namespace graphmonads
