#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "graphmonads/graph.hpp"
#include "graphmonads/steiner.hpp"

namespace graphmonads {

// First n single-letter atoms a, b, c, ... (n <= 26).
std::vector<VertexLabel> atom_range(std::size_t n);

Graph edgeless_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);

// The running 4-vertex example: a square a-b, b-d, d-c, c-a with the
// chord b-c. It has exactly two perfect matchings.
Graph square_with_chord();

// The Steiner triple system on 7 points p1..p7 (triples where the
// indices xor to zero).
Psts fano_plane();

// Every labeled graph on the first n letter atoms, in deterministic
// order (edge subsets in binary-counter order). Throws
// SearchSpaceTooLarge for n > 6.
void for_each_labeled_graph(std::size_t n, const std::function<void(const Graph&)>& fn);
std::vector<Graph> all_labeled_graphs(std::size_t n);

// Each potential edge kept with probability edge_prob.
Graph random_graph(std::size_t n, std::mt19937& rng, double edge_prob = 0.5);

// Deterministic batch with sizes drawn uniformly from [min_n, max_n].
std::vector<Graph> random_graphs(std::size_t count, std::size_t min_n, std::size_t max_n,
                                 std::uint32_t seed);

}  // namespace graphmonads
