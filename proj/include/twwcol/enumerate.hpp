#pragma once

#include <cstdint>
#include <vector>

#include "twwcol/graph.hpp"

namespace twwcol {

// Canonical adjacency code of a graph with at most 11 vertices: the
// lexicographically largest upper-triangle bit string over all relabelings
// compatible with colour refinement. Equal codes iff isomorphic.
std::uint64_t canonical_code(const Graph& g);

// Graph with the given canonical code (the canonical representative).
Graph graph_from_code(int n, std::uint64_t code);

// One representative per isomorphism class on exactly n vertices (n <= 9),
// sorted by canonical code.
std::vector<Graph> nonisomorphic_graphs(int n, bool connected_only);

}  // namespace twwcol
