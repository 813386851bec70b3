#pragma once

#include <optional>
#include <vector>

#include "twwcol/graph.hpp"
#include "twwcol/trigraph.hpp"

namespace twwcol {

struct Cotree {
    enum class Kind { Leaf, Union, Join };
    struct Node {
        Kind kind = Kind::Leaf;
        std::vector<Vertex> vertices;  // ascending
        std::vector<int> children;     // indices into nodes
    };
    std::vector<Node> nodes;
    int root = -1;
};

// Decomposes by components of G or of its complement; nullopt when some
// induced subgraph on >= 2 vertices is connected with connected complement.
std::optional<Cotree> cotree(const Graph& g);
bool is_cograph(const Graph& g);

// Cotree order: the children of each node are emitted by increasing size
// (ties by smallest vertex), so the smaller side of every join comes first.
// Throws NotCographError.
LinearOrder cograph_order(const Graph& g);

// Width-0 sequence contracting each cotree subtree to one node bottom-up.
// Throws NotCographError.
ContractionSequence cograph_witness(const Graph& g);

// Biclique number by dynamic programming over the cotree. Throws NotCographError.
int cograph_bomega(const Graph& g);

}  // namespace twwcol
