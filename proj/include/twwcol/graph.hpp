#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace twwcol {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

// Simple undirected graph on the dense vertex set 0..n-1. Immutable once built.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    // Self-loops and out-of-range endpoints throw std::invalid_argument;
    // repeated edges are collapsed.
    Graph(int n, std::span<const Edge> edges);
    Graph(int n, std::initializer_list<Edge> edges);

    int size() const { return static_cast<int>(adj_.size()); }
    std::size_t num_edges() const { return num_edges_; }
    std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
    int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
    int max_degree() const;
    bool adjacent(Vertex u, Vertex v) const;
    bool is_regular() const;

    // Edges as (u, v) with u < v, sorted lexicographically.
    std::vector<Edge> edges() const;

    // Bit v of masks()[u] is set iff u ~ v. Requires size() <= 64.
    std::vector<std::uint64_t> masks() const;

    Graph complement() const;
    // Subgraph induced by `vertices`; vertex i of the result is vertices[i].
    Graph induced(std::span<const Vertex> vertices) const;

    bool operator==(const Graph&) const = default;

private:
    std::vector<std::vector<Vertex>> adj_;
    std::size_t num_edges_ = 0;
};

// Bijection vertex -> rank 0..n-1; sequence()[0] is the first vertex of the order.
class LinearOrder {
public:
    LinearOrder() = default;
    // Throws std::invalid_argument unless `sequence` is a permutation of 0..n-1.
    explicit LinearOrder(std::vector<Vertex> sequence);
    static LinearOrder identity(int n);

    int size() const { return static_cast<int>(sequence_.size()); }
    Vertex at(int rank) const { return sequence_[rank]; }
    int rank(Vertex v) const { return rank_[v]; }
    bool before(Vertex u, Vertex v) const { return rank_[u] < rank_[v]; }
    const std::vector<Vertex>& sequence() const { return sequence_; }

    bool operator==(const LinearOrder& other) const { return sequence_ == other.sequence_; }

private:
    std::vector<Vertex> sequence_;
    std::vector<int> rank_;
};

class GirthValue {
public:
    static GirthValue infinite() { return GirthValue(); }
    static GirthValue finite(int length);

    bool is_infinite() const { return infinite_; }
    // Precondition: !is_infinite()
    int value() const { return value_; }
    std::string to_string() const;

    bool operator==(const GirthValue&) const = default;
    std::strong_ordering operator<=>(const GirthValue& other) const;

private:
    GirthValue() = default;
    bool infinite_ = true;
    int value_ = 0;
};

// Length of a shortest cycle; infinite for forests.
GirthValue girth(const Graph& g);

inline constexpr std::uint64_t kDefaultBicliqueBudget = 10'000'000;

// Largest s such that K_{s,s} is a (not necessarily induced) subgraph.
// Throws ResourceLimitError when the search visits more than `budget` nodes.
int bomega(const Graph& g, std::uint64_t budget = kDefaultBicliqueBudget);

struct Degeneracy {
    int value = 0;
    // Reverse of the min-degree elimination order: every vertex has at most
    // `value` neighbours before it.
    LinearOrder order;
};

Degeneracy degeneracy(const Graph& g);

inline constexpr std::size_t kDefaultPathCap = 1'000'000;

// All simple paths of length <= r between u and v, each listed from u to v.
// Throws ResourceLimitError once more than `cap` paths are found.
std::vector<std::vector<Vertex>> distance_paths(const Graph& g, Vertex u, Vertex v, int r,
                                                std::size_t cap = kDefaultPathCap);

// Connected components, each sorted; components ordered by smallest vertex.
std::vector<std::vector<Vertex>> components(const Graph& g);
bool is_connected(const Graph& g);

Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_bipartite(int a, int b);
Graph petersen_graph();

}  // namespace twwcol
