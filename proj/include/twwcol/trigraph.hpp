#pragma once

#include <cstdint>
#include <functional>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "twwcol/graph.hpp"

namespace twwcol {

// Node ids follow the witness convention: vertex v is node v+1, the k-th
// merge (1-based) of an n-vertex graph creates node n+k.
using NodeId = int;

struct Merge {
    NodeId first = 0;
    NodeId second = 0;
    bool operator==(const Merge&) const = default;
};

// Merges turning G_n (all singletons) into G_1 (the single node V).
class ContractionSequence {
public:
    ContractionSequence() = default;
    // Throws InvalidSequenceError at the first merge naming an unknown, dead
    // or repeated node, or when the count differs from n-1.
    ContractionSequence(Graph g, std::vector<Merge> merges);

    const Graph& graph() const { return graph_; }
    const std::vector<Merge>& merges() const { return merges_; }
    int vertex_count() const { return graph_.size(); }
    // id of the node created by merges()[k]
    NodeId created_id(std::size_t k) const { return graph_.size() + static_cast<int>(k) + 1; }
    NodeId root() const { return vertex_count() == 1 ? 1 : 2 * vertex_count() - 1; }

    bool operator==(const ContractionSequence&) const = default;

private:
    Graph graph_;
    std::vector<Merge> merges_;
};

class Trigraph {
public:
    // All singletons, black edges = E(g), no red edges.
    static Trigraph initial(const Graph& g);
    // Quotient of g by the given nodes: black when every pair is an edge, red
    // when some but not all are, absent otherwise. `next_id` is the id the
    // next contraction will receive.
    static Trigraph quotient(const Graph& g, std::span<const std::pair<NodeId, std::vector<Vertex>>> nodes,
                             NodeId next_id);

    // New trigraph with x and y replaced by x u y (id next_id()).
    Trigraph contract(NodeId x, NodeId y) const;
    void contract_in_place(NodeId x, NodeId y);

    NodeId next_id() const { return next_id_; }
    std::vector<NodeId> nodes() const;
    std::size_t node_count() const { return live_; }
    bool alive(NodeId x) const { return x > 0 && x < static_cast<NodeId>(nodes_.size()) && nodes_[x].alive; }
    const std::vector<Vertex>& members(NodeId x) const { return nodes_.at(x).members; }
    const std::set<NodeId>& black(NodeId x) const { return nodes_.at(x).black; }
    const std::set<NodeId>& red(NodeId x) const { return nodes_.at(x).red; }
    int red_degree(NodeId x) const { return static_cast<int>(nodes_.at(x).red.size()); }
    int max_red_degree() const;

    // Same live ids, members and adjacencies.
    bool operator==(const Trigraph& other) const;

private:
    struct Node {
        std::vector<Vertex> members;
        std::set<NodeId> black;
        std::set<NodeId> red;
        bool alive = false;
    };
    void require_alive(NodeId x) const;

    std::vector<Node> nodes_;  // index 0 unused
    std::size_t live_ = 0;
    NodeId next_id_ = 1;
};

// Visits G_n, G_{n-1}, ..., G_1; `index` is the number of nodes of the trigraph.
void replay(const ContractionSequence& seq, const std::function<void(int index, const Trigraph&)>& visit);

// Maximum red degree over every trigraph of the sequence.
int width(const ContractionSequence& seq);

struct UniverseNode {
    std::vector<Vertex> members;
    int birth = 0;  // smallest i with the node in G_i
    int split = 0;  // largest i with the node in G_i
    NodeId parent = 0;                  // 0 for the root V
    std::pair<NodeId, NodeId> children;  // (0, 0) for singletons
};

class UniverseIndex {
public:
    explicit UniverseIndex(const ContractionSequence& seq);

    const UniverseNode& operator[](NodeId x) const { return nodes_.at(x); }
    NodeId root() const { return root_; }
    std::size_t size() const { return nodes_.size() - 1; }
    // the unique node with split time i (1 <= i <= n-1)
    NodeId split_at(int i) const { return split_at_.at(i); }

private:
    std::vector<UniverseNode> nodes_;
    std::vector<NodeId> split_at_;
    NodeId root_ = 0;
};

inline UniverseIndex universe(const ContractionSequence& seq) { return UniverseIndex(seq); }

struct TwwOptions {
    std::uint64_t budget = 10'000'000;
    int max_vertices = 9;
};

struct TwwResult {
    int width = 0;
    ContractionSequence witness;
    std::uint64_t states = 0;
};

// Minimum width over all contraction sequences, by depth-first search over
// vertex partitions with memoized dead ends. The witness is the
// lexicographically least optimal merge list. Throws ResourceLimitError
// (carrying a greedy upper bound) when the budget runs out or the graph is
// above options.max_vertices (hard cap 16).
TwwResult exact_tww(const Graph& g, const TwwOptions& options = {});

// Width-greedy sequence: each step takes the merge minimizing the resulting
// maximum red degree. Requires at most 64 vertices.
ContractionSequence greedy_sequence(const Graph& g);

// The sequence induced on g[vertices]: merges whose sides both meet
// `vertices`, restricted to them. Its width is at most width(seq).
ContractionSequence restrict_sequence(const ContractionSequence& seq, std::span<const Vertex> vertices);

}  // namespace twwcol
