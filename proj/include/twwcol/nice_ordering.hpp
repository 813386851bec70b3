#pragma once

#include <optional>
#include <vector>

#include "twwcol/graph.hpp"
#include "twwcol/trigraph.hpp"

namespace twwcol {

// A node of the universe is *small* when it has at most s vertices, and
// *nice at step i* (birth <= i <= split) when it is small and incident to a
// black edge in G_i. rho is the first step at which it is nice.
struct NiceNode {
    bool nice = false;
    int rho = 0;  // 0 when never nice
};

class NiceAnnotation {
public:
    int s = 0;
    std::vector<NiceNode> nodes;  // indexed by NodeId
    // Maximal nice sets, sorted by rho ascending, then birth descending,
    // then node id ascending. They partition V.
    std::vector<NodeId> maximal;

    const NiceNode& operator[](NodeId x) const { return nodes.at(x); }
};

// Labels every universe node while replaying the sequence, and checks along
// the way that niceness persists up to the split time, that subsets of nice
// sets are nice, that maximal nice sets partition V, and that the non-nice
// nodes B_i of every step satisfy:
//   - no small node of B_i has a black edge,
//   - no black edge joins two nodes of B_i,
//   - the black neighbourhood of a node of B_i covers at most s vertices.
// The last two need s >= bomega(G); a failure throws std::invalid_argument.
// Throws DisconnectedGraphError unless the graph is connected.
NiceAnnotation annotate_nice(const ContractionSequence& seq, int s);

// Vertices of the maximal nice sets in annotation order, ascending vertex id
// inside each set. Graphs with at most s vertices get the identity order.
// Without `s`, bomega(G) is used.
LinearOrder nice_order(const ContractionSequence& seq, std::optional<int> s = std::nullopt);

// Same order built by refining an order on the nice nodes while the sequence
// is uncontracted: children of a split nice node take its place, nodes that
// just became nice go to the end by decreasing birth time (then id).
LinearOrder nice_order_incremental(const ContractionSequence& seq, std::optional<int> s = std::nullopt);

// Cross-check of the split-step view: for each vertex v in maximal set N_a,
// with t = rho(N_a) - 1, the nodes of G_t contained in some earlier maximal
// set should be exactly the nodes of G_t nice at step t.
struct SplitViewMismatch {
    Vertex vertex = 0;
    int step = 0;
    std::vector<NodeId> earlier_not_nice;  // inside an earlier N_i but not nice at t
    std::vector<NodeId> nice_not_earlier;  // nice at t but not inside an earlier N_i
};
std::vector<SplitViewMismatch> split_view_mismatches(const ContractionSequence& seq, int s);

// Per-component nice order: each component is ordered with the sequence
// restricted to it, components follow each other by smallest vertex.
LinearOrder nice_order_per_component(const ContractionSequence& seq, std::optional<int> s = std::nullopt);

}  // namespace twwcol
