#include "twwcol/nice_ordering.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "twwcol/errors.hpp"

namespace twwcol {

namespace {

bool nice_in(const Trigraph& t, NodeId x, int s) {
    return static_cast<int>(t.members(x).size()) <= s && !t.black(x).empty();
}

void claim_failed(const std::string& what, int step) {
    throw std::invalid_argument(what + " at step " + std::to_string(step) + " (is s below the biclique number?)");
}

void check_non_nice_nodes(const Trigraph& t, int step, int s, const std::vector<char>& nice_now) {
    for (NodeId x : t.nodes()) {
        if (nice_now[x]) continue;
        const bool small = static_cast<int>(t.members(x).size()) <= s;
        if (small && !t.black(x).empty()) claim_failed("small non-nice node with a black edge", step);
        std::size_t covered = 0;
        for (NodeId y : t.black(x)) {
            if (!nice_now[y]) claim_failed("black edge between two non-nice nodes", step);
            covered += t.members(y).size();
        }
        if (static_cast<int>(covered) > s) claim_failed("non-nice node with black neighbourhood above s", step);
    }
}

int resolve_s(const ContractionSequence& seq, std::optional<int> s) {
    if (s) {
        if (*s < 0) throw std::invalid_argument("s must be non-negative");
        return *s;
    }
    return bomega(seq.graph());
}

void require_connected(const Graph& g) {
    if (!is_connected(g)) throw DisconnectedGraphError("graph is disconnected; order components separately");
}

std::vector<Vertex> sorted_members(const UniverseIndex& universe, NodeId x) {
    return universe[x].members;  // already ascending
}

}  // namespace

NiceAnnotation annotate_nice(const ContractionSequence& seq, int s) {
    const Graph& g = seq.graph();
    require_connected(g);
    const UniverseIndex universe(seq);
    NiceAnnotation out;
    out.s = s;
    out.nodes.assign(universe.size() + 1, {});
    std::vector<char> lapsed(universe.size() + 1, 0);  // seen non-nice at a later step
    std::vector<char> nice_now(universe.size() + 1, 0);

    replay(seq, [&](int step, const Trigraph& t) {
        for (NodeId x : t.nodes()) {
            const bool nice = nice_in(t, x, s);
            nice_now[x] = nice ? 1 : 0;
            if (nice) {
                if (lapsed[x]) claim_failed("node stops being nice before its split", step);
                out.nodes[x].nice = true;
                out.nodes[x].rho = step;
            } else {
                lapsed[x] = 1;
            }
        }
        check_non_nice_nodes(t, step, s, nice_now);
    });

    const int n = g.size();
    std::vector<char> covered(n, 0);
    for (NodeId x = 1; x <= static_cast<NodeId>(universe.size()); ++x) {
        const UniverseNode& node = universe[x];
        if (out.nodes[x].nice && node.children.first != 0 &&
            !(out.nodes[node.children.first].nice && out.nodes[node.children.second].nice))
            throw std::logic_error("nice node " + std::to_string(x) + " has a child that is never nice");
        const bool parent_nice = node.parent != 0 && out.nodes[node.parent].nice;
        if (!out.nodes[x].nice || parent_nice) continue;
        out.maximal.push_back(x);
        for (Vertex v : node.members) {
            if (covered[v]) throw std::logic_error("maximal nice sets overlap");
            covered[v] = 1;
        }
    }
    if (n > 1 && std::find(covered.begin(), covered.end(), 0) != covered.end())
        throw std::logic_error("maximal nice sets do not cover V");

    std::sort(out.maximal.begin(), out.maximal.end(), [&](NodeId a, NodeId b) {
        if (out.nodes[a].rho != out.nodes[b].rho) return out.nodes[a].rho < out.nodes[b].rho;
        if (universe[a].birth != universe[b].birth) return universe[a].birth > universe[b].birth;
        return a < b;
    });
    return out;
}

LinearOrder nice_order(const ContractionSequence& seq, std::optional<int> s) {
    const int n = seq.vertex_count();
    const int small = resolve_s(seq, s);
    require_connected(seq.graph());
    if (n <= std::max(small, 1)) return LinearOrder::identity(n);
    const NiceAnnotation annotation = annotate_nice(seq, small);
    const UniverseIndex universe(seq);
    std::vector<Vertex> order;
    order.reserve(n);
    for (NodeId x : annotation.maximal) {
        auto members = sorted_members(universe, x);
        order.insert(order.end(), members.begin(), members.end());
    }
    return LinearOrder(std::move(order));
}

LinearOrder nice_order_incremental(const ContractionSequence& seq, std::optional<int> s) {
    const int n = seq.vertex_count();
    const int small = resolve_s(seq, s);
    require_connected(seq.graph());
    if (n <= std::max(small, 1)) return LinearOrder::identity(n);
    const UniverseIndex universe(seq);

    // nice_at[i] = nice nodes of G_i, straight from the trigraphs
    std::vector<std::vector<char>> nice_at(n + 1, std::vector<char>(universe.size() + 1, 0));
    std::vector<std::vector<NodeId>> nodes_at(n + 1);
    replay(seq, [&](int step, const Trigraph& t) {
        nodes_at[step] = t.nodes();
        for (NodeId x : nodes_at[step]) nice_at[step][x] = nice_in(t, x, small) ? 1 : 0;
    });

    struct Entry {
        NodeId node;
        int group;  // index of the node that joined the order from a non-nice origin
    };
    std::vector<Entry> current;  // <_1 is empty: G_1 has no edges
    int groups = 0;
    for (int i = 1; i < n; ++i) {
        const NodeId split = universe.split_at(i);
        auto [c1, c2] = universe[split].children;
        auto origin = [&](NodeId x) { return (x == c1 || x == c2) ? split : x; };

        std::vector<Entry> next;
        next.reserve(current.size() + 2);
        // rule 1: nodes whose origin was nice keep the relative order of their origins
        for (const Entry& e : current) {
            if (e.node == split) {
                for (NodeId c : {std::min(c1, c2), std::max(c1, c2)}) {
                    if (!nice_at[i + 1][c]) throw std::logic_error("child of a nice node is not nice");
                    next.push_back({c, e.group});
                }
            } else {
                if (!nice_at[i + 1][e.node]) throw std::logic_error("nice node lost niceness before its split");
                next.push_back(e);
            }
        }
        // rules 2 and 3: nodes with a non-nice origin go last, by decreasing birth
        std::vector<NodeId> fresh;
        for (NodeId x : nodes_at[i + 1])
            if (nice_at[i + 1][x] && !nice_at[i][origin(x)]) fresh.push_back(x);
        std::sort(fresh.begin(), fresh.end(), [&](NodeId a, NodeId b) {
            if (universe[a].birth != universe[b].birth) return universe[a].birth > universe[b].birth;
            return a < b;
        });
        for (NodeId x : fresh) next.push_back({x, groups++});
        current = std::move(next);
    }

    if (static_cast<int>(current.size()) != n) throw std::logic_error("incremental order does not cover V");
    // the rules leave the order inside one group free; use ascending vertex id
    std::vector<Vertex> order;
    order.reserve(n);
    for (std::size_t begin = 0; begin < current.size();) {
        std::size_t end = begin;
        while (end < current.size() && current[end].group == current[begin].group) ++end;
        std::vector<Vertex> block;
        for (std::size_t k = begin; k < end; ++k) block.push_back(universe[current[k].node].members.front());
        std::sort(block.begin(), block.end());
        order.insert(order.end(), block.begin(), block.end());
        begin = end;
    }
    return LinearOrder(std::move(order));
}

std::vector<SplitViewMismatch> split_view_mismatches(const ContractionSequence& seq, int s) {
    const int n = seq.vertex_count();
    std::vector<SplitViewMismatch> out;
    if (n <= std::max(s, 1)) return out;
    const NiceAnnotation annotation = annotate_nice(seq, s);
    const UniverseIndex universe(seq);

    std::vector<int> position(universe.size() + 1, -1);  // index of the maximal set containing a node
    for (std::size_t a = 0; a < annotation.maximal.size(); ++a) {
        NodeId top = annotation.maximal[a];
        std::vector<NodeId> stack{top};
        while (!stack.empty()) {
            NodeId x = stack.back();
            stack.pop_back();
            position[x] = static_cast<int>(a);
            if (universe[x].children.first != 0) {
                stack.push_back(universe[x].children.first);
                stack.push_back(universe[x].children.second);
            }
        }
    }
    std::vector<int> set_of_vertex(n);
    for (std::size_t a = 0; a < annotation.maximal.size(); ++a)
        for (Vertex v : universe[annotation.maximal[a]].members) set_of_vertex[v] = static_cast<int>(a);

    std::vector<std::vector<NodeId>> nodes_at(n + 1);
    std::vector<std::vector<char>> nice_at(n + 1);
    replay(seq, [&](int step, const Trigraph& t) {
        nodes_at[step] = t.nodes();
        nice_at[step].assign(universe.size() + 1, 0);
        for (NodeId x : nodes_at[step]) nice_at[step][x] = nice_in(t, x, s) ? 1 : 0;
    });

    for (Vertex v = 0; v < n; ++v) {
        const int a = set_of_vertex[v];
        const int t = annotation[annotation.maximal[a]].rho - 1;
        SplitViewMismatch m;
        m.vertex = v;
        m.step = t;
        for (NodeId x : nodes_at[t]) {
            const bool earlier = position[x] != -1 && position[x] < a;
            const bool nice = nice_at[t][x];
            if (earlier && !nice) m.earlier_not_nice.push_back(x);
            if (nice && !earlier) m.nice_not_earlier.push_back(x);
        }
        if (!m.earlier_not_nice.empty() || !m.nice_not_earlier.empty()) out.push_back(std::move(m));
    }
    return out;
}

LinearOrder nice_order_per_component(const ContractionSequence& seq, std::optional<int> s) {
    std::vector<Vertex> order;
    order.reserve(seq.vertex_count());
    for (const auto& comp : components(seq.graph())) {
        ContractionSequence part = restrict_sequence(seq, comp);
        LinearOrder local = nice_order(part, s);
        for (Vertex v : local.sequence()) order.push_back(comp[v]);
    }
    return LinearOrder(std::move(order));
}

}  // namespace twwcol
