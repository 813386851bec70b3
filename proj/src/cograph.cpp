#include "twwcol/cograph.hpp"

#include <algorithm>

#include "twwcol/errors.hpp"

namespace twwcol {

namespace {

// Components of g[vertices] (complemented when `co`), each ascending.
std::vector<std::vector<Vertex>> parts(const Graph& g, const std::vector<Vertex>& vertices, bool co) {
    std::vector<char> seen(vertices.size(), 0);
    std::vector<std::vector<Vertex>> out;
    for (std::size_t s = 0; s < vertices.size(); ++s) {
        if (seen[s]) continue;
        seen[s] = 1;
        std::vector<std::size_t> queue{s};
        for (std::size_t head = 0; head < queue.size(); ++head) {
            Vertex u = vertices[queue[head]];
            for (std::size_t j = 0; j < vertices.size(); ++j)
                if (!seen[j] && g.adjacent(u, vertices[j]) != co) {
                    seen[j] = 1;
                    queue.push_back(j);
                }
        }
        std::vector<Vertex> part;
        for (std::size_t i : queue) part.push_back(vertices[i]);
        std::sort(part.begin(), part.end());
        out.push_back(std::move(part));
    }
    return out;
}

bool build(const Graph& g, std::vector<Vertex> vertices, Cotree& tree, int& index) {
    index = static_cast<int>(tree.nodes.size());
    tree.nodes.push_back({});
    tree.nodes[index].vertices = vertices;
    if (vertices.size() == 1) return true;
    auto split = parts(g, vertices, false);
    Cotree::Kind kind = Cotree::Kind::Union;
    if (split.size() == 1) {
        split = parts(g, vertices, true);
        kind = Cotree::Kind::Join;
        if (split.size() == 1) return false;
    }
    tree.nodes[index].kind = kind;
    for (auto& part : split) {
        int child = -1;
        if (!build(g, std::move(part), tree, child)) return false;
        tree.nodes[index].children.push_back(child);
    }
    return true;
}

Cotree require_cotree(const Graph& g) {
    auto tree = cotree(g);
    if (!tree) throw NotCographError("graph contains an induced P4");
    return std::move(*tree);
}

std::vector<int> children_by_size(const Cotree& tree, int index) {
    auto kids = tree.nodes[index].children;
    std::sort(kids.begin(), kids.end(), [&](int a, int b) {
        const auto& va = tree.nodes[a].vertices;
        const auto& vb = tree.nodes[b].vertices;
        if (va.size() != vb.size()) return va.size() < vb.size();
        return va.front() < vb.front();
    });
    return kids;
}

}  // namespace

std::optional<Cotree> cotree(const Graph& g) {
    Cotree tree;
    if (g.size() == 0) return tree;
    std::vector<Vertex> all(g.size());
    for (Vertex v = 0; v < g.size(); ++v) all[v] = v;
    if (!build(g, std::move(all), tree, tree.root)) return std::nullopt;
    return tree;
}

bool is_cograph(const Graph& g) { return cotree(g).has_value(); }

LinearOrder cograph_order(const Graph& g) {
    const Cotree tree = require_cotree(g);
    std::vector<Vertex> order;
    order.reserve(g.size());
    auto emit = [&](auto&& self, int index) -> void {
        if (tree.nodes[index].children.empty()) {
            order.push_back(tree.nodes[index].vertices.front());
            return;
        }
        for (int child : children_by_size(tree, index)) self(self, child);
    };
    if (tree.root >= 0) emit(emit, tree.root);
    return LinearOrder(std::move(order));
}

ContractionSequence cograph_witness(const Graph& g) {
    const Cotree tree = require_cotree(g);
    std::vector<Merge> merges;
    const int n = g.size();
    auto contract = [&](auto&& self, int index) -> NodeId {
        const auto& node = tree.nodes[index];
        if (node.children.empty()) return node.vertices.front() + 1;
        NodeId acc = 0;
        for (int child : node.children) {
            NodeId part = self(self, child);
            if (acc == 0) {
                acc = part;
            } else {
                merges.push_back({acc, part});
                acc = n + static_cast<NodeId>(merges.size());
            }
        }
        return acc;
    };
    if (tree.root >= 0) contract(contract, tree.root);
    return ContractionSequence(g, std::move(merges));
}

int cograph_bomega(const Graph& g) {
    const Cotree tree = require_cotree(g);
    if (g.size() == 0) return 0;
    constexpr int kNone = -1;
    // best[a] = largest b such that K_{a,b} is a subgraph (b = 0 allowed), kNone if a > size
    auto solve = [&](auto&& self, int index) -> std::vector<int> {
        const auto& node = tree.nodes[index];
        if (node.children.empty()) return {1, 0};
        std::vector<int> acc;
        for (int child : node.children) {
            std::vector<int> part = self(self, child);
            if (acc.empty()) {
                acc = std::move(part);
                continue;
            }
            const int size = static_cast<int>(acc.size() + part.size()) - 2;
            std::vector<int> next(size + 1, kNone);
            if (node.kind == Cotree::Kind::Union) {
                // a biclique with both sides non-empty is connected, so it sits in one part
                for (int a = 0; a <= size; ++a) {
                    int b = a == 0 ? size : 0;
                    if (a < static_cast<int>(acc.size())) b = std::max(b, acc[a]);
                    if (a < static_cast<int>(part.size())) b = std::max(b, part[a]);
                    next[a] = b;
                }
            } else {
                for (std::size_t a1 = 0; a1 < acc.size(); ++a1)
                    for (std::size_t a2 = 0; a2 < part.size(); ++a2)
                        next[a1 + a2] = std::max(next[a1 + a2], acc[a1] + part[a2]);
            }
            acc = std::move(next);
        }
        return acc;
    };
    const std::vector<int> best = solve(solve, tree.root);
    int s = 0;
    for (int a = 1; a < static_cast<int>(best.size()); ++a)
        if (best[a] >= a) s = a;
    return s;
}

}  // namespace twwcol
