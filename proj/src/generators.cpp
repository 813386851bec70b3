#include "twwcol/generators.hpp"

#include <stdexcept>
#include <string>

#include "twwcol/errors.hpp"

namespace twwcol {

std::uint64_t Rng::below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("empty range");
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x;
    do {
        x = next();
    } while (x >= limit);
    return x % bound;
}

Graph two_lift(const Graph& g, const LiftSigning& sign) {
    const auto edges = g.edges();
    if (sign.size() != edges.size())
        throw std::invalid_argument("signing has " + std::to_string(sign.size()) + " flags for " +
                                    std::to_string(edges.size()) + " edges");
    const int n = g.size();
    std::vector<Edge> lifted;
    lifted.reserve(2 * edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) {
        auto [u, v] = edges[i];
        const int flip = sign[i] ? 1 : 0;
        lifted.push_back({u, v + flip * n});
        lifted.push_back({u + n, v + (1 - flip) * n});
    }
    return Graph(2 * n, lifted);
}

LiftSigning random_signing(const Graph& g, Rng& rng) {
    LiftSigning sign(g.num_edges());
    for (std::size_t i = 0; i < sign.size(); ++i) sign[i] = rng.coin();
    return sign;
}

LiftTower build_tower(const Graph& base, const std::vector<LiftSigning>& signings) {
    LiftTower tower;
    tower.levels.push_back(base);
    for (const auto& sign : signings) {
        tower.levels.push_back(two_lift(tower.levels.back(), sign));
        tower.signings.push_back(sign);
    }
    return tower;
}

LiftTower random_tower(const Graph& base, int height, Rng& rng) {
    LiftTower tower;
    tower.levels.push_back(base);
    for (int k = 0; k < height; ++k) {
        tower.signings.push_back(random_signing(tower.levels.back(), rng));
        tower.levels.push_back(two_lift(tower.levels.back(), tower.signings.back()));
    }
    return tower;
}

namespace {

void check_guard(const Graph& g, std::uint64_t guard) {
    const std::size_t m = g.num_edges();
    const std::uint64_t n = static_cast<std::uint64_t>(g.size());
    if (m >= 63 || (n << m) >> m != n || (n << m) > guard)
        throw ResourceLimitError("theta-lift of a graph with m = " + std::to_string(m) + " edges has n*2^m vertices, above the guard of " +
                                 std::to_string(guard));
}

}  // namespace

Graph theta_lift(const Graph& g, std::uint64_t guard) {
    check_guard(g, guard);
    const auto edges = g.edges();
    const int n = g.size();
    const std::uint64_t cube = std::uint64_t{1} << edges.size();
    std::vector<Edge> lifted;
    lifted.reserve(edges.size() * cube);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        auto [u, v] = edges[i];
        const std::uint64_t bit = std::uint64_t{1} << i;
        for (std::uint64_t x = 0; x < cube; ++x)
            lifted.push_back({static_cast<Vertex>(u + n * x), static_cast<Vertex>(v + n * (x ^ bit))});
    }
    return Graph(static_cast<int>(n * cube), lifted);
}

LiftTower theta_lift_tower(const Graph& g, std::uint64_t guard) {
    check_guard(g, guard);
    const auto base_edges = g.edges();
    const int n = g.size();
    LiftTower tower;
    tower.levels.push_back(g);
    for (std::size_t j = 0; j < base_edges.size(); ++j) {
        const Graph& current = tower.levels.back();
        const auto edges = current.edges();
        LiftSigning sign(edges.size());
        for (std::size_t e = 0; e < edges.size(); ++e) {
            Edge projected{edges[e].first % n, edges[e].second % n};
            if (projected.first > projected.second) std::swap(projected.first, projected.second);
            sign[e] = projected == base_edges[j];
        }
        tower.signings.push_back(sign);
        tower.levels.push_back(two_lift(current, sign));
    }
    return tower;
}

ContractionSequence undo_lift_witness(const LiftTower& tower) {
    const Graph& top = tower.top();
    const int total = top.size();
    std::vector<NodeId> node(total);
    for (int v = 0; v < total; ++v) node[v] = v + 1;
    std::vector<Merge> merges;
    auto merge = [&](NodeId a, NodeId b) {
        merges.push_back({a, b});
        return total + static_cast<NodeId>(merges.size());
    };
    for (int level = tower.height(); level >= 1; --level) {
        const int half = tower.levels[level - 1].size();
        for (int w = 0; w < half; ++w) node[w] = merge(node[w], node[w + half]);
    }
    const int base = tower.base().size();
    for (int w = 1; w < base; ++w) node[0] = merge(node[0], node[w]);
    return ContractionSequence(top, std::move(merges));
}

Graph subdivided_clique(int n, int k) {
    if (n < 2) throw std::invalid_argument("subdivided clique needs n >= 2");
    if (k < 0) throw std::invalid_argument("subdivision count must be non-negative");
    const int pairs = n * (n - 1) / 2;
    std::vector<Edge> edges;
    int index = 0;
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b, ++index) {
            Vertex previous = a;
            for (int t = 0; t < k; ++t) {
                const Vertex mid = n + index * k + t;
                edges.push_back({previous, mid});
                previous = mid;
            }
            edges.push_back({previous, b});
        }
    return Graph(n + pairs * k, edges);
}

Graph lex_product_clique(const Graph& g, int s) {
    if (s < 1) throw std::invalid_argument("clique size must be positive");
    std::vector<Edge> edges;
    for (Vertex u = 0; u < g.size(); ++u)
        for (int i = 0; i < s; ++i)
            for (int j = i + 1; j < s; ++j) edges.push_back({u * s + i, u * s + j});
    for (auto [u, v] : g.edges())
        for (int i = 0; i < s; ++i)
            for (int j = 0; j < s; ++j) edges.push_back({u * s + i, v * s + j});
    return Graph(g.size() * s, edges);
}

Graph random_cograph(int n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("random cograph needs n >= 1");
    Rng rng(seed);
    // Remy: pick a uniform node, replace it by a new internal node whose
    // children are the old node and a new leaf, on a uniform side.
    struct Node {
        int parent = -1;
        int left = -1, right = -1;
        int leaf = -1;  // vertex for leaves
        bool join = false;
    };
    std::vector<Node> nodes{{}};
    nodes[0].leaf = 0;
    int root = 0;
    for (int v = 1; v < n; ++v) {
        const int target = static_cast<int>(rng.below(nodes.size()));
        const int internal = static_cast<int>(nodes.size());
        const int leaf = internal + 1;
        nodes.push_back({});
        nodes.push_back({});
        nodes[leaf].leaf = v;
        const int parent = nodes[target].parent;
        nodes[internal].parent = parent;
        if (parent < 0) {
            root = internal;
        } else if (nodes[parent].left == target) {
            nodes[parent].left = internal;
        } else {
            nodes[parent].right = internal;
        }
        const bool leaf_left = rng.coin();
        nodes[internal].left = leaf_left ? leaf : target;
        nodes[internal].right = leaf_left ? target : leaf;
        nodes[target].parent = internal;
        nodes[leaf].parent = internal;
    }
    for (auto& node : nodes)
        if (node.leaf < 0) node.join = rng.coin();

    std::vector<Edge> edges;
    auto leaves = [&](auto&& self, int x) -> std::vector<Vertex> {
        if (nodes[x].leaf >= 0) return {nodes[x].leaf};
        auto a = self(self, nodes[x].left);
        auto b = self(self, nodes[x].right);
        if (nodes[x].join)
            for (Vertex u : a)
                for (Vertex w : b) edges.push_back({u, w});
        a.insert(a.end(), b.begin(), b.end());
        return a;
    };
    leaves(leaves, root);
    return Graph(n, edges);
}

Graph random_graph(int n, double p, Rng& rng) {
    std::vector<Edge> edges;
    const std::uint64_t scale = std::uint64_t{1} << 53;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (static_cast<double>(rng.below(scale)) < p * static_cast<double>(scale)) edges.push_back({u, v});
    return Graph(n, edges);
}

}  // namespace twwcol
