#include "twwcol/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>

#include <boost/dynamic_bitset.hpp>

#include "twwcol/errors.hpp"

namespace twwcol {

Graph::Graph(int n) : adj_(static_cast<std::size_t>(std::max(n, 0))) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("edge endpoint out of range: " + std::to_string(u) + " " +
                                        std::to_string(v));
        if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& list : adj_) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
        num_edges_ += list.size();
    }
    num_edges_ /= 2;
}

Graph::Graph(int n, std::initializer_list<Edge> edges)
    : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

int Graph::max_degree() const {
    int best = 0;
    for (const auto& list : adj_) best = std::max(best, static_cast<int>(list.size()));
    return best;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    const auto& list = adj_[u];
    return std::binary_search(list.begin(), list.end(), v);
}

bool Graph::is_regular() const {
    for (Vertex v = 1; v < size(); ++v)
        if (degree(v) != degree(0)) return false;
    return true;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(num_edges_);
    for (Vertex u = 0; u < size(); ++u)
        for (Vertex v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

std::vector<std::uint64_t> Graph::masks() const {
    if (size() > 64) throw std::invalid_argument("bitmask view needs at most 64 vertices");
    std::vector<std::uint64_t> out(size(), 0);
    for (Vertex u = 0; u < size(); ++u)
        for (Vertex v : adj_[u]) out[u] |= std::uint64_t{1} << v;
    return out;
}

Graph Graph::complement() const {
    std::vector<Edge> out;
    for (Vertex u = 0; u < size(); ++u)
        for (Vertex v = u + 1; v < size(); ++v)
            if (!adjacent(u, v)) out.emplace_back(u, v);
    return Graph(size(), out);
}

Graph Graph::induced(std::span<const Vertex> vertices) const {
    std::vector<int> index(size(), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) index[vertices[i]] = static_cast<int>(i);
    std::vector<Edge> out;
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (Vertex w : adj_[vertices[i]])
            if (index[w] > static_cast<int>(i)) out.emplace_back(static_cast<int>(i), index[w]);
    return Graph(static_cast<int>(vertices.size()), out);
}

LinearOrder::LinearOrder(std::vector<Vertex> sequence) : sequence_(std::move(sequence)) {
    rank_.assign(sequence_.size(), -1);
    for (std::size_t i = 0; i < sequence_.size(); ++i) {
        Vertex v = sequence_[i];
        if (v < 0 || v >= static_cast<int>(sequence_.size()) || rank_[v] != -1)
            throw std::invalid_argument("order is not a permutation of the vertex set");
        rank_[v] = static_cast<int>(i);
    }
}

LinearOrder LinearOrder::identity(int n) {
    std::vector<Vertex> seq(n);
    std::iota(seq.begin(), seq.end(), 0);
    return LinearOrder(std::move(seq));
}

GirthValue GirthValue::finite(int length) {
    if (length < 3) throw std::invalid_argument("girth of a simple graph is at least 3");
    GirthValue g;
    g.infinite_ = false;
    g.value_ = length;
    return g;
}

std::string GirthValue::to_string() const {
    return infinite_ ? std::string("inf") : std::to_string(value_);
}

std::strong_ordering GirthValue::operator<=>(const GirthValue& other) const {
    if (infinite_ || other.infinite_) return infinite_ <=> other.infinite_;
    return value_ <=> other.value_;
}

GirthValue girth(const Graph& g) {
    const int n = g.size();
    int best = -1;
    std::vector<int> dist(n), parent(n);
    for (Vertex s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[s] = 0;
        parent[s] = -1;
        std::queue<Vertex> queue;
        queue.push(s);
        while (!queue.empty()) {
            Vertex u = queue.front();
            queue.pop();
            // cycles through s found later in this BFS cannot be shorter
            if (best != -1 && 2 * dist[u] >= best) break;
            for (Vertex w : g.neighbors(u)) {
                if (dist[w] == -1) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push(w);
                } else if (w != parent[u]) {
                    int len = dist[u] + dist[w] + 1;
                    if (best == -1 || len < best) best = len;
                }
            }
        }
    }
    return best == -1 ? GirthValue::infinite() : GirthValue::finite(best);
}

namespace {

using Bits = boost::dynamic_bitset<std::uint64_t>;

class BicliqueSearch {
public:
    BicliqueSearch(const Graph& g, std::uint64_t budget) : g_(g), budget_(budget) {
        const int n = g.size();
        nbr_.assign(n, Bits(n));
        for (Vertex v = 0; v < n; ++v)
            for (Vertex w : g.neighbors(v)) nbr_[v].set(w);
    }

    // Some K_{s,s} exists. WLOG min(A u B) lies in A, so B is searched above a_1.
    bool exists(int s) {
        s_ = s;
        const int n = g_.size();
        for (Vertex a = 0; a < n; ++a) {
            if (g_.degree(a) < s) continue;
            Bits common = nbr_[a];
            for (Vertex w = 0; w <= a; ++w) common.reset(w);
            if (static_cast<int>(common.count()) < s) continue;
            if (extend(1, a, common)) return true;
        }
        return false;
    }

private:
    bool extend(int chosen, Vertex last, const Bits& common) {
        if (++visited_ > budget_)
            throw ResourceLimitError("biclique search exceeded budget of " + std::to_string(budget_) + " nodes");
        if (chosen == s_) return true;
        const int n = g_.size();
        if (n - last - 1 < s_ - chosen) return false;
        for (Vertex a = last + 1; a < n; ++a) {
            if (g_.degree(a) < s_) continue;
            Bits next = common & nbr_[a];
            if (static_cast<int>(next.count()) < s_) continue;
            if (extend(chosen + 1, a, next)) return true;
        }
        return false;
    }

    const Graph& g_;
    std::vector<Bits> nbr_;
    std::uint64_t budget_;
    std::uint64_t visited_ = 0;
    int s_ = 0;
};

}  // namespace

int bomega(const Graph& g, std::uint64_t budget) {
    if (g.num_edges() == 0) return 0;
    BicliqueSearch search(g, budget);
    int best = 1;
    for (int s = 2; 2 * s <= g.size(); ++s) {
        if (!search.exists(s)) break;
        best = s;
    }
    return best;
}

Degeneracy degeneracy(const Graph& g) {
    const int n = g.size();
    std::vector<int> deg(n);
    std::vector<char> removed(n, 0);
    for (Vertex v = 0; v < n; ++v) deg[v] = g.degree(v);
    std::vector<Vertex> elimination;
    elimination.reserve(n);
    int value = 0;
    for (int step = 0; step < n; ++step) {
        Vertex pick = -1;
        for (Vertex v = 0; v < n; ++v)
            if (!removed[v] && (pick == -1 || deg[v] < deg[pick])) pick = v;
        value = std::max(value, deg[pick]);
        removed[pick] = 1;
        elimination.push_back(pick);
        for (Vertex w : g.neighbors(pick))
            if (!removed[w]) --deg[w];
    }
    std::reverse(elimination.begin(), elimination.end());
    return {value, LinearOrder(std::move(elimination))};
}

std::vector<std::vector<Vertex>> distance_paths(const Graph& g, Vertex u, Vertex v, int r, std::size_t cap) {
    if (u < 0 || v < 0 || u >= g.size() || v >= g.size()) throw std::invalid_argument("vertex out of range");
    std::vector<std::vector<Vertex>> out;
    if (u == v) {
        out.push_back({u});
        return out;
    }
    std::vector<Vertex> path{u};
    std::vector<char> on_path(g.size(), 0);
    on_path[u] = 1;
    auto dfs = [&](auto&& self, Vertex x) -> void {
        if (static_cast<int>(path.size()) - 1 >= r) return;
        for (Vertex w : g.neighbors(x)) {
            if (on_path[w]) continue;
            path.push_back(w);
            if (w == v) {
                if (out.size() >= cap)
                    throw ResourceLimitError("path enumeration exceeded cap of " + std::to_string(cap));
                out.push_back(path);
            } else {
                on_path[w] = 1;
                self(self, w);
                on_path[w] = 0;
            }
            path.pop_back();
        }
    };
    dfs(dfs, u);
    return out;
}

std::vector<std::vector<Vertex>> components(const Graph& g) {
    const int n = g.size();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<Vertex>> out;
    for (Vertex s = 0; s < n; ++s) {
        if (comp[s] != -1) continue;
        std::vector<Vertex> members{s};
        comp[s] = static_cast<int>(out.size());
        for (std::size_t i = 0; i < members.size(); ++i)
            for (Vertex w : g.neighbors(members[i]))
                if (comp[w] == -1) {
                    comp[w] = comp[s];
                    members.push_back(w);
                }
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    return out;
}

bool is_connected(const Graph& g) { return g.size() <= 1 || components(g).size() == 1; }

Graph complete_graph(int n) {
    std::vector<Edge> e;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return Graph(n, e);
}

Graph path_graph(int n) {
    std::vector<Edge> e;
    for (Vertex v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
    return Graph(n, e);
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    std::vector<Edge> e;
    for (Vertex v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
    return Graph(n, e);
}

Graph complete_bipartite(int a, int b) {
    std::vector<Edge> e;
    for (Vertex u = 0; u < a; ++u)
        for (Vertex v = 0; v < b; ++v) e.emplace_back(u, a + v);
    return Graph(a + b, e);
}

Graph petersen_graph() {
    std::vector<Edge> e;
    for (int i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);
        e.emplace_back(i, i + 5);
        e.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    return Graph(10, e);
}

}  // namespace twwcol
