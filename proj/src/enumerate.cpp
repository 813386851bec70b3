#include "twwcol/enumerate.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace twwcol {

namespace {

// Colour refinement; returns vertices grouped by final colour, colours in a
// labeling-independent order.
std::vector<std::vector<Vertex>> refined_cells(const Graph& g) {
    const int n = g.size();
    std::vector<int> colour(n);
    for (Vertex v = 0; v < n; ++v) colour[v] = g.degree(v);
    int classes = -1;
    while (true) {
        std::vector<std::pair<int, std::vector<int>>> signature(n);
        for (Vertex v = 0; v < n; ++v) {
            signature[v].first = colour[v];
            for (Vertex w : g.neighbors(v)) signature[v].second.push_back(colour[w]);
            std::sort(signature[v].second.begin(), signature[v].second.end());
        }
        std::map<std::pair<int, std::vector<int>>, int> rank;
        for (const auto& sig : signature) rank.emplace(sig, 0);
        int next = 0;
        for (auto& [sig, r] : rank) r = next++;
        for (Vertex v = 0; v < n; ++v) colour[v] = rank[signature[v]];
        if (next == classes) break;
        classes = next;
    }
    std::vector<std::vector<Vertex>> cells(classes);
    for (Vertex v = 0; v < n; ++v) cells[colour[v]].push_back(v);
    return cells;
}

// Column-major upper triangle: position j contributes bits adj(p_0,p_j)..adj(p_{j-1},p_j).
class CanonicalSearch {
public:
    explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.size()) {
        cells_ = refined_cells(g);
        for (std::size_t c = 0; c < cells_.size(); ++c)
            cell_of_position_.insert(cell_of_position_.end(), cells_[c].size(), static_cast<int>(c));
        total_bits_ = n_ * (n_ - 1) / 2;
        used_.assign(n_, 0);
        placed_.assign(n_, -1);
    }

    std::uint64_t run() {
        if (n_ <= 1) return 0;
        search(0, 0);
        return best_;
    }

private:
    void search(int pos, std::uint64_t code) {
        if (pos == n_) {
            if (!have_best_ || code > best_) {
                best_ = code;
                have_best_ = true;
            }
            return;
        }
        for (Vertex v : cells_[cell_of_position_[pos]]) {
            if (used_[v]) continue;
            std::uint64_t next = code;
            for (int i = 0; i < pos; ++i) next = (next << 1) | (g_.adjacent(placed_[i], v) ? 1u : 0u);
            int bits = pos * (pos + 1) / 2;
            if (have_best_) {
                std::uint64_t prefix = best_ >> (total_bits_ - bits);
                if (next < prefix) continue;
            }
            used_[v] = 1;
            placed_[pos] = v;
            search(pos + 1, next);
            used_[v] = 0;
        }
    }

    const Graph& g_;
    int n_;
    std::vector<std::vector<Vertex>> cells_;
    std::vector<int> cell_of_position_;
    int total_bits_ = 0;
    std::vector<char> used_;
    std::vector<Vertex> placed_;
    std::uint64_t best_ = 0;
    bool have_best_ = false;
};

}  // namespace

std::uint64_t canonical_code(const Graph& g) {
    if (g.size() > 11) throw std::invalid_argument("canonical_code supports at most 11 vertices");
    return CanonicalSearch(g).run();
}

Graph graph_from_code(int n, std::uint64_t code) {
    const int total = n * (n - 1) / 2;
    std::vector<Edge> edges;
    int bit = total - 1;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, --bit)
            if ((code >> bit) & 1u) edges.emplace_back(i, j);
    return Graph(n, edges);
}

std::vector<Graph> nonisomorphic_graphs(int n, bool connected_only) {
    if (n < 0 || n > 9) throw std::invalid_argument("nonisomorphic_graphs supports 0 <= n <= 9");
    std::set<std::uint64_t> level{0};
    for (int k = 2; k <= n; ++k) {
        std::set<std::uint64_t> next;
        for (std::uint64_t code : level) {
            Graph base = graph_from_code(k - 1, code);
            auto base_edges = base.edges();
            for (std::uint32_t subset = 0; subset < (1u << (k - 1)); ++subset) {
                auto edges = base_edges;
                for (int v = 0; v < k - 1; ++v)
                    if ((subset >> v) & 1u) edges.emplace_back(v, k - 1);
                next.insert(canonical_code(Graph(k, edges)));
            }
        }
        level = std::move(next);
    }
    std::vector<Graph> out;
    if (n == 0) {
        if (!connected_only) out.emplace_back(0);
        return out;
    }
    for (std::uint64_t code : level) {
        Graph g = graph_from_code(n, code);
        if (!connected_only || is_connected(g)) out.push_back(std::move(g));
    }
    return out;
}

}  // namespace twwcol
