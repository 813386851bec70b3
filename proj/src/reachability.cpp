#include "twwcol/reachability.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

#include "twwcol/errors.hpp"

namespace twwcol {

namespace {

using Ranks = std::vector<int>;

Ranks ranks_of(const LinearOrder& L) {
    Ranks rank(L.size());
    for (int i = 0; i < L.size(); ++i) rank[L.at(i)] = i;
    return rank;
}

void check_inputs(const Graph& g, const LinearOrder& L, int r) {
    if (L.size() != g.size()) throw std::invalid_argument("order size differs from graph size");
    if (r < 1) throw std::invalid_argument("r must be positive");
}

// Vertices within distance r of `source` in g[{w : rank[w] >= rank[source]}].
std::vector<Vertex> upward_ball(const Graph& g, const Ranks& rank, int r, Vertex source) {
    std::vector<int> dist(g.size(), -1);
    std::vector<Vertex> queue{source};
    dist[source] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        Vertex x = queue[head];
        if (dist[x] == r) continue;
        for (Vertex y : g.neighbors(x))
            if (dist[y] < 0 && rank[y] > rank[source]) {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
    }
    return queue;
}

std::vector<Vertex> sreach_ranked(const Graph& g, const Ranks& rank, int r, Vertex v) {
    std::vector<int> dist(g.size(), -1);
    std::vector<char> found(g.size(), 0);
    std::vector<Vertex> queue{v};
    dist[v] = 0;
    found[v] = 1;
    std::vector<Vertex> out{v};
    for (std::size_t head = 0; head < queue.size(); ++head) {
        Vertex x = queue[head];
        for (Vertex y : g.neighbors(x)) {
            if (rank[y] < rank[v]) {
                if (!found[y]) {
                    found[y] = 1;
                    out.push_back(y);
                }
            } else if (dist[y] < 0 && dist[x] + 1 < r) {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

class BackconnSearch {
public:
    BackconnSearch(const Graph& g, const Ranks& rank, int r, Vertex v, std::uint64_t budget)
        : g_(g), rank_(rank), r_(r), v_(v), budget_(budget), used_(g.size(), 0) {}

    int run() {
        used_[v_] = 1;
        int direct = 0;
        for (Vertex w : g_.neighbors(v_)) {
            // an earlier neighbour is always best used as a one-edge path of its own
            if (rank_[w] < rank_[v_]) {
                used_[w] = 1;
                ++direct;
            } else {
                upper_.push_back(w);
            }
        }
        if (r_ == 1 || upper_.empty()) return direct;
        int targets = 0;
        for (Vertex u = 0; u < g_.size(); ++u)
            if (!used_[u] && rank_[u] < rank_[v_]) ++targets;
        ceiling_ = std::min(static_cast<int>(upper_.size()), targets);
        if (ceiling_ > 0) search(0, 0);
        return direct + best_;
    }

private:
    bool inner(Vertex x) const { return rank_[x] > rank_[v_]; }

    // Remaining neighbours from `index` on that still reach a free target.
    int bound(std::size_t index) {
        int count = 0;
        std::vector<int> dist(g_.size(), -1);
        for (std::size_t k = index; k < upper_.size(); ++k) {
            Vertex w = upper_[k];
            if (used_[w]) continue;
            std::fill(dist.begin(), dist.end(), -1);
            std::vector<Vertex> queue{w};
            dist[w] = 1;
            bool hit = false;
            for (std::size_t head = 0; head < queue.size() && !hit; ++head) {
                Vertex x = queue[head];
                for (Vertex y : g_.neighbors(x)) {
                    if (used_[y] || dist[y] >= 0) continue;
                    if (!inner(y)) {
                        hit = true;
                        break;
                    }
                    if (dist[x] + 1 < r_) {
                        dist[y] = dist[x] + 1;
                        queue.push_back(y);
                    }
                }
            }
            if (hit) ++count;
        }
        return count;
    }

    void search(std::size_t index, int current) {
        if (++visited_ > budget_)
            throw ResourceLimitError("backconnectivity search exceeded budget of " + std::to_string(budget_) + " nodes");
        if (current > best_) best_ = current;
        if (best_ == ceiling_ || index == upper_.size()) return;
        if (current + bound(index) <= best_) return;
        Vertex w = upper_[index];
        if (!used_[w]) {
            used_[w] = 1;
            extend(w, 1, index, current);
            used_[w] = 0;
            if (best_ == ceiling_) return;
        }
        search(index + 1, current);
    }

    // Path v, w, ..., x of length `length` with x marked used; close it at a
    // free earlier vertex or extend it through free later vertices.
    void extend(Vertex x, int length, std::size_t index, int current) {
        for (Vertex y : g_.neighbors(x)) {
            if (used_[y]) continue;
            if (!inner(y)) {
                used_[y] = 1;
                search(index + 1, current + 1);
                used_[y] = 0;
            } else if (length + 1 < r_) {
                used_[y] = 1;
                extend(y, length + 1, index, current);
                used_[y] = 0;
            }
            if (best_ == ceiling_) return;
        }
    }

    const Graph& g_;
    const Ranks& rank_;
    int r_;
    Vertex v_;
    std::uint64_t budget_;
    std::uint64_t visited_ = 0;
    std::vector<char> used_;
    std::vector<Vertex> upper_;
    int ceiling_ = 0;
    int best_ = 0;
};

int backconn_ranked(const Graph& g, const Ranks& rank, int r, Vertex v, std::uint64_t budget) {
    return BackconnSearch(g, rank, r, v, budget).run();
}

// Ranks placing `prefix` first (ascending id), then v, then the rest.
Ranks prefix_ranks(int n, std::uint32_t prefix, Vertex v) {
    Ranks rank(n);
    int next = 0;
    for (Vertex u = 0; u < n; ++u)
        if (prefix >> u & 1u) rank[u] = next++;
    rank[v] = next++;
    for (Vertex u = 0; u < n; ++u)
        if (!(prefix >> u & 1u) && u != v) rank[u] = next++;
    return rank;
}

ExactResult exact_prefix_dp(const Graph& g, Param which, int r, const ExactOptions& options) {
    const int n = g.size();
    const std::uint32_t full = (1u << n) - 1;
    std::uint64_t work = 0;
    // h[P] = best achievable maximum over the vertices after prefix P
    std::vector<int> h(static_cast<std::size_t>(full) + 1, 0);
    auto cost = [&](std::uint32_t prefix, Vertex v) {
        if (++work > options.budget)
            throw ResourceLimitError("exact " + to_string(which) + " exceeded budget of " +
                                     std::to_string(options.budget));
        const Ranks rank = prefix_ranks(n, prefix, v);
        if (which == Param::Scol) return static_cast<int>(sreach_ranked(g, rank, r, v).size());
        return backconn_ranked(g, rank, r, v, options.budget);
    };
    std::vector<std::vector<int>> costs;  // costs[P][v], kept for witness extraction
    costs.assign(static_cast<std::size_t>(full) + 1, {});
    for (std::uint32_t prefix = full;; --prefix) {
        if (prefix != full) {
            int best = std::numeric_limits<int>::max();
            costs[prefix].assign(n, 0);
            for (Vertex v = 0; v < n; ++v) {
                if (prefix >> v & 1u) continue;
                const int c = cost(prefix, v);
                costs[prefix][v] = c;
                best = std::min(best, std::max(c, h[prefix | (1u << v)]));
            }
            h[prefix] = best;
        }
        if (prefix == 0) break;
    }
    std::vector<Vertex> order;
    std::uint32_t prefix = 0;
    while (prefix != full) {
        for (Vertex v = 0; v < n; ++v) {
            if (prefix >> v & 1u) continue;
            if (std::max(costs[prefix][v], h[prefix | (1u << v)]) == h[prefix]) {
                order.push_back(v);
                prefix |= 1u << v;
                break;
            }
        }
    }
    return {h[0], LinearOrder(std::move(order))};
}

class WcolSearch {
public:
    WcolSearch(const Graph& g, int r, std::uint64_t budget, int incumbent)
        : g_(g), r_(r), budget_(budget), incumbent_(incumbent), placed_(g.size(), 0), count_(g.size(), 0) {}

    std::optional<std::vector<Vertex>> run() {
        descend();
        return best_;
    }
    int value() const { return incumbent_; }

private:
    // vertices within distance r of u avoiding placed vertices
    std::vector<Vertex> ball(Vertex u) const {
        std::vector<int> dist(g_.size(), -1);
        std::vector<Vertex> queue{u};
        dist[u] = 0;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            Vertex x = queue[head];
            if (dist[x] == r_) continue;
            for (Vertex y : g_.neighbors(x))
                if (dist[y] < 0 && !placed_[y]) {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
        }
        return queue;
    }

    void descend() {
        if (++visited_ > budget_)
            throw ResourceLimitError("exact wcol exceeded budget of " + std::to_string(budget_) + " nodes");
        const int n = g_.size();
        if (static_cast<int>(prefix_.size()) == n) {
            int worst = 0;
            for (int c : count_) worst = std::max(worst, c);
            if (worst < incumbent_) {
                incumbent_ = worst;
                best_ = prefix_;
            }
            return;
        }
        for (Vertex u = 0; u < n; ++u) {
            if (placed_[u]) continue;
            const std::vector<Vertex> reached = ball(u);
            bool ok = true;
            for (Vertex w : reached) {
                ++count_[w];
                // an unplaced vertex still has to count itself
                if (count_[w] + (w == u ? 0 : 1) >= incumbent_) ok = false;
            }
            if (ok) {
                placed_[u] = 1;
                prefix_.push_back(u);
                descend();
                prefix_.pop_back();
                placed_[u] = 0;
            }
            for (Vertex w : reached) --count_[w];
        }
    }

    const Graph& g_;
    int r_;
    std::uint64_t budget_;
    std::uint64_t visited_ = 0;
    int incumbent_;
    std::vector<char> placed_;
    std::vector<int> count_;
    std::vector<Vertex> prefix_;
    std::optional<std::vector<Vertex>> best_;
};

int wcol_of(const Graph& g, const LinearOrder& L, int r) {
    const Ranks rank = ranks_of(L);
    std::vector<int> count(g.size(), 0);
    for (Vertex u = 0; u < g.size(); ++u)
        for (Vertex w : upward_ball(g, rank, r, u)) ++count[w];
    return g.size() == 0 ? 0 : *std::max_element(count.begin(), count.end());
}

ExactResult exact_wcol(const Graph& g, int r, const ExactOptions& options) {
    const int heuristic = std::min(wcol_of(g, degeneracy(g).order, r), wcol_of(g, LinearOrder::identity(g.size()), r));
    WcolSearch search(g, r, options.budget, heuristic + 1);
    auto order = search.run();
    if (!order) throw std::logic_error("wcol search found no order");
    return {search.value(), LinearOrder(std::move(*order))};
}

}  // namespace

std::vector<Vertex> wreach(const Graph& g, const LinearOrder& L, int r, Vertex v) {
    check_inputs(g, L, r);
    const Ranks rank = ranks_of(L);
    std::vector<Vertex> out;
    for (Vertex u = 0; u < g.size(); ++u) {
        if (rank[u] > rank[v]) continue;
        const auto ball = upward_ball(g, rank, r, u);
        if (std::find(ball.begin(), ball.end(), v) != ball.end()) out.push_back(u);
    }
    return out;
}

std::vector<Vertex> sreach(const Graph& g, const LinearOrder& L, int r, Vertex v) {
    check_inputs(g, L, r);
    return sreach_ranked(g, ranks_of(L), r, v);
}

int backconn(const Graph& g, const LinearOrder& L, int r, Vertex v, std::uint64_t budget) {
    check_inputs(g, L, r);
    return backconn_ranked(g, ranks_of(L), r, v, budget);
}

ReachProfile profile(const Graph& g, const LinearOrder& L, int r, std::uint64_t backconn_budget) {
    check_inputs(g, L, r);
    const Ranks rank = ranks_of(L);
    ReachProfile p;
    p.r = r;
    p.vertices.resize(g.size());
    for (Vertex u = 0; u < g.size(); ++u)
        for (Vertex w : upward_ball(g, rank, r, u)) p.vertices[w].wreach.push_back(u);
    for (Vertex v = 0; v < g.size(); ++v) {
        VertexProfile& vp = p.vertices[v];
        vp.vertex = v;
        vp.rank = rank[v];
        std::sort(vp.wreach.begin(), vp.wreach.end());
        vp.sreach = sreach_ranked(g, rank, r, v);
        vp.backconn = backconn_ranked(g, rank, r, v, backconn_budget);
        p.wcol = std::max(p.wcol, static_cast<int>(vp.wreach.size()));
        p.scol = std::max(p.scol, static_cast<int>(vp.sreach.size()));
        p.adm = std::max(p.adm, vp.backconn);
    }
    return p;
}

void write_profile_csv(std::ostream& out, const ReachProfile& p) {
    out << "vertex,rank,wreach,sreach,backconn\n";
    for (const auto& vp : p.vertices)
        out << vp.vertex + 1 << ',' << vp.rank << ',' << vp.wreach.size() << ',' << vp.sreach.size() << ','
            << vp.backconn << '\n';
}

void write_profile_json(std::ostream& out, const ReachProfile& p) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& vp : p.vertices)
        rows.push_back({{"vertex", vp.vertex + 1},
                        {"rank", vp.rank},
                        {"wreach", vp.wreach.size()},
                        {"sreach", vp.sreach.size()},
                        {"backconn", vp.backconn}});
    nlohmann::json doc = {{"r", p.r}, {"wcol", p.wcol}, {"scol", p.scol}, {"adm", p.adm}, {"vertices", rows}};
    out << doc.dump(2) << '\n';
}

std::string to_string(Param p) {
    switch (p) {
        case Param::Wcol: return "wcol";
        case Param::Scol: return "scol";
        case Param::Adm: return "adm";
    }
    return "?";
}

ExactResult exact_param(const Graph& g, Param which, int r, const ExactOptions& options) {
    if (r < 1) throw std::invalid_argument("r must be positive");
    const int limit = std::min(options.max_vertices, 20);
    if (g.size() > limit)
        throw ResourceLimitError("exact " + to_string(which) + " is limited to " + std::to_string(limit) +
                                 " vertices, graph has " + std::to_string(g.size()));
    if (g.size() == 0) return {0, LinearOrder()};
    if (which == Param::Wcol) return exact_wcol(g, r, options);
    return exact_prefix_dp(g, which, r, options);
}

}  // namespace twwcol
