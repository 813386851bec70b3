#include "oracles.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>

namespace oracle {

namespace {

int popcount(std::uint64_t x) { return __builtin_popcountll(x); }

std::vector<std::uint64_t> adjacency_masks(const Graph& g) {
    std::vector<std::uint64_t> mask(g.size(), 0);
    for (Vertex u = 0; u < g.size(); ++u)
        for (Vertex v = 0; v < g.size(); ++v)
            if (g.adjacent(u, v)) mask[u] |= std::uint64_t{1} << v;
    return mask;
}

}  // namespace

int bomega(const Graph& g) {
    const int n = g.size();
    if (n > 12) throw std::invalid_argument("oracle bomega: too many vertices");
    const auto mask = adjacency_masks(g);
    for (int s = n / 2; s >= 1; --s)
        for (std::uint64_t a = 0; a < (std::uint64_t{1} << n); ++a) {
            if (popcount(a) != s) continue;
            std::uint64_t common = (std::uint64_t{1} << n) - 1;
            for (Vertex v = 0; v < n; ++v)
                if (a >> v & 1) common &= mask[v];
            if (popcount(common & ~a) >= s) return s;
        }
    return 0;
}

std::optional<int> girth(const Graph& g) {
    const int n = g.size();
    std::optional<int> best;
    std::vector<char> on(n, 0);
    // cycles whose smallest vertex is `start`
    std::function<void(Vertex, Vertex, int)> walk = [&](Vertex start, Vertex x, int length) {
        if (best && length + 1 >= *best) return;
        for (Vertex y : g.neighbors(x)) {
            if (y == start && length >= 2) {
                best = length + 1;
                return;
            }
            if (y <= start || on[y]) continue;
            on[y] = 1;
            walk(start, y, length + 1);
            on[y] = 0;
        }
    };
    for (Vertex v = 0; v < n; ++v) {
        on[v] = 1;
        walk(v, v, 0);
        on[v] = 0;
    }
    return best;
}

int degeneracy(const Graph& g) {
    const int n = g.size();
    if (n > 14) throw std::invalid_argument("oracle degeneracy: too many vertices");
    int best = 0;
    for (std::uint32_t set = 1; set < (1u << n); ++set) {
        int low = n;
        for (Vertex v = 0; v < n; ++v) {
            if (!(set >> v & 1)) continue;
            int d = 0;
            for (Vertex w : g.neighbors(v))
                if (set >> w & 1) ++d;
            low = std::min(low, d);
        }
        best = std::max(best, low);
    }
    return best;
}

bool is_cograph(const Graph& g) {
    const int n = g.size();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                for (int d = c + 1; d < n; ++d) {
                    const int q[4] = {a, b, c, d};
                    int edges = 0;
                    std::vector<int> deg(4, 0);
                    for (int i = 0; i < 4; ++i)
                        for (int j = i + 1; j < 4; ++j)
                            if (g.adjacent(q[i], q[j])) {
                                ++edges;
                                ++deg[i];
                                ++deg[j];
                            }
                    std::sort(deg.begin(), deg.end());
                    if (edges == 3 && deg == std::vector<int>{1, 1, 2, 2}) return false;
                }
    return true;
}

std::vector<std::vector<Vertex>> paths_from(const Graph& g, Vertex v, int r) {
    std::vector<std::vector<Vertex>> out;
    std::vector<Vertex> path{v};
    std::vector<char> on(g.size(), 0);
    on[v] = 1;
    std::function<void()> grow = [&]() {
        out.push_back(path);
        if (static_cast<int>(path.size()) - 1 == r) return;
        for (Vertex y : g.neighbors(path.back())) {
            if (on[y]) continue;
            on[y] = 1;
            path.push_back(y);
            grow();
            path.pop_back();
            on[y] = 0;
        }
    };
    grow();
    return out;
}

std::vector<Vertex> wreach(const Graph& g, const LinearOrder& L, int r, Vertex v) {
    std::vector<char> in(g.size(), 0);
    for (const auto& p : paths_from(g, v, r)) {
        Vertex low = *std::min_element(p.begin(), p.end(), [&](Vertex a, Vertex b) { return L.rank(a) < L.rank(b); });
        if (low == p.back()) in[low] = 1;
    }
    std::vector<Vertex> out;
    for (Vertex u = 0; u < g.size(); ++u)
        if (in[u]) out.push_back(u);
    return out;
}

std::vector<Vertex> sreach(const Graph& g, const LinearOrder& L, int r, Vertex v) {
    std::vector<char> in(g.size(), 0);
    for (const auto& p : paths_from(g, v, r)) {
        if (L.rank(p.back()) > L.rank(v)) continue;
        bool inner_ok = true;
        for (std::size_t i = 1; i + 1 < p.size(); ++i)
            if (L.rank(p[i]) < L.rank(v)) inner_ok = false;
        if (inner_ok) in[p.back()] = 1;
    }
    std::vector<Vertex> out;
    for (Vertex u = 0; u < g.size(); ++u)
        if (in[u]) out.push_back(u);
    return out;
}

int backconn(const Graph& g, const LinearOrder& L, int r, Vertex v) {
    if (g.size() > 64) throw std::invalid_argument("oracle backconn: too many vertices");
    // candidate paths grouped by their second vertex; inner vertices unrestricted
    std::map<Vertex, std::vector<std::uint64_t>> by_first;
    for (const auto& p : paths_from(g, v, r)) {
        if (p.size() < 2 || L.rank(p.back()) >= L.rank(v)) continue;
        std::uint64_t mask = 0;
        for (std::size_t i = 1; i < p.size(); ++i) mask |= std::uint64_t{1} << p[i];
        by_first[p[1]].push_back(mask);
    }
    std::vector<std::vector<std::uint64_t>> groups;
    for (auto& [first, masks] : by_first) groups.push_back(std::move(masks));
    int best = 0;
    std::function<void(std::size_t, std::uint64_t, int)> pick = [&](std::size_t k, std::uint64_t used, int count) {
        if (count + static_cast<int>(groups.size() - k) <= best) return;
        if (k == groups.size()) {
            best = std::max(best, count);
            return;
        }
        for (std::uint64_t m : groups[k])
            if (!(m & used)) pick(k + 1, used | m, count + 1);
        pick(k + 1, used, count);
    };
    pick(0, 0, 0);
    return best;
}

Params order_params(const Graph& g, const LinearOrder& L, int r) {
    Params p;
    for (Vertex v = 0; v < g.size(); ++v) {
        p.wcol = std::max(p.wcol, static_cast<int>(wreach(g, L, r, v).size()));
        p.scol = std::max(p.scol, static_cast<int>(sreach(g, L, r, v).size()));
        p.adm = std::max(p.adm, backconn(g, L, r, v));
    }
    return p;
}

Params exact_params(const Graph& g, int r) {
    if (g.size() > 8) throw std::invalid_argument("oracle exact_params: too many vertices");
    std::vector<Vertex> perm(g.size());
    std::iota(perm.begin(), perm.end(), 0);
    Params best{1 << 30, 1 << 30, 1 << 30};
    do {
        const Params p = order_params(g, LinearOrder(perm), r);
        best.wcol = std::min(best.wcol, p.wcol);
        best.scol = std::min(best.scol, p.scol);
        best.adm = std::min(best.adm, p.adm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (g.size() == 0) best = {};
    return best;
}

int quotient_relation(const Graph& g, const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
    std::size_t edges = 0;
    for (Vertex u : a)
        for (Vertex v : b)
            if (g.adjacent(u, v)) ++edges;
    if (edges == 0) return 0;
    return edges == a.size() * b.size() ? 2 : 1;
}

int quotient_max_red_degree(const Graph& g, const std::vector<std::vector<Vertex>>& blocks) {
    int worst = 0;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        int red = 0;
        for (std::size_t j = 0; j < blocks.size(); ++j)
            if (i != j && quotient_relation(g, blocks[i], blocks[j]) == 1) ++red;
        worst = std::max(worst, red);
    }
    return worst;
}

int sequence_width(const Graph& g, const twwcol::ContractionSequence& seq) {
    const int n = g.size();
    std::map<int, std::vector<Vertex>> live;
    for (Vertex v = 0; v < n; ++v) live[v + 1] = {v};
    auto blocks = [&]() {
        std::vector<std::vector<Vertex>> out;
        for (auto& [id, members] : live) out.push_back(members);
        return out;
    };
    int worst = quotient_max_red_degree(g, blocks());
    int next = n + 1;
    for (const auto& m : seq.merges()) {
        auto merged = live.at(m.first);
        const auto& other = live.at(m.second);
        merged.insert(merged.end(), other.begin(), other.end());
        live.erase(m.first);
        live.erase(m.second);
        live[next++] = merged;
        worst = std::max(worst, quotient_max_red_degree(g, blocks()));
    }
    return worst;
}

int twin_width(const Graph& g) {
    if (g.size() > 6) throw std::invalid_argument("oracle twin_width: too many vertices");
    int best = g.size();
    std::function<void(std::vector<std::vector<Vertex>>, int)> go = [&](std::vector<std::vector<Vertex>> blocks,
                                                                         int worst) {
        if (worst >= best) return;
        if (blocks.size() <= 1) {
            best = worst;
            return;
        }
        for (std::size_t i = 0; i < blocks.size(); ++i)
            for (std::size_t j = i + 1; j < blocks.size(); ++j) {
                auto next = blocks;
                next[i].insert(next[i].end(), next[j].begin(), next[j].end());
                next.erase(next.begin() + static_cast<long>(j));
                go(next, std::max(worst, quotient_max_red_degree(g, next)));
            }
    };
    std::vector<std::vector<Vertex>> start;
    for (Vertex v = 0; v < g.size(); ++v) start.push_back({v});
    go(start, 0);
    return g.size() <= 1 ? 0 : best;
}

bool isomorphic(const Graph& a, const Graph& b) {
    const int n = a.size();
    if (n != b.size() || a.num_edges() != b.num_edges()) return false;
    std::vector<int> da, db;
    for (Vertex v = 0; v < n; ++v) {
        da.push_back(a.degree(v));
        db.push_back(b.degree(v));
    }
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
    // map vertices of a in BFS order so most of them have an already mapped neighbour
    std::vector<Vertex> sequence;
    std::vector<char> seen(n, 0);
    for (Vertex s = 0; s < n; ++s) {
        if (seen[s]) continue;
        seen[s] = 1;
        sequence.push_back(s);
        for (std::size_t h = sequence.size() - 1; h < sequence.size(); ++h)
            for (Vertex y : a.neighbors(sequence[h]))
                if (!seen[y]) {
                    seen[y] = 1;
                    sequence.push_back(y);
                }
    }
    std::vector<Vertex> image(n, -1);
    std::vector<char> taken(n, 0);
    std::function<bool(std::size_t)> extend = [&](std::size_t k) {
        if (k == sequence.size()) return true;
        const Vertex x = sequence[k];
        Vertex anchor = -1;
        for (Vertex y : a.neighbors(x))
            if (image[y] >= 0) {
                anchor = y;
                break;
            }
        std::vector<Vertex> candidates;
        if (anchor >= 0) {
            for (Vertex c : b.neighbors(image[anchor])) candidates.push_back(c);
        } else {
            for (Vertex c = 0; c < n; ++c) candidates.push_back(c);
        }
        for (Vertex c : candidates) {
            if (taken[c] || b.degree(c) != a.degree(x)) continue;
            bool ok = true;
            for (std::size_t j = 0; j < k && ok; ++j) {
                const Vertex y = sequence[j];
                if (a.adjacent(x, y) != b.adjacent(c, image[y])) ok = false;
            }
            if (!ok) continue;
            image[x] = c;
            taken[c] = 1;
            if (extend(k + 1)) return true;
            image[x] = -1;
            taken[c] = 0;
        }
        return false;
    };
    return extend(0);
}

Graph random_graph(int n, double p, unsigned long long seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(p);
    std::vector<twwcol::Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (coin(rng)) edges.push_back({u, v});
    return Graph(n, edges);
}

LinearOrder random_order(int n, unsigned long long seed) {
    std::mt19937_64 rng(seed);
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    return LinearOrder(perm);
}

std::vector<Graph> all_graphs(int n) {
    std::vector<twwcol::Edge> slots;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) slots.push_back({u, v});
    std::vector<Graph> out;
    for (std::uint32_t set = 0; set < (1u << slots.size()); ++set) {
        std::vector<twwcol::Edge> edges;
        for (std::size_t i = 0; i < slots.size(); ++i)
            if (set >> i & 1) edges.push_back(slots[i]);
        out.emplace_back(n, edges);
    }
    return out;
}

}  // namespace oracle
