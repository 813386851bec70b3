#include "twwcol/trigraph.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

#include "twwcol/errors.hpp"

namespace twwcol {

ContractionSequence::ContractionSequence(Graph g, std::vector<Merge> merges)
    : graph_(std::move(g)), merges_(std::move(merges)) {
    const int n = graph_.size();
    const std::size_t expected = n == 0 ? 0 : static_cast<std::size_t>(n - 1);
    std::vector<char> alive(2 * static_cast<std::size_t>(n) + 1, 0);
    for (int v = 1; v <= n; ++v) alive[v] = 1;
    for (std::size_t k = 0; k < merges_.size(); ++k) {
        if (k >= expected) throw InvalidSequenceError(k + 1, "more merges than n-1");
        auto [x, y] = merges_[k];
        auto known = [&](NodeId id) { return id >= 1 && id < static_cast<NodeId>(alive.size()) && alive[id]; };
        if (!known(x)) throw InvalidSequenceError(k + 1, "node " + std::to_string(x) + " is not live");
        if (!known(y)) throw InvalidSequenceError(k + 1, "node " + std::to_string(y) + " is not live");
        if (x == y) throw InvalidSequenceError(k + 1, "node merged with itself");
        alive[x] = alive[y] = 0;
        alive[created_id(k)] = 1;
    }
    if (merges_.size() != expected)
        throw InvalidSequenceError(merges_.size() + 1, "sequence has " + std::to_string(merges_.size()) +
                                                           " merges, expected " + std::to_string(expected));
}

Trigraph Trigraph::initial(const Graph& g) {
    Trigraph t;
    const int n = g.size();
    t.nodes_.resize(n + 1);
    for (Vertex v = 0; v < n; ++v) {
        Node& node = t.nodes_[v + 1];
        node.members = {v};
        node.alive = true;
        for (Vertex w : g.neighbors(v)) node.black.insert(w + 1);
    }
    t.live_ = n;
    t.next_id_ = n + 1;
    return t;
}

Trigraph Trigraph::quotient(const Graph& g, std::span<const std::pair<NodeId, std::vector<Vertex>>> nodes,
                            NodeId next_id) {
    Trigraph t;
    t.next_id_ = next_id;
    NodeId top = 0;
    for (const auto& [id, members] : nodes) top = std::max(top, id);
    t.nodes_.resize(top + 1);
    for (const auto& [id, members] : nodes) {
        Node& node = t.nodes_[id];
        node.members = members;
        std::sort(node.members.begin(), node.members.end());
        node.alive = true;
        ++t.live_;
    }
    for (std::size_t i = 0; i < nodes.size(); ++i)
        for (std::size_t j = i + 1; j < nodes.size(); ++j) {
            const auto& [x, xs] = nodes[i];
            const auto& [y, ys] = nodes[j];
            std::size_t edges = 0;
            for (Vertex u : xs)
                for (Vertex v : ys) edges += g.adjacent(u, v) ? 1 : 0;
            if (edges == 0) continue;
            bool full = edges == xs.size() * ys.size();
            (full ? t.nodes_[x].black : t.nodes_[x].red).insert(y);
            (full ? t.nodes_[y].black : t.nodes_[y].red).insert(x);
        }
    return t;
}

void Trigraph::require_alive(NodeId x) const {
    if (!alive(x)) throw std::out_of_range("unknown node id " + std::to_string(x));
}

Trigraph Trigraph::contract(NodeId x, NodeId y) const {
    Trigraph out = *this;
    out.contract_in_place(x, y);
    return out;
}

void Trigraph::contract_in_place(NodeId x, NodeId y) {
    require_alive(x);
    require_alive(y);
    if (x == y) throw std::invalid_argument("cannot contract a node with itself");
    const NodeId z = next_id_++;
    if (static_cast<std::size_t>(z) >= nodes_.size()) nodes_.resize(z + 1);
    Node merged;
    merged.alive = true;
    std::merge(nodes_[x].members.begin(), nodes_[x].members.end(), nodes_[y].members.begin(),
               nodes_[y].members.end(), std::back_inserter(merged.members));

    std::set<NodeId> around;
    for (NodeId id : {x, y}) {
        around.insert(nodes_[id].black.begin(), nodes_[id].black.end());
        around.insert(nodes_[id].red.begin(), nodes_[id].red.end());
    }
    around.erase(x);
    around.erase(y);
    for (NodeId w : around) {
        bool black = nodes_[x].black.count(w) && nodes_[y].black.count(w);
        (black ? merged.black : merged.red).insert(w);
        Node& other = nodes_[w];
        other.black.erase(x);
        other.black.erase(y);
        other.red.erase(x);
        other.red.erase(y);
        (black ? other.black : other.red).insert(z);
    }
    nodes_[x] = Node{};
    nodes_[y] = Node{};
    nodes_[z] = std::move(merged);
    --live_;
}

std::vector<NodeId> Trigraph::nodes() const {
    std::vector<NodeId> out;
    out.reserve(live_);
    for (NodeId id = 1; id < static_cast<NodeId>(nodes_.size()); ++id)
        if (nodes_[id].alive) out.push_back(id);
    return out;
}

int Trigraph::max_red_degree() const {
    int best = 0;
    for (const Node& node : nodes_)
        if (node.alive) best = std::max(best, static_cast<int>(node.red.size()));
    return best;
}

bool Trigraph::operator==(const Trigraph& other) const {
    if (live_ != other.live_) return false;
    const std::size_t top = std::max(nodes_.size(), other.nodes_.size());
    for (std::size_t id = 1; id < top; ++id) {
        bool a = id < nodes_.size() && nodes_[id].alive;
        bool b = id < other.nodes_.size() && other.nodes_[id].alive;
        if (a != b) return false;
        if (!a) continue;
        const Node& p = nodes_[id];
        const Node& q = other.nodes_[id];
        if (p.members != q.members || p.black != q.black || p.red != q.red) return false;
    }
    return true;
}

void replay(const ContractionSequence& seq, const std::function<void(int, const Trigraph&)>& visit) {
    Trigraph t = Trigraph::initial(seq.graph());
    int index = seq.vertex_count();
    visit(index, t);
    for (const Merge& m : seq.merges()) {
        t.contract_in_place(m.first, m.second);
        visit(--index, t);
    }
}

int width(const ContractionSequence& seq) {
    int best = 0;
    replay(seq, [&](int, const Trigraph& t) { best = std::max(best, t.max_red_degree()); });
    return best;
}

UniverseIndex::UniverseIndex(const ContractionSequence& seq) {
    const int n = seq.vertex_count();
    if (n == 0) return;
    nodes_.resize(2 * static_cast<std::size_t>(n));
    split_at_.assign(n, 0);
    for (Vertex v = 0; v < n; ++v) {
        nodes_[v + 1].members = {v};
        nodes_[v + 1].split = n;
    }
    const auto& merges = seq.merges();
    for (std::size_t k = 0; k < merges.size(); ++k) {
        const int step = static_cast<int>(k) + 1;
        const NodeId z = seq.created_id(k);
        auto [x, y] = merges[k];
        UniverseNode& node = nodes_[z];
        std::merge(nodes_[x].members.begin(), nodes_[x].members.end(), nodes_[y].members.begin(),
                   nodes_[y].members.end(), std::back_inserter(node.members));
        node.split = n - step;
        node.children = {x, y};
        nodes_[x].parent = nodes_[y].parent = z;
        nodes_[x].birth = nodes_[y].birth = n - step + 1;
        split_at_[n - step] = z;
    }
    root_ = seq.root();
    nodes_[root_].birth = 1;
    nodes_.resize(root_ + 1);
}

namespace {

constexpr int kMaxExactVertices = 16;

struct Block {
    std::uint64_t mask;
    std::uint64_t any;  // union of member neighbourhoods
    std::uint64_t all;  // intersection of member neighbourhoods
    NodeId id;
};

bool red_pair(const Block& a, const Block& b) {
    if ((a.any & b.mask) == 0) return false;
    return (a.all & b.mask) != b.mask;
}

int max_red(const std::vector<Block>& blocks) {
    int best = 0;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        int deg = 0;
        for (std::size_t j = 0; j < blocks.size(); ++j)
            if (i != j && red_pair(blocks[i], blocks[j])) ++deg;
        best = std::max(best, deg);
    }
    return best;
}

std::vector<Block> singleton_blocks(const Graph& g) {
    auto adj = g.masks();
    std::vector<Block> blocks;
    for (Vertex v = 0; v < g.size(); ++v) blocks.push_back({std::uint64_t{1} << v, adj[v], adj[v], v + 1});
    return blocks;
}

// blocks stay sorted by id; the merged block has the largest id
std::vector<Block> merged(const std::vector<Block>& blocks, std::size_t i, std::size_t j, NodeId id) {
    std::vector<Block> out;
    out.reserve(blocks.size() - 1);
    for (std::size_t k = 0; k < blocks.size(); ++k)
        if (k != i && k != j) out.push_back(blocks[k]);
    const Block& a = blocks[i];
    const Block& b = blocks[j];
    out.push_back({a.mask | b.mask, a.any | b.any, a.all & b.all, id});
    return out;
}

// Restricted-growth encoding, 4 bits per vertex.
std::uint64_t partition_key(const std::vector<Block>& blocks) {
    std::vector<std::uint64_t> masks;
    masks.reserve(blocks.size());
    for (const Block& b : blocks) masks.push_back(b.mask);
    std::sort(masks.begin(), masks.end(), [](auto a, auto b) { return std::countr_zero(a) < std::countr_zero(b); });
    std::uint64_t key = 0;
    for (std::size_t label = 0; label < masks.size(); ++label)
        for (std::uint64_t m = masks[label]; m; m &= m - 1) key |= std::uint64_t(label) << (4 * std::countr_zero(m));
    return key;
}

class PartitionSearch {
public:
    PartitionSearch(const Graph& g, std::uint64_t budget, int upper_bound)
        : g_(g), budget_(budget), upper_bound_(upper_bound) {}

    bool feasible(int d, std::vector<Merge>& out) {
        failed_.clear();
        d_ = d;
        return search(singleton_blocks(g_), out);
    }

    std::uint64_t states() const { return states_; }

private:
    bool search(const std::vector<Block>& blocks, std::vector<Merge>& out) {
        if (blocks.size() <= 1) return true;
        const std::uint64_t key = partition_key(blocks);
        if (failed_.count(key)) return false;
        if (++states_ > budget_)
            throw ResourceLimitError("twin-width search exceeded budget of " + std::to_string(budget_) + " states",
                                     upper_bound_);
        const NodeId next = g_.size() + static_cast<NodeId>(out.size()) + 1;
        for (std::size_t i = 0; i < blocks.size(); ++i)
            for (std::size_t j = i + 1; j < blocks.size(); ++j) {
                auto child = merged(blocks, i, j, next);
                if (max_red(child) > d_) continue;
                out.push_back({blocks[i].id, blocks[j].id});
                if (search(child, out)) return true;
                out.pop_back();
            }
        failed_.insert(key);
        return false;
    }

    const Graph& g_;
    std::uint64_t budget_;
    int upper_bound_;
    int d_ = 0;
    std::uint64_t states_ = 0;
    std::unordered_set<std::uint64_t> failed_;
};

}  // namespace

ContractionSequence greedy_sequence(const Graph& g) {
    if (g.size() > 64) throw std::invalid_argument("greedy_sequence supports at most 64 vertices");
    auto blocks = singleton_blocks(g);
    std::vector<Merge> merges;
    while (blocks.size() > 1) {
        const NodeId next = g.size() + static_cast<NodeId>(merges.size()) + 1;
        int best = -1;
        std::size_t bi = 0, bj = 0;
        for (std::size_t i = 0; i < blocks.size(); ++i)
            for (std::size_t j = i + 1; j < blocks.size(); ++j) {
                int red = max_red(merged(blocks, i, j, next));
                if (best == -1 || red < best) {
                    best = red;
                    bi = i;
                    bj = j;
                }
            }
        merges.push_back({blocks[bi].id, blocks[bj].id});
        blocks = merged(blocks, bi, bj, next);
    }
    return ContractionSequence(g, std::move(merges));
}

TwwResult exact_tww(const Graph& g, const TwwOptions& options) {
    const int n = g.size();
    if (n > options.max_vertices || n > kMaxExactVertices) {
        std::optional<int> bound;
        if (n <= 64) bound = width(greedy_sequence(g));
        throw ResourceLimitError("exact twin-width is limited to " +
                                     std::to_string(std::min(options.max_vertices, kMaxExactVertices)) +
                                     " vertices, graph has " + std::to_string(n),
                                 bound);
    }
    if (n <= 1) return {0, ContractionSequence(g, {}), 0};
    const int upper = width(greedy_sequence(g));
    PartitionSearch search(g, options.budget, upper);
    for (int d = 0; d <= upper; ++d) {
        std::vector<Merge> merges;
        if (search.feasible(d, merges)) return {d, ContractionSequence(g, std::move(merges)), search.states()};
    }
    // unreachable: the greedy sequence itself has width `upper`
    throw std::logic_error("no sequence found at the greedy width");
}

ContractionSequence restrict_sequence(const ContractionSequence& seq, std::span<const Vertex> vertices) {
    const int n = seq.vertex_count();
    std::vector<NodeId> image(2 * static_cast<std::size_t>(n) + 1, 0);
    for (std::size_t i = 0; i < vertices.size(); ++i) image[vertices[i] + 1] = static_cast<NodeId>(i) + 1;
    Graph sub = seq.graph().induced(vertices);
    std::vector<Merge> merges;
    const auto& all = seq.merges();
    for (std::size_t k = 0; k < all.size(); ++k) {
        NodeId a = image[all[k].first];
        NodeId b = image[all[k].second];
        NodeId z = seq.created_id(k);
        if (a && b) {
            merges.push_back({a, b});
            image[z] = static_cast<NodeId>(vertices.size() + merges.size());
        } else {
            image[z] = a ? a : b;
        }
    }
    return ContractionSequence(std::move(sub), std::move(merges));
}

}  // namespace twwcol
