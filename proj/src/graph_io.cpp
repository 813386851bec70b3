#include "twwcol/graph_io.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "twwcol/errors.hpp"

namespace twwcol {

namespace {

bool is_blank_or_comment(const std::string& line) {
    auto pos = line.find_first_not_of(" \t\r");
    return pos == std::string::npos || line[pos] == 'c';
}

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return in;
}

}  // namespace

LoadedGraph read_graph(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    long long n = -1, m = -1;
    std::vector<std::pair<long long, long long>> raw;
    while (std::getline(in, line)) {
        ++lineno;
        if (is_blank_or_comment(line)) continue;
        std::istringstream fields(line);
        if (n < 0) {
            std::string p, kind;
            if (!(fields >> p >> kind >> n >> m) || p != "p" || kind != "tww" || n < 0 || m < 0)
                throw ParseError(lineno, "expected header 'p tww <n> <m>'");
            continue;
        }
        long long u, v;
        if (!(fields >> u >> v)) throw ParseError(lineno, "expected an edge '<u> <v>'");
        std::string rest;
        if (fields >> rest) throw ParseError(lineno, "trailing data after edge");
        if (u == v) throw ParseError(lineno, "self-loop");
        raw.emplace_back(u, v);
    }
    if (n < 0) throw ParseError(lineno, "missing header");
    if (static_cast<long long>(raw.size()) != m)
        throw ParseError(lineno, "header announces " + std::to_string(m) + " edges, found " +
                                     std::to_string(raw.size()));

    LoadedGraph out;
    bool dense = std::all_of(raw.begin(), raw.end(), [n](const auto& e) {
        return e.first >= 1 && e.first <= n && e.second >= 1 && e.second <= n;
    });
    std::map<long long, Vertex> index;
    if (dense) {
        for (long long id = 1; id <= n; ++id) index[id] = static_cast<Vertex>(id - 1);
    } else {
        for (auto [u, v] : raw) {
            index.emplace(u, 0);
            index.emplace(v, 0);
        }
        if (static_cast<long long>(index.size()) > n)
            throw ParseError(lineno, "more distinct vertex labels than announced vertices");
        long long next = index.rbegin()->first;
        while (static_cast<long long>(index.size()) < n) index.emplace(++next, 0);
        Vertex i = 0;
        for (auto& [label, v] : index) v = i++;
    }
    out.labels.reserve(index.size());
    for (const auto& [label, v] : index) out.labels.push_back(label);

    std::vector<Edge> edges;
    edges.reserve(raw.size());
    for (auto [u, v] : raw) edges.emplace_back(index.at(u), index.at(v));
    out.graph = Graph(static_cast<int>(n), edges);
    if (out.graph.num_edges() != edges.size()) throw ParseError(lineno, "duplicate edge");
    return out;
}

LoadedGraph read_graph_file(const std::string& path) {
    auto in = open_input(path);
    return read_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
    out << "p tww " << g.size() << ' ' << g.num_edges() << '\n';
    for (auto [u, v] : g.edges()) out << u + 1 << ' ' << v + 1 << '\n';
}

void write_graph_file(const std::string& path, const Graph& g) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    write_graph(out, g);
}

LinearOrder read_order(std::istream& in, int n) {
    std::string line;
    std::size_t lineno = 0;
    std::vector<Vertex> seq;
    while (std::getline(in, line)) {
        ++lineno;
        if (is_blank_or_comment(line)) continue;
        std::istringstream fields(line);
        long long id;
        if (!(fields >> id)) throw ParseError(lineno, "expected a vertex id");
        if (id < 1 || id > n) throw ParseError(lineno, "vertex id out of range");
        seq.push_back(static_cast<Vertex>(id - 1));
    }
    if (static_cast<int>(seq.size()) != n)
        throw ParseError(lineno, "order lists " + std::to_string(seq.size()) + " vertices, graph has " +
                                     std::to_string(n));
    try {
        return LinearOrder(std::move(seq));
    } catch (const std::invalid_argument&) {
        throw ParseError(lineno, "order repeats a vertex");
    }
}

LinearOrder read_order_file(const std::string& path, int n) {
    auto in = open_input(path);
    return read_order(in, n);
}

void write_order(std::ostream& out, const LinearOrder& order) {
    for (Vertex v : order.sequence()) out << v + 1 << '\n';
}

}  // namespace twwcol
