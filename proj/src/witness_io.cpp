#include "twwcol/witness_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "twwcol/errors.hpp"

namespace twwcol {

ContractionSequence read_witness(std::istream& in, const Graph& g) {
    const int n = g.size();
    // node[label] = current internal id of the node whose survivor label is `label`
    std::vector<NodeId> node(n + 1);
    for (int v = 1; v <= n; ++v) node[v] = v;
    std::vector<Merge> merges;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos || line[pos] == 'c') continue;
        std::istringstream fields(line);
        long long u, v;
        if (!(fields >> u >> v)) throw ParseError(lineno, "expected '<u> <v>'");
        if (u < 1 || u > n || v < 1 || v > n) throw ParseError(lineno, "vertex id out of range");
        if (u == v) throw ParseError(lineno, "node contracted into itself");
        if (node[v] == 0) throw ParseError(lineno, "node " + std::to_string(v) + " was already contracted");
        if (node[u] == 0) throw ParseError(lineno, "node " + std::to_string(u) + " was already contracted");
        merges.push_back({node[u], node[v]});
        node[u] = n + static_cast<NodeId>(merges.size());
        node[v] = 0;
    }
    return ContractionSequence(g, std::move(merges));
}

ContractionSequence read_witness_file(const std::string& path, const Graph& g) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_witness(in, g);
}

void write_witness(std::ostream& out, const ContractionSequence& seq) {
    const int n = seq.vertex_count();
    // survivor label of each internal node: the label of its first argument
    std::vector<int> label(2 * static_cast<std::size_t>(n) + 1, 0);
    for (int v = 1; v <= n; ++v) label[v] = v;
    const auto& merges = seq.merges();
    for (std::size_t k = 0; k < merges.size(); ++k) {
        out << label[merges[k].first] << ' ' << label[merges[k].second] << '\n';
        label[seq.created_id(k)] = label[merges[k].first];
    }
}

void write_witness_file(const std::string& path, const ContractionSequence& seq) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    write_witness(out, seq);
}

}  // namespace twwcol
