#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "twwcol/graph.hpp"

namespace twwcol {

// Text format shared with PACE 2023:
//   c <comment>
//   p tww <n> <m>
//   <u> <v>          (m lines, 1-based ids)
struct LoadedGraph {
    Graph graph;
    // labels[v] is the file id of internal vertex v
    std::vector<long long> labels;
};

// Ids in 1..n map to v = id-1. Files using other labels are compacted in
// increasing label order; vertices without any edge get fresh labels above
// the largest one seen.
LoadedGraph read_graph(std::istream& in);
LoadedGraph read_graph_file(const std::string& path);

// Edges sorted lexicographically, 1-based ids.
void write_graph(std::ostream& out, const Graph& g);
void write_graph_file(const std::string& path, const Graph& g);

// Order file: one 1-based vertex id per line, first line = first in the order.
LinearOrder read_order(std::istream& in, int n);
LinearOrder read_order_file(const std::string& path, int n);
void write_order(std::ostream& out, const LinearOrder& order);

}  // namespace twwcol
