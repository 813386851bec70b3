#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "twwcol/graph.hpp"

namespace twwcol {

// All vertex sets below are sorted ascending and contain v itself.

// u with a path of length <= r from v on which u is the L-minimum.
std::vector<Vertex> wreach(const Graph& g, const LinearOrder& L, int r, Vertex v);

// u <=_L v joined to v by a path of length <= r whose inner vertices are all after v.
std::vector<Vertex> sreach(const Graph& g, const LinearOrder& L, int r, Vertex v);

inline constexpr std::uint64_t kDefaultBackconnBudget = 10'000'000;

// Maximum number of paths of length <= r starting at v, pairwise disjoint
// apart from v, each ending strictly before v. Throws ResourceLimitError once
// the backtracking visits more than `budget` nodes.
int backconn(const Graph& g, const LinearOrder& L, int r, Vertex v,
             std::uint64_t budget = kDefaultBackconnBudget);

struct VertexProfile {
    Vertex vertex = 0;
    int rank = 0;
    std::vector<Vertex> wreach;
    std::vector<Vertex> sreach;
    int backconn = 0;
};

struct ReachProfile {
    int r = 0;
    std::vector<VertexProfile> vertices;  // indexed by vertex
    int wcol = 0;                         // max |wreach|
    int scol = 0;                         // max |sreach|
    int adm = 0;                          // max backconn
};

ReachProfile profile(const Graph& g, const LinearOrder& L, int r,
                     std::uint64_t backconn_budget = kDefaultBackconnBudget);

// Columns vertex,rank,wreach,sreach,backconn with 1-based vertex ids and set sizes.
void write_profile_csv(std::ostream& out, const ReachProfile& p);
void write_profile_json(std::ostream& out, const ReachProfile& p);

enum class Param { Wcol, Scol, Adm };
std::string to_string(Param p);

struct ExactOptions {
    int max_vertices = 11;  // hard cap 20
    std::uint64_t budget = 100'000'000;
};

struct ExactResult {
    int value = 0;
    LinearOrder witness;  // lexicographically least optimal order
};

// min over all orders of the max over v. scol and adm only depend on which
// vertices precede v, so they are solved by dynamic programming over prefix
// sets; wcol by depth-first branch and bound. Throws ResourceLimitError.
ExactResult exact_param(const Graph& g, Param which, int r, const ExactOptions& options = {});

}  // namespace twwcol
