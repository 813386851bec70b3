#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "twwcol/graph.hpp"
#include "twwcol/trigraph.hpp"

namespace twwcol {

// Seeded 64-bit generator. Bounded draws use rejection sampling so results
// do not depend on the standard library's distribution implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    // uniform in [0, bound), bound > 0
    std::uint64_t below(std::uint64_t bound);
    bool coin() { return (next() >> 63) != 0; }
    // independent child stream
    Rng split() { return Rng(next() ^ 0x9e3779b97f4a7c15ULL); }

private:
    std::mt19937_64 engine_;
};

inline constexpr std::uint64_t kDefaultSeed = 20230401;

// One flag per edge of g.edges() (sorted order): true = crossing.
using LiftSigning = std::vector<bool>;

// Vertex (v, i) of the lift is v + i*n.
// Parallel edge uv: (u,0)(v,0) and (u,1)(v,1); crossing: (u,0)(v,1) and (u,1)(v,0).
// Throws std::invalid_argument when the signing size differs from |E(g)|.
Graph two_lift(const Graph& g, const LiftSigning& sign);
LiftSigning random_signing(const Graph& g, Rng& rng);

struct LiftTower {
    std::vector<Graph> levels;  // levels[0] is the base, levels[k] the k-th lift
    std::vector<LiftSigning> signings;

    const Graph& base() const { return levels.front(); }
    const Graph& top() const { return levels.back(); }
    int height() const { return static_cast<int>(signings.size()); }
};

LiftTower build_tower(const Graph& base, const std::vector<LiftSigning>& signings);
LiftTower random_tower(const Graph& base, int height, Rng& rng);

inline constexpr std::uint64_t kDefaultLiftGuard = 1'000'000;

// Vertex (u, x), x in {0,1}^m, is u + n*x, where bit i-1 of x is the
// coordinate of the i-th edge in sorted order. (u,x) ~ (v,y) iff uv = e_i and
// y = x with bit i-1 flipped. Throws ResourceLimitError if n*2^m > guard.
Graph theta_lift(const Graph& g, std::uint64_t guard = kDefaultLiftGuard);

// The same graph as a tower of m single 2-lifts: level j crosses exactly the
// edges above e_j, so the new coordinate of level j is bit j-1.
LiftTower theta_lift_tower(const Graph& g, std::uint64_t guard = kDefaultLiftGuard);

// Contracts every pair of copies level by level down to the base, then the
// base nodes one after the other in id order.
ContractionSequence undo_lift_witness(const LiftTower& tower);

// Branch vertices 0..n-1; the k subdivision vertices of the i-th edge ab
// (sorted order) are n + i*k .. n + i*k + k-1, from a towards b.
Graph subdivided_clique(int n, int k);

// Vertex (u, i) is u*s + i; (u,i) ~ (v,j) iff u ~ v, or u = v and i != j.
Graph lex_product_clique(const Graph& g, int s);

// Leaves of a uniform random full binary tree (Remy's growth process), each
// internal node a union or a join with probability 1/2.
Graph random_cograph(int n, std::uint64_t seed);

// Uniform random graph with each edge present with probability p.
Graph random_graph(int n, double p, Rng& rng);

}  // namespace twwcol
