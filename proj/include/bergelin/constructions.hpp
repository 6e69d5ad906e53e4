#pragma once

#include <cstdint>
#include <vector>

#include "bergelin/hypergraph.hpp"

namespace bergelin {

/// Integer-lattice hypergraph on the d-tuples over {0..r-1}: every
/// axis-parallel line of r points is an edge. d-regular, linear, with
/// r^d vertices and d r^{d-1} edges; the d direction classes form a
/// proper edge coloring by perfect matchings.
struct LatticeHypergraph {
    LinearHypergraph base;
    std::vector<std::vector<int>> coordinates;  // vertex -> d-tuple
    std::vector<int> colors;                    // edge -> direction 0..d-1
};

LatticeHypergraph lattice(int r, int d);

/// Two-apex construction F on n vertices: one seed edge
/// l = {u, w, v_1..v_{r-2}} plus (n-r)/(r-1)^r lattice blocks, each a
/// virtual [r-1]^r whose direction-0 lines extended by u form the red
/// edges and direction-1 lines extended by w the blue edges. Directions
/// 2..r-1 stay latent: their lines are not edges of F but feed the fan
/// extension below. |E| = 2(n-r)/(r-1) + 1 and d_u = d_w = (n-1)/(r-1).
struct FConstruction {
    LinearHypergraph base;
    int block_count = 0;
    Vertex u = 0, w = 1;
    std::vector<Vertex> leaves;  // v_1..v_{r-2}, degree 1 in F
    EdgeId l_edge = 0;
    std::vector<EdgeId> red_edges;
    std::vector<EdgeId> blue_edges;
    std::vector<int> block_of;  // per vertex; -1 on V(l)
    // latent_lines[c][i]: i-th line of latent color c (direction c+2),
    // pooled across blocks in block-major order; each line has r-1 vertices.
    std::vector<std::vector<Edge>> latent_lines;
};

FConstruction build_F(int n, int r);

/// F extended by fans: per latent color, t-1 chosen lines each gain the
/// leaf v_i, raising d_{v_i} to t. The choice is seeded-uniform without
/// replacement; all linearity is revalidated on construction.
struct GConstruction {
    LinearHypergraph base;
    FConstruction seed;
    int t = 0;
    std::vector<std::vector<int>> chosen_lines;  // per color: sorted line indices
    std::vector<EdgeId> fan_edges;
};

GConstruction sample_G(int n, int r, int t, std::uint64_t rng_seed);

/// All fan choices (Cartesian product of per-color line combinations).
/// Throws BudgetExceeded when the family size exceeds max_candidates.
std::vector<GConstruction> enumerate_G(int n, int r, int t, std::size_t max_candidates);

/// G plus a greedily packed blockwise-multipartite linear r-graph on the
/// lattice vertices: each packed edge takes one vertex from each of r
/// distinct blocks, the packed subgraph keeps max degree <= t-3, and
/// every vertex off V(l) ends with total degree <= t-1. With fewer than
/// r blocks the packing is empty and H = G.
struct HConstruction {
    LinearHypergraph base;
    GConstruction fan;
    std::vector<EdgeId> packed_edges;
};

HConstruction sample_H(int n, int r, int t, std::uint64_t rng_seed);

/// The packing step alone, applied to an existing fan extension.
HConstruction pack_extension(GConstruction g, std::uint64_t rng_seed);

/// Join of a clique on s-1 vertices with (n-s+1)/t disjoint t-cliques,
/// as a 2-uniform LinearHypergraph (the r = 2 spectral reference).
LinearHypergraph reference_graph(int n, int s, int t);

}  // namespace bergelin
