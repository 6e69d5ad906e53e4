#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "bergelin/hypergraph.hpp"

namespace bergelin {

/// Simple-graph skeleton: the pattern F of a Berge-F containment query.
struct SkeletonGraph {
    int m = 0;                                    // vertex count
    std::vector<std::pair<int, int>> edges;       // unordered pairs, a < b

    SkeletonGraph() = default;
    SkeletonGraph(int vertex_count, std::vector<std::pair<int, int>> edge_list);

    int degree(int v) const;
};

/// Complete bipartite K_{3,t}: part {0,1,2} against {3,...,t+2}.
SkeletonGraph k3t_skeleton(int t);

SkeletonGraph triangle_skeleton();

/// Certificate that H contains a Berge-F: an injective placement of the
/// skeleton vertices plus a bijection from skeleton edges to distinct
/// hyperedges, each containing the images of its endpoints.
struct BergeWitness {
    std::vector<Vertex> core_map;   // skeleton vertex -> hypergraph vertex
    std::vector<EdgeId> edge_map;   // skeleton edge index -> hypergraph edge
};

enum class BergeSearch {
    CoEdgeCheck,  // linear shortcut: the candidate edge per skeleton edge is unique
    Matching,     // general bipartite matching between skeleton edges and hyperedges
};

/// Decides Berge-F containment and returns the first witness found under
/// deterministic ordering (skeleton vertices by descending skeleton degree,
/// candidates by descending hypergraph degree, ties by index). Empty when
/// H is Berge-F-free.
std::optional<BergeWitness> contains_berge(const LinearHypergraph& h, const SkeletonGraph& f,
                                           BergeSearch strategy = BergeSearch::CoEdgeCheck);

/// True iff w is a valid certificate for Berge-F containment in H:
/// core map injective and in range, edge map a bijection onto distinct
/// edges, and every mapped edge contains both mapped endpoints.
bool validate_witness(const LinearHypergraph& h, const SkeletonGraph& f, const BergeWitness& w);

}  // namespace bergelin
