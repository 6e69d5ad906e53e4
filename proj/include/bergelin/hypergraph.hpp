#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "bergelin/errors.hpp"

namespace bergelin {

using Vertex = int;
using Edge = std::vector<Vertex>;  // strictly increasing vertex list
using EdgeId = int;

/// Immutable r-uniform linear hypergraph on vertices 0..n-1.
///
/// Linearity (any two edges share at most one vertex) is validated at
/// construction; the pair -> edge index is built eagerly so the unique
/// co-edge of an adjacent pair is an O(1) lookup. Values are safe to share
/// across threads: every member function is const and reentrant.
class LinearHypergraph {
public:
    /// Validates and builds. Each input edge is sorted internally; edge
    /// order is preserved. Throws NonUniformEdge, VertexOutOfRange,
    /// DuplicateEdge or LinearityViolation (reporting the offending pair).
    LinearHypergraph(int n, int r, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    int uniformity() const { return r_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(EdgeId id) const { return edges_[static_cast<size_t>(id)]; }

    /// Edge ids through v, in insertion order.
    const std::vector<EdgeId>& incident(Vertex v) const;

    int degree(Vertex v) const { return static_cast<int>(incident(v).size()); }
    int max_degree() const;

    /// The unique edge containing both u and w, or empty when non-adjacent.
    std::optional<EdgeId> co_edge(Vertex u, Vertex w) const;

    bool adjacent(Vertex u, Vertex w) const { return co_edge(u, w).has_value(); }

    /// All vertices sharing an edge with v; v itself is never a member
    /// (a vertex cannot share an edge with itself twice, so self-adjacency
    /// cannot arise in a linear hypergraph).
    std::vector<Vertex> neighbors(Vertex v) const;

    /// Reachability over shared edges. A hypergraph with no edges is
    /// connected only when n <= 1.
    bool is_connected() const;

    void check_vertex(Vertex v) const;

private:
    int n_;
    int r_;
    std::vector<Edge> edges_;
    std::vector<std::vector<EdgeId>> incident_;
    std::unordered_map<std::uint64_t, EdgeId> pair_index_;

    std::uint64_t pair_key(Vertex a, Vertex b) const;
};

LinearHypergraph build_linear(int n, int r, std::vector<Edge> edges);

/// Intersection of the neighbor sets of the vertices in S (sorted).
/// A member of S stays in the result if it is adjacent to every other
/// member. S = {v} gives N_v. Throws EmptySet.
std::vector<Vertex> common_neighborhood(const LinearHypergraph& h,
                                        const std::vector<Vertex>& s);

/// The three disjoint parts of N_u relative to an adjacent vertex w:
///   n1           common neighbors of u and w outside their co-edge,
///   n2           neighbors of u that are neither w nor adjacent to w,
///   co_edge_rest the co-edge of {u,w} minus u (contains w).
struct NeighborhoodPartition {
    Vertex u;
    Vertex w;
    std::vector<Vertex> n1;
    std::vector<Vertex> n2;
    std::vector<Vertex> co_edge_rest;
};

NeighborhoodPartition partition_neighborhood(const LinearHypergraph& h, Vertex u, Vertex w);

/// Per-|e cap U| edge counts against a reference vertex set U.
/// counts[k]        = number of edges meeting U in exactly k vertices,
/// vertex_counts[v][k] = same, restricted to edges through v.
struct EdgeProfile {
    std::vector<Vertex> reference;           // sorted U
    std::vector<long long> counts;           // size r+1
    std::vector<std::vector<int>> vertex_counts;  // n rows, r+1 columns

    long long global(int k) const { return counts[static_cast<size_t>(k)]; }
    int at(Vertex v, int k) const {
        return vertex_counts[static_cast<size_t>(v)][static_cast<size_t>(k)];
    }
};

EdgeProfile edge_profile(const LinearHypergraph& h, const std::vector<Vertex>& u_set);

}  // namespace bergelin
