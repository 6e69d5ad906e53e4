#include "bergelin/hypergraph.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <string>

namespace bergelin {

const char* to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::NonUniformEdge: return "NonUniformEdge";
        case ErrorCode::LinearityViolation: return "LinearityViolation";
        case ErrorCode::DuplicateEdge: return "DuplicateEdge";
        case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
        case ErrorCode::SameVertex: return "SameVertex";
        case ErrorCode::EmptySet: return "EmptySet";
        case ErrorCode::NotAdjacent: return "NotAdjacent";
        case ErrorCode::InvalidT: return "InvalidT";
        case ErrorCode::InvalidParams: return "InvalidParams";
        case ErrorCode::HypothesisUnmet: return "HypothesisUnmet";
        case ErrorCode::StabilityViolation: return "StabilityViolation";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::NotConnected: return "NotConnected";
        case ErrorCode::NoConvergence: return "NoConvergence";
        case ErrorCode::DivisibilityViolated: return "DivisibilityViolated";
        case ErrorCode::NotEnoughColorEdges: return "NotEnoughColorEdges";
        case ErrorCode::NegativeF: return "NegativeF";
        case ErrorCode::BudgetExceeded: return "BudgetExceeded";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "UnknownError";
}

LinearHypergraph::LinearHypergraph(int n, int r, std::vector<Edge> edges)
    : n_(n), r_(r), edges_(std::move(edges)) {
    if (r_ < 2 || n_ < r_)
        throw Error(ErrorCode::InvalidParams,
                    "need n >= r >= 2, got n=" + std::to_string(n_) + " r=" + std::to_string(r_));

    incident_.assign(static_cast<size_t>(n_), {});
    pair_index_.reserve(edges_.size() * static_cast<size_t>(r_) * static_cast<size_t>(r_));

    for (EdgeId id = 0; id < static_cast<EdgeId>(edges_.size()); ++id) {
        Edge& e = edges_[static_cast<size_t>(id)];
        std::sort(e.begin(), e.end());
        if (std::adjacent_find(e.begin(), e.end()) != e.end())
            throw Error(ErrorCode::NonUniformEdge,
                        "edge " + std::to_string(id) + " repeats a vertex");
        if (static_cast<int>(e.size()) != r_)
            throw Error(ErrorCode::NonUniformEdge,
                        "edge " + std::to_string(id) + " has " + std::to_string(e.size()) +
                            " vertices, expected " + std::to_string(r_));
        for (Vertex v : e) check_vertex(v);

        for (size_t i = 0; i < e.size(); ++i) {
            for (size_t j = i + 1; j < e.size(); ++j) {
                auto key = pair_key(e[i], e[j]);
                auto [it, inserted] = pair_index_.emplace(key, id);
                if (!inserted) {
                    EdgeId other = it->second;
                    if (edges_[static_cast<size_t>(other)] == e)
                        throw Error(ErrorCode::DuplicateEdge,
                                    "edges " + std::to_string(other) + " and " +
                                        std::to_string(id) + " are identical");
                    throw Error(ErrorCode::LinearityViolation,
                                "edges " + std::to_string(other) + " and " + std::to_string(id) +
                                    " share pair {" + std::to_string(e[i]) + "," +
                                    std::to_string(e[j]) + "}");
                }
            }
        }
        for (Vertex v : e) incident_[static_cast<size_t>(v)].push_back(id);
    }
}

void LinearHypergraph::check_vertex(Vertex v) const {
    if (v < 0 || v >= n_)
        throw Error(ErrorCode::VertexOutOfRange,
                    "vertex " + std::to_string(v) + " not in [0," + std::to_string(n_) + ")");
}

std::uint64_t LinearHypergraph::pair_key(Vertex a, Vertex b) const {
    if (a > b) std::swap(a, b);
    return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint64_t>(b);
}

const std::vector<EdgeId>& LinearHypergraph::incident(Vertex v) const {
    check_vertex(v);
    return incident_[static_cast<size_t>(v)];
}

int LinearHypergraph::max_degree() const {
    int best = 0;
    for (const auto& inc : incident_) best = std::max(best, static_cast<int>(inc.size()));
    return best;
}

std::optional<EdgeId> LinearHypergraph::co_edge(Vertex u, Vertex w) const {
    check_vertex(u);
    check_vertex(w);
    if (u == w) throw Error(ErrorCode::SameVertex, "co_edge(" + std::to_string(u) + ") of a vertex with itself");
    auto it = pair_index_.find(pair_key(u, w));
    if (it == pair_index_.end()) return std::nullopt;
    return it->second;
}

std::vector<Vertex> LinearHypergraph::neighbors(Vertex v) const {
    check_vertex(v);
    std::vector<Vertex> out;
    for (EdgeId id : incident_[static_cast<size_t>(v)])
        for (Vertex w : edges_[static_cast<size_t>(id)])
            if (w != v) out.push_back(w);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool LinearHypergraph::is_connected() const {
    if (n_ <= 1) return true;
    std::vector<char> seen(static_cast<size_t>(n_), 0);
    std::queue<Vertex> queue;
    queue.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!queue.empty()) {
        Vertex v = queue.front();
        queue.pop();
        for (EdgeId id : incident_[static_cast<size_t>(v)]) {
            for (Vertex w : edges_[static_cast<size_t>(id)]) {
                if (!seen[static_cast<size_t>(w)]) {
                    seen[static_cast<size_t>(w)] = 1;
                    ++reached;
                    queue.push(w);
                }
            }
        }
    }
    return reached == n_;
}

LinearHypergraph build_linear(int n, int r, std::vector<Edge> edges) {
    return LinearHypergraph(n, r, std::move(edges));
}

std::vector<Vertex> common_neighborhood(const LinearHypergraph& h, const std::vector<Vertex>& s) {
    if (s.empty()) throw Error(ErrorCode::EmptySet, "common_neighborhood of an empty set");
    std::vector<Vertex> acc = h.neighbors(s[0]);
    for (size_t i = 1; i < s.size(); ++i) {
        std::vector<Vertex> next = h.neighbors(s[i]);
        std::vector<Vertex> merged;
        std::set_intersection(acc.begin(), acc.end(), next.begin(), next.end(),
                              std::back_inserter(merged));
        acc = std::move(merged);
        if (acc.empty()) break;
    }
    return acc;
}

NeighborhoodPartition partition_neighborhood(const LinearHypergraph& h, Vertex u, Vertex w) {
    auto luw = h.co_edge(u, w);
    if (!luw) throw Error(ErrorCode::NotAdjacent,
                          std::to_string(u) + " and " + std::to_string(w) + " share no edge");

    NeighborhoodPartition part;
    part.u = u;
    part.w = w;
    const Edge& co = h.edge(*luw);
    for (Vertex v : co)
        if (v != u) part.co_edge_rest.push_back(v);

    std::vector<Vertex> nu = h.neighbors(u);
    std::vector<Vertex> nw = h.neighbors(w);
    for (Vertex v : nu) {
        bool in_co = std::binary_search(co.begin(), co.end(), v);
        if (in_co) continue;  // lands in co_edge_rest (or is u itself, excluded)
        bool adj_w = std::binary_search(nw.begin(), nw.end(), v);
        if (adj_w)
            part.n1.push_back(v);
        else if (v != w)
            part.n2.push_back(v);
    }
    return part;
}

EdgeProfile edge_profile(const LinearHypergraph& h, const std::vector<Vertex>& u_set) {
    for (Vertex v : u_set) h.check_vertex(v);
    std::vector<Vertex> u_sorted = u_set;
    std::sort(u_sorted.begin(), u_sorted.end());
    u_sorted.erase(std::unique(u_sorted.begin(), u_sorted.end()), u_sorted.end());

    const int r = h.uniformity();
    EdgeProfile profile;
    profile.reference = u_sorted;
    profile.counts.assign(static_cast<size_t>(r) + 1, 0);
    profile.vertex_counts.assign(static_cast<size_t>(h.vertex_count()),
                                 std::vector<int>(static_cast<size_t>(r) + 1, 0));

    for (const Edge& e : h.edges()) {
        int k = 0;
        for (Vertex v : e)
            if (std::binary_search(u_sorted.begin(), u_sorted.end(), v)) ++k;
        ++profile.counts[static_cast<size_t>(k)];
        for (Vertex v : e) ++profile.vertex_counts[static_cast<size_t>(v)][static_cast<size_t>(k)];
    }
    return profile;
}

}  // namespace bergelin
