#include "bergelin/berge.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <string>

namespace bergelin {

SkeletonGraph::SkeletonGraph(int vertex_count, std::vector<std::pair<int, int>> edge_list)
    : m(vertex_count), edges(std::move(edge_list)) {
    if (m < 0) throw Error(ErrorCode::InvalidParams, "negative skeleton order");
    std::set<std::pair<int, int>> seen;
    for (auto& [a, b] : edges) {
        if (a > b) std::swap(a, b);
        if (a == b) throw Error(ErrorCode::InvalidParams, "skeleton loop at " + std::to_string(a));
        if (a < 0 || b >= m) throw Error(ErrorCode::VertexOutOfRange, "skeleton edge out of range");
        if (!seen.insert({a, b}).second)
            throw Error(ErrorCode::InvalidParams, "duplicate skeleton edge");
    }
}

int SkeletonGraph::degree(int v) const {
    int d = 0;
    for (const auto& [a, b] : edges)
        if (a == v || b == v) ++d;
    return d;
}

SkeletonGraph k3t_skeleton(int t) {
    if (t < 1) throw Error(ErrorCode::InvalidT, "K_{3,t} needs t >= 1, got " + std::to_string(t));
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<size_t>(3 * t));
    for (int left = 0; left < 3; ++left)
        for (int right = 0; right < t; ++right) edges.emplace_back(left, 3 + right);
    return SkeletonGraph(3 + t, std::move(edges));
}

SkeletonGraph triangle_skeleton() {
    return SkeletonGraph(3, {{0, 1}, {1, 2}, {0, 2}});
}

namespace {

struct SearchState {
    const LinearHypergraph& h;
    const SkeletonGraph& f;
    BergeSearch strategy;
    std::vector<int> order;               // skeleton vertices in assignment order
    std::vector<int> position;            // skeleton vertex -> order position
    std::vector<Vertex> assignment;       // skeleton vertex -> H vertex, -1 unset
    std::vector<char> used_vertex;        // H vertex taken by the core map
    std::vector<Vertex> candidates;       // H vertices by descending degree
};

// Kuhn augmenting-path matching: skeleton edge -> distinct hyperedge.
bool saturating_matching(const std::vector<std::vector<EdgeId>>& options, int edge_count,
                         std::vector<EdgeId>& chosen) {
    std::vector<int> owner(static_cast<size_t>(edge_count), -1);
    chosen.assign(options.size(), -1);

    std::vector<char> visited;
    std::function<bool(int)> augment = [&](int se) -> bool {
        for (EdgeId he : options[static_cast<size_t>(se)]) {
            if (visited[static_cast<size_t>(he)]) continue;
            visited[static_cast<size_t>(he)] = 1;
            if (owner[static_cast<size_t>(he)] < 0 || augment(owner[static_cast<size_t>(he)])) {
                owner[static_cast<size_t>(he)] = se;
                chosen[static_cast<size_t>(se)] = he;
                return true;
            }
        }
        return false;
    };

    for (size_t se = 0; se < options.size(); ++se) {
        visited.assign(static_cast<size_t>(edge_count), 0);
        if (!augment(static_cast<int>(se))) return false;
    }
    return true;
}

std::optional<BergeWitness> finish(SearchState& st) {
    const auto& f = st.f;
    std::vector<std::vector<EdgeId>> options(f.edges.size());
    for (size_t i = 0; i < f.edges.size(); ++i) {
        auto [a, b] = f.edges[i];
        auto ce = st.h.co_edge(st.assignment[static_cast<size_t>(a)],
                               st.assignment[static_cast<size_t>(b)]);
        if (!ce) return std::nullopt;
        options[i].push_back(*ce);  // unique by linearity
    }

    std::vector<EdgeId> chosen;
    if (st.strategy == BergeSearch::CoEdgeCheck) {
        chosen.reserve(options.size());
        std::set<EdgeId> distinct;
        for (const auto& opt : options) {
            if (!distinct.insert(opt[0]).second) return std::nullopt;
            chosen.push_back(opt[0]);
        }
    } else {
        if (!saturating_matching(options, st.h.edge_count(), chosen)) return std::nullopt;
    }

    BergeWitness w;
    w.core_map = st.assignment;
    w.edge_map = std::move(chosen);
    return w;
}

std::optional<BergeWitness> assign(SearchState& st, size_t pos) {
    if (pos == st.order.size()) return finish(st);

    const int sv = st.order[pos];
    const int need = st.f.degree(sv);
    for (Vertex cand : st.candidates) {
        if (st.used_vertex[static_cast<size_t>(cand)]) continue;
        if (st.h.degree(cand) < need) break;  // candidates sorted by degree

        // every skeleton edge whose other endpoint is already placed must
        // have a hyperedge through both images
        bool feasible = true;
        for (const auto& [a, b] : st.f.edges) {
            int other = -1;
            if (a == sv) other = b;
            else if (b == sv) other = a;
            else continue;
            Vertex img = st.assignment[static_cast<size_t>(other)];
            if (img < 0) continue;
            if (!st.h.co_edge(cand, img)) {
                feasible = false;
                break;
            }
        }
        if (!feasible) continue;

        st.assignment[static_cast<size_t>(sv)] = cand;
        st.used_vertex[static_cast<size_t>(cand)] = 1;
        if (auto w = assign(st, pos + 1)) return w;
        st.used_vertex[static_cast<size_t>(cand)] = 0;
        st.assignment[static_cast<size_t>(sv)] = -1;
    }
    return std::nullopt;
}

}  // namespace

std::optional<BergeWitness> contains_berge(const LinearHypergraph& h, const SkeletonGraph& f,
                                           BergeSearch strategy) {
    if (f.m > h.vertex_count()) return std::nullopt;
    if (f.edges.size() > static_cast<size_t>(h.edge_count())) return std::nullopt;

    SearchState st{h, f, strategy, {}, {}, {}, {}, {}};
    st.order.resize(static_cast<size_t>(f.m));
    for (int v = 0; v < f.m; ++v) st.order[static_cast<size_t>(v)] = v;
    std::stable_sort(st.order.begin(), st.order.end(),
                     [&](int a, int b) { return f.degree(a) > f.degree(b); });
    st.position.assign(static_cast<size_t>(f.m), -1);
    for (size_t i = 0; i < st.order.size(); ++i) st.position[static_cast<size_t>(st.order[i])] = static_cast<int>(i);
    st.assignment.assign(static_cast<size_t>(f.m), -1);
    st.used_vertex.assign(static_cast<size_t>(h.vertex_count()), 0);
    st.candidates.resize(static_cast<size_t>(h.vertex_count()));
    for (int v = 0; v < h.vertex_count(); ++v) st.candidates[static_cast<size_t>(v)] = v;
    std::stable_sort(st.candidates.begin(), st.candidates.end(),
                     [&](Vertex a, Vertex b) { return h.degree(a) > h.degree(b); });

    return assign(st, 0);
}

bool validate_witness(const LinearHypergraph& h, const SkeletonGraph& f, const BergeWitness& w) {
    if (static_cast<int>(w.core_map.size()) != f.m) return false;
    if (w.edge_map.size() != f.edges.size()) return false;

    std::set<Vertex> core_images;
    for (Vertex v : w.core_map) {
        if (v < 0 || v >= h.vertex_count()) return false;
        if (!core_images.insert(v).second) return false;
    }

    std::set<EdgeId> edge_images;
    for (size_t i = 0; i < f.edges.size(); ++i) {
        EdgeId id = w.edge_map[i];
        if (id < 0 || id >= h.edge_count()) return false;
        if (!edge_images.insert(id).second) return false;
        const Edge& e = h.edge(id);
        auto [a, b] = f.edges[i];
        Vertex ia = w.core_map[static_cast<size_t>(a)];
        Vertex ib = w.core_map[static_cast<size_t>(b)];
        if (!std::binary_search(e.begin(), e.end(), ia)) return false;
        if (!std::binary_search(e.begin(), e.end(), ib)) return false;
    }
    return true;
}

}  // namespace bergelin
