#include "bergelin/stability.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <string>

#include "bergelin/bounds.hpp"
#include "bergelin/json_io.hpp"

namespace bergelin {

namespace {

// maximal admissible W for the ordered triple (u, w, v): common neighbors
// of all three, minus the three co-edges, one representative per co-edge
// through v (least index wins)
std::vector<Vertex> admissible_witnesses(const LinearHypergraph& h, Vertex u, Vertex w, Vertex v) {
    std::vector<Vertex> pool = common_neighborhood(h, {v, u, w});

    std::set<Vertex> excluded;
    for (auto co : {h.co_edge(v, u), h.co_edge(v, w), h.co_edge(u, w)})
        if (co)
            for (Vertex x : h.edge(*co)) excluded.insert(x);

    std::vector<Vertex> out;
    std::set<EdgeId> seen_co_edges;
    for (Vertex y : pool) {
        if (excluded.count(y)) continue;
        EdgeId lv = *h.co_edge(v, y);  // y is adjacent to v by construction
        if (seen_co_edges.insert(lv).second) out.push_back(y);
    }
    return out;
}

void check_scan_params(const LinearHypergraph& h, int t) {
    if (t < 3 || h.uniformity() < 3)
        throw Error(ErrorCode::InvalidParams,
                    "context scan needs t >= 3 and r >= 3, got t=" + std::to_string(t) +
                        " r=" + std::to_string(h.uniformity()));
}

std::vector<std::array<Vertex, 3>> scan_triples(const LinearHypergraph& h) {
    std::vector<std::array<Vertex, 3>> triples;
    for (Vertex u = 0; u < h.vertex_count(); ++u) {
        std::vector<Vertex> nu = h.neighbors(u);
        for (Vertex w : nu)
            for (Vertex v : nu)
                if (v != w) triples.push_back({u, w, v});
    }
    return triples;
}

}  // namespace

std::vector<StabilityContext> scan_contexts_serial(const LinearHypergraph& h, int t) {
    check_scan_params(h, t);
    const int need = context_threshold(h.uniformity(), t);
    std::vector<StabilityContext> out;
    for (const auto& [u, w, v] : scan_triples(h)) {
        std::vector<Vertex> witnesses = admissible_witnesses(h, u, w, v);
        if (static_cast<int>(witnesses.size()) >= need)
            out.push_back({u, w, v, std::move(witnesses)});
    }
    return out;
}

std::vector<StabilityContext> scan_contexts(const LinearHypergraph& h, int t) {
    check_scan_params(h, t);
    const int need = context_threshold(h.uniformity(), t);
    const auto triples = scan_triples(h);

    std::vector<StabilityContext> slots(triples.size());
    std::vector<char> hit(triples.size(), 0);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 64)
#endif
    for (long i = 0; i < static_cast<long>(triples.size()); ++i) {
        const auto& [u, w, v] = triples[static_cast<size_t>(i)];
        std::vector<Vertex> witnesses = admissible_witnesses(h, u, w, v);
        if (static_cast<int>(witnesses.size()) >= need) {
            slots[static_cast<size_t>(i)] = {u, w, v, std::move(witnesses)};
            hit[static_cast<size_t>(i)] = 1;
        }
    }

    std::vector<StabilityContext> out;
    for (size_t i = 0; i < slots.size(); ++i)
        if (hit[i]) out.push_back(std::move(slots[i]));
    return out;
}

namespace {

void require(bool condition, const std::string& what) {
    if (!condition) throw Error(ErrorCode::HypothesisUnmet, what);
}

void validate_context(const LinearHypergraph& h, const StabilityContext& ctx, int t) {
    h.check_vertex(ctx.u);
    h.check_vertex(ctx.w);
    h.check_vertex(ctx.v);
    require(t >= 3 && h.uniformity() >= 3, "need t >= 3 and r >= 3");
    require(h.adjacent(ctx.u, ctx.w), "u and w are not adjacent");
    require(ctx.v != ctx.w && h.adjacent(ctx.u, ctx.v), "v is not in N_u \\ {w}");

    std::set<Vertex> excluded;
    for (auto co : {h.co_edge(ctx.v, ctx.u), h.co_edge(ctx.v, ctx.w), h.co_edge(ctx.u, ctx.w)})
        if (co)
            for (Vertex x : h.edge(*co)) excluded.insert(x);

    std::set<EdgeId> v_co_edges;
    for (Vertex y : ctx.witnesses) {
        h.check_vertex(y);
        // the three co-edges contain u, v and w, so this also rejects y in {u,v,w}
        require(!excluded.count(y),
                "witness " + std::to_string(y) + " lies on a co-edge of {v,u,w}");
        require(h.adjacent(y, ctx.v) && h.adjacent(y, ctx.u) && h.adjacent(y, ctx.w),
                "witness " + std::to_string(y) + " is not a common neighbor of v, u, w");
        require(v_co_edges.insert(*h.co_edge(ctx.v, y)).second,
                "two witnesses share the co-edge through v");
    }
    require(static_cast<int>(ctx.witnesses.size()) >= context_threshold(h.uniformity(), t),
            "|W| = " + std::to_string(ctx.witnesses.size()) + " below threshold " +
                std::to_string(context_threshold(h.uniformity(), t)));
}

std::vector<Vertex> sorted_intersection(const Edge& e, const std::set<Vertex>& set) {
    std::vector<Vertex> out;
    for (Vertex x : e)
        if (set.count(x)) out.push_back(x);
    return out;
}

[[noreturn]] void stall(const LinearHypergraph& h, const StabilityContext& ctx, int t,
                        const SelectionTrace& trace, const std::string& what) {
    throw Error(ErrorCode::StabilityViolation, what,
                stability_violation_dump(h, ctx, t, trace).dump(2));
}

BergeWitness assemble(const LinearHypergraph& h, const StabilityContext& ctx, int t,
                      const std::vector<Vertex>& selected, const SelectionTrace& trace) {
    BergeWitness witness;
    witness.core_map = {ctx.v, ctx.u, ctx.w};
    witness.core_map.insert(witness.core_map.end(), selected.begin(), selected.end());
    const Vertex sides[3] = {ctx.v, ctx.u, ctx.w};
    for (Vertex side : sides)
        for (Vertex y : selected) witness.edge_map.push_back(*h.co_edge(side, y));

    if (!validate_witness(h, k3t_skeleton(t), witness))
        stall(h, ctx, t, trace, "assembled witness failed validation");
    return witness;
}

}  // namespace

std::pair<BergeWitness, SelectionTrace> extract_witness_with_rule(const LinearHypergraph& h,
                                                                  const StabilityContext& ctx,
                                                                  int t, SelectionRule rule) {
    validate_context(h, ctx, t);
    const std::set<Vertex> w_set(ctx.witnesses.begin(), ctx.witnesses.end());

    // e_1..e_s: edges through u meeting W. An edge is private when some
    // member y of its W-intersection has l_{wy} meeting W only in y.
    struct FanEdge {
        EdgeId id;
        std::vector<Vertex> in_w;
        Vertex private_pick = -1;
    };
    std::vector<FanEdge> privates, rest;
    for (EdgeId id : h.incident(ctx.u)) {
        FanEdge fe{id, sorted_intersection(h.edge(id), w_set), -1};
        if (fe.in_w.empty()) continue;
        for (Vertex y : fe.in_w) {
            const Edge& lwy = h.edge(*h.co_edge(ctx.w, y));
            if (sorted_intersection(lwy, w_set) == std::vector<Vertex>{y}) {
                fe.private_pick = y;
                break;  // least index wins
            }
        }
        (fe.private_pick >= 0 ? privates : rest).push_back(std::move(fe));
    }
    std::stable_sort(rest.begin(), rest.end(), [](const FanEdge& a, const FanEdge& b) {
        return a.in_w.size() < b.in_w.size();
    });

    SelectionTrace trace;
    trace.private_count = static_cast<int>(privates.size());
    for (const auto& fe : privates) trace.edges_meeting_w.push_back(fe.id);
    for (const auto& fe : rest) trace.edges_meeting_w.push_back(fe.id);

    std::vector<Vertex> selected;

    if (trace.private_count >= t - 1) {
        trace.case1 = true;
        std::set<Vertex> covered;  // vertices of the t-1 selected private edges
        for (int i = 0; i < t - 1; ++i) {
            selected.push_back(privates[static_cast<size_t>(i)].private_pick);
            for (Vertex x : h.edge(privates[static_cast<size_t>(i)].id)) covered.insert(x);
        }
        Vertex last = -1;
        for (Vertex y : ctx.witnesses)
            if (!covered.count(y)) {
                last = y;
                break;
            }
        if (last < 0) stall(h, ctx, t, trace, "no witness vertex outside the private edges");
        selected.push_back(last);
        trace.selected = selected;
        return {assemble(h, ctx, t, selected, trace), trace};
    }

    // greedy phase over the remaining edges, ordered by ascending |e cap W|
    for (const auto& fe : privates) selected.push_back(fe.private_pick);

    std::set<Vertex> w_prime;  // union of the non-private intersections
    for (const auto& fe : rest)
        for (Vertex y : fe.in_w) w_prime.insert(y);

    std::set<EdgeId> used_u_edges, used_w_edges;
    auto in_used_w = [&](Vertex y) { return used_w_edges.count(*h.co_edge(ctx.w, y)) != 0; };

    for (size_t i = 0; i < rest.size() && static_cast<int>(selected.size()) < t; ++i) {
        std::vector<Vertex> candidates;
        for (Vertex y : rest[i].in_w)
            if (w_prime.count(y) && !in_used_w(y)) candidates.push_back(y);
        if (candidates.empty()) continue;

        // residual pool W'_{j-1} = W' minus the already-used u-edges
        std::vector<Vertex> residual;
        for (Vertex z : w_prime)
            if (!used_u_edges.count(*h.co_edge(ctx.u, z))) residual.push_back(z);
        const std::set<Vertex> residual_set(residual.begin(), residual.end());

        auto load = [&](Vertex y) {
            const Edge& lwy = h.edge(*h.co_edge(ctx.w, y));
            int c = 0;
            for (Vertex z : lwy)
                if (residual_set.count(z)) ++c;
            return c;
        };

        int best_load = 0;
        if (rule != SelectionRule::SkipMinRule) {
            best_load = load(candidates[0]);
            for (Vertex y : candidates) best_load = std::min(best_load, load(y));
            std::vector<Vertex> mins;
            for (Vertex y : candidates)
                if (load(y) == best_load) mins.push_back(y);
            candidates = std::move(mins);
        }

        // prefix-max tie-break: pool = edges after position (#selected + 1)
        // in the private-first order, re-sorted by descending residual size
        std::vector<int> winning_vector;
        if (rule != SelectionRule::SkipMaxRule && candidates.size() > 1) {
            const size_t next_ordinal = selected.size() + 1;  // selecting y_{next_ordinal}
            std::vector<size_t> pool;
            for (size_t p = next_ordinal > static_cast<size_t>(trace.private_count)
                                ? next_ordinal - static_cast<size_t>(trace.private_count)
                                : 0;
                 p < rest.size(); ++p)
                pool.push_back(p);
            auto pool_size = [&](size_t p) {
                int c = 0;
                for (Vertex y : rest[p].in_w)
                    if (w_prime.count(y) && !in_used_w(y)) ++c;
                return c;
            };
            std::stable_sort(pool.begin(), pool.end(),
                             [&](size_t a, size_t b) { return pool_size(a) > pool_size(b); });

            auto cumulative = [&](Vertex y) {
                const Edge& lwy = h.edge(*h.co_edge(ctx.w, y));
                std::vector<int> cum;
                int acc = 0;
                for (size_t p : pool) {
                    for (Vertex z : rest[p].in_w)
                        if (std::binary_search(lwy.begin(), lwy.end(), z)) ++acc;
                    cum.push_back(acc);
                }
                return cum;
            };

            std::vector<Vertex> winners;
            for (Vertex y : candidates) {
                std::vector<int> cum = cumulative(y);
                if (winners.empty() || cum > winning_vector) {
                    winning_vector = std::move(cum);
                    winners.assign(1, y);
                } else if (cum == winning_vector) {
                    winners.push_back(y);
                }
            }
            candidates = std::move(winners);
        }

        const Vertex pick = *std::min_element(candidates.begin(), candidates.end());
        selected.push_back(pick);
        used_u_edges.insert(rest[i].id);
        used_w_edges.insert(*h.co_edge(ctx.w, pick));

        SelectionStep step;
        step.from_edge = rest[i].id;
        step.chosen = pick;
        step.min_rule_value = rule != SelectionRule::SkipMinRule ? best_load : load(pick);
        step.tie_break_vector = winning_vector;
        step.residual_size = static_cast<int>(residual.size());
        trace.greedy_steps.push_back(std::move(step));
    }

    trace.selected = selected;
    if (static_cast<int>(selected.size()) < t)
        stall(h, ctx, t, trace,
              "selection stalled with " + std::to_string(selected.size()) + " of " +
                  std::to_string(t) + " vertices");
    return {assemble(h, ctx, t, selected, trace), trace};
}

std::pair<BergeWitness, SelectionTrace> extract_witness(const LinearHypergraph& h,
                                                        const StabilityContext& ctx, int t) {
    return extract_witness_with_rule(h, ctx, t, SelectionRule::Full);
}

ProfileCapReport check_profile_caps(const LinearHypergraph& h, int t, Vertex u, Vertex w) {
    NeighborhoodPartition part = partition_neighborhood(h, u, w);  // throws NotAdjacent
    const int r = h.uniformity();
    const std::vector<Vertex> n_uw = common_neighborhood(h, {u, w});
    const EdgeProfile profile = edge_profile(h, n_uw);

    ProfileCapReport report;
    report.u = u;
    report.w = w;

    auto add = [&](Vertex v, int part_id, int lo, int hi, long long cap) {
        long long sum = 0;
        for (int i = lo; i <= hi; ++i) sum += profile.at(v, i);
        ProfileCapEntry entry{v, part_id, sum, cap, sum <= cap};
        report.all_hold = report.all_hold && entry.holds;
        report.entries.push_back(entry);
    };

    const long long tr = static_cast<long long>(t) * (r - 1);
    for (Vertex v : part.n1) add(v, 1, 2, r, tr + 1);
    for (Vertex v : part.n2) add(v, 2, 1, r - 1, tr);
    for (Vertex v : part.co_edge_rest)
        if (v != w) add(v, 3, 2, r, static_cast<long long>(t - 1) * (r - 1) + 1);
    return report;
}

DegreeSumReport check_degree_sum(const LinearHypergraph& h, int t, Vertex u, Vertex w) {
    if (!h.adjacent(u, w))
        throw Error(ErrorCode::NotAdjacent,
                    std::to_string(u) + " and " + std::to_string(w) + " share no edge");
    DegreeSumReport report;
    report.u = u;
    report.w = w;
    for (Vertex v : h.neighbors(u))
        if (v != w) report.lhs += h.degree(v);

    const int r = h.uniformity();
    report.rhs = Rat(r - 1) * eval_f(h.vertex_count(), r, t, Rat(h.degree(u)), Rat(h.degree(w))) -
                 Rat(h.degree(w));
    report.slack = report.rhs - Rat(report.lhs);
    report.holds = report.slack >= Rat(0);
    return report;
}

}  // namespace bergelin
