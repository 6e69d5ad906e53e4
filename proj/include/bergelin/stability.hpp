#pragma once

#include <vector>

#include "bergelin/berge.hpp"
#include "bergelin/hypergraph.hpp"
#include "bergelin/rational.hpp"

namespace bergelin {

/// Hypothesis data for witness extraction: adjacent u, w, a vertex
/// v in N_u \ {w}, and a set W of common neighbors of all three that
/// avoids the three co-edges and meets each co-edge through v at most
/// once. Once |W| >= (t-1)(r-1)+1, a Berge-K_{3,t} is forced.
struct StabilityContext {
    Vertex u = -1;
    Vertex w = -1;
    Vertex v = -1;
    std::vector<Vertex> witnesses;  // W, sorted
};

inline int context_threshold(int r, int t) { return (t - 1) * (r - 1) + 1; }

/// All contexts whose maximal admissible W reaches the threshold, over
/// ordered triples (u, w, v) with u ~ w and v in N_u \ {w}. W is thinned
/// to one representative (least index) per co-edge through v. Deterministic
/// order: ascending (u, w, v). scan_contexts shards the triple scan over
/// OpenMP threads and merges in triple order; scan_contexts_serial is the
/// plain reference.
std::vector<StabilityContext> scan_contexts(const LinearHypergraph& h, int t);
std::vector<StabilityContext> scan_contexts_serial(const LinearHypergraph& h, int t);

/// Per-step log of the greedy selection: which fan edge supplied the
/// vertex, the minimized co-edge load, and the residual pool size.
struct SelectionStep {
    EdgeId from_edge = -1;
    Vertex chosen = -1;
    int min_rule_value = 0;            // |l_{w y} cap W'_{j-1}|
    std::vector<int> tie_break_vector; // cumulative intersections with the reordered pool
    int residual_size = 0;             // |W'_{j-1}| before the step
};

struct SelectionTrace {
    std::vector<EdgeId> edges_meeting_w;   // e_1..e_s, private-first ordering
    int private_count = 0;                 // k
    std::vector<Vertex> selected;          // y_1..y_t
    std::vector<SelectionStep> greedy_steps;
    bool case1 = false;
};

/// Constructive extraction: from a hypothesis-satisfying context, build an
/// explicit Berge-K_{3,t} witness with core {v, u, w, y_1..y_t} and edges
/// l_{v y_j}, l_{u y_j}, l_{w y_j}. Follows the private-edge shortcut when
/// at least t-1 edges through u meet W in a vertex whose co-edge with w
/// meets W only there; otherwise runs the min/max greedy selection over
/// the remaining edges. Throws HypothesisUnmet if the context invariants
/// or the size threshold fail, and StabilityViolation (with a full JSON
/// dump in the payload) if the selection stalls, which the underlying
/// result rules out.
std::pair<BergeWitness, SelectionTrace> extract_witness(const LinearHypergraph& h,
                                                        const StabilityContext& ctx, int t);

enum class SelectionRule {
    Full,        // min rule then prefix-max tie-break (the faithful procedure)
    SkipMinRule, // ablation: ignore the co-edge-load minimization
    SkipMaxRule, // ablation: ignore the prefix-max tie-break
};

/// Ablation entry point used to demonstrate that both selection rules are
/// load-bearing: with a rule skipped the selection may stall, in which case
/// StabilityViolation is thrown exactly as above.
std::pair<BergeWitness, SelectionTrace> extract_witness_with_rule(const LinearHypergraph& h,
                                                                  const StabilityContext& ctx,
                                                                  int t, SelectionRule rule);

/// Margin report for the three per-part profile caps on U = N_{uw}:
///   part 1 (common neighbors off the co-edge):  sum_{i>=2} e^i_v <= t(r-1)+1
///   part 2 (neighbors of u but not of w):       sum_{1<=i<=r-1} e^i_v <= t(r-1)
///   part 3 (co-edge interior):                  sum_{i>=2} e^i_v <= (t-1)(r-1)+1
/// Violations on a Berge-K_{3,t}-free instance would contradict the
/// stability result; the caller certifies freeness.
struct ProfileCapEntry {
    Vertex v = -1;
    int part = 0;  // 1, 2, 3 as above
    long long sum = 0;
    long long cap = 0;
    bool holds = true;
};

struct ProfileCapReport {
    Vertex u = -1, w = -1;
    std::vector<ProfileCapEntry> entries;
    bool all_hold = true;
};

ProfileCapReport check_profile_caps(const LinearHypergraph& h, int t, Vertex u, Vertex w);

/// Exact check of sum_{v in N_u \ {w}} d_v <= (r-1) f(n,r,t,d_u,d_w) - d_w.
struct DegreeSumReport {
    Vertex u = -1, w = -1;
    long long lhs = 0;
    Rat rhs;
    Rat slack;  // rhs - lhs
    bool holds = true;
};

DegreeSumReport check_degree_sum(const LinearHypergraph& h, int t, Vertex u, Vertex w);

}  // namespace bergelin
