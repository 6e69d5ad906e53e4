#include "bergelin/json_io.hpp"

#include <fstream>

#include "bergelin/stability.hpp"
#include "bergelin/tensor.hpp"

namespace bergelin {

json hypergraph_to_json(const LinearHypergraph& h) {
    json j;
    j["n"] = h.vertex_count();
    j["r"] = h.uniformity();
    j["edges"] = h.edges();
    return j;
}

LinearHypergraph hypergraph_from_json(const json& j) {
    try {
        const int n = j.at("n").get<int>();
        const int r = j.at("r").get<int>();
        std::vector<Edge> edges = j.at("edges").get<std::vector<Edge>>();
        return build_linear(n, r, std::move(edges));
    } catch (const json::exception& e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
}

LinearHypergraph load_hypergraph(const std::string& path) {
    return hypergraph_from_json(load_json(path));
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw Error(ErrorCode::ParseError, path + ": " + e.what());
    }
}

void save_json(const json& j, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::ParseError, "cannot open " + path + " for writing");
    out << j.dump(2) << "\n";
}

json witness_to_json(const SkeletonGraph& f, const BergeWitness& w) {
    json core = json::object();
    for (size_t i = 0; i < w.core_map.size(); ++i) core[std::to_string(i)] = w.core_map[i];
    json edges = json::object();
    for (size_t i = 0; i < f.edges.size(); ++i) {
        const auto& [a, b] = f.edges[i];
        edges[std::to_string(a) + "-" + std::to_string(b)] = w.edge_map[i];
    }
    return json{{"core_map", core}, {"edge_map", edges}};
}

BergeWitness witness_from_json(const SkeletonGraph& f, const json& j) {
    try {
        BergeWitness w;
        w.core_map.assign(static_cast<size_t>(f.m), -1);
        for (const auto& [key, value] : j.at("core_map").items())
            w.core_map.at(static_cast<size_t>(std::stoi(key))) = value.get<Vertex>();
        w.edge_map.assign(f.edges.size(), -1);
        for (size_t i = 0; i < f.edges.size(); ++i) {
            const auto& [a, b] = f.edges[i];
            w.edge_map[i] =
                j.at("edge_map").at(std::to_string(a) + "-" + std::to_string(b)).get<EdgeId>();
        }
        return w;
    } catch (const json::exception& e) {
        throw Error(ErrorCode::ParseError, e.what());
    } catch (const std::out_of_range&) {
        throw Error(ErrorCode::ParseError, "witness indices out of range");
    }
}

json context_to_json(const StabilityContext& ctx) {
    return json{{"u", ctx.u}, {"w", ctx.w}, {"v", ctx.v}, {"W", ctx.witnesses}};
}

StabilityContext context_from_json(const json& j) {
    try {
        StabilityContext ctx;
        ctx.u = j.at("u").get<Vertex>();
        ctx.w = j.at("w").get<Vertex>();
        ctx.v = j.at("v").get<Vertex>();
        ctx.witnesses = j.at("W").get<std::vector<Vertex>>();
        return ctx;
    } catch (const json::exception& e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
}

json trace_to_json(const SelectionTrace& trace) {
    json steps = json::array();
    for (const auto& s : trace.greedy_steps)
        steps.push_back(json{{"from_edge", s.from_edge},
                             {"chosen", s.chosen},
                             {"min_rule_value", s.min_rule_value},
                             {"tie_break_vector", s.tie_break_vector},
                             {"residual_size", s.residual_size}});
    return json{{"edges_meeting_w", trace.edges_meeting_w},
                {"private_count", trace.private_count},
                {"selected", trace.selected},
                {"case1", trace.case1},
                {"greedy_steps", steps}};
}

json stability_violation_dump(const LinearHypergraph& h, const StabilityContext& ctx, int t,
                              const SelectionTrace& trace) {
    return json{{"hypergraph", hypergraph_to_json(h)},
                {"context", context_to_json(ctx)},
                {"t", t},
                {"trace", trace_to_json(trace)}};
}

json lattice_to_json(const LatticeHypergraph& lat) {
    json j = hypergraph_to_json(lat.base);
    j["coordinates"] = lat.coordinates;
    j["colors"] = lat.colors;
    return j;
}

json f_construction_to_json(const FConstruction& f) {
    json j = hypergraph_to_json(f.base);
    j["roles"] = json{{"u", f.u},
                      {"w", f.w},
                      {"leaves", f.leaves},
                      {"l_edge", f.l_edge},
                      {"red_edges", f.red_edges},
                      {"blue_edges", f.blue_edges},
                      {"block_of", f.block_of},
                      {"block_count", f.block_count}};
    json latent = json::array();
    for (const auto& lines : f.latent_lines) latent.push_back(lines);
    j["colors"] = json{{"latent_lines", latent}};
    return j;
}

json g_construction_to_json(const GConstruction& g) {
    json j = f_construction_to_json(g.seed);
    j["n"] = g.base.vertex_count();
    j["edges"] = g.base.edges();
    j["roles"]["t"] = g.t;
    j["roles"]["fan_edges"] = g.fan_edges;
    j["colors"]["chosen_lines"] = g.chosen_lines;
    return j;
}

json h_construction_to_json(const HConstruction& h) {
    json j = g_construction_to_json(h.fan);
    j["n"] = h.base.vertex_count();
    j["edges"] = h.base.edges();
    j["roles"]["packed_edges"] = h.packed_edges;
    return j;
}

json perron_to_json(const PerronResult& res) {
    return json{{"rho", res.rho},         {"x", res.x},
                {"residual", res.residual}, {"iterations", res.iterations},
                {"converged", res.converged}, {"lower", res.lower},
                {"upper", res.upper}};
}

json bound_report_to_json(const BoundReport& rep) {
    json j{{"n", rep.n},
           {"r", rep.r},
           {"t", rep.t},
           {"f_at_cap", to_string(rep.f_at_cap)},
           {"g1", to_string(rep.g1)},
           {"g2", to_string(rep.g2)},
           {"turan_degree_bound", rep.turan_degree_bound},
           {"turan_edge_bound", rep.turan_edge_bound},
           {"large_n_assumed", rep.large_n_assumed}};
    j["spectral_upper"] = rep.spectral_upper ? json(*rep.spectral_upper) : json();
    j["spectral_lower"] = rep.spectral_lower ? json(*rep.spectral_lower) : json();
    j["tait"] = rep.tait ? json(*rep.tait) : json();
    return j;
}

}  // namespace bergelin
