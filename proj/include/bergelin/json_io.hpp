#pragma once

#include <string>

#include <json.hpp>

#include "bergelin/berge.hpp"
#include "bergelin/bounds.hpp"
#include "bergelin/constructions.hpp"
#include "bergelin/hypergraph.hpp"

namespace bergelin {

struct StabilityContext;
struct SelectionTrace;
struct PerronResult;

using nlohmann::json;

/// Core interchange format: {"n": int, "r": int, "edges": [[int,...],...]}
/// with each edge sorted. The loader funnels through build_linear, so a
/// malformed or non-linear file is rejected, never repaired.
json hypergraph_to_json(const LinearHypergraph& h);
LinearHypergraph hypergraph_from_json(const json& j);

LinearHypergraph load_hypergraph(const std::string& path);
void save_json(const json& j, const std::string& path);
json load_json(const std::string& path);

/// Certificate format: {"core_map": {"0": 5, ...}, "edge_map": {"0-3": 7, ...}}
json witness_to_json(const SkeletonGraph& f, const BergeWitness& w);
BergeWitness witness_from_json(const SkeletonGraph& f, const json& j);

json context_to_json(const StabilityContext& ctx);
StabilityContext context_from_json(const json& j);
json trace_to_json(const SelectionTrace& trace);

json stability_violation_dump(const LinearHypergraph& h, const StabilityContext& ctx, int t,
                              const SelectionTrace& trace);

/// Extended envelopes: the core format plus "roles"/"colors" metadata.
json lattice_to_json(const LatticeHypergraph& lat);
json f_construction_to_json(const FConstruction& f);
json g_construction_to_json(const GConstruction& g);
json h_construction_to_json(const HConstruction& h);

json perron_to_json(const PerronResult& res);
json bound_report_to_json(const BoundReport& rep);

}  // namespace bergelin
