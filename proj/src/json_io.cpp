#include "rigidity/json_io.hpp"

namespace rigidity {

using nlohmann::json;

json to_json(const Multigraph& g) {
    json j;
    j["n"] = g.n;
    j["edges"] = json::array();
    for (const Edge& e : g.edges) j["edges"].push_back({e.u, e.v});
    return j;
}

json to_json(const OrderedPath& p) {
    return json{{"vertices", p.vertices}, {"edge_ids", p.edge_ids}};
}

json to_json(const RigidityVerdict& v) {
    json j;
    j["d"] = v.d;
    j["rank"] = v.rank;
    j["target"] = v.target;
    j["m"] = v.m;
    j["verdict"] = to_string(v.verdict);
    j["flex_dim"] = v.flex_dim;
    j["seed"] = v.seed;
    j["trials"] = v.trials;
    return j;
}

json to_json(const TreeDecomposition& dec) {
    return json{{"k", dec.k}, {"trees", dec.trees}};
}

json to_json(const PartitionWitness& w) {
    return json{{"blocks", w.blocks}, {"cross_edges", w.cross_edges}, {"required", w.required}};
}

json to_json(const DecomposeResult& res) {
    json j;
    if (res.ok()) {
        j["refused"] = false;
        j["decomposition"] = to_json(*res.decomposition);
    } else {
        j["refused"] = true;
        j["reason"] = to_string(*res.refusal);
        if (res.witness) j["witness"] = to_json(*res.witness);
    }
    return j;
}

json to_json(const TheoremReport& rep, bool full) {
    json j;
    j["graph"] = to_json(rep.graph);
    j["d"] = rep.d;
    j["target_edges"] = rep.target_edges;
    j["edge_count_ok"] = rep.edge_count_ok;
    j["claim"] = to_string(rep.claim);
    j["paths_checked"] = rep.paths_checked;
    if (!rep.note.empty()) j["note"] = rep.note;
    json results = json::array();
    for (const PathResult& pr : rep.path_results) {
        json p;
        p["path"] = to_json(pr.path);
        p["decomposable"] = pr.decomposable;
        if (full) {
            if (pr.decomposition) p["decomposition"] = to_json(*pr.decomposition);
            if (pr.refusal) p["refusal"] = to_string(*pr.refusal);
            if (pr.witness) p["witness"] = to_json(*pr.witness);
        }
        results.push_back(std::move(p));
    }
    j["path_results"] = std::move(results);
    return j;
}

json to_json(const ComparisonResult& cmp, bool full) {
    json j;
    j["graph"] = to_json(cmp.graph);
    j["d"] = cmp.d;
    j["theorem"] = to_json(cmp.theorem, full);
    j["rank"] = to_json(cmp.rank);
    j["discrepant"] = cmp.discrepant;
    return j;
}

json to_json(const ScanReport& rep, bool full) {
    json j;
    j["corpus"] = rep.corpus;
    j["d"] = rep.d;
    j["trials"] = rep.trials;
    j["seed"] = rep.seed;
    j["size"] = rep.size;
    j["agreements"] = rep.agreements;
    j["not_applicable"] = rep.not_applicable;
    j["discrepancy_count"] = rep.discrepancies.size();
    json ds = json::array();
    for (const ComparisonResult& cmp : rep.discrepancies) ds.push_back(to_json(cmp, full));
    j["discrepancies"] = std::move(ds);
    j["stats"] = {{"paths_checked", rep.stats.paths_checked},
                  {"decompositions_succeeded", rep.stats.decompositions_succeeded}};
    return j;
}

json to_json(const EliminationPartition& part) {
    json j;
    j["success"] = part.success;
    j["column_sets"] = part.column_sets;
    if (part.success)
        j["trees"] = part.trees;
    else
        j["failure"] = part.failure;
    json trace = json::array();
    for (const PivotStep& s : part.pivot_trace)
        trace.push_back({{"column_edge", s.column_edge},
                         {"row_direction", s.row_direction},
                         {"row_vertex", s.row_vertex}});
    j["pivot_trace"] = std::move(trace);
    return j;
}

} // namespace rigidity
