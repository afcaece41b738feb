#pragma once

#include <json.hpp>

#include "canonical.hpp"
#include "coords.hpp"
#include "dot.hpp"
#include "graph.hpp"
#include "graph6.hpp"
#include "rational.hpp"

namespace graphdot {

using ordered_json = nlohmann::ordered_json;

inline ordered_json json_of(const DotResult& r) {
    ordered_json j;
    j["value"] = r.value;
    if (r.phase)
        j["phase"] = *r.phase;
    else
        j["phase"] = nullptr;
    j["witness"] = r.witness;
    j["ops"] = r.ops;
    return j;
}

inline ordered_json json_of(const Coordinates& c, const std::vector<Graph>& basis) {
    ordered_json j;
    ordered_json ids = ordered_json::array();
    for (const Graph& b : basis) ids.push_back(write_graph6(b));
    j["basis"] = std::move(ids);
    ordered_json entries = ordered_json::array();
    for (const CoordinateEntry& e : c.entries) {
        ordered_json item;
        item["value"] = e.value;
        if (e.phase)
            item["phase"] = *e.phase;
        else
            item["phase"] = nullptr;
        item["solver"] = solver_kind_name(e.solver);
        entries.push_back(std::move(item));
    }
    j["entries"] = std::move(entries);
    return j;
}

inline ordered_json json_of(const BasisCheckReport& r) {
    ordered_json j;
    j["order"] = r.order;
    j["class_count"] = r.class_count;
    j["values_only"] = r.values_only;
    j["injective"] = r.injective;
    j["distinct_keys"] = r.distinct_keys;
    j["collision_count"] = r.collisions.size();
    ordered_json pairs = ordered_json::array();
    for (const auto& [a, b] : r.collisions) pairs.push_back(ordered_json::array({a, b}));
    j["collisions"] = std::move(pairs);
    return j;
}

inline ordered_json json_of(const ClusterPartition& p) {
    ordered_json j;
    j["cluster_count"] = p.clusters.size();
    j["assignment"] = p.assignment;
    ordered_json clusters = ordered_json::array();
    for (const auto& members : p.clusters) clusters.push_back(members);
    j["clusters"] = std::move(clusters);
    return j;
}

inline ordered_json json_of(const CensusReport& r) {
    ordered_json j;
    j["sub_order"] = r.sub_order;
    ordered_json classes = ordered_json::array();
    for (std::uint64_t code : enumerate_iso_classes(r.sub_order))
        classes.push_back(write_graph6(Graph::from_edge_code(r.sub_order, code)));
    j["classes"] = std::move(classes);
    j["counts"] = r.counts;
    std::int64_t total = 0;
    for (std::int64_t c : r.counts) total += c;
    j["total"] = total;
    return j;
}

inline ordered_json json_of(const OrthogonalPairsReport& r) {
    ordered_json j;
    j["order"] = r.order;
    j["class_count"] = r.class_count;
    j["pairs_scanned"] = r.pairs_scanned;
    j["full_checks"] = r.full_checks;
    ordered_json pairs = ordered_json::array();
    ordered_json graphs = ordered_json::array();
    const auto& codes = enumerate_iso_classes(r.order);
    for (const auto& [a, b] : r.pairs) {
        pairs.push_back(ordered_json::array({a, b}));
        graphs.push_back(ordered_json::array(
            {write_graph6(Graph::from_edge_code(r.order, codes[static_cast<std::size_t>(a)])),
             write_graph6(Graph::from_edge_code(r.order, codes[static_cast<std::size_t>(b)]))}));
    }
    j["orthogonal_pairs"] = std::move(pairs);
    j["orthogonal_pair_graphs"] = std::move(graphs);
    return j;
}

inline ordered_json json_of(const QuasiOrthogonalityReport& r) {
    ordered_json j;
    j["order"] = r.order;
    j["class_count"] = r.class_count;
    j["pairs_scanned"] = r.pairs_scanned;
    j["min_value"] = r.min_value;
    ordered_json pairs = ordered_json::array();
    ordered_json graphs = ordered_json::array();
    const auto& codes = enumerate_iso_classes(r.order);
    for (const auto& [a, b] : r.minimizing_pairs) {
        pairs.push_back(ordered_json::array({a, b}));
        graphs.push_back(ordered_json::array(
            {write_graph6(Graph::from_edge_code(r.order, codes[static_cast<std::size_t>(a)])),
             write_graph6(Graph::from_edge_code(r.order, codes[static_cast<std::size_t>(b)]))}));
    }
    j["minimizing_pairs"] = std::move(pairs);
    j["minimizing_pair_graphs"] = std::move(graphs);
    return j;
}

inline ordered_json json_of(const std::vector<RankedMatch>& ranking) {
    ordered_json j = ordered_json::array();
    for (const RankedMatch& m : ranking) {
        ordered_json item;
        item["index"] = m.index;
        item["score"] = m.score.str();
        j.push_back(std::move(item));
    }
    return j;
}

inline ordered_json json_of(const BasisSearchReport& r) {
    ordered_json j;
    j["order"] = r.order;
    j["values_only"] = r.values_only;
    j["chosen"] = r.chosen;
    ordered_json graphs = ordered_json::array();
    const auto& codes = enumerate_iso_classes(r.order);
    for (int idx : r.chosen)
        graphs.push_back(
            write_graph6(Graph::from_edge_code(r.order, codes[static_cast<std::size_t>(idx)])));
    j["chosen_graphs"] = std::move(graphs);
    j["colliding_pairs_after"] = r.colliding_pairs_after;
    j["injective"] = r.injective;
    return j;
}

}  // namespace graphdot
