#pragma once

#include <optional>
#include <string>

#include "json.hpp"

#include "cubic/bounds.hpp"
#include "cubic/cycles.hpp"
#include "cubic/factors.hpp"
#include "cubic/graph6.hpp"
#include "cubic/long_cycle.hpp"
#include "cubic/structure.hpp"
#include "cubic/substitution.hpp"

// JSON mappings for the report payloads and the BlockMap sidecar schema.

namespace cubic {

using nlohmann::json;

inline json to_json(const Edge& e) { return json::array({e.u, e.v}); }

inline json to_json(const std::optional<int>& v, const char* none = "none") {
    if (v) return *v;
    return none;
}

inline json to_json(const Cycle& c) { return json(c.vertices); }

inline json to_json(const ConstrainedMaxima& m) {
    return json{{"through_edge", to_json(m.through_edge)},
                {"one_endpoint", to_json(m.one_endpoint)},
                {"both_avoid_edge", to_json(m.both_avoid_edge)},
                {"two_disjoint_cycles", to_json(m.two_disjoint)}};
}

inline json to_json(const SnarkClass& c) {
    json j{{"classification", to_string(c.classification)}, {"girth", c.girth}};
    j["cyclic_edge_connectivity"] = c.cyclic_edge_connectivity ? json(*c.cyclic_edge_connectivity) : json("infinite");
    return j;
}

inline json to_json(const BoundReport& r) {
    json j{{"host", r.host_graph6},
           {"order", r.host_order},
           {"edge", to_json(r.edge)},
           {"block_size", r.block_size},
           {"q", r.forced_odd_q},
           {"oddness_growth", r.oddness_growth.str()}};
    if (r.maxima_computed) {
        j["maxima"] = to_json(r.maxima);
        j["per_block"] = r.per_block;
        j["coefficient"] = r.coefficient.str();
    }
    return j;
}

inline json to_json(const Matching& m) {
    json arr = json::array();
    for (const Edge& e : m.edges) arr.push_back(to_json(e));
    return arr;
}

inline json to_json(const MatchingSurvey& s) {
    json fails = json::array();
    for (const Matching& m : s.failing) fails.push_back(to_json(m));
    return json{{"matching_size", s.matching_size},
                {"matchings_checked", s.matchings_checked},
                {"failing_count", s.failing.size()},
                {"failing", fails}};
}

inline json to_json(const TwoFactor& tf) {
    json cycles = json::array();
    for (const Cycle& c : tf.cycles) cycles.push_back(to_json(c));
    return json{{"cycles", cycles}, {"odd_cycles", tf.odd_cycle_count()}};
}

inline json to_json(const ValidationReport& r) {
    json checks = json::array();
    for (const auto& c : r.checks) {
        json jc{{"check", c.name}, {"passed", c.passed}};
        if (!c.detail.empty()) jc["detail"] = c.detail;
        checks.push_back(jc);
    }
    return json{{"ok", r.ok()}, {"girth", r.girth}, {"checks", checks}};
}

inline json to_json(const ConstructedCycle& c) {
    json blocks = json::array();
    for (const auto& paths : c.per_block_paths) {
        json jp = json::array();
        for (const auto& p : paths) jp.push_back(json(p));
        blocks.push_back(jp);
    }
    return json{{"length", c.length},
                {"cycle", to_json(c.cycle)},
                {"trail", json(c.trail)},
                {"per_block_paths", blocks}};
}

// ---------------------------------------------------------------------------
// BlockMap sidecar.

inline json blockmap_to_json(const BlockMap& bm) {
    json attachments = json::array();
    for (const auto& block : bm.attachments) {
        json ja = json::array();
        for (const auto& [v, id] : block) ja.push_back(json::array({v, id}));
        attachments.push_back(ja);
    }
    return json{{"block_of", json(bm.block_of)},
                {"attachments", attachments},
                {"h_vertex_of", json(bm.h_vertex_of)},
                {"substitution_edge", to_json(bm.substitution_edge)}};
}

inline BlockMap blockmap_from_json(const json& j) {
    BlockMap bm;
    bm.block_of = j.at("block_of").get<std::vector<int>>();
    bm.h_vertex_of = j.at("h_vertex_of").get<std::vector<int>>();
    auto edge = j.at("substitution_edge");
    bm.substitution_edge = Edge(edge.at(0).get<int>(), edge.at(1).get<int>());
    for (const auto& block : j.at("attachments")) {
        std::array<std::pair<int, int>, 4> a{};
        if (block.size() != 4) throw error("block map: each block needs exactly 4 attachments");
        for (size_t i = 0; i < 4; ++i)
            a[i] = {block.at(i).at(0).get<int>(), block.at(i).at(1).get<int>()};
        bm.attachments.push_back(a);
    }
    bm.block_count = static_cast<int>(bm.attachments.size());
    if (bm.block_count == 0 || bm.block_of.size() % bm.attachments.size() != 0)
        throw error("block map: inconsistent sizes");
    bm.block_size = static_cast<int>(bm.block_of.size()) / bm.block_count;
    return bm;
}

inline ScanCriteria criteria_from_json(const json& j) {
    ScanCriteria c;
    if (j.contains("max_coefficient")) c.max_coefficient = Rational::parse(j.at("max_coefficient").get<std::string>());
    if (j.contains("min_q")) c.min_q = j.at("min_q").get<int>();
    return c;
}

}  // namespace cubic
