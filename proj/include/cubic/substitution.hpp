#pragma once

#include <array>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "cubic/graph.hpp"
#include "cubic/structure.hpp"

// Vertex substitution: replace every vertex of a 4-regular multigraph F by a
// copy of H minus the endpoints of a chosen edge e, and wire each block's
// four freed attachment vertices along F's edges. The BlockMap records the
// full construction so it can be re-validated from scratch.

namespace cubic {

/// The two neighbours of x other than y, then the two neighbours of y other
/// than x, each side ascending. Errors when the four are not distinct (a
/// triangle through e forces an overlap).
inline std::array<int, 4> attachment_profile(const Graph& h, Edge e) {
    require_cubic(h, "attachment_profile");
    if (!h.has_edge(e.u, e.v)) throw error("attachment_profile: not an edge of the graph");
    std::array<int, 4> out{};
    int at = 0;
    for (int side : {e.u, e.v}) {
        int other = side == e.u ? e.v : e.u;
        for (int w : h.neighbors(side))
            if (w != other) out[static_cast<size_t>(at++)] = w;
    }
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (out[static_cast<size_t>(i)] == out[static_cast<size_t>(j)])
                throw error("attachment_profile: attachment vertices not distinct");
    return out;
}

struct BlockMap {
    int block_count = 0;
    int block_size = 0;                       // |H| - 2
    std::vector<int> block_of;                // G vertex -> block index (0-based)
    std::vector<int> h_vertex_of;             // G vertex -> vertex of H \ {x,y}
    Edge substitution_edge;                   // e = {x,y} in H
    // per block, in attachment-profile order (x-side first): the G vertex
    // carrying the external edge and the F-edge id it realizes
    std::vector<std::array<std::pair<int, int>, 4>> attachments;

    /// G vertex realizing F-edge `f_edge` inside `block`; -1 if none.
    int attachment_vertex(int block, int f_edge) const {
        for (const auto& [v, id] : attachments[static_cast<size_t>(block)])
            if (id == f_edge) return v;
        return -1;
    }

    std::pair<int, int> block_range(int block) const {
        return {block * block_size, (block + 1) * block_size};
    }
};

enum class LinkingPolicy {
    canonical,  // F-edges in ascending id order, attachment slots in profile order
    seeded,     // per-block slot order drawn from a seeded generator
};

struct SubstitutionResult {
    Graph graph;
    BlockMap map;
};

/// Builds S(H,F,e). Preconditions: h cubic with e an edge whose attachment
/// profile is distinct; f connected, 4-regular, loop-free.
inline SubstitutionResult substitute(const Graph& h, Edge e, const MultiGraph& f,
                                     LinkingPolicy policy = LinkingPolicy::canonical, uint64_t seed = 0) {
    require_cubic(h, "substitute");
    if (!h.has_edge(e.u, e.v)) throw error("substitute: e is not an edge of h");
    if (!f.is_regular(4)) throw error("substitute: frame multigraph is not 4-regular");
    if (!f.connected()) throw error("substitute: frame multigraph is not connected");
    const std::array<int, 4> profile = attachment_profile(h, e);

    const int nb = h.vertex_count() - 2;
    const int blocks = f.vertex_count();

    // dense relabeling of H - {x,y}
    std::vector<int> local_of_h(static_cast<size_t>(h.vertex_count()), -1);
    std::vector<int> h_of_local;
    for (int v = 0; v < h.vertex_count(); ++v)
        if (v != e.u && v != e.v) {
            local_of_h[static_cast<size_t>(v)] = static_cast<int>(h_of_local.size());
            h_of_local.push_back(v);
        }

    SubstitutionResult out;
    out.graph = Graph(nb * blocks);
    BlockMap& bm = out.map;
    bm.block_count = blocks;
    bm.block_size = nb;
    bm.substitution_edge = e;
    bm.block_of.resize(static_cast<size_t>(nb * blocks));
    bm.h_vertex_of.resize(static_cast<size_t>(nb * blocks));
    bm.attachments.resize(static_cast<size_t>(blocks));

    for (int b = 0; b < blocks; ++b) {
        int base = b * nb;
        for (int j = 0; j < nb; ++j) {
            bm.block_of[static_cast<size_t>(base + j)] = b;
            bm.h_vertex_of[static_cast<size_t>(base + j)] = h_of_local[static_cast<size_t>(j)];
        }
        for (const Edge& he : h.edges()) {
            if (he.u == e.u || he.u == e.v || he.v == e.u || he.v == e.v) continue;
            out.graph.add_edge(base + local_of_h[static_cast<size_t>(he.u)],
                               base + local_of_h[static_cast<size_t>(he.v)]);
        }
    }

    // slot consumption order per block
    std::vector<std::array<int, 4>> slot_order(static_cast<size_t>(blocks), {0, 1, 2, 3});
    if (policy == LinkingPolicy::seeded) {
        std::mt19937_64 rng(seed);
        for (auto& order : slot_order) std::shuffle(order.begin(), order.end(), rng);
    }
    std::vector<int> next_slot(static_cast<size_t>(blocks), 0);
    auto take_slot = [&](int block, int f_edge) {
        if (next_slot[static_cast<size_t>(block)] >= 4) throw error("substitute: block attachment overflow");
        int slot = slot_order[static_cast<size_t>(block)][static_cast<size_t>(next_slot[static_cast<size_t>(block)]++)];
        int v = block * nb + local_of_h[static_cast<size_t>(profile[static_cast<size_t>(slot)])];
        bm.attachments[static_cast<size_t>(block)][static_cast<size_t>(slot)] = {v, f_edge};
        return v;
    };

    for (int id = 0; id < f.edge_count(); ++id) {
        const Edge& fe = f.edge(id);
        int gu = take_slot(fe.u, id);
        int gv = take_slot(fe.v, id);
        out.graph.add_edge(gu, gv);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Validation: every clause of the construction re-checked from scratch.

struct ValidationCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct ValidationReport {
    std::vector<ValidationCheck> checks;
    int girth = 0;
    bool ok() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }
    const ValidationCheck* failed() const {
        for (const auto& c : checks)
            if (!c.passed) return &c;
        return nullptr;
    }
};

/// Checks a (graph, block map) pair against the definition: each block
/// induces H - {x,y} under the recorded isomorphism, every block sends out
/// exactly four external edges realizing F's edges with matching
/// multiplicities, and the result is cubic. Optionally verifies cyclic
/// 4-edge-connectivity (exhaustive small-cut search).
inline ValidationReport validate_substitution(const Graph& g, const BlockMap& bm, const Graph& h, Edge e,
                                              const MultiGraph& f, bool check_cyclic_connectivity = false) {
    ValidationReport report;
    auto add = [&](const std::string& name, bool passed, const std::string& detail = "") {
        report.checks.push_back({name, passed, detail});
    };

    const int nb = h.vertex_count() - 2;
    const int n = g.vertex_count();
    bool shape_ok = bm.block_size == nb && bm.block_count == f.vertex_count() && n == nb * f.vertex_count() &&
                    static_cast<int>(bm.block_of.size()) == n && static_cast<int>(bm.h_vertex_of.size()) == n &&
                    static_cast<int>(bm.attachments.size()) == bm.block_count && bm.substitution_edge == e;
    add("shape", shape_ok,
        shape_ok ? "" : "block map dimensions do not match (|H|-2)*|V(F)| = " + std::to_string(nb * f.vertex_count()));
    if (!shape_ok) return report;

    add("cubic", is_cubic(g), "every vertex of the substitution must have degree 3");

    // blocks are contiguous ranges and h_vertex_of is a bijection onto H-{x,y}
    bool blocks_ok = true;
    std::string blocks_detail;
    for (int v = 0; v < n && blocks_ok; ++v)
        if (bm.block_of[static_cast<size_t>(v)] != v / nb) {
            blocks_ok = false;
            blocks_detail = "vertex " + std::to_string(v) + " not in its contiguous block";
        }
    add("block_partition", blocks_ok, blocks_detail);

    bool iso_ok = true;
    std::string iso_detail;
    for (int b = 0; b < bm.block_count && iso_ok; ++b) {
        auto [lo, hi] = bm.block_range(b);
        std::vector<char> hit(static_cast<size_t>(h.vertex_count()), 0);
        for (int v = lo; v < hi && iso_ok; ++v) {
            int hv = bm.h_vertex_of[static_cast<size_t>(v)];
            if (hv < 0 || hv >= h.vertex_count() || hv == e.u || hv == e.v || hit[static_cast<size_t>(hv)]) {
                iso_ok = false;
                iso_detail = "block " + std::to_string(b) + ": h_vertex_of is not a bijection onto H-{x,y}";
                break;
            }
            hit[static_cast<size_t>(hv)] = 1;
        }
        for (int u = lo; u < hi && iso_ok; ++u)
            for (int v = u + 1; v < hi && iso_ok; ++v) {
                bool in_g = g.has_edge(u, v);
                bool in_h = h.has_edge(bm.h_vertex_of[static_cast<size_t>(u)], bm.h_vertex_of[static_cast<size_t>(v)]);
                if (in_g != in_h) {
                    iso_ok = false;
                    iso_detail = "block " + std::to_string(b) + ": adjacency of " + std::to_string(u) + "," +
                                 std::to_string(v) + " differs from H";
                }
            }
    }
    add("block_isomorphism", iso_ok, iso_detail);

    // external edges: exactly 4 per block, each realizing its recorded F-edge;
    // every F-edge realized exactly once
    bool ext_ok = true;
    std::string ext_detail;
    std::vector<int> realized(static_cast<size_t>(f.edge_count()), 0);
    for (int b = 0; b < bm.block_count && ext_ok; ++b) {
        auto [lo, hi] = bm.block_range(b);
        int external = 0;
        for (int v = lo; v < hi; ++v)
            for (int w : g.neighbors(v))
                if (bm.block_of[static_cast<size_t>(w)] != b) ++external;
        if (external != 4) {
            ext_ok = false;
            ext_detail = "block " + std::to_string(b) + " has " + std::to_string(external) + " external edges";
            break;
        }
        for (const auto& [v, id] : bm.attachments[static_cast<size_t>(b)]) {
            if (v < lo || v >= hi || id < 0 || id >= f.edge_count()) {
                ext_ok = false;
                ext_detail = "block " + std::to_string(b) + ": attachment record out of range";
                break;
            }
            const Edge& fe = f.edge(id);
            int other_block = fe.u == b ? fe.v : (fe.v == b ? fe.u : -1);
            if (other_block == -1) {
                ext_ok = false;
                ext_detail = "block " + std::to_string(b) + ": tagged F-edge " + std::to_string(id) +
                             " is not incident to it";
                break;
            }
            int partner = bm.attachment_vertex(other_block, id);
            if (partner == -1 || !g.has_edge(v, partner)) {
                ext_ok = false;
                ext_detail = "F-edge " + std::to_string(id) + " is not realized between blocks " +
                             std::to_string(b) + " and " + std::to_string(other_block);
                break;
            }
            ++realized[static_cast<size_t>(id)];
        }
    }
    if (ext_ok)
        for (int id = 0; id < f.edge_count(); ++id)
            if (realized[static_cast<size_t>(id)] != 2) {  // once per endpoint block
                ext_ok = false;
                ext_detail = "F-edge " + std::to_string(id) + " realized " +
                             std::to_string(realized[static_cast<size_t>(id)]) + " attachment records, expected 2";
                break;
            }
    add("contraction_isomorphic_to_f", ext_ok, ext_detail);

    report.girth = girth(g).value_or(0);

    if (check_cyclic_connectivity) {
        bool c4 = !has_cyclic_cut_at_most(g, 3);
        add("cyclically_4_edge_connected", c4, c4 ? "" : "a cyclic edge cut of size <= 3 exists");
    }
    return report;
}

}  // namespace cubic
