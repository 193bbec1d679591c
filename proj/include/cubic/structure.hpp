#pragma once

#include <deque>
#include <optional>
#include <queue>
#include <string>
#include <vector>

#include "cubic/graph.hpp"

// Structural invariants: girth, edge connectivity, cyclic edge connectivity,
// 3-edge-colorability and the snark classification built from them.

namespace cubic {

/// Length of the shortest cycle; nullopt when the graph is acyclic.
inline std::optional<int> girth(const Graph& g) {
    int best = -1;
    int n = g.vertex_count();
    std::vector<int> dist(static_cast<size_t>(n));
    for (const Edge& e : g.edges()) {
        // shortest u-v path avoiding the edge itself closes the shortest
        // cycle through e
        std::fill(dist.begin(), dist.end(), -1);
        std::deque<int> queue{e.u};
        dist[static_cast<size_t>(e.u)] = 0;
        while (!queue.empty()) {
            int x = queue.front();
            queue.pop_front();
            if (best != -1 && dist[static_cast<size_t>(x)] + 1 >= best) break;
            for (int w : g.neighbors(x)) {
                if (x == e.u && w == e.v) continue;
                if (dist[static_cast<size_t>(w)] == -1) {
                    dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(x)] + 1;
                    queue.push_back(w);
                }
            }
        }
        if (dist[static_cast<size_t>(e.v)] != -1) {
            int len = dist[static_cast<size_t>(e.v)] + 1;
            if (best == -1 || len < best) best = len;
        }
    }
    if (best == -1) return std::nullopt;
    return best;
}

// ---------------------------------------------------------------------------
// 3-edge-coloring by backtracking over edges in a DFS-grown order, with the
// first vertex's edge colors fixed to break color symmetry.

struct EdgeColoring {
    bool colorable = false;
    std::vector<int> colors;  // parallel to Graph::edges(), values 1..3
};

inline EdgeColoring three_edge_coloring(const Graph& g) {
    require_cubic(g, "three_edge_coloring");
    const std::vector<Edge> edges = g.edges();
    const int m = static_cast<int>(edges.size());
    const int n = g.vertex_count();

    std::vector<std::vector<int>> incident(static_cast<size_t>(n));
    for (int i = 0; i < m; ++i) {
        incident[static_cast<size_t>(edges[static_cast<size_t>(i)].u)].push_back(i);
        incident[static_cast<size_t>(edges[static_cast<size_t>(i)].v)].push_back(i);
    }

    // order edges so each one after the first few touches an already-seen
    // vertex: constraints propagate instead of piling up
    std::vector<int> order;
    order.reserve(static_cast<size_t>(m));
    std::vector<char> edge_seen(static_cast<size_t>(m), 0);
    std::vector<char> vertex_seen(static_cast<size_t>(n), 0);
    std::vector<int> stack;
    for (int start = 0; start < n; ++start) {
        if (vertex_seen[static_cast<size_t>(start)]) continue;
        vertex_seen[static_cast<size_t>(start)] = 1;
        stack.push_back(start);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int ei : incident[static_cast<size_t>(v)]) {
                if (edge_seen[static_cast<size_t>(ei)]) continue;
                edge_seen[static_cast<size_t>(ei)] = 1;
                order.push_back(ei);
                int w = edges[static_cast<size_t>(ei)].u == v ? edges[static_cast<size_t>(ei)].v
                                                              : edges[static_cast<size_t>(ei)].u;
                if (!vertex_seen[static_cast<size_t>(w)]) {
                    vertex_seen[static_cast<size_t>(w)] = 1;
                    stack.push_back(w);
                }
            }
        }
    }

    std::vector<int> color(static_cast<size_t>(m), 0);
    auto admissible = [&](int ei, int c) {
        for (int v : {edges[static_cast<size_t>(ei)].u, edges[static_cast<size_t>(ei)].v})
            for (int other : incident[static_cast<size_t>(v)])
                if (other != ei && color[static_cast<size_t>(other)] == c) return false;
        return true;
    };

    // vertex 0's three edges get colors 1,2,3 in id order
    const auto& first = incident[0];
    for (size_t i = 0; i < first.size(); ++i) color[static_cast<size_t>(first[i])] = static_cast<int>(i) + 1;

    auto rec = [&](auto&& self, size_t pos) -> bool {
        while (pos < order.size() && color[static_cast<size_t>(order[pos])] != 0) ++pos;
        if (pos == order.size()) return true;
        int ei = order[pos];
        for (int c = 1; c <= 3; ++c) {
            if (!admissible(ei, c)) continue;
            color[static_cast<size_t>(ei)] = c;
            if (self(self, pos + 1)) return true;
            color[static_cast<size_t>(ei)] = 0;
        }
        return false;
    };

    // the pre-fixed colors may already clash (multiple components start fresh,
    // so only vertex 0's fixing applies)
    for (int ei : first)
        if (!([&] {
                int c = color[static_cast<size_t>(ei)];
                color[static_cast<size_t>(ei)] = 0;
                bool ok = admissible(ei, c);
                color[static_cast<size_t>(ei)] = c;
                return ok;
            }()))
            return {};

    EdgeColoring result;
    if (rec(rec, 0)) {
        result.colorable = true;
        result.colors = std::move(color);
    }
    return result;
}

inline bool is_three_edge_colorable(const Graph& g) { return three_edge_coloring(g).colorable; }

/// Checks a witness coloring edge by edge.
inline bool is_proper_three_edge_coloring(const Graph& g, std::span<const int> colors) {
    const std::vector<Edge> edges = g.edges();
    if (colors.size() != edges.size()) return false;
    for (size_t i = 0; i < edges.size(); ++i) {
        if (colors[i] < 1 || colors[i] > 3) return false;
        for (size_t j = i + 1; j < edges.size(); ++j) {
            bool share = edges[i].u == edges[j].u || edges[i].u == edges[j].v ||
                         edges[i].v == edges[j].u || edges[i].v == edges[j].v;
            if (share && colors[i] == colors[j]) return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Max-flow (Edmonds-Karp, unit/integer capacities) used for edge
// connectivity queries and for cuts between contracted cycles.

namespace detail_flow {

struct FlowNet {
    struct Arc {
        int to;
        int cap;
        int rev;
    };
    std::vector<std::vector<Arc>> arcs;

    explicit FlowNet(int n) : arcs(static_cast<size_t>(n)) {}

    void add_undirected(int u, int v, int cap) {
        arcs[static_cast<size_t>(u)].push_back({v, cap, static_cast<int>(arcs[static_cast<size_t>(v)].size())});
        arcs[static_cast<size_t>(v)].push_back({u, cap, static_cast<int>(arcs[static_cast<size_t>(u)].size()) - 1});
    }

    int max_flow(int s, int t, int stop_at = -1) {
        int flow = 0;
        const int n = static_cast<int>(arcs.size());
        std::vector<int> prev_node(static_cast<size_t>(n)), prev_arc(static_cast<size_t>(n));
        while (stop_at < 0 || flow < stop_at) {
            std::fill(prev_node.begin(), prev_node.end(), -1);
            prev_node[static_cast<size_t>(s)] = s;
            std::queue<int> q;
            q.push(s);
            while (!q.empty() && prev_node[static_cast<size_t>(t)] == -1) {
                int u = q.front();
                q.pop();
                for (size_t i = 0; i < arcs[static_cast<size_t>(u)].size(); ++i) {
                    const Arc& a = arcs[static_cast<size_t>(u)][i];
                    if (a.cap > 0 && prev_node[static_cast<size_t>(a.to)] == -1) {
                        prev_node[static_cast<size_t>(a.to)] = u;
                        prev_arc[static_cast<size_t>(a.to)] = static_cast<int>(i);
                        q.push(a.to);
                    }
                }
            }
            if (prev_node[static_cast<size_t>(t)] == -1) break;
            int push = stop_at < 0 ? INT32_MAX : stop_at - flow;
            for (int v = t; v != s; v = prev_node[static_cast<size_t>(v)])
                push = std::min(push, arcs[static_cast<size_t>(prev_node[static_cast<size_t>(v)])]
                                          [static_cast<size_t>(prev_arc[static_cast<size_t>(v)])].cap);
            for (int v = t; v != s; v = prev_node[static_cast<size_t>(v)]) {
                Arc& a = arcs[static_cast<size_t>(prev_node[static_cast<size_t>(v)])]
                             [static_cast<size_t>(prev_arc[static_cast<size_t>(v)])];
                a.cap -= push;
                arcs[static_cast<size_t>(a.to)][static_cast<size_t>(a.rev)].cap += push;
            }
            flow += push;
        }
        return flow;
    }
};

}  // namespace detail_flow

/// True iff every edge cut of the multigraph has size >= k.
inline bool is_k_edge_connected(const MultiGraph& mg, int k) {
    if (k <= 0) return true;
    int n = mg.vertex_count();
    if (n < 2) return n == 1;  // single vertex: no cut exists
    if (!mg.connected()) return false;
    for (int t = 1; t < n; ++t) {
        detail_flow::FlowNet net(n);
        for (const Edge& e : mg.edges()) net.add_undirected(e.u, e.v, 1);
        if (net.max_flow(0, t, k) < k) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Cyclic edge connectivity.

namespace detail_cec {

/// Does removing the edge subset `cut` (indices into `edges`) leave at least
/// two components that each contain a cycle?
inline bool is_cyclic_edge_cut(int n, const std::vector<Edge>& edges, const std::vector<int>& cut) {
    std::vector<int> parent(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) parent[static_cast<size_t>(i)] = i;
    auto find = [&](int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    };
    std::vector<char> removed(edges.size(), 0);
    for (int i : cut) removed[static_cast<size_t>(i)] = 1;
    for (size_t i = 0; i < edges.size(); ++i)
        if (!removed[i]) {
            int a = find(edges[i].u), b = find(edges[i].v);
            if (a != b) parent[static_cast<size_t>(a)] = b;
        }
    std::vector<int> vcount(static_cast<size_t>(n), 0), ecount(static_cast<size_t>(n), 0);
    for (int v = 0; v < n; ++v) ++vcount[static_cast<size_t>(find(v))];
    for (size_t i = 0; i < edges.size(); ++i)
        if (!removed[i]) ++ecount[static_cast<size_t>(find(edges[i].u))];
    int cyclic = 0;
    for (int v = 0; v < n; ++v)
        if (parent[static_cast<size_t>(v)] == v && ecount[static_cast<size_t>(v)] >= vcount[static_cast<size_t>(v)])
            ++cyclic;
    return cyclic >= 2;
}

/// Exhaustive search for a cyclic edge cut of exactly size k. Combination
/// enumeration; fine at the graph sizes this project works with.
inline bool exists_cyclic_cut_of_size(const Graph& g, int k, std::vector<int>* witness = nullptr) {
    const std::vector<Edge> edges = g.edges();
    const int m = static_cast<int>(edges.size());
    if (k > m) return false;
    std::vector<int> pick(static_cast<size_t>(k));
    auto rec = [&](auto&& self, int depth, int from) -> bool {
        if (depth == k) return is_cyclic_edge_cut(g.vertex_count(), edges, pick);
        for (int i = from; i <= m - (k - depth); ++i) {
            pick[static_cast<size_t>(depth)] = i;
            if (self(self, depth + 1, i + 1)) return true;
        }
        return false;
    };
    bool found = rec(rec, 0, 0);
    if (found && witness) *witness = pick;
    return found;
}

/// All chordless cycles of length <= max_len, canonicalised; capped count.
inline std::vector<std::vector<int>> induced_cycles_up_to(const Graph& g, int max_len, size_t cap) {
    std::vector<std::vector<int>> out;
    const int n = g.vertex_count();
    std::vector<char> on_path(static_cast<size_t>(n), 0);
    std::vector<int> path;
    auto rec = [&](auto&& self, int root, int head) -> void {
        if (out.size() >= cap) return;
        for (int w : g.neighbors(head)) {
            if (out.size() >= cap) return;
            if (w == root && path.size() >= 3 && path[1] < path.back()) {
                out.push_back(path);
                continue;
            }
            if (w <= root || on_path[static_cast<size_t>(w)]) continue;
            if (static_cast<int>(path.size()) + 1 > max_len) continue;
            // chordless: w may touch the path only at head (and root for closing)
            bool chord = false;
            for (size_t i = 0; i + 1 < path.size(); ++i)
                if (path[i] != root && g.has_edge(w, path[i])) {
                    chord = true;
                    break;
                }
            if (!chord && g.has_edge(w, root) && path.size() >= 2) {
                // closing is still possible later; but any longer extension
                // through w would carry the chord w-root
                on_path[static_cast<size_t>(w)] = 1;
                path.push_back(w);
                if (path.size() >= 3 && path[1] < path.back()) out.push_back(path);
                path.pop_back();
                on_path[static_cast<size_t>(w)] = 0;
                continue;
            }
            if (chord) continue;
            on_path[static_cast<size_t>(w)] = 1;
            path.push_back(w);
            self(self, root, w);
            path.pop_back();
            on_path[static_cast<size_t>(w)] = 0;
        }
    };
    for (int r = 0; r < n && out.size() < cap; ++r) {
        path = {r};
        on_path[static_cast<size_t>(r)] = 1;
        rec(rec, r, r);
        on_path[static_cast<size_t>(r)] = 0;
    }
    return out;
}

/// Minimum edge cut separating the (disjoint) vertex sets a and b.
inline int min_cut_between(const Graph& g, const std::vector<int>& a, const std::vector<int>& b) {
    const int n = g.vertex_count();
    std::vector<int> id(static_cast<size_t>(n), -1);
    // 0 = contracted a, 1 = contracted b, rest numbered from 2
    for (int v : a) id[static_cast<size_t>(v)] = 0;
    for (int v : b) id[static_cast<size_t>(v)] = 1;
    int next = 2;
    for (int v = 0; v < n; ++v)
        if (id[static_cast<size_t>(v)] == -1) id[static_cast<size_t>(v)] = next++;
    detail_flow::FlowNet net(next);
    for (const Edge& e : g.edges()) {
        int x = id[static_cast<size_t>(e.u)], y = id[static_cast<size_t>(e.v)];
        if (x != y) net.add_undirected(x, y, 1);
    }
    return net.max_flow(0, 1);
}

}  // namespace detail_cec

/// Exact cyclic edge connectivity: minimum size of an edge cut whose removal
/// leaves at least two components each containing a cycle; nullopt when no
/// two vertex-disjoint cycles exist.
///
/// Strategy per the module notes: an upper bound comes from min cuts between
/// contracted pairs of vertex-disjoint short induced cycles, then every
/// smaller size is ruled out (or found) by exhaustive subset search. The
/// subset sweep makes the result exact regardless of which cycle pairs were
/// tried.
inline std::optional<int> cyclic_edge_connectivity(const Graph& g) {
    if (!g.connected()) throw error("cyclic_edge_connectivity: graph must be connected");
    require_cubic(g, "cyclic_edge_connectivity");
    const int n = g.vertex_count();

    // the only connected cubic graphs without two vertex-disjoint cycles are
    // K4 and K_{3,3}
    std::optional<int> gg = girth(g);
    if (!gg) return std::nullopt;
    if (n == 4) return std::nullopt;
    if (n == 6 && *gg == 4) return std::nullopt;

    int upper = -1;
    for (int max_len = *gg + 2; max_len <= n; max_len += 2) {
        auto cycles = detail_cec::induced_cycles_up_to(g, max_len, 4000);
        std::vector<std::vector<char>> marks;
        marks.reserve(cycles.size());
        for (const auto& c : cycles) {
            std::vector<char> mk(static_cast<size_t>(n), 0);
            for (int v : c) mk[static_cast<size_t>(v)] = 1;
            marks.push_back(std::move(mk));
        }
        for (size_t i = 0; i < cycles.size(); ++i)
            for (size_t j = i + 1; j < cycles.size(); ++j) {
                bool disjoint = true;
                for (int v : cycles[j])
                    if (marks[i][static_cast<size_t>(v)]) {
                        disjoint = false;
                        break;
                    }
                if (!disjoint) continue;
                int cut = detail_cec::min_cut_between(g, cycles[i], cycles[j]);
                if (upper == -1 || cut < upper) upper = cut;
            }
        if (upper != -1) break;
    }
    if (upper == -1) throw error("cyclic_edge_connectivity: no disjoint cycle pair found");

    for (int k = 1; k < upper; ++k)
        if (detail_cec::exists_cyclic_cut_of_size(g, k)) return k;
    return upper;
}

/// True iff g has a cyclic edge cut of size <= k (exhaustive). The cheap
/// direction for "cyclically (k+1)-edge connected" checks on larger graphs.
inline bool has_cyclic_cut_at_most(const Graph& g, int k) {
    for (int i = 1; i <= k; ++i)
        if (detail_cec::exists_cyclic_cut_of_size(g, i)) return true;
    return false;
}

// ---------------------------------------------------------------------------
// Classification.

enum class SnarkKind {
    three_edge_colorable,
    uncolorable,  // not 3-edge-colorable but cyclic edge connectivity < 4
    weak_snark,   // cyclically 4-edge connected, not 3-edge-colorable
    snark,        // weak snark with girth >= 5
};

inline const char* to_string(SnarkKind k) {
    switch (k) {
        case SnarkKind::three_edge_colorable: return "three_edge_colorable";
        case SnarkKind::uncolorable: return "uncolorable";
        case SnarkKind::weak_snark: return "weak_snark";
        case SnarkKind::snark: return "snark";
    }
    return "?";
}

struct SnarkClass {
    SnarkKind classification = SnarkKind::three_edge_colorable;
    int girth = 0;
    std::optional<int> cyclic_edge_connectivity;  // nullopt = infinite
};

inline SnarkClass classify(const Graph& g) {
    require_cubic(g, "classify");
    if (!g.connected()) throw error("classify: graph must be connected");
    SnarkClass out;
    out.girth = *girth(g);  // cubic graphs always contain a cycle
    out.cyclic_edge_connectivity = cyclic_edge_connectivity(g);
    bool colorable = is_three_edge_colorable(g);
    bool c4 = !out.cyclic_edge_connectivity || *out.cyclic_edge_connectivity >= 4;
    if (colorable)
        out.classification = SnarkKind::three_edge_colorable;
    else if (!c4)
        out.classification = SnarkKind::uncolorable;
    else
        out.classification = out.girth >= 5 ? SnarkKind::snark : SnarkKind::weak_snark;
    return out;
}

}  // namespace cubic
