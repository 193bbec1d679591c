#pragma once

#include <optional>
#include <vector>

#include "cubic/bits.hpp"
#include "cubic/graph.hpp"

// Exact cycle searches: circumference, the four constrained maxima around an
// edge, disjoint cycle pairs, dominating cycles through a matching, and full
// cycle enumeration. All searches are branch-and-bound over simple paths with
// adjacency kept as bit rows; pruning uses reachability of the remaining
// graph and degree availability of unvisited vertices.

namespace cubic {

namespace detail_cyc {

/// Iteratively drops available vertices that have fewer than two neighbours
/// among {available} ∪ {head, root}: they cannot lie on any cycle completion.
/// Returns the surviving set including head and root.
inline Bits degree_filter(const BitGraph& g, Bits avail, int head, int root) {
    Bits s = avail;
    s.set(head);
    s.set(root);
    bool changed = true;
    while (changed) {
        changed = false;
        Bits scan = s;
        scan.reset(head);
        scan.reset(root);
        for (int v = scan.pop(); v != -1; v = scan.pop())
            if ((g.row(v) & s).count() < 2) {
                s.reset(v);
                changed = true;
            }
    }
    return s;
}

/// Longest cycle through `root`, visiting every vertex of `required`,
/// restricted to `allowed` vertices (which must not contain root).
/// Witness is the first maximum found in the deterministic DFS order.
struct LongestCycle {
    const BitGraph& g;
    int root;
    Bits required;
    int best = -1;
    std::vector<int> witness;

    std::vector<int> path;
    Bits visited;

    LongestCycle(const BitGraph& graph, int root_vertex, Bits required_vertices = Bits{})
        : g(graph), root(root_vertex), required(required_vertices) {}

    void run(Bits allowed, int forced_first = -1) {
        path = {root};
        visited = Bits{};
        visited.set(root);
        if (forced_first >= 0) {
            path.push_back(forced_first);
            visited.set(forced_first);
            extend(forced_first, allowed.minus(visited));
        } else {
            extend(root, allowed);
        }
    }

    void extend(int head, Bits avail) {
        Bits survivors = degree_filter(g, avail, head, root);
        Bits avail2 = survivors;
        avail2.reset(head);
        avail2.reset(root);
        Bits reach = g.reachable(head, avail2);  // includes head
        if (!(reach & g.row(root)).any()) return;
        if (required.minus(visited).minus(reach).any()) return;

        if (g.row(head).test(root) && visited.count() >= 3 && required.minus(visited).none() &&
            visited.count() > best) {
            best = visited.count();
            witness = path;
        }
        if (visited.count() + reach.count() - 1 <= best) return;

        Bits moves = g.row(head) & avail2;
        for (int w = moves.pop(); w != -1; w = moves.pop()) {
            visited.set(w);
            path.push_back(w);
            extend(w, avail2.minus(visited));
            path.pop_back();
            visited.reset(w);
        }
    }
};

/// Enumerates every cycle through `root` within `allowed` exactly once
/// (orientation fixed by path[1] < closing vertex). Callback gets the vertex
/// sequence starting at root.
template <typename F>
void enumerate_through_root(const BitGraph& g, int root, Bits allowed, F&& emit) {
    std::vector<int> path{root};
    Bits visited;
    visited.set(root);
    auto rec = [&](auto&& self, int head, Bits avail) -> void {
        Bits moves = g.row(head) & avail;
        if (g.row(head).test(root) && path.size() >= 3 && path[1] < head) emit(path);
        for (int w = moves.pop(); w != -1; w = moves.pop()) {
            visited.set(w);
            path.push_back(w);
            self(self, w, avail.minus(visited));
            path.pop_back();
            visited.reset(w);
        }
    };
    rec(rec, root, allowed);
}

}  // namespace detail_cyc

struct CircumferenceResult {
    int length = 0;
    Cycle witness;
};

/// Exact longest cycle with witness; errors on acyclic input.
inline CircumferenceResult circumference(const Graph& graph) {
    BitGraph g(graph);
    int n = g.n;
    int best = -1;
    std::vector<int> bestpath;
    for (int r = 0; r + 2 < n; ++r) {
        if (n - r <= best) break;  // a cycle rooted at r uses vertices >= r only
        detail_cyc::LongestCycle search(g, r);
        search.best = best;
        Bits allowed = Bits::all_below(n).minus(Bits::all_below(r + 1));
        search.run(allowed);
        if (search.best > best && !search.witness.empty()) {
            best = search.best;
            bestpath = search.witness;
        }
    }
    if (best < 3) throw error("circumference: graph has no cycle");
    return {best, Cycle{bestpath}};
}

struct ConstrainedMaxima {
    std::optional<int> through_edge;      // longest cycle containing e
    std::optional<int> one_endpoint;      // containing exactly one endpoint of e
    std::optional<int> both_avoid_edge;   // containing both endpoints but not e
    std::optional<int> two_disjoint;      // max |C1|+|C2|, disjoint, x in C1, y in C2
};

/// Max total length of two vertex-disjoint cycles with x in one and y in the
/// other; nullopt if no such pair exists.
inline std::optional<int> max_disjoint_cycle_pair(const Graph& graph, int x, int y) {
    if (x == y) throw error("max_disjoint_cycle_pair: endpoints must differ");
    BitGraph g(graph);
    Bits all = Bits::all_below(g.n);
    int best = -1;
    Bits allowed1 = all;
    allowed1.reset(x);
    allowed1.reset(y);
    detail_cyc::enumerate_through_root(g, x, allowed1, [&](const std::vector<int>& c1) {
        Bits used;
        for (int v : c1) used.set(v);
        if (static_cast<int>(c1.size()) + (g.n - static_cast<int>(c1.size())) <= best) return;
        detail_cyc::LongestCycle second(g, y);
        second.best = best - static_cast<int>(c1.size());
        Bits allowed2 = all.minus(used);
        allowed2.reset(y);
        second.run(allowed2);
        if (!second.witness.empty() && static_cast<int>(c1.size()) + second.best > best)
            best = static_cast<int>(c1.size()) + second.best;
    });
    if (best < 0) return std::nullopt;
    return best;
}

/// The four constrained cycle maxima of an edge (the case analysis of a
/// cycle's restriction to one substitution block).
inline ConstrainedMaxima constrained_maxima(const Graph& graph, Edge e) {
    if (!graph.has_edge(e.u, e.v)) throw error("constrained_maxima: not an edge of the graph");
    require_cubic(graph, "constrained_maxima");
    BitGraph g(graph);
    Bits all = Bits::all_below(g.n);
    ConstrainedMaxima out;

    {  // cycle containing the edge: rooted at u, first step forced across e
        detail_cyc::LongestCycle s(g, e.u);
        Bits allowed = all;
        allowed.reset(e.u);
        s.run(allowed, e.v);
        if (s.best >= 3) out.through_edge = s.best;
    }
    {  // exactly one endpoint: through u avoiding v, and vice versa
        int best = -1;
        for (auto [a, b] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
            detail_cyc::LongestCycle s(g, a);
            s.best = best;
            Bits allowed = all;
            allowed.reset(a);
            allowed.reset(b);
            s.run(allowed);
            if (!s.witness.empty()) best = std::max(best, s.best);
        }
        if (best >= 3) out.one_endpoint = best;
    }
    {  // both endpoints, edge itself removed
        BitGraph cut = g;
        cut.remove_edge(e.u, e.v);
        Bits req;
        req.set(e.v);
        detail_cyc::LongestCycle s(cut, e.u, req);
        Bits allowed = all;
        allowed.reset(e.u);
        s.run(allowed);
        if (s.best >= 3) out.both_avoid_edge = s.best;
    }
    out.two_disjoint = max_disjoint_cycle_pair(graph, e.u, e.v);
    return out;
}

// ---------------------------------------------------------------------------
// Matchings and dominating cycles.

struct Matching {
    std::vector<Edge> edges;

    bool valid_in(const Graph& g) const {
        std::vector<char> used(static_cast<size_t>(g.vertex_count()), 0);
        for (const Edge& e : edges) {
            if (!g.has_edge(e.u, e.v)) return false;
            if (used[static_cast<size_t>(e.u)] || used[static_cast<size_t>(e.v)]) return false;
            used[static_cast<size_t>(e.u)] = used[static_cast<size_t>(e.v)] = 1;
        }
        return true;
    }
};

/// Every edge of g has at least one endpoint on the cycle.
inline bool is_dominating(const Graph& g, const Cycle& c) {
    std::vector<char> on(static_cast<size_t>(g.vertex_count()), 0);
    for (int v : c.vertices) on[static_cast<size_t>(v)] = 1;
    for (const Edge& e : g.edges())
        if (!on[static_cast<size_t>(e.u)] && !on[static_cast<size_t>(e.v)]) return false;
    return true;
}

namespace detail_cyc {

struct DominatingSearch {
    const BitGraph& g;
    const std::vector<Edge>& graph_edges;
    int root;
    std::array<int, Bits::kCapacity> partner;  // matched partner or -1
    Bits match_used;                           // vertices whose matching edge is already on the path
    int forced_total = 0;
    int forced_used = 0;

    std::vector<int> path;
    Bits visited;
    std::vector<int> result;

    DominatingSearch(const BitGraph& graph, const std::vector<Edge>& edges, int root_vertex)
        : g(graph), graph_edges(edges), root(root_vertex) {
        partner.fill(-1);
    }

    bool dominated_by(const Bits& support) const {
        for (const Edge& e : graph_edges)
            if (!support.test(e.u) && !support.test(e.v)) return false;
        return true;
    }

    bool extend(int head, Bits avail) {
        Bits survivors = degree_filter(g, avail, head, root);
        Bits avail2 = survivors;
        avail2.reset(head);
        avail2.reset(root);
        Bits reach = g.reachable(head, avail2);
        if (!(reach & g.row(root)).any()) return false;
        if (!dominated_by(visited | avail2)) return false;

        bool head_forced = partner[static_cast<size_t>(head)] >= 0 && !match_used.test(head);
        // every not-yet-used matching edge must still be traversable
        for (int v = 0; v < g.n; ++v) {
            int p = partner[static_cast<size_t>(v)];
            if (p < 0 || p < v || match_used.test(v)) continue;
            if (v == head || p == head) continue;  // handled by the forced move
            if (!reach.test(v) || !reach.test(p)) return false;
        }

        if (!head_forced && g.row(head).test(root) && visited.count() >= 3 && forced_used == forced_total) {
            Cycle candidate{path};
            if (dominated_by(visited)) {
                result = path;
                return true;
            }
        }

        if (head_forced) {
            int w = partner[static_cast<size_t>(head)];
            if (!avail2.test(w)) return false;
            match_used.set(head);
            match_used.set(w);
            ++forced_used;
            visited.set(w);
            path.push_back(w);
            bool found = extend(w, avail2.minus(visited));
            path.pop_back();
            visited.reset(w);
            --forced_used;
            match_used.reset(head);
            match_used.reset(w);
            return found;
        }

        Bits moves = g.row(head) & avail2;
        for (int w = moves.pop(); w != -1; w = moves.pop()) {
            // entering a matched vertex whose partner is already gone is dead
            int p = partner[static_cast<size_t>(w)];
            if (p >= 0 && !match_used.test(w) && !avail2.test(p)) continue;
            visited.set(w);
            path.push_back(w);
            bool found = extend(w, avail2.minus(visited));
            path.pop_back();
            visited.reset(w);
            if (found) return true;
        }
        return false;
    }
};

}  // namespace detail_cyc

/// A dominating cycle containing every edge of the matching, or nullopt after
/// exhaustive search.
inline std::optional<Cycle> dominating_cycle_containing(const Graph& graph, const Matching& m) {
    require_cubic(graph, "dominating_cycle_containing");
    if (!m.valid_in(graph)) throw error("dominating_cycle_containing: not a matching of the graph");
    BitGraph g(graph);
    const std::vector<Edge> edges = graph.edges();
    Bits all = Bits::all_below(g.n);

    if (!m.edges.empty()) {
        int root = m.edges.front().u;
        detail_cyc::DominatingSearch search(g, edges, root);
        for (const Edge& e : m.edges) {
            search.partner[static_cast<size_t>(e.u)] = e.v;
            search.partner[static_cast<size_t>(e.v)] = e.u;
        }
        search.forced_total = static_cast<int>(m.edges.size());
        int y = m.edges.front().v;
        search.path = {root, y};
        search.visited = Bits{};
        search.visited.set(root);
        search.visited.set(y);
        search.match_used.set(root);
        search.match_used.set(y);
        search.forced_used = 1;
        Bits avail = all.minus(search.visited);
        if (search.extend(y, avail)) return Cycle{search.result};
        return std::nullopt;
    }

    // empty matching: plain dominating-cycle existence; root over the cycle's
    // minimum vertex
    for (int r = 0; r + 2 < g.n; ++r) {
        detail_cyc::DominatingSearch search(g, edges, r);
        search.path = {r};
        search.visited = Bits{};
        search.visited.set(r);
        Bits allowed = all.minus(Bits::all_below(r + 1));
        if (search.extend(r, allowed)) return Cycle{search.result};
    }
    return std::nullopt;
}

/// All matchings of size k, lexicographic over sorted edge-id tuples.
template <typename F>
void enumerate_matchings(const Graph& g, int k, F&& emit) {
    const std::vector<Edge> edges = g.edges();
    const int m = static_cast<int>(edges.size());
    std::vector<Edge> current;
    std::vector<char> used(static_cast<size_t>(g.vertex_count()), 0);
    auto rec = [&](auto&& self, int from) -> void {
        if (static_cast<int>(current.size()) == k) {
            emit(Matching{current});
            return;
        }
        int need = k - static_cast<int>(current.size());
        for (int i = from; i <= m - need; ++i) {
            const Edge& e = edges[static_cast<size_t>(i)];
            if (used[static_cast<size_t>(e.u)] || used[static_cast<size_t>(e.v)]) continue;
            used[static_cast<size_t>(e.u)] = used[static_cast<size_t>(e.v)] = 1;
            current.push_back(e);
            self(self, i + 1);
            current.pop_back();
            used[static_cast<size_t>(e.u)] = used[static_cast<size_t>(e.v)] = 0;
        }
    };
    rec(rec, 0);
}

struct MatchingSurvey {
    int matching_size = 0;
    long long matchings_checked = 0;
    std::vector<Matching> failing;  // matchings with no dominating cycle containing them
};

/// For every matching of size k: does a dominating cycle through it exist?
/// Restartable by matching index; max_count < 0 means run to the end.
inline MatchingSurvey matching_survey(const Graph& g, int k, long long start_index = 0, long long max_count = -1) {
    require_cubic(g, "matching_survey");
    MatchingSurvey out;
    out.matching_size = k;
    long long index = -1;
    enumerate_matchings(g, k, [&](const Matching& m) {
        ++index;
        if (index < start_index) return;
        if (max_count >= 0 && out.matchings_checked >= max_count) return;
        ++out.matchings_checked;
        if (!dominating_cycle_containing(g, m)) out.failing.push_back(m);
    });
    return out;
}

// ---------------------------------------------------------------------------
// Full enumeration.

/// Every cycle exactly once, in canonical form (starts at its minimum vertex,
/// lexicographically smaller orientation). Intended for n <= ~30.
template <typename F>
void enumerate_cycles(const Graph& graph, F&& emit) {
    BitGraph g(graph);
    Bits all = Bits::all_below(g.n);
    for (int r = 0; r + 2 < g.n; ++r) {
        Bits allowed = all.minus(Bits::all_below(r + 1));
        detail_cyc::enumerate_through_root(g, r, allowed, [&](const std::vector<int>& path) { emit(Cycle{path}); });
    }
}

inline std::vector<Cycle> all_cycles(const Graph& g) {
    std::vector<Cycle> out;
    enumerate_cycles(g, [&](const Cycle& c) { out.push_back(c); });
    return out;
}

inline long long count_cycles(const Graph& g) {
    long long n = 0;
    enumerate_cycles(g, [&](const Cycle&) { ++n; });
    return n;
}

}  // namespace cubic
