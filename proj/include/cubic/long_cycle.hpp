#pragma once

#include <array>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "cubic/bits.hpp"
#include "cubic/cycles.hpp"
#include "cubic/graph.hpp"
#include "cubic/substitution.hpp"

// Constructs a long cycle in a substitution G = S(H,F,e): pick an Eulerian
// subgraph T of F, find an Eulerian trail of T compatible with the
// transitions that are realizable by vertex-disjoint paths inside each
// block, and splice the block paths along the trail into a verified cycle
// of G.

namespace cubic {

enum class SubgraphMode {
    full,         // T = F itself (all degrees 4)
    hamiltonian,  // T = a Hamiltonian cycle of F (all degrees 2)
};

namespace detail_lc {

/// Longest simple path between two fixed endpoints, branch-and-bound with
/// reachability and degree-availability pruning.
struct LongestPath {
    const BitGraph& g;
    int target;
    int best = -1;
    std::vector<int> witness;
    bool first_only = false;  // stop at the first path found

    std::vector<int> path;
    Bits visited;

    LongestPath(const BitGraph& graph, int target_vertex) : g(graph), target(target_vertex) {}

    void run(int start, Bits allowed) {
        path = {start};
        visited = Bits{};
        visited.set(start);
        extend(start, allowed.minus(visited));
    }

    bool done() const { return first_only && best >= 0; }

    void extend(int head, Bits avail) {
        if (head == target) {
            if (visited.count() > best) {
                best = visited.count();
                witness = path;
            }
            return;  // the path ends at the target
        }
        if (done()) return;
        Bits survivors = detail_cyc::degree_filter(g, avail.minus(Bits{}), head, target);
        Bits avail2 = survivors;
        avail2.reset(head);
        Bits reach = g.reachable(head, avail2);  // avail2 still contains target
        if (!reach.test(target)) return;
        if (!first_only && visited.count() + reach.count() - 1 <= best) return;
        Bits moves = g.row(head) & avail2;
        for (int w = moves.pop(); w != -1; w = moves.pop()) {
            visited.set(w);
            path.push_back(w);
            extend(w, avail2.minus(visited));
            path.pop_back();
            visited.reset(w);
            if (done()) return;
        }
    }
};

}  // namespace detail_lc

/// Exact longest path between two vertices (vertex count maximised); errors
/// when no path exists.
inline std::vector<int> longest_path_between(const Graph& block, int u1, int u2) {
    if (u1 == u2) throw error("longest_path_between: endpoints must differ");
    BitGraph g(block);
    detail_lc::LongestPath search(g, u2);
    Bits allowed = Bits::all_below(g.n);
    allowed.reset(u1);
    search.run(u1, allowed);
    if (search.best < 0) throw error("longest_path_between: endpoints are disconnected");
    return search.witness;
}

struct PathPair {
    std::vector<int> first;   // s1 .. t1
    std::vector<int> second;  // s2 .. t2
    int total_vertices = 0;
};

/// Two vertex-disjoint paths s1->t1 and s2->t2 maximising total vertex count
/// (exhaustive when the graph has at most `exhaustive_cap` vertices,
/// otherwise first feasible pair plus greedy detour lengthening); nullopt if
/// infeasible.
inline std::optional<PathPair> two_disjoint_paths(const Graph& block, int s1, int t1, int s2, int t2,
                                                  int exhaustive_cap = 26) {
    {
        std::array<int, 4> ends{s1, t1, s2, t2};
        for (size_t i = 0; i < 4; ++i)
            for (size_t j = i + 1; j < 4; ++j)
                if (ends[i] == ends[j]) throw error("two_disjoint_paths: endpoints must be distinct");
    }
    BitGraph g(block);
    const bool exhaustive = g.n <= exhaustive_cap;
    Bits all = Bits::all_below(g.n);

    int best = -1;
    PathPair result;
    std::vector<int> path1{s1};
    Bits used1;
    used1.set(s1);

    auto search_second = [&](bool stop_first) {
        detail_lc::LongestPath second(g, t2);
        second.first_only = stop_first;
        Bits allowed = all.minus(used1);
        allowed.reset(s2);
        second.run(s2, allowed);
        if (second.best >= 0) {
            int total = static_cast<int>(path1.size()) + second.best;
            if (total > best) {
                best = total;
                result = {path1, second.witness, total};
            }
        }
    };

    auto rec = [&](auto&& self, int head) -> bool {
        if (head == t1) {
            search_second(!exhaustive);
            return !exhaustive && best >= 0;
        }
        if (exhaustive) {
            Bits avail = all.minus(used1);
            avail.reset(s2);
            avail.reset(t2);
            Bits reach = g.reachable(head, avail);
            if (!reach.test(t1)) return false;
            // loose bound: everything not yet on the first path could still count
            if (static_cast<int>(path1.size()) + g.n - used1.count() <= best) return false;
        }
        Bits moves = g.row(head) & all.minus(used1);
        moves.reset(s2);
        moves.reset(t2);
        if (g.row(head).test(t1)) moves.set(t1);
        for (int w = moves.pop(); w != -1; w = moves.pop()) {
            used1.set(w);
            path1.push_back(w);
            bool stop = self(self, w);
            path1.pop_back();
            used1.reset(w);
            if (stop) return true;
        }
        return false;
    };
    rec(rec, s1);

    if (best < 0) return std::nullopt;

    if (!exhaustive) {
        // greedy detour lengthening: insert an unused common neighbour
        // between consecutive path vertices until none fits
        Bits used;
        for (int v : result.first) used.set(v);
        for (int v : result.second) used.set(v);
        bool grew = true;
        while (grew) {
            grew = false;
            for (std::vector<int>* path : {&result.first, &result.second}) {
                for (size_t i = 0; i + 1 < path->size(); ++i) {
                    Bits cands = g.row((*path)[i]) & g.row((*path)[i + 1]);
                    cands &= ~used & Bits::all_below(g.n);
                    int w = cands.first();
                    if (w != -1) {
                        path->insert(path->begin() + static_cast<long>(i) + 1, w);
                        used.set(w);
                        grew = true;
                    }
                }
            }
        }
        result.total_vertices = static_cast<int>(result.first.size() + result.second.size());
    }
    return result;
}

// ---------------------------------------------------------------------------
// Eulerian subgraph selection.

/// Edge ids of f forming a connected spanning subgraph with even degrees.
/// `full` returns f itself; `hamiltonian` searches for a Hamiltonian cycle of
/// f (errors when none exists).
inline std::vector<int> spanning_eulerian_subgraph(const MultiGraph& f, SubgraphMode mode) {
    if (!f.is_regular(4)) throw error("spanning_eulerian_subgraph: frame is not 4-regular");
    if (!f.connected()) throw error("spanning_eulerian_subgraph: frame is not connected");
    if (mode == SubgraphMode::full) {
        std::vector<int> ids(static_cast<size_t>(f.edge_count()));
        for (int i = 0; i < f.edge_count(); ++i) ids[static_cast<size_t>(i)] = i;
        return ids;
    }
    // Hamiltonian cycle in a multigraph; for n = 2 this is a pair of
    // parallel edges
    const int n = f.vertex_count();
    std::vector<std::vector<std::pair<int, int>>> inc(static_cast<size_t>(n));  // (edge id, other end)
    for (int id = 0; id < f.edge_count(); ++id) {
        const Edge& e = f.edge(id);
        inc[static_cast<size_t>(e.u)].push_back({id, e.v});
        inc[static_cast<size_t>(e.v)].push_back({id, e.u});
    }
    std::vector<int> chosen;
    std::vector<char> on(static_cast<size_t>(n), 0);
    on[0] = 1;
    auto rec = [&](auto&& self, int cur, int count) -> bool {
        for (const auto& [id, to] : inc[static_cast<size_t>(cur)]) {
            if (count == n) {
                if (to == 0 && (n > 2 || id != chosen.front())) {
                    chosen.push_back(id);
                    return true;
                }
                continue;
            }
            if (on[static_cast<size_t>(to)]) continue;
            on[static_cast<size_t>(to)] = 1;
            chosen.push_back(id);
            if (self(self, to, count + 1)) return true;
            chosen.pop_back();
            on[static_cast<size_t>(to)] = 0;
        }
        return false;
    };
    if (!rec(rec, 0, 1)) throw error("spanning_eulerian_subgraph: frame has no hamiltonian cycle");
    return chosen;
}

// ---------------------------------------------------------------------------
// Transition system.

/// One allowed pairing at a degree-4 vertex of T: a partition of its four
/// incident T-edge ids into two transition pairs, each realized by one of a
/// pair of vertex-disjoint block paths (stored as G vertices).
struct TransitionPairing {
    std::array<std::array<int, 2>, 2> pairs;  // normalised: each pair ascending, pairs sorted
    std::array<std::vector<int>, 2> paths;    // paths[i] joins the slots of pairs[i]
    int total_vertices = 0;
};

struct VertexTransitions {
    int degree = 0;               // degree in T (0, 2 or 4)
    std::vector<int> incident;    // T-edge ids, ascending
    std::vector<TransitionPairing> pairings;  // degree 4
    std::vector<int> single_path;             // degree 2 (G vertices)
};

using TransitionSystem = std::vector<VertexTransitions>;  // by F-vertex

namespace detail_lc {

inline std::array<std::array<int, 2>, 2> normalise_partition(int a, int b, int c, int d) {
    std::array<int, 2> p{std::min(a, b), std::max(a, b)};
    std::array<int, 2> q{std::min(c, d), std::max(c, d)};
    if (q < p) std::swap(p, q);
    return {p, q};
}

}  // namespace detail_lc

/// Builds the per-block transition system over a validated substitution:
/// each candidate pairing is kept iff vertex-disjoint block paths realize
/// its two transitions simultaneously.
inline TransitionSystem build_transition_system(const Graph& g, const BlockMap& bm, const MultiGraph& f,
                                                std::span<const int> t_edges, int exhaustive_cap = 26) {
    TransitionSystem ts(static_cast<size_t>(f.vertex_count()));
    for (int id : t_edges) {
        const Edge& e = f.edge(id);
        ts[static_cast<size_t>(e.u)].incident.push_back(id);
        ts[static_cast<size_t>(e.v)].incident.push_back(id);
    }
    for (int b = 0; b < f.vertex_count(); ++b) {
        VertexTransitions& vt = ts[static_cast<size_t>(b)];
        std::sort(vt.incident.begin(), vt.incident.end());
        vt.degree = static_cast<int>(vt.incident.size());
        if (vt.degree != 2 && vt.degree != 4)
            throw error("transition system: T-degree at vertex " + std::to_string(b) + " is " +
                        std::to_string(vt.degree) + ", expected 2 or 4");

        auto [lo, hi] = bm.block_range(b);
        std::vector<int> members(static_cast<size_t>(bm.block_size));
        for (int v = lo; v < hi; ++v) members[static_cast<size_t>(v - lo)] = v;
        auto [block, old_of] = g.induced(members);
        auto slot = [&](int edge_id) {
            int v = bm.attachment_vertex(b, edge_id);
            if (v < 0) throw error("transition system: block map lacks attachment for F-edge " + std::to_string(edge_id));
            return v - lo;
        };

        if (vt.degree == 2) {
            std::vector<int> local = longest_path_between(block, slot(vt.incident[0]), slot(vt.incident[1]));
            for (int v : local) vt.single_path.push_back(v + lo);
            continue;
        }

        const std::array<std::array<int, 4>, 3> combos{{{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}}};
        for (const auto& co : combos) {
            int e1 = vt.incident[static_cast<size_t>(co[0])], e2 = vt.incident[static_cast<size_t>(co[1])];
            int e3 = vt.incident[static_cast<size_t>(co[2])], e4 = vt.incident[static_cast<size_t>(co[3])];
            auto pair_paths = two_disjoint_paths(block, slot(e1), slot(e2), slot(e3), slot(e4), exhaustive_cap);
            if (!pair_paths) continue;
            TransitionPairing tp;
            tp.pairs = detail_lc::normalise_partition(e1, e2, e3, e4);
            // normalisation keeps (e1,e2) first iff min(e1,e2) < min(e3,e4);
            // combos are generated so that e1 = incident[0] is in the first pair
            tp.paths[0].reserve(pair_paths->first.size());
            for (int v : pair_paths->first) tp.paths[0].push_back(v + lo);
            for (int v : pair_paths->second) tp.paths[1].push_back(v + lo);
            tp.total_vertices = pair_paths->total_vertices;
            vt.pairings.push_back(tp);
        }
        if (vt.pairings.empty())
            throw error("transition system: no realizable transition pairing at block " + std::to_string(b));
    }
    return ts;
}

// ---------------------------------------------------------------------------
// Compatible Eulerian trail.

struct EulerianTrail {
    std::vector<int> edges;  // T-edge ids in traversal order
    int start = 0;           // the walk begins and ends here; with parallel
                             // edges the ids alone do not pin this down
};

/// A closed Eulerian trail of T whose transition pairs at every degree-4
/// vertex form an allowed pairing. Backtracking over trail extensions in
/// ascending edge-id order; errors when no compatible trail exists.
inline EulerianTrail compatible_eulerian_trail(const MultiGraph& f, std::span<const int> t_edges,
                                               const TransitionSystem& ts) {
    const int n = f.vertex_count();
    std::vector<std::vector<std::pair<int, int>>> inc(static_cast<size_t>(n));
    for (int id : t_edges) {
        const Edge& e = f.edge(id);
        inc[static_cast<size_t>(e.u)].push_back({id, e.v});
        inc[static_cast<size_t>(e.v)].push_back({id, e.u});
    }
    for (auto& lst : inc) std::sort(lst.begin(), lst.end());

    int start = -1;
    for (int v = 0; v < n; ++v)
        if (!inc[static_cast<size_t>(v)].empty()) {
            start = v;
            break;
        }
    if (start == -1) throw error("compatible_eulerian_trail: empty subgraph");

    const size_t m = t_edges.size();
    std::vector<char> used(static_cast<size_t>(f.edge_count()), 0);
    std::vector<std::optional<std::array<int, 2>>> first_pair(static_cast<size_t>(n));
    std::vector<int> trail;
    trail.reserve(m);

    auto partition_allowed = [&](int v, int a, int b) {
        const VertexTransitions& vt = ts[static_cast<size_t>(v)];
        if (vt.degree == 2) return true;
        std::array<int, 2> rest{};
        int at = 0;
        for (int id : vt.incident)
            if (id != a && id != b) rest[static_cast<size_t>(at++)] = id;
        auto part = detail_lc::normalise_partition(a, b, rest[0], rest[1]);
        for (const TransitionPairing& tp : vt.pairings)
            if (tp.pairs == part) return true;
        return false;
    };

    auto rec = [&](auto&& self, int cur, int arrived) -> bool {
        if (trail.size() == m) {
            if (cur != start) return false;
            // wrap transition {last edge, first edge} at the start vertex
            const VertexTransitions& vt = ts[static_cast<size_t>(cur)];
            if (vt.degree == 2) return true;
            return partition_allowed(cur, arrived, trail.front());
        }
        for (const auto& [id, to] : inc[static_cast<size_t>(cur)]) {
            if (used[static_cast<size_t>(id)]) continue;
            bool tentative = false;
            if (arrived >= 0 && ts[static_cast<size_t>(cur)].degree == 4) {
                // a degree-4 transition determines the whole partition, so it
                // is checked (and pinned) on first passage
                if (first_pair[static_cast<size_t>(cur)]) {
                    // second passage: the remaining two edges are forced and
                    // were validated when the first pair was pinned
                } else {
                    if (!partition_allowed(cur, arrived, id)) continue;
                    first_pair[static_cast<size_t>(cur)] = {std::min(arrived, id), std::max(arrived, id)};
                    tentative = true;
                }
            }
            used[static_cast<size_t>(id)] = 1;
            trail.push_back(id);
            if (self(self, to, id)) return true;
            trail.pop_back();
            used[static_cast<size_t>(id)] = 0;
            if (tentative) first_pair[static_cast<size_t>(cur)].reset();
        }
        return false;
    };

    if (!rec(rec, start, -1)) throw error("compatible_eulerian_trail: no compatible trail");
    return {trail, start};
}

// ---------------------------------------------------------------------------
// Assembly.

struct ConstructedCycle {
    Cycle cycle;                                   // verified cycle of G
    std::vector<int> trail;                        // Eulerian trail of T (F-edge ids)
    std::vector<std::vector<std::vector<int>>> per_block_paths;  // block -> paths used
    int length = 0;
};

/// Runs the whole pipeline over a validated substitution and returns a
/// verified cycle whose block contraction equals the Eulerian trail
/// edge-for-edge. The length is a certified lower bound on circ(G).
inline ConstructedCycle construct_long_cycle(const Graph& g, const BlockMap& bm, const MultiGraph& f,
                                             SubgraphMode mode = SubgraphMode::full, int exhaustive_cap = 26) {
    std::vector<int> t_edges = spanning_eulerian_subgraph(f, mode);
    TransitionSystem ts = build_transition_system(g, bm, f, t_edges, exhaustive_cap);
    EulerianTrail et = compatible_eulerian_trail(f, t_edges, ts);
    const std::vector<int>& trail = et.edges;

    const size_t m = trail.size();
    std::vector<int> walk_vertices(m);  // walk_vertices[i] = vertex the walk leaves via trail[i]
    {
        int cur = et.start;
        for (size_t i = 0; i < m; ++i) {
            walk_vertices[i] = cur;
            const Edge& e = f.edge(trail[i]);
            if (e.u != cur && e.v != cur) throw error("construct_long_cycle: trail is not a closed walk");
            cur = e.u == cur ? e.v : e.u;
        }
        if (cur != et.start) throw error("construct_long_cycle: trail does not close up");
    }

    ConstructedCycle out;
    out.trail = trail;
    out.per_block_paths.resize(static_cast<size_t>(f.vertex_count()));

    std::vector<int> cycle_vertices;
    for (size_t i = 0; i < m; ++i) {
        int block = walk_vertices[i];
        int arrive = trail[(i + m - 1) % m];
        int depart = trail[i];
        const VertexTransitions& vt = ts[static_cast<size_t>(block)];
        std::vector<int> path;
        if (vt.degree == 2) {
            path = vt.single_path;
            if (path.front() != bm.attachment_vertex(block, arrive)) std::reverse(path.begin(), path.end());
        } else {
            std::array<int, 2> rest{};
            int at = 0;
            for (int id : vt.incident)
                if (id != arrive && id != depart) rest[static_cast<size_t>(at++)] = id;
            auto part = detail_lc::normalise_partition(arrive, depart, rest[0], rest[1]);
            const TransitionPairing* chosen = nullptr;
            for (const TransitionPairing& tp : vt.pairings)
                if (tp.pairs == part) {
                    chosen = &tp;
                    break;
                }
            if (!chosen) throw error("construct_long_cycle: trail used a transition with no realization");
            std::array<int, 2> key{std::min(arrive, depart), std::max(arrive, depart)};
            path = chosen->paths[chosen->pairs[0] == key ? 0 : 1];
            if (path.front() != bm.attachment_vertex(block, arrive)) std::reverse(path.begin(), path.end());
        }
        if (path.front() != bm.attachment_vertex(block, arrive) ||
            path.back() != bm.attachment_vertex(block, depart))
            throw error("construct_long_cycle: block path endpoints do not match trail transitions");
        out.per_block_paths[static_cast<size_t>(block)].push_back(path);
        cycle_vertices.insert(cycle_vertices.end(), path.begin(), path.end());
    }

    out.cycle = Cycle{cycle_vertices};
    out.length = out.cycle.length();

    // postconditions: a real cycle, contraction equals the trail, every
    // block visited, length adds up
    if (!out.cycle.valid_in(g)) throw error("construct_long_cycle: assembled sequence is not a cycle of G");
    {
        int total = 0;
        for (const auto& paths : out.per_block_paths) {
            if (paths.empty()) throw error("construct_long_cycle: a block was never visited");
            for (const auto& p : paths) total += static_cast<int>(p.size());
        }
        if (total != out.length) throw error("construct_long_cycle: length bookkeeping mismatch");
    }
    {
        // recompute the crossing sequence of the assembled cycle
        std::vector<int> crossings;
        const std::vector<int>& cv = cycle_vertices;
        for (size_t i = 0; i < cv.size(); ++i) {
            int a = cv[i], b = cv[(i + 1) % cv.size()];
            int ba = bm.block_of[static_cast<size_t>(a)], bb = bm.block_of[static_cast<size_t>(b)];
            if (ba == bb) continue;
            int found = -1;
            for (const auto& [v, id] : bm.attachments[static_cast<size_t>(ba)])
                if (v == a && bm.attachment_vertex(bb, id) == b) found = id;
            if (found == -1) throw error("construct_long_cycle: cycle crosses an untagged external edge");
            crossings.push_back(found);
        }
        if (crossings != trail) throw error("construct_long_cycle: contraction does not reproduce the trail");
    }
    return out;
}

}  // namespace cubic
