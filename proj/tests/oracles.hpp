#pragma once

// Independent reference implementations used only by tests. Everything here
// is written the plain way (adjacency lists, recursion, no bit tricks) so a
// defect in the library's search engines cannot hide in a shared helper.

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "cubic/graph.hpp"

namespace oracle {

// ---------------------------------------------------------------------------
// graph6 / sparse6 encoders, written independently of cubic/graph6.hpp.

inline void push_order(std::string& out, int n) {
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
}

inline std::string encode_graph6(int n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (auto [u, v] : edges) adj[u][v] = adj[v][u] = true;
    std::string out;
    push_order(out, n);
    std::vector<int> bits;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) bits.push_back(adj[i][j] ? 1 : 0);
    while (bits.size() % 6) bits.push_back(0);
    for (size_t k = 0; k < bits.size(); k += 6) {
        int val = 0;
        for (size_t t = k; t < k + 6; ++t) val = (val << 1) | bits[t];
        out.push_back(static_cast<char>(val + 63));
    }
    return out;
}

inline std::string encode_sparse6(int n, std::vector<std::pair<int, int>> edges) {
    int k = 1;
    while ((1 << k) < n) ++k;
    std::vector<int> bits;
    auto enc = [&](int x) {
        for (int i = k - 1; i >= 0; --i) bits.push_back((x >> i) & 1);
    };
    for (auto& e : edges)
        if (e.first < e.second) std::swap(e.first, e.second);  // (big, small)
    std::sort(edges.begin(), edges.end());
    int curv = 0;
    for (auto [v, u] : edges) {
        if (v == curv) {
            bits.push_back(0);
            enc(u);
        } else if (v == curv + 1) {
            ++curv;
            bits.push_back(1);
            enc(u);
        } else {
            curv = v;
            bits.push_back(1);
            enc(v);
            bits.push_back(0);
            enc(u);
        }
    }
    if (k < 6 && n == (1 << k) && (6 - bits.size() % 6) % 6 >= static_cast<size_t>(k) && curv < n - 1)
        bits.push_back(0);
    while (bits.size() % 6) bits.push_back(1);
    std::string out(":");
    push_order(out, n);
    for (size_t t = 0; t < bits.size(); t += 6) {
        int val = 0;
        for (size_t i = t; i < t + 6; ++i) val = (val << 1) | bits[i];
        out.push_back(static_cast<char>(val + 63));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Plain cycle enumeration: root at the minimum vertex, orientation fixed by
// second < last.

inline std::vector<std::vector<int>> all_cycles(const cubic::Graph& g) {
    int n = g.vertex_count();
    std::vector<std::vector<int>> cycles;
    std::vector<int> path;
    std::vector<char> on_path(n, 0);
    auto dfs = [&](auto&& self, int root, int u) -> void {
        for (int w : g.neighbors(u)) {
            if (w == root && path.size() >= 3 && path[1] < path.back()) {
                cycles.push_back(path);
            } else if (w > root && !on_path[w]) {
                on_path[w] = 1;
                path.push_back(w);
                self(self, root, w);
                path.pop_back();
                on_path[w] = 0;
            }
        }
    };
    for (int r = 0; r < n; ++r) {
        path = {r};
        on_path[r] = 1;
        dfs(dfs, r, r);
        on_path[r] = 0;
    }
    return cycles;
}

inline int shortest_cycle(const cubic::Graph& g) {  // -1 when acyclic
    auto cyc = oracle::all_cycles(g);
    int best = -1;
    for (const auto& c : cyc)
        if (best == -1 || static_cast<int>(c.size()) < best) best = static_cast<int>(c.size());
    return best;
}

inline int longest_cycle(const cubic::Graph& g) {  // -1 when acyclic
    auto cyc = oracle::all_cycles(g);
    int best = -1;
    for (const auto& c : cyc) best = std::max(best, static_cast<int>(c.size()));
    return best;
}

// Filtered enumeration maxima around an edge {x,y}: the independent route to
// the four constrained maxima. Returns -1 for an empty class.
struct EdgeMaxima {
    int through = -1, one_end = -1, both_avoid = -1, two_cycles = -1;
};

inline bool cycle_has_edge(const std::vector<int>& c, int x, int y) {
    size_t k = c.size();
    for (size_t i = 0; i < k; ++i) {
        int a = c[i], b = c[(i + 1) % k];
        if ((a == x && b == y) || (a == y && b == x)) return true;
    }
    return false;
}

inline EdgeMaxima edge_maxima(const cubic::Graph& g, int x, int y) {
    EdgeMaxima out;
    auto cycles = oracle::all_cycles(g);
    for (const auto& c : cycles) {
        bool has_x = std::find(c.begin(), c.end(), x) != c.end();
        bool has_y = std::find(c.begin(), c.end(), y) != c.end();
        int len = static_cast<int>(c.size());
        if (cycle_has_edge(c, x, y))
            out.through = std::max(out.through, len);
        else if (has_x && has_y)
            out.both_avoid = std::max(out.both_avoid, len);
        if (has_x != has_y) out.one_end = std::max(out.one_end, len);
    }
    for (size_t i = 0; i < cycles.size(); ++i)
        for (size_t j = 0; j < cycles.size(); ++j) {
            if (i == j) continue;
            const auto& c1 = cycles[i];
            const auto& c2 = cycles[j];
            if (std::find(c1.begin(), c1.end(), x) == c1.end()) continue;
            if (std::find(c2.begin(), c2.end(), y) == c2.end()) continue;
            bool disjoint = true;
            for (int v : c1)
                if (std::find(c2.begin(), c2.end(), v) != c2.end()) {
                    disjoint = false;
                    break;
                }
            if (disjoint)
                out.two_cycles = std::max(out.two_cycles, static_cast<int>(c1.size() + c2.size()));
        }
    return out;
}

// ---------------------------------------------------------------------------
// 3-edge-colorability by direct backtracking over the edge list in input
// order (no DFS ordering, no symmetry fixing).

inline bool three_edge_colorable(const cubic::Graph& g) {
    auto edges = g.edges();
    int m = static_cast<int>(edges.size());
    std::vector<int> color(m, 0);
    auto clashes = [&](int i, int c) {
        for (int j = 0; j < m; ++j) {
            if (j == i || color[j] != c) continue;
            if (edges[i].u == edges[j].u || edges[i].u == edges[j].v || edges[i].v == edges[j].u ||
                edges[i].v == edges[j].v)
                return true;
        }
        return false;
    };
    auto rec = [&](auto&& self, int i) -> bool {
        if (i == m) return true;
        for (int c = 1; c <= 3; ++c) {
            if (clashes(i, c)) continue;
            color[i] = c;
            if (self(self, i + 1)) return true;
            color[i] = 0;
        }
        return false;
    };
    return rec(rec, 0);
}

// ---------------------------------------------------------------------------
// Cyclic edge connectivity by brute force over all edge subsets of size
// 1..max_k.

inline bool cut_leaves_two_cyclic_parts(const cubic::Graph& g, const std::vector<cubic::Edge>& edges,
                                        const std::vector<int>& cut) {
    int n = g.vertex_count();
    std::set<int> removed(cut.begin(), cut.end());
    std::vector<std::vector<int>> adj(n);
    int kept = 0;
    for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
        if (removed.count(i)) continue;
        adj[edges[i].u].push_back(edges[i].v);
        adj[edges[i].v].push_back(edges[i].u);
        ++kept;
    }
    (void)kept;
    std::vector<int> comp(n, -1);
    int ncomp = 0;
    for (int s = 0; s < n; ++s) {
        if (comp[s] != -1) continue;
        std::vector<int> stack{s};
        comp[s] = ncomp;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : adj[u])
                if (comp[w] == -1) {
                    comp[w] = ncomp;
                    stack.push_back(w);
                }
        }
        ++ncomp;
    }
    std::vector<int> vcount(ncomp, 0), ecount(ncomp, 0);
    for (int v = 0; v < n; ++v) ++vcount[comp[v]];
    for (int i = 0; i < static_cast<int>(edges.size()); ++i)
        if (!removed.count(i)) ++ecount[comp[edges[i].u]];
    int cyclic = 0;
    for (int c = 0; c < ncomp; ++c)
        if (ecount[c] >= vcount[c]) ++cyclic;
    return cyclic >= 2;
}

/// -1 when no cyclic cut of size <= max_k exists.
inline int brute_cyclic_edge_connectivity(const cubic::Graph& g, int max_k) {
    auto edges = g.edges();
    int m = static_cast<int>(edges.size());
    for (int k = 1; k <= max_k; ++k) {
        std::vector<int> pick(k);
        auto rec = [&](auto&& self, int depth, int from) -> bool {
            if (depth == k) return cut_leaves_two_cyclic_parts(g, edges, pick);
            for (int i = from; i < m; ++i) {
                pick[depth] = i;
                if (self(self, depth + 1, i + 1)) return true;
            }
            return false;
        };
        if (rec(rec, 0, 0)) return k;
    }
    return -1;
}

// ---------------------------------------------------------------------------
// Perfect matching count by bitmask dynamic programming (independent of the
// branch-and-bound enumerator).

inline long long count_perfect_matchings_dp(const cubic::Graph& g) {
    int n = g.vertex_count();
    if (n > 24 || n % 2) return n % 2 ? 0 : -1;
    std::vector<long long> dp(static_cast<size_t>(1) << n, 0);
    dp[0] = 1;
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (!dp[mask]) continue;
        int v = 0;
        while (v < n && (mask >> v) & 1) ++v;
        if (v == n) continue;
        for (int w : g.neighbors(v))
            if (w > v && !((mask >> w) & 1)) dp[mask | (1u << v) | (1u << w)] += dp[mask];
    }
    return dp[(static_cast<size_t>(1) << n) - 1];
}

// ---------------------------------------------------------------------------
// Dominating cycles by filtering the full cycle list.

inline bool dominates(const cubic::Graph& g, const std::vector<int>& cycle) {
    std::vector<char> on(g.vertex_count(), 0);
    for (int v : cycle) on[v] = 1;
    for (const cubic::Edge& e : g.edges())
        if (!on[e.u] && !on[e.v]) return false;
    return true;
}

inline bool has_dominating_cycle_with_matching(const cubic::Graph& g,
                                               const std::vector<std::pair<int, int>>& matching) {
    for (const auto& c : oracle::all_cycles(g)) {
        bool ok = dominates(g, c);
        for (auto [x, y] : matching)
            if (!cycle_has_edge(c, x, y)) {
                ok = false;
                break;
            }
        if (ok) return true;
    }
    return false;
}

}  // namespace oracle
