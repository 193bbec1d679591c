#pragma once

#include <optional>
#include <vector>

#include "cubic/graph.hpp"

// 2-factor enumeration and oddness. In a cubic graph the 2-factors are
// exactly the complements of perfect matchings, so everything runs over a
// branch-and-bound enumeration of perfect matchings.

namespace cubic {

/// Vertex-disjoint cycles covering every vertex.
struct TwoFactor {
    std::vector<Cycle> cycles;

    int odd_cycle_count() const {
        int odd = 0;
        for (const Cycle& c : cycles) odd += c.length() % 2;
        return odd;
    }

    bool valid_in(const Graph& g) const {
        std::vector<char> seen(static_cast<size_t>(g.vertex_count()), 0);
        int covered = 0;
        for (const Cycle& c : cycles) {
            if (!c.valid_in(g)) return false;
            for (int v : c.vertices) {
                if (seen[static_cast<size_t>(v)]) return false;
                seen[static_cast<size_t>(v)] = 1;
                ++covered;
            }
        }
        return covered == g.vertex_count();
    }
};

/// All perfect matchings, branching on the lowest-id uncovered vertex.
/// Deterministic order: at each step the candidate edges are tried with the
/// neighbour ids ascending.
template <typename F>
void enumerate_perfect_matchings(const Graph& g, F&& emit) {
    const int n = g.vertex_count();
    if (n % 2 != 0) return;
    std::vector<Edge> matching;
    std::vector<char> covered(static_cast<size_t>(n), 0);
    int num_covered = 0;
    auto rec = [&](auto&& self) -> void {
        if (num_covered == n) {
            emit(std::span<const Edge>(matching));
            return;
        }
        int v = 0;
        while (covered[static_cast<size_t>(v)]) ++v;
        for (int w : g.neighbors(v)) {
            if (covered[static_cast<size_t>(w)]) continue;
            covered[static_cast<size_t>(v)] = covered[static_cast<size_t>(w)] = 1;
            num_covered += 2;
            matching.push_back(Edge(v, w));
            self(self);
            matching.pop_back();
            num_covered -= 2;
            covered[static_cast<size_t>(v)] = covered[static_cast<size_t>(w)] = 0;
        }
    };
    rec(rec);
}

inline long long count_perfect_matchings(const Graph& g) {
    long long n = 0;
    enumerate_perfect_matchings(g, [&](std::span<const Edge>) { ++n; });
    return n;
}

/// The 2-factor complementary to a perfect matching of a cubic graph.
inline TwoFactor two_factor_complement(const Graph& g, std::span<const Edge> matching) {
    const int n = g.vertex_count();
    std::vector<int> partner(static_cast<size_t>(n), -1);
    std::vector<char> seen(static_cast<size_t>(n), 0);
    for (const Edge& e : matching) {
        partner[static_cast<size_t>(e.u)] = e.v;
        partner[static_cast<size_t>(e.v)] = e.u;
    }
    TwoFactor tf;
    for (int start = 0; start < n; ++start) {
        if (seen[static_cast<size_t>(start)]) continue;
        std::vector<int> cyc{start};
        seen[static_cast<size_t>(start)] = 1;
        int prev = -1, cur = start;
        while (true) {
            int next = -1;
            for (int w : g.neighbors(cur))
                if (w != prev && partner[static_cast<size_t>(cur)] != w) {
                    next = w;
                    break;
                }
            if (next == -1 || next == start) break;
            cyc.push_back(next);
            seen[static_cast<size_t>(next)] = 1;
            prev = cur;
            cur = next;
        }
        tf.cycles.push_back(Cycle{std::move(cyc)});
    }
    return tf;
}

/// Every 2-factor of a cubic graph exactly once (empty if none).
template <typename F>
void enumerate_two_factors(const Graph& g, F&& emit) {
    require_cubic(g, "enumerate_two_factors");
    enumerate_perfect_matchings(g, [&](std::span<const Edge> pm) { emit(two_factor_complement(g, pm)); });
}

struct OddnessReport {
    std::optional<int> oddness;        // nullopt: no 2-factor at all
    std::optional<TwoFactor> witness;  // a 2-factor attaining the oddness
    long long two_factor_count = 0;
    std::optional<int> forced_odd_avoiding_e;  // q(g,e) when an edge was supplied
};

/// Minimum number of odd cycles over all 2-factors.
inline OddnessReport oddness(const Graph& g) {
    OddnessReport out;
    enumerate_two_factors(g, [&](const TwoFactor& tf) {
        ++out.two_factor_count;
        int odd = tf.odd_cycle_count();
        if (!out.oddness || odd < *out.oddness) {
            out.oddness = odd;
            out.witness = tf;
        }
    });
    return out;
}

/// q(g,e): minimum over 2-factors of the number of odd cycles that contain
/// neither endpoint of e. Errors when g has no 2-factor.
inline int forced_odd_count(const Graph& g, Edge e);

/// Oddness report with q(g,e) filled in.
inline OddnessReport oddness(const Graph& g, Edge e) {
    OddnessReport out = oddness(g);
    if (out.oddness) out.forced_odd_avoiding_e = forced_odd_count(g, e);
    return out;
}

inline int forced_odd_count(const Graph& g, Edge e) {
    if (!g.has_edge(e.u, e.v)) throw error("forced_odd_count: not an edge of the graph");
    std::optional<int> best;
    enumerate_two_factors(g, [&](const TwoFactor& tf) {
        int q = 0;
        for (const Cycle& c : tf.cycles) {
            if (c.length() % 2 == 0) continue;
            bool touches = false;
            for (int v : c.vertices)
                if (v == e.u || v == e.v) {
                    touches = true;
                    break;
                }
            if (!touches) ++q;
        }
        if (!best || q < *best) best = q;
    });
    if (!best) throw error("forced_odd_count: graph has no 2-factor");
    return *best;
}

}  // namespace cubic
