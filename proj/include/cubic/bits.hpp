#pragma once

#include <array>
#include <bit>
#include <cstdint>

#include "cubic/graph.hpp"

namespace cubic {

/// Fixed-width vertex set, one bit per vertex. The search engines keep
/// adjacency as rows of these; 128 bits covers every graph this project
/// analyses (the largest constructed instances have 90 vertices).
struct Bits {
    static constexpr int kCapacity = 128;

    std::array<uint64_t, 2> w{0, 0};

    static Bits all_below(int n) {
        Bits b;
        if (n >= 64) {
            b.w[0] = ~0ull;
            b.w[1] = n >= 128 ? ~0ull : (n == 64 ? 0 : (1ull << (n - 64)) - 1);
        } else {
            b.w[0] = n == 64 ? ~0ull : (1ull << n) - 1;
        }
        return b;
    }

    void set(int i) { w[static_cast<size_t>(i >> 6)] |= 1ull << (i & 63); }
    void reset(int i) { w[static_cast<size_t>(i >> 6)] &= ~(1ull << (i & 63)); }
    bool test(int i) const { return (w[static_cast<size_t>(i >> 6)] >> (i & 63)) & 1; }

    int count() const { return std::popcount(w[0]) + std::popcount(w[1]); }
    bool any() const { return (w[0] | w[1]) != 0; }
    bool none() const { return !any(); }
    bool intersects(const Bits& o) const { return (w[0] & o.w[0]) || (w[1] & o.w[1]); }
    bool contains(const Bits& o) const { return (o.w[0] & ~w[0]) == 0 && (o.w[1] & ~w[1]) == 0; }

    Bits operator&(const Bits& o) const { return {{w[0] & o.w[0], w[1] & o.w[1]}}; }
    Bits operator|(const Bits& o) const { return {{w[0] | o.w[0], w[1] | o.w[1]}}; }
    Bits operator~() const { return {{~w[0], ~w[1]}}; }
    Bits& operator&=(const Bits& o) {
        w[0] &= o.w[0];
        w[1] &= o.w[1];
        return *this;
    }
    Bits& operator|=(const Bits& o) {
        w[0] |= o.w[0];
        w[1] |= o.w[1];
        return *this;
    }
    Bits minus(const Bits& o) const { return {{w[0] & ~o.w[0], w[1] & ~o.w[1]}}; }

    bool operator==(const Bits&) const = default;

    /// Index of the lowest set bit, -1 if empty.
    int first() const {
        if (w[0]) return std::countr_zero(w[0]);
        if (w[1]) return 64 + std::countr_zero(w[1]);
        return -1;
    }

    /// Removes and returns the lowest set bit.
    int pop() {
        int i = first();
        if (i >= 0) reset(i);
        return i;
    }
};

/// Adjacency-by-bit-rows view of a Graph for the exact search engines.
struct BitGraph {
    int n = 0;
    std::array<Bits, Bits::kCapacity> adj{};

    explicit BitGraph(const Graph& g) : n(g.vertex_count()) {
        if (n > Bits::kCapacity)
            throw error("search engine supports at most " + std::to_string(Bits::kCapacity) + " vertices, got " +
                        std::to_string(n));
        for (int u = 0; u < n; ++u)
            for (int v : g.neighbors(u)) adj[static_cast<size_t>(u)].set(v);
    }

    const Bits& row(int v) const { return adj[static_cast<size_t>(v)]; }

    void remove_edge(int u, int v) {
        adj[static_cast<size_t>(u)].reset(v);
        adj[static_cast<size_t>(v)].reset(u);
    }

    void remove_vertex(int v) {
        Bits nbrs = adj[static_cast<size_t>(v)];
        for (int u = nbrs.pop(); u != -1; u = nbrs.pop()) adj[static_cast<size_t>(u)].reset(v);
        adj[static_cast<size_t>(v)] = Bits{};
    }

    /// Union of adjacency rows over the set.
    Bits neighborhood(Bits set) const {
        Bits out;
        for (int v = set.pop(); v != -1; v = set.pop()) out |= adj[static_cast<size_t>(v)];
        return out;
    }

    /// Vertices reachable from `from` walking only inside `allowed`
    /// (`from` itself is included iff in `allowed` or start).
    Bits reachable(int from, const Bits& allowed) const {
        Bits seen;
        seen.set(from);
        Bits frontier = seen;
        while (frontier.any()) {
            Bits next = neighborhood(frontier) & allowed;
            next = next.minus(seen);
            seen |= next;
            frontier = next;
        }
        return seen;
    }
};

}  // namespace cubic
