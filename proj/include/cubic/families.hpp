#pragma once

#include "cubic/graph.hpp"

// Named construction helpers for the small standard graphs the test and
// fixture tooling keeps reaching for.

namespace cubic {
namespace families {

inline Graph complete(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

inline Graph complete_bipartite(int a, int b) {
    Graph g(a + b);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
    return g;
}

inline Graph cycle(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

/// Two triangles 0-1-2 and 3-4-5 joined by the matching i ~ i+3.
inline Graph prism() {
    Graph g(6);
    for (int i : {0, 3}) {
        g.add_edge(i, i + 1);
        g.add_edge(i + 1, i + 2);
        g.add_edge(i, i + 2);
    }
    for (int i = 0; i < 3; ++i) g.add_edge(i, i + 3);
    return g;
}

/// Cycle on 2k vertices plus the k main diagonals.
inline Graph moebius_ladder(int two_k) {
    if (two_k < 4 || two_k % 2 != 0) throw error("moebius_ladder: order must be even and >= 4");
    Graph g = cycle(two_k);
    for (int i = 0; i < two_k / 2; ++i) g.add_edge(i, i + two_k / 2);
    return g;
}

inline Graph hypercube3() {
    Graph g(8);
    for (int i = 0; i < 8; ++i)
        for (int b : {1, 2, 4})
            if (i < (i ^ b)) g.add_edge(i, i ^ b);
    return g;
}

/// Outer 5-cycle 0..4, spokes i ~ i+5, inner pentagram step 2.
inline Graph petersen() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, i + 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    return g;
}

/// Isaacs flower snark J_k (k odd >= 5): k claws with centers 4i, leaf 4i+1
/// on a k-cycle, leaves 4i+2 and 4i+3 on one shared 2k-cycle.
inline Graph flower_snark(int k) {
    if (k < 5 || k % 2 == 0) throw error("flower_snark: k must be odd and >= 5");
    Graph g(4 * k);
    for (int i = 0; i < k; ++i) {
        int c = 4 * i;
        g.add_edge(c, c + 1);
        g.add_edge(c, c + 2);
        g.add_edge(c, c + 3);
        g.add_edge(c + 1, 4 * ((i + 1) % k) + 1);
    }
    std::vector<int> ring;
    for (int i = 0; i < k; ++i) ring.push_back(4 * i + 2);
    for (int i = 0; i < k; ++i) ring.push_back(4 * i + 3);
    for (size_t i = 0; i < ring.size(); ++i)
        g.add_edge(ring[i], ring[(i + 1) % ring.size()]);
    return g;
}

/// Petersen with vertex 0 expanded into a triangle {0,10,11}.
inline Graph tietze() {
    Graph g(12);
    Graph p = petersen();
    for (const Edge& e : p.edges())
        if (e.u != 0) g.add_edge(e.u, e.v);
    g.add_edge(0, 10);
    g.add_edge(0, 11);
    g.add_edge(10, 11);
    g.add_edge(0, 1);   // 0's old neighbours 1, 4, 5 split over the triangle
    g.add_edge(10, 4);
    g.add_edge(11, 5);
    return g;
}

/// Point-line incidence graph of the Fano plane; girth 6.
inline Graph heawood() {
    Graph g(14);
    for (int i = 0; i < 14; ++i) g.add_edge(i, (i + 1) % 14);
    for (auto [u, v] : {std::pair{0, 5}, {2, 7}, {4, 9}, {6, 11}, {8, 13}, {10, 1}, {12, 3}}) g.add_edge(u, v);
    return g;
}

/// The 4-regular frame on two vertices: four parallel edges.
inline MultiGraph double_edge_frame() {
    MultiGraph f(2);
    for (int i = 0; i < 4; ++i) f.add_edge(0, 1);
    return f;
}

inline MultiGraph complete_multigraph(int n) {
    MultiGraph f(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) f.add_edge(i, j);
    return f;
}

}  // namespace families
}  // namespace cubic
