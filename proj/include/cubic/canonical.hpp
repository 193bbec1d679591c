#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cubic/graph.hpp"

// Canonical labeling by iterated colour refinement plus individualization
// backtracking. The certificate is equal for two graphs iff they are
// isomorphic. Sized for small graphs of maximum degree 3; no automorphism
// pruning is attempted.

namespace cubic {

namespace detail_canon {

/// Stable colour refinement for graphs of max degree 3: colours refined by
/// the sorted neighbour-colour triple until the partition stops splitting.
/// Colour ids are normalised (0..k-1 in signature order) every round.
inline void refine(const Graph& g, std::vector<int>& colors, std::vector<uint64_t>& scratch) {
    const int n = g.vertex_count();
    scratch.resize(static_cast<size_t>(n));
    while (true) {
        for (int v = 0; v < n; ++v) {
            uint64_t a = 0xFF, b = 0xFF, c = 0xFF;  // pad: absent neighbours sort last
            for (int w : g.neighbors(v)) {
                uint64_t x = static_cast<uint64_t>(colors[static_cast<size_t>(w)]);
                if (x < a) {
                    c = b;
                    b = a;
                    a = x;
                } else if (x < b) {
                    c = b;
                    b = x;
                } else if (x < c) {
                    c = x;
                }
            }
            scratch[static_cast<size_t>(v)] =
                (static_cast<uint64_t>(colors[static_cast<size_t>(v)]) << 32) | (a << 24) | (b << 16) | (c << 8) |
                static_cast<uint64_t>(v);
        }
        std::vector<uint64_t> order = scratch;
        std::sort(order.begin(), order.end());
        bool changed = false;
        int color = 0;
        for (size_t i = 0; i < order.size(); ++i) {
            if (i > 0 && (order[i] >> 8) != (order[i - 1] >> 8)) ++color;
            int v = static_cast<int>(order[i] & 0xFF);
            if (colors[static_cast<size_t>(v)] != color) {
                colors[static_cast<size_t>(v)] = color;
                changed = true;
            }
        }
        if (!changed) break;
    }
}

struct Canonicalizer {
    const Graph& g;
    int n;
    std::string best;
    std::vector<int> best_labels;
    bool have_best = false;
    std::vector<uint64_t> scratch;

    explicit Canonicalizer(const Graph& graph) : g(graph), n(graph.vertex_count()) {}

    /// Upper-triangle adjacency bits under the labeling v -> colors[v],
    /// packed 8 to a byte. Only comparable between equal orders, which is
    /// all the deduplication needs.
    std::string certificate_for(const std::vector<int>& colors) const {
        size_t nbits = static_cast<size_t>(n) * (static_cast<size_t>(n) - 1) / 2;
        std::string cert((nbits + 7) / 8, '\0');
        for (int u = 0; u < n; ++u)
            for (int w : g.neighbors(u)) {
                if (u >= w) continue;
                int i = colors[static_cast<size_t>(u)], j = colors[static_cast<size_t>(w)];
                if (i > j) std::swap(i, j);
                size_t idx = static_cast<size_t>(j) * (static_cast<size_t>(j) - 1) / 2 + static_cast<size_t>(i);
                cert[idx >> 3] |= static_cast<char>(1 << (idx & 7));
            }
        return cert;
    }

    void descend(std::vector<int> colors) {
        refine(g, colors, scratch);
        // first smallest non-singleton colour class
        std::vector<int> count(static_cast<size_t>(n), 0);
        for (int c : colors) ++count[static_cast<size_t>(c)];
        int cell = -1, cell_size = n + 1;
        for (int c = 0; c < n; ++c)
            if (count[static_cast<size_t>(c)] > 1 && count[static_cast<size_t>(c)] < cell_size) {
                cell_size = count[static_cast<size_t>(c)];
                cell = c;
            }
        if (cell == -1) {
            std::string cert = certificate_for(colors);
            if (!have_best || cert < best) {
                best = std::move(cert);
                best_labels = colors;
                have_best = true;
            }
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (colors[static_cast<size_t>(v)] != cell) continue;
            std::vector<int> branched = colors;
            for (int u = 0; u < n; ++u)
                if (branched[static_cast<size_t>(u)] >= cell) ++branched[static_cast<size_t>(u)];
            branched[static_cast<size_t>(v)] = cell;
            descend(std::move(branched));
        }
    }
};

}  // namespace detail_canon

/// Certificate string, equal iff isomorphic (graphs of max degree 3 and the
/// same order). Includes the order so certificates of different orders never
/// collide.
inline std::string canonical_form(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 255) throw error("canonical_form: supports at most 255 vertices");
    detail_canon::Canonicalizer c(g);
    c.descend(std::vector<int>(static_cast<size_t>(n), 0));
    std::string out;
    out.push_back(static_cast<char>(n));
    out += c.have_best ? c.best : std::string();
    return out;
}

/// Canonically relabeled copy: isomorphic graphs produce identical (not
/// merely isomorphic) results.
inline Graph canonical_copy(const Graph& g) {
    const int n = g.vertex_count();
    detail_canon::Canonicalizer c(g);
    c.descend(std::vector<int>(static_cast<size_t>(n), 0));
    Graph out(n);
    for (int u = 0; u < n; ++u)
        for (int w : g.neighbors(u))
            if (u < w) out.add_edge(c.best_labels[static_cast<size_t>(u)], c.best_labels[static_cast<size_t>(w)]);
    return out;
}

inline bool isomorphic(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    return canonical_form(a) == canonical_form(b);
}

}  // namespace cubic
