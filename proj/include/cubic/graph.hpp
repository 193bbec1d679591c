#pragma once

#include <algorithm>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace cubic {

/// Error raised on violated preconditions and malformed inputs.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Unordered pair of distinct vertices. Normalised so that u <= v on
/// construction; the default state is invalid.
struct Edge {
    int u = -1;
    int v = -1;

    Edge() = default;
    Edge(int a, int b) : u(std::min(a, b)), v(std::max(a, b)) {
        if (a == b) throw error("Edge: loops are not allowed");
        if (a < 0 || b < 0) throw error("Edge: negative vertex id");
    }

    bool operator==(const Edge&) const = default;
    auto operator<=>(const Edge&) const = default;
};

/// Simple undirected graph with dense 0-based vertex ids and sorted
/// adjacency lists. Immutable by convention once built: every algorithm in
/// this library takes it by const reference.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : adj_(n >= 0 ? static_cast<size_t>(n) : throw error("Graph: negative order")) {}

    static Graph from_edges(int n, std::span<const Edge> edges) {
        Graph g(n);
        for (const Edge& e : edges) g.add_edge(e.u, e.v);
        return g;
    }
    static Graph from_edges(int n, std::initializer_list<Edge> edges) {
        return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
    }

    int vertex_count() const { return static_cast<int>(adj_.size()); }

    int edge_count() const {
        size_t total = 0;
        for (const auto& nbrs : adj_) total += nbrs.size();
        return static_cast<int>(total / 2);
    }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw error("Graph: loops are not allowed");
        if (has_edge(u, v)) throw error("Graph: parallel edge " + std::to_string(u) + "-" + std::to_string(v));
        insert_sorted(adj_[u], v);
        insert_sorted(adj_[v], u);
    }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
    }

    const std::vector<int>& neighbors(int v) const {
        check_vertex(v);
        return adj_[v];
    }

    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

    /// All edges as normalised pairs, sorted lexicographically.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(edge_count());
        for (int u = 0; u < vertex_count(); ++u)
            for (int v : adj_[u])
                if (u < v) out.push_back(Edge(u, v));
        return out;
    }

    /// Induced subgraph on `keep` (order preserved); returns the subgraph and
    /// the map from new ids to old ids.
    std::pair<Graph, std::vector<int>> induced(std::span<const int> keep) const {
        std::vector<int> old_of(keep.begin(), keep.end());
        std::vector<int> new_of(vertex_count(), -1);
        for (size_t i = 0; i < old_of.size(); ++i) {
            check_vertex(old_of[i]);
            if (new_of[old_of[i]] != -1) throw error("induced: duplicate vertex");
            new_of[old_of[i]] = static_cast<int>(i);
        }
        Graph g(static_cast<int>(old_of.size()));
        for (int u : old_of)
            for (int v : adj_[u])
                if (new_of[v] != -1 && new_of[u] < new_of[v]) g.add_edge(new_of[u], new_of[v]);
        return {std::move(g), std::move(old_of)};
    }

    bool connected() const {
        int n = vertex_count();
        if (n == 0) return true;
        std::vector<char> seen(n, 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int count = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : adj_[u])
                if (!seen[w]) {
                    seen[w] = 1;
                    ++count;
                    stack.push_back(w);
                }
        }
        return count == n;
    }

    /// Symmetry / sortedness / no-loop sanity check. Cheap enough to run after
    /// every construction step in tests.
    bool valid() const {
        for (int u = 0; u < vertex_count(); ++u) {
            const auto& nbrs = adj_[u];
            if (!std::is_sorted(nbrs.begin(), nbrs.end())) return false;
            if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end()) return false;
            for (int v : nbrs) {
                if (v < 0 || v >= vertex_count() || v == u) return false;
                if (!std::binary_search(adj_[v].begin(), adj_[v].end(), u)) return false;
            }
        }
        return true;
    }

    bool operator==(const Graph&) const = default;

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= vertex_count()) throw error("vertex id " + std::to_string(v) + " out of range");
    }
    static void insert_sorted(std::vector<int>& vec, int x) {
        vec.insert(std::upper_bound(vec.begin(), vec.end(), x), x);
    }

    std::vector<std::vector<int>> adj_;
};

inline bool is_cubic(const Graph& g) {
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) != 3) return false;
    return g.vertex_count() > 0;
}

inline void require_cubic(const Graph& g, const char* who) {
    if (!is_cubic(g)) throw error(std::string(who) + ": graph is not cubic");
}

/// Undirected multigraph. Parallel edges are allowed and distinguished by
/// edge id (the index into the edge list); loops are rejected because a loop
/// has no well-defined pair of attachment points under vertex substitution.
class MultiGraph {
public:
    MultiGraph() = default;
    explicit MultiGraph(int n) : n_(n >= 0 ? n : throw error("MultiGraph: negative order")) {}

    static MultiGraph from_edges(int n, std::span<const Edge> edges) {
        MultiGraph g(n);
        for (const Edge& e : edges) g.add_edge(e.u, e.v);
        return g;
    }
    static MultiGraph from_edges(int n, std::initializer_list<Edge> edges) {
        return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    int add_edge(int u, int v) {
        if (u < 0 || u >= n_ || v < 0 || v >= n_) throw error("MultiGraph: vertex id out of range");
        if (u == v) throw error("MultiGraph: loops are not allowed");
        edges_.push_back(Edge(u, v));
        return static_cast<int>(edges_.size()) - 1;
    }

    const Edge& edge(int id) const {
        if (id < 0 || id >= edge_count()) throw error("MultiGraph: edge id out of range");
        return edges_[static_cast<size_t>(id)];
    }

    const std::vector<Edge>& edges() const { return edges_; }

    int degree(int v) const {
        if (v < 0 || v >= n_) throw error("MultiGraph: vertex id out of range");
        int d = 0;
        for (const Edge& e : edges_) d += (e.u == v) + (e.v == v);
        return d;
    }

    /// Edge ids incident to v, ascending.
    std::vector<int> incident(int v) const {
        if (v < 0 || v >= n_) throw error("MultiGraph: vertex id out of range");
        std::vector<int> out;
        for (int id = 0; id < edge_count(); ++id)
            if (edges_[static_cast<size_t>(id)].u == v || edges_[static_cast<size_t>(id)].v == v) out.push_back(id);
        return out;
    }

    /// Multiplicity of the pair {u,v}.
    int multiplicity(int u, int v) const {
        if (u == v) return 0;
        Edge key(u, v);
        int m = 0;
        for (const Edge& e : edges_) m += (e == key);
        return m;
    }

    bool is_regular(int k) const {
        for (int v = 0; v < n_; ++v)
            if (degree(v) != k) return false;
        return n_ > 0;
    }

    bool connected() const {
        if (n_ == 0) return true;
        std::vector<std::vector<int>> adj(static_cast<size_t>(n_));
        for (const Edge& e : edges_) {
            adj[static_cast<size_t>(e.u)].push_back(e.v);
            adj[static_cast<size_t>(e.v)].push_back(e.u);
        }
        std::vector<char> seen(static_cast<size_t>(n_), 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int count = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : adj[static_cast<size_t>(u)])
                if (!seen[w]) {
                    seen[w] = 1;
                    ++count;
                    stack.push_back(w);
                }
        }
        return count == n_;
    }

    bool operator==(const MultiGraph&) const = default;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
};

/// A cycle as a cyclic sequence of distinct vertices; consecutive vertices
/// (including last-to-first) are adjacent in the host graph.
struct Cycle {
    std::vector<int> vertices;

    int length() const { return static_cast<int>(vertices.size()); }

    /// Minimal rotation of the lexicographically smaller orientation.
    /// Deterministic representative used for deduplication.
    Cycle canonical() const {
        if (vertices.size() < 3) throw error("Cycle: length must be >= 3");
        auto best = rotations_min(vertices);
        std::vector<int> rev(vertices.rbegin(), vertices.rend());
        auto best_rev = rotations_min(rev);
        return Cycle{std::min(best, best_rev)};
    }

    /// Distinctness and consecutive adjacency against a host graph.
    bool valid_in(const Graph& g) const {
        int k = length();
        if (k < 3) return false;
        std::vector<char> seen(static_cast<size_t>(g.vertex_count()), 0);
        for (int v : vertices) {
            if (v < 0 || v >= g.vertex_count() || seen[static_cast<size_t>(v)]) return false;
            seen[static_cast<size_t>(v)] = 1;
        }
        for (int i = 0; i < k; ++i)
            if (!g.has_edge(vertices[static_cast<size_t>(i)], vertices[static_cast<size_t>((i + 1) % k)])) return false;
        return true;
    }

    bool operator==(const Cycle&) const = default;

private:
    static std::vector<int> rotations_min(const std::vector<int>& seq) {
        size_t k = seq.size();
        size_t at = std::min_element(seq.begin(), seq.end()) - seq.begin();
        // distinct entries: the minimum is unique, rotate it to the front
        std::vector<int> out(k);
        for (size_t i = 0; i < k; ++i) out[i] = seq[(at + i) % k];
        return out;
    }
};

}  // namespace cubic
