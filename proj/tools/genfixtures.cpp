// Fixture provenance tool: exhaustively generates connected cubic graphs by
// repeated edge insertion (subdivide two edges, join the new vertices),
// deduplicated by canonical form and cross-checked against published census
// counts; filters snarks; and builds dot products of snark pairs. The
// shipped fixture files under data/fixtures are produced by this tool and
// re-verified by the library's own oracles.

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <thread>
#include <queue>
#include <chrono>
#include <unordered_set>

#include "CLI11.hpp"

#include "cubic/canonical.hpp"
#include "cubic/factors.hpp"
#include "cubic/families.hpp"
#include "cubic/graph6.hpp"
#include "cubic/structure.hpp"

using namespace cubic;

namespace {

// connected cubic graphs by order (A002851); used to certify that the
// expansion really is exhaustive at every full-census level
const std::map<int, long long> kConnectedCubicCounts = {
    {4, 1}, {6, 2}, {8, 5}, {10, 19}, {12, 85}, {14, 509}, {16, 4060}, {18, 41301}, {20, 510489},
};

// connected cubic graphs with girth >= 5 (A014371)
const std::map<int, long long> kGirth5Counts = {
    {10, 1}, {12, 2}, {14, 9}, {16, 49}, {18, 455}, {20, 5783}, {22, 90938},
};

// connected cubic graphs with girth >= 4 (A014372)
const std::map<int, long long> kGirth4Counts = {
    {6, 1}, {8, 2}, {10, 6}, {12, 22}, {14, 110}, {16, 792}, {18, 7805}, {20, 97546},
};

bool has_cycle_shorter_than(const Graph& g, int bound) {
    auto gg = girth(g);
    return gg && *gg < bound;
}

// ---------------------------------------------------------------------------
// Irreducible seeds. A connected cubic graph has no reducible edge exactly
// when it is assembled from K4-minus-an-edge blocks: every triangle that
// blocks a reduction turns out to sit inside such a block, the two degree-2
// stubs of each block carry one external edge each, and the only vertices
// outside blocks are triangle-free apexes whose three edges all end on
// stubs. Up to 22 vertices this leaves: K4, cycles of blocks (necklaces),
// and two-apex assemblies (three parallel chains, or two loop chains plus a
// connecting chain). Edge insertion never produces these, so they enter the
// generation as seeds; the census checks below certify the set is complete.

struct SeedBuilder {
    Graph g;
    int next = 0;

    explicit SeedBuilder(int n) : g(n) {}

    /// Adds a chain of `len` blocks; returns the global ids of the entry and
    /// exit stubs.
    std::pair<int, int> chain(int len) {
        int entry = -1, prev_exit = -1;
        for (int i = 0; i < len; ++i) {
            int p = next, q = next + 1, r = next + 2, s = next + 3;
            next += 4;
            g.add_edge(p, r);
            g.add_edge(p, s);
            g.add_edge(q, r);
            g.add_edge(q, s);
            g.add_edge(r, s);
            if (prev_exit >= 0) g.add_edge(prev_exit, p);
            if (entry < 0) entry = p;
            prev_exit = q;
        }
        return {entry, prev_exit};
    }
};

Graph necklace(int k) {
    SeedBuilder b(4 * k);
    auto [entry, exit] = b.chain(k);
    b.g.add_edge(exit, entry);
    return b.g;
}

/// All irreducible connected cubic graphs on n vertices other than K4.
std::vector<Graph> irreducible_seeds(int n) {
    std::vector<Graph> out;
    if (n >= 8 && n % 4 == 0) out.push_back(necklace(n / 4));
    if (n % 4 == 2 && n >= 14) {
        int b = (n - 2) / 4;
        // two apexes z,w joined by three chains of blocks
        for (int l1 = 1; l1 <= b; ++l1)
            for (int l2 = l1; l1 + l2 < b; ++l2) {
                int l3 = b - l1 - l2;
                if (l3 < l2) continue;
                SeedBuilder sb(n);
                int z = n - 2, w = n - 1;
                for (int len : {l1, l2, l3}) {
                    auto [entry, exit] = sb.chain(len);
                    sb.g.add_edge(z, entry);
                    sb.g.add_edge(exit, w);
                }
                out.push_back(sb.g);
            }
        // a loop chain at each apex plus one connecting chain
        for (int a = 1; a <= b - 2; ++a)
            for (int c = a; a + c < b; ++c) {
                int d = b - a - c;
                SeedBuilder sb(n);
                int z = n - 2, w = n - 1;
                auto [e1, x1] = sb.chain(a);
                sb.g.add_edge(z, e1);
                sb.g.add_edge(z, x1);
                auto [e2, x2] = sb.chain(c);
                sb.g.add_edge(w, e2);
                sb.g.add_edge(w, x2);
                auto [e3, x3] = sb.chain(d);
                sb.g.add_edge(z, e3);
                sb.g.add_edge(x3, w);
                out.push_back(sb.g);
            }
    }
    return out;
}

/// Child of inserting a vertex on each of two distinct edges and joining the
/// two new vertices.
Graph insert_edge_pair(const Graph& g, Edge e1, Edge e2) {
    int n = g.vertex_count();
    Graph child(n + 2);
    int x = n, y = n + 1;
    for (const Edge& e : g.edges()) {
        if (e == e1 || e == e2) continue;
        child.add_edge(e.u, e.v);
    }
    child.add_edge(e1.u, x);
    child.add_edge(x, e1.v);
    child.add_edge(e2.u, y);
    child.add_edge(y, e2.v);
    child.add_edge(x, y);
    return child;
}

/// The same insertion with the two edges in different graphs: subdivide one
/// edge of each and bridge the new vertices. This is how connected graphs
/// whose only reduction disconnects them are reached.
Graph bridge_join(const Graph& g1, Edge e1, const Graph& g2, Edge e2) {
    int n1 = g1.vertex_count(), n2 = g2.vertex_count();
    Graph child(n1 + n2 + 2);
    int x = n1 + n2, y = n1 + n2 + 1;
    for (const Edge& e : g1.edges())
        if (!(e == e1)) child.add_edge(e.u, e.v);
    for (const Edge& e : g2.edges())
        if (!(e == e2)) child.add_edge(e.u + n1, e.v + n1);
    child.add_edge(e1.u, x);
    child.add_edge(x, e1.v);
    child.add_edge(e2.u + n1, y);
    child.add_edge(y, e2.v + n1);
    child.add_edge(x, y);
    return child;
}

/// Necessary condition for a graph to have any girth-5 child under one edge
/// insertion: at most one triangle, and some edge pair covers every triangle
/// twice and every 4-cycle at least once.
bool useful_final_parent(const Graph& g) {
    std::vector<std::vector<Edge>> tri_edges, quad_edges;
    int n = g.vertex_count();
    // short cycles by direct enumeration
    for (int a = 0; a < n; ++a)
        for (int b : g.neighbors(a)) {
            if (b <= a) continue;
            for (int c : g.neighbors(b)) {
                if (c <= a || c == b) continue;
                if (g.has_edge(c, a) && b < c) tri_edges.push_back({Edge(a, b), Edge(b, c), Edge(c, a)});
                for (int d : g.neighbors(c)) {
                    if (d <= a || d == b || d == c) continue;
                    if (g.has_edge(d, a) && b < d) quad_edges.push_back({Edge(a, b), Edge(b, c), Edge(c, d), Edge(d, a)});
                }
            }
        }
    if (tri_edges.size() > 1) return false;
    if (tri_edges.empty() && quad_edges.empty()) return true;

    auto covers = [&](Edge e1, Edge e2) {
        for (const auto& quad : quad_edges) {
            bool hit = false;
            for (const Edge& e : quad) hit |= (e == e1 || e == e2);
            if (!hit) return false;
        }
        return true;
    };
    if (!tri_edges.empty()) {
        const auto& tri = tri_edges[0];  // both inserted edges must lie on it
        for (size_t i = 0; i < 3; ++i)
            for (size_t j = i + 1; j < 3; ++j)
                if (covers(tri[i], tri[j])) return true;
        return false;
    }
    // candidates can be restricted to edges of the first 4-cycle
    for (const Edge& e1 : quad_edges[0])
        for (const Edge& e2 : g.edges())
            if (!(e2 == e1) && covers(e1, e2)) return true;
    return false;
}

struct LevelSet {
    std::vector<Graph> graphs;
    std::unordered_set<std::string> certs;
    std::mutex mutex;

    bool add(const Graph& g) {
        std::string cert = canonical_form(g);
        std::lock_guard<std::mutex> lock(mutex);
        if (!certs.insert(std::move(cert)).second) return false;
        graphs.push_back(g);
        return true;
    }
};

/// All connected cubic graphs on `target` vertices with girth >= min_girth.
/// Intermediate levels hold the full census; when min_girth is 5 the
/// penultimate level is thinned to graphs that can still parent a girth-5
/// child, which does not change the final set.
std::vector<Graph> generate_cubic(int target, int min_girth, int jobs, bool quiet) {
    std::map<int, std::vector<Graph>> levels;
    levels[4] = {families::complete(4)};
    for (int n = 4; n < target; n += 2) {
        int child_order = n + 2;
        bool final_level = child_order == target;
        bool thin_level = min_girth >= 5 && child_order == target - 2;
        LevelSet next;
        auto admit = [&](const Graph& child) {
            if (final_level && min_girth > 3 && has_cycle_shorter_than(child, min_girth)) return;
            if (thin_level && !useful_final_parent(child)) return;
            next.add(child);
        };

        const std::vector<Graph>& level = levels[n];
        std::atomic<size_t> cursor{0};
        auto worker = [&]() {
            while (true) {
                size_t idx = cursor.fetch_add(1);
                if (idx >= level.size()) break;
                const Graph& g = level[idx];
                std::vector<Edge> edges = g.edges();
                for (size_t i = 0; i < edges.size(); ++i)
                    for (size_t j = i + 1; j < edges.size(); ++j) admit(insert_edge_pair(g, edges[i], edges[j]));
            }
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < std::max(1, jobs); ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();

        // children whose only reduction disconnects the graph come from
        // bridging two smaller connected graphs (orders summing to n)
        for (int n1 = 4; n1 <= n - n1; n1 += 2) {
            int n2 = n - n1;
            if (!levels.count(n1) || !levels.count(n2)) continue;
            for (const Graph& g1 : levels[n1])
                for (const Graph& g2 : levels[n2])
                    for (const Edge& e1 : g1.edges())
                        for (const Edge& e2 : g2.edges()) admit(bridge_join(g1, e1, g2, e2));
        }

        // the irreducible assemblies are never reached by edge insertion;
        // all have triangles, so girth-constrained final levels skip them
        if ((!final_level || min_girth <= 3) && !thin_level)
            for (const Graph& seed : irreducible_seeds(child_order)) next.add(seed);

        levels[child_order] = std::move(next.graphs);
        const std::vector<Graph>& produced = levels[child_order];
        if (!quiet) std::fprintf(stderr, "level %d: %zu graphs\n", child_order, produced.size());

        // certify exhaustiveness wherever a published census count applies
        long long expect = -1;
        if (final_level && min_girth == 5 && kGirth5Counts.count(child_order))
            expect = kGirth5Counts.at(child_order);
        else if (final_level && min_girth == 4 && kGirth4Counts.count(child_order))
            expect = kGirth4Counts.at(child_order);
        else if (!final_level && !thin_level && kConnectedCubicCounts.count(child_order))
            expect = kConnectedCubicCounts.at(child_order);
        if (expect >= 0 && static_cast<long long>(produced.size()) != expect) {
            std::fprintf(stderr, "FATAL: census mismatch at n=%d: got %zu, published %lld\n", child_order,
                         produced.size(), expect);
            std::exit(2);
        }
    }
    // deterministic output order
    std::vector<Graph> out = std::move(levels[target]);
    std::sort(out.begin(), out.end(), [](const Graph& a, const Graph& b) {
        return serialize_graph6(canonical_copy(a)) < serialize_graph6(canonical_copy(b));
    });
    return out;
}

bool is_snark(const Graph& g, bool weak = false) {
    if (!is_cubic(g) || !g.connected()) return false;
    auto gg = girth(g);
    if (!gg || (!weak && *gg < 5) || (weak && *gg < 4)) return false;
    if (has_cyclic_cut_at_most(g, 3)) return false;
    return !is_three_edge_colorable(g);
}

/// All dot products L . R over parameter choices: remove two vertex-disjoint
/// edges {a,b},{c,d} from L and two adjacent vertices x,y from R, then join
/// a,b to x's other neighbours and c,d to y's.
void dot_products(const Graph& left, const Graph& right,
                  const std::function<void(const Graph&)>& emit) {
    std::vector<Edge> les = left.edges();
    int ln = left.vertex_count();
    for (const Edge& f1 : les)
        for (const Edge& f2 : les) {
            if (f2.u == f1.u && f2.v == f1.v) continue;
            if (f2.u == f1.u || f2.u == f1.v || f2.v == f1.u || f2.v == f1.v) continue;
            for (const Edge& re : right.edges()) {
                for (auto [x, y] : {std::pair{re.u, re.v}, std::pair{re.v, re.u}}) {
                    std::vector<int> xn, yn;
                    for (int w : right.neighbors(x))
                        if (w != y) xn.push_back(w);
                    for (int w : right.neighbors(y))
                        if (w != x) yn.push_back(w);
                    // orientations of the removed edges
                    for (auto [a, b] : {std::pair{f1.u, f1.v}, std::pair{f1.v, f1.u}})
                        for (auto [c, d] : {std::pair{f2.u, f2.v}, std::pair{f2.v, f2.u}}) {
                            // relabel right minus {x,y} after the left block
                            std::vector<int> rid(static_cast<size_t>(right.vertex_count()), -1);
                            int at = ln;
                            for (int v = 0; v < right.vertex_count(); ++v)
                                if (v != x && v != y) rid[static_cast<size_t>(v)] = at++;
                            Graph g(at);
                            for (const Edge& e : left.edges())
                                if (!(e == f1) && !(e == f2)) g.add_edge(e.u, e.v);
                            for (const Edge& e : right.edges()) {
                                if (e.u == x || e.u == y || e.v == x || e.v == y) continue;
                                g.add_edge(rid[static_cast<size_t>(e.u)], rid[static_cast<size_t>(e.v)]);
                            }
                            g.add_edge(a, rid[static_cast<size_t>(xn[0])]);
                            g.add_edge(b, rid[static_cast<size_t>(xn[1])]);
                            g.add_edge(c, rid[static_cast<size_t>(yn[0])]);
                            g.add_edge(d, rid[static_cast<size_t>(yn[1])]);
                            emit(g);
                        }
                }
            }
        }
}

void write_graphs(const std::string& path, const std::vector<Graph>& graphs) {
    std::ofstream out(path);
    if (!out) throw error("cannot write " + path);
    for (const Graph& g : graphs) out << serialize_graph6(canonical_copy(g)) << "\n";
}

/// max over edges e of q(g,e), where q = min over 2-factors of the number of
/// odd cycles avoiding both endpoints of e. One pass over the 2-factors.
int max_forced_odd(const Graph& g, std::vector<Edge>* best_edges = nullptr) {
    const std::vector<Edge> edges = g.edges();
    std::vector<int> q(edges.size(), INT32_MAX);
    bool any = false;
    enumerate_two_factors(g, [&](const TwoFactor& tf) {
        any = true;
        std::vector<const Cycle*> odd;
        for (const Cycle& c : tf.cycles)
            if (c.length() % 2) odd.push_back(&c);
        std::vector<char> on_odd(static_cast<size_t>(g.vertex_count()), 0);
        std::vector<int> cycle_of(static_cast<size_t>(g.vertex_count()), -1);
        for (size_t i = 0; i < odd.size(); ++i)
            for (int v : odd[i]->vertices) cycle_of[static_cast<size_t>(v)] = static_cast<int>(i);
        for (size_t ei = 0; ei < edges.size(); ++ei) {
            int avoid = static_cast<int>(odd.size());
            int cu = cycle_of[static_cast<size_t>(edges[ei].u)], cv = cycle_of[static_cast<size_t>(edges[ei].v)];
            if (cu >= 0) --avoid;
            if (cv >= 0 && cv != cu) --avoid;
            q[ei] = std::min(q[ei], avoid);
        }
    });
    if (!any) return -1;
    int best = 0;
    for (size_t ei = 0; ei < edges.size(); ++ei)
        if (q[ei] > best) best = q[ei];
    if (best_edges)
        for (size_t ei = 0; ei < edges.size(); ++ei)
            if (q[ei] == best) best_edges->push_back(edges[ei]);
    return best;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"fixture generation utilities"};
    app.require_subcommand(1);

    auto* gen = app.add_subcommand("gen", "exhaustive connected cubic graphs up to isomorphism");
    int gen_n = 20, gen_girth = 5, gen_jobs = 2;
    std::string gen_out;
    bool gen_quiet = false;
    gen->add_option("--n", gen_n, "vertex count (even)")->required();
    gen->add_option("--girth", gen_girth, "minimum girth of the output");
    gen->add_option("--out", gen_out, "output graph6 file")->required();
    gen->add_option("--jobs", gen_jobs, "worker threads");
    gen->add_flag("--quiet", gen_quiet);

    auto* snark = app.add_subcommand("snarks", "filter a graph6 list to snarks");
    std::string snark_in, snark_out;
    bool weak = false;
    snark->add_option("--in", snark_in)->required();
    snark->add_option("--out", snark_out)->required();
    snark->add_flag("--weak", weak, "keep weak snarks (girth 4 allowed)");

    auto* dot = app.add_subcommand("dot", "dot products of two snark lists, deduplicated, snarks only");
    std::string dot_left, dot_right, dot_out;
    dot->add_option("--left", dot_left)->required();
    dot->add_option("--right", dot_right)->required();
    dot->add_option("--out", dot_out)->required();

    auto* named = app.add_subcommand("named", "write the hand-constructed fixture graphs");
    std::string named_dir;
    named->add_option("--dir", named_dir)->required();

    auto* walk = app.add_subcommand("walk", "edge-swap walk over the snark space hunting high forced-odd counts");
    std::string walk_seeds, walk_found, walk_log, walk_all;
    int walk_qmin = 2, walk_jobs = 2;
    long long walk_max = -1;
    walk->add_option("--seeds", walk_seeds, "graph6 snark list to start from")->required();
    walk->add_option("--found", walk_found, "append hits (max_e q(g,e) >= --min-q) here")->required();
    walk->add_option("--min-q", walk_qmin);
    walk->add_option("--jobs", walk_jobs);
    walk->add_option("--max-classes", walk_max, "stop after visiting this many snark classes");
    walk->add_option("--log", walk_log, "progress log path");
    walk->add_option("--all", walk_all, "write every snark class reached (sorted) here at the end");
    bool walk_tunnel = false;
    walk->add_flag("--allow-girth4", walk_tunnel,
                   "also traverse girth-4 weak snarks (hits and --all stay girth-5 only)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) {
            auto graphs = generate_cubic(gen_n, gen_girth, gen_jobs, gen_quiet);
            write_graphs(gen_out, graphs);
            std::printf("%zu graphs on %d vertices with girth >= %d -> %s\n", graphs.size(), gen_n, gen_girth,
                        gen_out.c_str());
        } else if (snark->parsed()) {
            std::vector<Graph> kept;
            for (const Graph& g : read_graph6_file(snark_in))
                if (is_snark(g, weak)) kept.push_back(g);
            write_graphs(snark_out, kept);
            std::printf("%zu %ssnarks -> %s\n", kept.size(), weak ? "weak " : "", snark_out.c_str());
        } else if (dot->parsed()) {
            std::vector<Graph> lefts = read_graph6_file(dot_left);
            std::vector<Graph> rights = read_graph6_file(dot_right);
            std::unordered_set<std::string> seen;
            std::vector<Graph> kept;
            long long built = 0;
            for (const Graph& l : lefts)
                for (const Graph& r : rights)
                    dot_products(l, r, [&](const Graph& g) {
                        ++built;
                        if (has_cycle_shorter_than(g, 5)) return;
                        if (!seen.insert(canonical_form(g)).second) return;
                        if (is_snark(g)) kept.push_back(g);
                    });
            write_graphs(dot_out, kept);
            std::printf("%lld products, %zu snark classes -> %s\n", built, kept.size(), dot_out.c_str());
        } else if (walk->parsed()) {
            // best-first exploration: snarks with few perfect matchings have
            // the most constrained 2-factor structure, so they go first
            struct Item {
                long long pm;
                long long seq;
                Graph g;
                bool operator<(const Item& o) const { return std::tie(pm, seq) > std::tie(o.pm, o.seq); }
            };
            std::priority_queue<Item> queue;
            std::unordered_set<std::string> seen;
            std::vector<std::string> all_classes;
            std::mutex mu;
            std::ofstream found(walk_found, std::ios::app);
            std::ofstream log;
            if (!walk_log.empty()) log.open(walk_log, std::ios::app);
            long long seq = 0, visited = 0, hits = 0;
            int active = 0;

            auto consider = [&](const Graph& g) {
                std::string cert = canonical_form(g);
                {
                    std::lock_guard<std::mutex> lk(mu);
                    if (!seen.insert(std::move(cert)).second) return;
                }
                bool girth5 = !has_cycle_shorter_than(g, 5);
                std::vector<Edge> best_edges;
                int qmax = girth5 ? max_forced_odd(g, &best_edges) : 0;
                long long pms = count_perfect_matchings(g);
                std::string canon6 = serialize_graph6(canonical_copy(g));
                std::lock_guard<std::mutex> lk(mu);
                if (girth5 && !walk_all.empty()) all_classes.push_back(canon6);
                if (girth5 && qmax >= walk_qmin) {
                    ++hits;
                    found << canon6 << "\n";
                    found.flush();
                    std::fprintf(stderr, "hit #%lld: q=%d pms=%lld %s\n", hits, qmax, pms, canon6.c_str());
                }
                queue.push({pms, seq++, g});
            };
            for (const Graph& g : read_graph6_file(walk_seeds)) consider(g);

            auto expand = [&](const Graph& g) {
                std::vector<Edge> edges = g.edges();
                for (size_t i = 0; i < edges.size(); ++i)
                    for (size_t j = i + 1; j < edges.size(); ++j) {
                        const Edge &e1 = edges[i], &e2 = edges[j];
                        if (e1.u == e2.u || e1.u == e2.v || e1.v == e2.u || e1.v == e2.v) continue;
                        for (int variant = 0; variant < 2; ++variant) {
                            int a = e1.u, b = e1.v;
                            int c = variant ? e2.v : e2.u;
                            int d = variant ? e2.u : e2.v;
                            if (g.has_edge(a, c) || g.has_edge(b, d)) continue;
                            Graph child(g.vertex_count());
                            for (const Edge& e : edges)
                                if (!(e == e1) && !(e == e2)) child.add_edge(e.u, e.v);
                            child.add_edge(a, c);
                            child.add_edge(b, d);
                            if (!child.connected()) continue;
                            if (has_cycle_shorter_than(child, walk_tunnel ? 4 : 5)) continue;
                            if (is_three_edge_colorable(child)) continue;
                            if (has_cyclic_cut_at_most(child, 3)) continue;
                            consider(child);
                        }
                    }
            };

            auto worker = [&]() {
                while (true) {
                    Graph g;
                    {
                        std::lock_guard<std::mutex> lk(mu);
                        if (queue.empty()) {
                            if (active == 0) return;
                        } else if (walk_max < 0 || visited < walk_max) {
                            g = queue.top().g;
                            queue.pop();
                            ++visited;
                            ++active;
                            if (visited % 200 == 0) {
                                std::fprintf(stderr, "visited %lld, frontier %zu, classes %zu, hits %lld\n", visited,
                                             queue.size(), seen.size(), hits);
                                if (log.is_open()) {
                                    log << "visited " << visited << " frontier " << queue.size() << " classes "
                                        << seen.size() << " hits " << hits << "\n";
                                    log.flush();
                                }
                            }
                        } else {
                            return;
                        }
                    }
                    if (g.vertex_count() == 0) {
                        std::this_thread::sleep_for(std::chrono::milliseconds(20));
                        continue;
                    }
                    expand(g);
                    {
                        std::lock_guard<std::mutex> lk(mu);
                        --active;
                    }
                }
            };
            std::vector<std::thread> pool;
            for (int t = 0; t < std::max(1, walk_jobs); ++t) pool.emplace_back(worker);
            for (auto& th : pool) th.join();
            if (!walk_all.empty()) {
                std::sort(all_classes.begin(), all_classes.end());
                std::ofstream out(walk_all);
                for (const std::string& s : all_classes) out << s << "\n";
            }
            std::printf("walk done: %lld visited, %zu classes, %lld hits\n", visited, seen.size(), hits);
        } else if (named->parsed()) {
            auto put = [&](const std::string& name, const Graph& g) {
                std::ofstream out(named_dir + "/" + name + ".g6");
                out << serialize_graph6(g) << "\n";
            };
            put("k4", families::complete(4));
            put("k33", families::complete_bipartite(3, 3));
            put("prism", families::prism());
            put("cube", families::hypercube3());
            put("moebius8", families::moebius_ladder(8));
            put("petersen", families::petersen());
            put("tietze", families::tietze());
            put("heawood", families::heawood());
            put("flower_j5", families::flower_snark(5));
            std::ofstream f2(named_dir + "/frame_f2.s6");
            f2 << serialize_sparse6(families::double_edge_frame()) << "\n";
            std::ofstream k5(named_dir + "/frame_k5.s6");
            k5 << serialize_sparse6(families::complete_multigraph(5)) << "\n";
            std::printf("named fixtures -> %s\n", named_dir.c_str());
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
