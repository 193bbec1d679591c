#pragma once

#include <atomic>
#include <functional>
#include <mutex>
#include <numeric>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "cubic/cycles.hpp"
#include "cubic/factors.hpp"
#include "cubic/graph.hpp"
#include "cubic/graph6.hpp"

// The quantitative payoff: per-block cycle contributions, shortness
// coefficients and oddness growth rates of the substitution families, and
// the scan that locates qualifying (host, edge) pairs in fixture lists.
// Every ratio is an exact rational; no floating point enters the pipeline.

namespace cubic {

struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n, long long d) {
        if (d == 0) throw error("Rational: zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        long long g = std::gcd(n < 0 ? -n : n, d);
        if (g == 0) g = 1;
        num = n / g;
        den = d / g;
    }

    bool operator==(const Rational&) const = default;
    bool operator<(const Rational& o) const { return num * o.den < o.num * den; }
    bool operator<=(const Rational& o) const { return num * o.den <= o.num * den; }

    std::string str() const { return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den); }

    static Rational parse(const std::string& s) {
        size_t slash = s.find('/');
        try {
            if (slash == std::string::npos) return Rational(std::stoll(s), 1);
            return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
        } catch (const std::exception&) {
            throw error("Rational: cannot parse '" + s + "'");
        }
    }
};

/// Maximum number of cycle vertices one block can contribute, from the four
/// constrained maxima of (H,e). The offsets are how many vertices of each
/// cycle class fall on the deleted endpoints of e: the edge itself (2), one
/// endpoint (1), both endpoints (2), one per cycle (2).
inline int per_block_bound(const ConstrainedMaxima& maxima) {
    int best = -1;
    if (maxima.through_edge) best = std::max(best, *maxima.through_edge - 2);
    if (maxima.one_endpoint) best = std::max(best, *maxima.one_endpoint - 1);
    if (maxima.both_avoid_edge) best = std::max(best, *maxima.both_avoid_edge - 2);
    if (maxima.two_disjoint) best = std::max(best, *maxima.two_disjoint - 2);
    if (best < 0) throw error("per_block_bound: every cycle class is empty");
    return best;
}

struct BoundReport {
    std::string host_graph6;
    int host_order = 0;
    Edge edge;
    bool maxima_computed = false;  // q-only scans skip the cycle searches
    ConstrainedMaxima maxima;
    int block_size = 0;    // |H| - 2
    int per_block = 0;     // max block contribution (when maxima_computed)
    Rational coefficient;  // per_block / block_size: shortness upper bound for S(H,F_n,e)
    int forced_odd_q = 0;  // q(H,e)
    Rational oddness_growth;  // q / block_size: per-vertex oddness growth
};

/// Full bound report for one (host, edge) pair: the certified shortness
/// coefficient and oddness growth of the family S(h, F_n, e). Pass a
/// precomputed q to skip the 2-factor sweep.
inline BoundReport shortness_report(const Graph& h, Edge e, std::optional<int> known_q = std::nullopt) {
    require_cubic(h, "shortness_report");
    if (!h.has_edge(e.u, e.v)) throw error("shortness_report: not an edge of the host");
    BoundReport r;
    r.host_graph6 = serialize_graph6(h);
    r.host_order = h.vertex_count();
    r.edge = e;
    r.maxima_computed = true;
    r.maxima = constrained_maxima(h, e);
    r.block_size = h.vertex_count() - 2;
    r.per_block = per_block_bound(r.maxima);
    r.coefficient = Rational(r.per_block, r.block_size);
    r.forced_odd_q = known_q ? *known_q : forced_odd_count(h, e);
    r.oddness_growth = Rational(r.forced_odd_q, r.block_size);
    return r;
}

/// q(h,e) / (|h|-2): the forced odd cycles per vertex of the family.
inline Rational oddness_growth(const Graph& h, Edge e) {
    return Rational(forced_odd_count(h, e), h.vertex_count() - 2);
}

struct ScanCriteria {
    std::optional<Rational> max_coefficient;  // keep pairs with coefficient <= this
    std::optional<int> min_q;                 // keep pairs with forced_odd_q >= this

    bool wants_maxima() const { return max_coefficient.has_value(); }
};

struct ScanError {
    int host_index = 0;
    std::string message;
};

struct ScanOutcome {
    std::vector<BoundReport> matches;  // ordered by (host index, edge index)
    std::vector<ScanError> errors;
    long long pairs_scanned = 0;
};

struct ScanOptions {
    int jobs = 1;
    // resume hook: return true to skip a (host, edge) pair already done
    std::function<bool(int host, int edge)> skip;
    // completion hook, called under a lock in completion order
    std::function<void(int host, int edge, const BoundReport*)> on_done;
};

/// Evaluates every (host, edge) pair against the criteria. The forced-odd
/// count is computed first and the (much dearer) constrained maxima only for
/// pairs that survive the q filter. Parallel over pairs; result order is
/// canonical regardless of job count.
inline ScanOutcome scan_candidates(const std::vector<Graph>& hosts, const ScanCriteria& criteria,
                                   const ScanOptions& opts = {}) {
    struct Task {
        int host;
        int edge_index;
        Edge edge;
    };
    std::vector<Task> tasks;
    ScanOutcome out;
    for (int hi = 0; hi < static_cast<int>(hosts.size()); ++hi) {
        const Graph& h = hosts[static_cast<size_t>(hi)];
        if (!is_cubic(h)) {
            out.errors.push_back({hi, "host is not cubic"});
            continue;
        }
        std::vector<Edge> edges = h.edges();
        for (int ei = 0; ei < static_cast<int>(edges.size()); ++ei)
            tasks.push_back({hi, ei, edges[static_cast<size_t>(ei)]});
    }

    std::vector<std::optional<BoundReport>> results(tasks.size());
    std::vector<std::string> failures(tasks.size());
    std::atomic<size_t> next{0};
    std::mutex done_mutex;

    auto worker = [&]() {
        while (true) {
            size_t i = next.fetch_add(1);
            if (i >= tasks.size()) break;
            const Task& t = tasks[i];
            if (opts.skip && opts.skip(t.host, t.edge_index)) continue;
            const Graph& h = hosts[static_cast<size_t>(t.host)];
            try {
                int q = forced_odd_count(h, t.edge);
                bool keep = !criteria.min_q || q >= *criteria.min_q;
                std::optional<BoundReport> report;
                if (keep) {
                    bool need_maxima = criteria.wants_maxima() || !criteria.min_q;
                    if (need_maxima) {
                        report = shortness_report(h, t.edge, q);
                        if (criteria.max_coefficient && !(report->coefficient <= *criteria.max_coefficient))
                            keep = false;
                    } else {
                        // q-only scans skip the cycle searches entirely
                        report.emplace();
                        report->host_graph6 = serialize_graph6(h);
                        report->host_order = h.vertex_count();
                        report->edge = t.edge;
                        report->block_size = h.vertex_count() - 2;
                        report->forced_odd_q = q;
                        report->oddness_growth = Rational(q, report->block_size);
                    }
                }
                if (keep) results[i] = std::move(report);
                if (opts.on_done) {
                    std::lock_guard<std::mutex> lock(done_mutex);
                    opts.on_done(t.host, t.edge_index, results[i] ? &*results[i] : nullptr);
                }
            } catch (const std::exception& ex) {
                failures[i] = ex.what();
            }
        }
    };

    int jobs = std::max(1, opts.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    out.pairs_scanned = static_cast<long long>(tasks.size());
    for (size_t i = 0; i < tasks.size(); ++i) {
        if (results[i]) out.matches.push_back(std::move(*results[i]));
        if (!failures[i].empty())
            out.errors.push_back({tasks[i].host, "edge " + std::to_string(tasks[i].edge_index) + ": " + failures[i]});
    }
    return out;
}

}  // namespace cubic
