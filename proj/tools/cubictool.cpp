// Command-line front end: exact structure, cycle, factor and bound analysis
// for cubic graphs, substitution construction, and fixture scans. Outputs
// are JSON reports that embed the graph6/sparse6 of every subject; reports
// are byte-stable given the same inputs and flags, apart from the timing
// field.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <thread>

#include "CLI11.hpp"

#include "cubic/bounds.hpp"
#include "cubic/cycles.hpp"
#include "cubic/factors.hpp"
#include "cubic/families.hpp"
#include "cubic/graph6.hpp"
#include "cubic/json_io.hpp"
#include "cubic/long_cycle.hpp"
#include "cubic/structure.hpp"
#include "cubic/substitution.hpp"

using namespace cubic;
using nlohmann::json;

namespace {

constexpr const char* kVersion = "0.1.0";

uint64_t fnv1a64_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw error("cannot open " + path);
    uint64_t h = 1469598103934665603ull;
    char buf[4096];
    while (in.read(buf, sizeof buf) || in.gcount() > 0) {
        for (std::streamsize i = 0; i < in.gcount(); ++i) {
            h ^= static_cast<unsigned char>(buf[i]);
            h *= 1099511628211ull;
        }
        if (!in) break;
    }
    char hex[17];
    std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(h));
    return h;
}

std::string digest_hex(const std::string& path) {
    char hex[17];
    std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(fnv1a64_file(path)));
    return hex;
}

struct Report {
    json j;
    std::chrono::steady_clock::time_point started = std::chrono::steady_clock::now();

    Report(const std::string& command) {
        j["schema"] = "cubictool-report/1";
        j["tool"] = json{{"name", "cubictool"}, {"version", kVersion}};
        j["command"] = command;
        j["inputs"] = json::array();
        j["parameters"] = json::object();
    }

    void input(const std::string& path) { j["inputs"].push_back(json{{"path", path}, {"fnv1a64", digest_hex(path)}}); }

    int emit(const std::string& json_out, bool ok) {
        j["ok"] = ok;
        j["timing_ms"] =
            std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - started).count();
        std::string text = j.dump(2) + "\n";
        if (json_out.empty() || json_out == "-") {
            std::fputs(text.c_str(), stdout);
        } else {
            std::ofstream out(json_out);
            if (!out) throw error("cannot write " + json_out);
            out << text;
        }
        return ok ? 0 : 1;
    }
};

Edge parse_edge_flag(const std::string& s) {
    size_t comma = s.find(',');
    if (comma == std::string::npos) throw error("--edge expects 'u,v'");
    return Edge(std::stoi(s.substr(0, comma)), std::stoi(s.substr(comma + 1)));
}

json analyze_one(const Graph& g, int cap_circ, int cap_odd) {
    json r;
    r["graph6"] = serialize_graph6(g);
    r["order"] = g.vertex_count();
    r["edges"] = g.edge_count();
    r["cubic"] = is_cubic(g);
    if (!is_cubic(g) || !g.connected()) {
        r["skipped"] = "classification needs a connected cubic graph";
        return r;
    }
    r["class"] = to_json(classify(g));
    if (g.vertex_count() <= cap_circ) {
        auto c = circumference(g);
        r["circumference"] = json{{"length", c.length}, {"witness", to_json(c.witness)}};
    } else {
        r["circumference"] = json{{"skipped", "order exceeds --cap-circ"}};
    }
    if (g.vertex_count() <= cap_odd) {
        OddnessReport od = oddness(g);
        json jo;
        jo["two_factors"] = od.two_factor_count;
        jo["oddness"] = od.oddness ? json(*od.oddness) : json("infinite");
        if (od.witness) jo["witness"] = to_json(*od.witness);
        r["oddness"] = jo;
    } else {
        r["oddness"] = json{{"skipped", "order exceeds --cap-odd"}};
    }
    return r;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact cycle analysis for cubic graphs and their substitutions"};
    app.require_subcommand(1);
    std::string json_out;
    app.add_option("--json", json_out, "write the JSON report here instead of stdout")->capture_default_str();

    // analyze
    auto* analyze = app.add_subcommand("analyze", "classification, girth, connectivity, circumference, oddness");
    std::string an_path;
    int an_cap_circ = 60, an_cap_odd = 40;
    analyze->add_option("file", an_path, "graph6 file (may hold several records)")->required();
    analyze->add_option("--cap-circ", an_cap_circ, "skip exact circumference above this order");
    analyze->add_option("--cap-odd", an_cap_odd, "skip oddness above this order");

    // circ
    auto* circ = app.add_subcommand("circ", "exact circumference with witness");
    std::string ci_path;
    int ci_cap = 60;
    circ->add_option("file", ci_path)->required();
    circ->add_option("--cap-circ", ci_cap);

    // oddness
    auto* oddcmd = app.add_subcommand("oddness", "exact oddness with witness 2-factor");
    std::string od_path;
    int od_cap = 40;
    oddcmd->add_option("file", od_path)->required();
    oddcmd->add_option("--cap-odd", od_cap);

    // bound
    auto* bound = app.add_subcommand("bound", "per-block maxima, shortness coefficient and oddness growth");
    std::string bo_path, bo_edge;
    int bo_index = 0;
    bound->add_option("file", bo_path)->required();
    bound->add_option("--edge", bo_edge, "substitution edge 'u,v'")->required();
    bound->add_option("--index", bo_index, "record index in a multi-record file");

    // construct
    auto* construct = app.add_subcommand("construct", "build S(H,F,e) and its block map");
    std::string co_host, co_edge, co_frame, co_out, co_policy = "canonical";
    uint64_t co_seed = 0;
    bool co_cyclic = false;
    construct->add_option("host", co_host, "graph6 file with H")->required();
    construct->add_option("--edge", co_edge, "substitution edge 'u,v'")->required();
    construct->add_option("--frame", co_frame, "sparse6 file with the 4-regular frame F")->required();
    construct->add_option("--out", co_out, "output graph6 path (block map JSON goes beside it)")->required();
    construct->add_option("--policy", co_policy)->check(CLI::IsMember({"canonical", "seeded"}));
    construct->add_option("--seed", co_seed, "slot permutation seed for --policy seeded");
    construct->add_flag("--check-cyclic", co_cyclic, "also verify cyclic 4-edge-connectivity");

    // longcycle
    auto* longcycle = app.add_subcommand("longcycle", "build a verified long cycle through every block");
    std::string lc_graph, lc_map, lc_frame, lc_mode = "full";
    longcycle->add_option("graph", lc_graph, "graph6 file with the substitution")->required();
    longcycle->add_option("--blockmap", lc_map, "block map JSON sidecar")->required();
    longcycle->add_option("--frame", lc_frame, "sparse6 file with F")->required();
    longcycle->add_option("--mode", lc_mode)->check(CLI::IsMember({"full", "hamiltonian"}));

    // dominate
    auto* dominate = app.add_subcommand("dominate", "dominating cycles through every matching of a given size");
    std::string do_path;
    int do_k = 3, do_jobs = 1;
    long long do_start = 0;
    dominate->add_option("file", do_path)->required();
    dominate->add_option("--matching-size", do_k)->required();
    dominate->add_option("--jobs", do_jobs);
    dominate->add_option("--start-index", do_start, "resume a survey from this matching index");

    // scan
    auto* scan = app.add_subcommand("scan", "evaluate every (host, edge) pair against criteria");
    std::string sc_path, sc_criteria, sc_journal, sc_maxcoeff;
    int sc_minq = -1, sc_jobs = 1;
    scan->add_option("file", sc_path, "graph6 file with candidate hosts")->required();
    scan->add_option("--criteria", sc_criteria, "criteria JSON, e.g. {\"max_coefficient\":\"17/18\",\"min_q\":2}");
    scan->add_option("--max-coefficient", sc_maxcoeff, "shorthand for the criteria field");
    scan->add_option("--min-q", sc_minq, "shorthand for the criteria field");
    scan->add_option("--jobs", sc_jobs);
    scan->add_option("--journal", sc_journal, "append-only JSONL progress journal (resumes if present)");

    for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; })) sub->fallthrough();
    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze->parsed()) {
            Report rep("analyze");
            rep.input(an_path);
            rep.j["parameters"] = json{{"cap_circ", an_cap_circ}, {"cap_odd", an_cap_odd}};
            json results = json::array();
            for (const Graph& g : read_graph6_file(an_path)) results.push_back(analyze_one(g, an_cap_circ, an_cap_odd));
            rep.j["results"] = results;
            return rep.emit(json_out, true);
        }

        if (circ->parsed()) {
            Report rep("circ");
            rep.input(ci_path);
            rep.j["parameters"] = json{{"cap_circ", ci_cap}};
            json results = json::array();
            for (const Graph& g : read_graph6_file(ci_path)) {
                json r{{"graph6", serialize_graph6(g)}, {"order", g.vertex_count()}};
                if (g.vertex_count() <= ci_cap) {
                    auto c = circumference(g);
                    r["length"] = c.length;
                    r["witness"] = to_json(c.witness);
                } else {
                    r["skipped"] = "order exceeds --cap-circ";
                }
                results.push_back(r);
            }
            rep.j["results"] = results;
            return rep.emit(json_out, true);
        }

        if (oddcmd->parsed()) {
            Report rep("oddness");
            rep.input(od_path);
            rep.j["parameters"] = json{{"cap_odd", od_cap}};
            json results = json::array();
            for (const Graph& g : read_graph6_file(od_path)) {
                json r{{"graph6", serialize_graph6(g)}, {"order", g.vertex_count()}};
                if (g.vertex_count() <= od_cap) {
                    OddnessReport od = oddness(g);
                    r["two_factors"] = od.two_factor_count;
                    r["oddness"] = od.oddness ? json(*od.oddness) : json("infinite");
                    if (od.witness) r["witness"] = to_json(*od.witness);
                } else {
                    r["skipped"] = "order exceeds --cap-odd";
                }
                results.push_back(r);
            }
            rep.j["results"] = results;
            return rep.emit(json_out, true);
        }

        if (bound->parsed()) {
            Report rep("bound");
            rep.input(bo_path);
            Edge e = parse_edge_flag(bo_edge);
            rep.j["parameters"] = json{{"edge", to_json(e)}, {"index", bo_index}};
            auto graphs = read_graph6_file(bo_path);
            if (bo_index < 0 || bo_index >= static_cast<int>(graphs.size()))
                throw error("--index out of range: the file has " + std::to_string(graphs.size()) + " records");
            rep.j["results"] = to_json(shortness_report(graphs[static_cast<size_t>(bo_index)], e));
            return rep.emit(json_out, true);
        }

        if (construct->parsed()) {
            Report rep("construct");
            rep.input(co_host);
            rep.input(co_frame);
            Edge e = parse_edge_flag(co_edge);
            rep.j["parameters"] = json{{"edge", to_json(e)},
                                       {"policy", co_policy},
                                       {"seed", co_seed},
                                       {"check_cyclic", co_cyclic},
                                       {"out", co_out}};
            Graph h = read_graph6_file(co_host).at(0);
            MultiGraph f = read_sparse6_file(co_frame).at(0);
            LinkingPolicy policy = co_policy == "seeded" ? LinkingPolicy::seeded : LinkingPolicy::canonical;
            auto [g, bm] = substitute(h, e, f, policy, co_seed);
            ValidationReport val = validate_substitution(g, bm, h, e, f, co_cyclic);
            {
                std::ofstream out(co_out);
                if (!out) throw error("cannot write " + co_out);
                out << serialize_graph6(g) << "\n";
            }
            {
                std::ofstream out(co_out + ".blockmap.json");
                if (!out) throw error("cannot write " + co_out + ".blockmap.json");
                out << blockmap_to_json(bm).dump(2) << "\n";
            }
            rep.j["results"] = json{{"graph6", serialize_graph6(g)},
                                    {"order", g.vertex_count()},
                                    {"frame_sparse6", serialize_sparse6(f)},
                                    {"validation", to_json(val)},
                                    {"blockmap", co_out + ".blockmap.json"}};
            return rep.emit(json_out, val.ok());
        }

        if (longcycle->parsed()) {
            Report rep("longcycle");
            rep.input(lc_graph);
            rep.input(lc_map);
            rep.input(lc_frame);
            rep.j["parameters"] = json{{"mode", lc_mode}};
            Graph g = read_graph6_file(lc_graph).at(0);
            MultiGraph f = read_sparse6_file(lc_frame).at(0);
            std::ifstream mapin(lc_map);
            if (!mapin) throw error("cannot open " + lc_map);
            BlockMap bm = blockmap_from_json(json::parse(mapin));
            SubgraphMode mode = lc_mode == "hamiltonian" ? SubgraphMode::hamiltonian : SubgraphMode::full;
            ConstructedCycle cc = construct_long_cycle(g, bm, f, mode);
            rep.j["results"] = json{{"graph6", serialize_graph6(g)}, {"constructed", to_json(cc)}};
            return rep.emit(json_out, true);
        }

        if (dominate->parsed()) {
            Report rep("dominate");
            rep.input(do_path);
            rep.j["parameters"] = json{{"matching_size", do_k}, {"start_index", do_start}, {"jobs", do_jobs}};
            json results = json::array();
            bool all_clear = true;
            for (const Graph& g : read_graph6_file(do_path)) {
                MatchingSurvey merged;
                if (do_jobs <= 1) {
                    merged = matching_survey(g, do_k, do_start);
                } else {
                    long long total = 0;
                    enumerate_matchings(g, do_k, [&](const Matching&) { ++total; });
                    long long chunk = (total - do_start + do_jobs - 1) / do_jobs;
                    std::vector<MatchingSurvey> parts(static_cast<size_t>(do_jobs));
                    std::vector<std::thread> pool;
                    for (int t = 0; t < do_jobs; ++t)
                        pool.emplace_back([&, t]() {
                            parts[static_cast<size_t>(t)] = matching_survey(g, do_k, do_start + t * chunk, chunk);
                        });
                    for (auto& th : pool) th.join();
                    merged.matching_size = do_k;
                    for (const auto& part : parts) {
                        merged.matchings_checked += part.matchings_checked;
                        merged.failing.insert(merged.failing.end(), part.failing.begin(), part.failing.end());
                    }
                }
                json r = to_json(merged);
                r["graph6"] = serialize_graph6(g);
                results.push_back(r);
                all_clear = all_clear && merged.failing.empty();
            }
            rep.j["results"] = results;
            rep.j["all_matchings_extend"] = all_clear;
            return rep.emit(json_out, true);
        }

        if (scan->parsed()) {
            Report rep("scan");
            rep.input(sc_path);
            ScanCriteria criteria;
            if (!sc_criteria.empty()) criteria = criteria_from_json(json::parse(sc_criteria));
            if (!sc_maxcoeff.empty()) criteria.max_coefficient = Rational::parse(sc_maxcoeff);
            if (sc_minq >= 0) criteria.min_q = sc_minq;
            json jc = json::object();
            if (criteria.max_coefficient) jc["max_coefficient"] = criteria.max_coefficient->str();
            if (criteria.min_q) jc["min_q"] = *criteria.min_q;
            rep.j["parameters"] = json{{"criteria", jc}, {"jobs", sc_jobs}, {"journal", sc_journal}};

            std::vector<Graph> hosts = read_graph6_file(sc_path);

            // resume state and prior matches from the journal
            std::set<std::pair<int, int>> done;
            std::vector<json> prior;
            if (!sc_journal.empty()) {
                std::ifstream in(sc_journal);
                std::string line;
                while (in && std::getline(in, line)) {
                    if (line.empty()) continue;
                    json entry = json::parse(line);
                    done.insert({entry.at("host").get<int>(), entry.at("edge").get<int>()});
                    if (entry.contains("match")) prior.push_back(entry.at("match"));
                }
            }
            std::ofstream journal;
            if (!sc_journal.empty()) {
                journal.open(sc_journal, std::ios::app);
                if (!journal) throw error("cannot write " + sc_journal);
            }

            ScanOptions opts;
            opts.jobs = sc_jobs;
            if (!done.empty())
                opts.skip = [&](int h, int e) { return done.count({h, e}) > 0; };
            if (journal.is_open())
                opts.on_done = [&](int h, int e, const BoundReport* r) {
                    json entry{{"host", h}, {"edge", e}};
                    if (r) entry["match"] = to_json(*r);
                    journal << entry.dump() << "\n";
                    journal.flush();
                };

            ScanOutcome out = scan_candidates(hosts, criteria, opts);
            json matches = json::array();
            for (const json& p : prior) matches.push_back(p);
            for (const BoundReport& r : out.matches) matches.push_back(to_json(r));
            json errors = json::array();
            for (const ScanError& e : out.errors) errors.push_back(json{{"host", e.host_index}, {"error", e.message}});
            rep.j["results"] = json{{"pairs_scanned", out.pairs_scanned},
                                    {"matches", matches},
                                    {"errors", errors}};
            return rep.emit(json_out, out.errors.empty());
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 2;
}
