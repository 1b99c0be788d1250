#include "convexcuts/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "convexcuts/alternating.hpp"
#include "convexcuts/bipartite_cuts.hpp"
#include "convexcuts/generators.hpp"
#include "convexcuts/graph_io.hpp"
#include "convexcuts/oracle.hpp"
#include "convexcuts/plane_cuts.hpp"
#include "convexcuts/report.hpp"

namespace convexcuts {

namespace {

struct Settings {
    std::string input;
    std::string output;
    bool verify = true;
    bool json = false;
    bool dot = false;
    std::size_t max_frontier = PlaneCutOptions{}.max_frontier;
    std::uint64_t seed = 0;
    int threads = 1;
    int orders = 10;
    int max_vertices = BruteForceOptions{}.max_vertices;
    std::string convention = "low";
    std::string family;
    std::vector<long long> params;
    std::vector<int> sizes{250, 500, 1000, 2000};
    int repeat = 3;
};

/// Raised for bad input that is not a file-format problem.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct VerificationFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class Emitter {
public:
    Emitter(const Settings& s, std::ostream& out) : out_(&out) {
        if (!s.output.empty()) {
            file_.open(s.output);
            if (!file_) throw UsageError("cannot write '" + s.output + "'");
            out_ = &file_;
        }
    }
    std::ostream& stream() { return *out_; }

private:
    std::ofstream file_;
    std::ostream* out_;
};

void emit_report(const Settings& s, const Graph& g, const CutReport& report, std::ostream& out) {
    Emitter em(s, out);
    if (s.dot) {
        em.stream() << to_dot(g, report);
    } else if (s.json) {
        em.stream() << to_json(report);
    } else {
        em.stream() << to_text(report);
    }
}

GraphFile load(const Settings& s, std::ostream& err) {
    GraphFile f = parse_graph_file(s.input);
    for (const auto& w : f.warnings) err << "warning: " << w << '\n';
    return f;
}

const PlaneEmbedding& need_embedding(const GraphFile& f) {
    if (!f.embedding) throw UsageError("this command needs a plane embedding: add 'rot' lines to the graph file");
    return *f.embedding;
}

int cmd_bipartite(const Settings& s, std::ostream& out, std::ostream& err) {
    auto f = load(s, err);
    BipartiteCutOptions opts;
    opts.threads = s.threads;
    auto result = convex_cuts_bipartite(f.graph, opts);
    std::optional<DistanceTable> dist;
    if (s.verify) dist = all_pairs_distances(f.graph);
    auto report = make_report(f.graph, result, dist ? &*dist : nullptr);
    emit_report(s, f.graph, report, out);
    if (!report.all_verified()) throw VerificationFailure("a reported cut failed the convexity re-check");
    return exit_ok;
}

int cmd_plane(const Settings& s, std::ostream& out, std::ostream& err) {
    auto f = load(s, err);
    PlaneCutOptions opts;
    opts.verify = s.verify;
    opts.max_frontier = s.max_frontier;
    auto conv = s.convention == "high" ? ChildConvention::high_endpoint_first : ChildConvention::low_endpoint_first;
    auto cuts = find_convex_cuts_plane(need_embedding(f), opts, conv);
    emit_report(s, f.graph, make_report(f.graph, cuts, s.verify), out);
    return exit_ok;
}

int cmd_oracle(const Settings& s, std::ostream& out, std::ostream& err) {
    auto f = load(s, err);
    auto cuts = enumerate_convex_cuts_bruteforce(f.graph, {s.max_vertices});
    emit_report(s, f.graph, make_report(f.graph, cuts), out);
    return exit_ok;
}

int cmd_partial_cube(const Settings& s, std::ostream& out, std::ostream& err) {
    auto f = load(s, err);
    auto verdict = is_partial_cube(f.graph);
    Emitter em(s, out);
    if (s.json) {
        nlohmann::ordered_json j;
        j["partial_cube"] = verdict.is_partial_cube;
        j["diagnosis"] = verdict.diagnosis();
        j["theta_classes"] = verdict.theta_classes;
        em.stream() << j.dump(2) << '\n';
    } else {
        em.stream() << "partial cube: " << (verdict ? "yes" : "no") << '\n' << verdict.diagnosis() << '\n';
    }
    return exit_ok;
}

int cmd_label(const Settings& s, std::ostream& out, std::ostream& err) {
    auto f = load(s, err);
    auto lab = hamming_labeling(f.graph);
    Emitter em(s, out);
    if (s.json) {
        nlohmann::ordered_json j;
        j["bits"] = lab.bits;
        j["classes"] = lab.class_edges;
        j["labels"] = nlohmann::ordered_json::array();
        for (VertexId v = 0; v < f.graph.vertex_count(); ++v) j["labels"].push_back(lab.label_string(v));
        em.stream() << j.dump(2) << '\n';
    } else {
        em.stream() << "bits " << lab.bits << '\n';
        for (std::size_t i = 0; i < lab.class_edges.size(); ++i) {
            em.stream() << "class " << i << " edges";
            for (EdgeId e : lab.class_edges[i]) em.stream() << ' ' << e;
            em.stream() << '\n';
        }
        for (VertexId v = 0; v < f.graph.vertex_count(); ++v) em.stream() << v << ' ' << lab.label_string(v) << '\n';
    }
    return exit_ok;
}

char turn_char(Turn t) { return t == Turn::left ? 'L' : t == Turn::right ? 'R' : '-'; }

std::string describe(const AlternatingPath& p, const PlaneEmbedding& emb, const DistanceTable& dist) {
    std::ostringstream out;
    out << (p.closed ? "closed" : "open") << " x" << p.multiplicity << " edges=";
    for (std::size_t i = 0; i < p.edges.size(); ++i) out << (i ? "," : "") << p.edges[i];
    out << " faces=";
    for (std::size_t i = 0; i < p.faces.size(); ++i) out << (i ? "," : "") << p.faces[i];
    out << " turns=";
    for (Turn t : p.turn_log) out << turn_char(t);
    if (auto cut = eap_cut(p, emb)) {
        out << " cut=" << (is_convex_cut(emb.graph(), dist, *cut) ? "convex" : "non-convex");
    } else {
        out << " cut=" << (p.closed ? "none" : "non-separating");
    }
    return out.str();
}

int cmd_alternating(const Settings& s, std::ostream& out, std::ostream& err) {
    auto f = load(s, err);
    const auto& emb = need_embedding(f);
    auto paths = alternating_paths(emb, alternating_path_graph(emb));
    auto dist = all_pairs_distances(f.graph);
    Emitter em(s, out);
    em.stream() << "alternating paths: " << paths.size() << '\n';
    for (std::size_t i = 0; i < paths.size(); ++i) em.stream() << "path " << i << ' ' << describe(paths[i], emb, dist) << '\n';
    return exit_ok;
}

int cmd_well_arranged(const Settings& s, std::ostream& out, std::ostream& err) {
    auto f = load(s, err);
    const auto& emb = need_embedding(f);
    auto verdict = is_well_arranged(emb);
    auto order = default_instance_order(verdict.paths);
    std::mt19937_64 rng(s.seed);
    int disagreements = 0;
    for (int k = 0; k < s.orders; ++k) {
        std::shuffle(order.begin(), order.end(), rng);
        if (is_well_arranged(emb, order).well_arranged != verdict.well_arranged) ++disagreements;
    }
    Emitter em(s, out);
    const auto& cr = verdict.crossings;
    em.stream() << "well-arranged: " << (verdict ? "yes" : "no") << '\n'
                << "instances " << cr.instance_path.size() << " self-crossings " << cr.total_self_crossings()
                << " max-pair-crossings " << cr.max_pair_crossings() << '\n'
                << "orders tried " << s.orders << " disagreeing " << disagreements << '\n';
    if (disagreements) throw VerificationFailure("verdict depends on the processing order");
    return exit_ok;
}

int cmd_gen(const Settings& s, std::ostream& out, std::ostream&) {
    auto gg = generate(s.family, s.params, s.seed);
    Emitter em(s, out);
    em.stream() << serialize_graph(gg.graph, gg.embedding ? &*gg.embedding : nullptr);
    return exit_ok;
}

template <class F>
double best_of(int repeat, F&& run) {
    double best = 1e300;
    for (int r = 0; r < std::max(1, repeat); ++r) {
        auto t0 = std::chrono::steady_clock::now();
        run();
        std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
        best = std::min(best, dt.count());
    }
    return best;
}

int cmd_bench(const Settings& s, std::ostream& out, std::ostream&) {
    Emitter em(s, out);
    auto& o = em.stream();
    o << std::fixed << std::setprecision(4);
    BipartiteCutOptions opts;
    opts.threads = s.threads;
    for (int m : s.sizes) {
        // a quarter of m vertices, unless that leaves too few slots for m edges
        int n = std::max(4, m / 4);
        while ((n / 2) * ((n + 1) / 2) < m) ++n;
        auto gg = make_random_bipartite(n, m, s.seed);
        std::size_t cuts = 0;
        double t = best_of(s.repeat, [&] { cuts = convex_cuts_bipartite(gg.graph, opts).convex_cut_sets.size(); });
        o << "bipartite m=" << m << " n=" << gg.graph.vertex_count() << " cuts=" << cuts << " seconds=" << t << '\n';
    }
    auto grid = make_grid(20, 20);
    PlaneCutOptions popts;
    popts.verify = s.verify;
    std::size_t cuts = 0;
    double t = best_of(s.repeat, [&] { cuts = find_convex_cuts_plane(*grid.embedding, popts).size(); });
    o << "plane grid=20x20 cuts=" << cuts << " seconds=" << t << '\n';
    return exit_ok;
}

void add_output_flags(CLI::App* sub, Settings& s) {
    sub->add_option("-o,--output", s.output, "write the result to a file");
    sub->add_flag("--json", s.json, "JSON output");
}

void add_input(CLI::App* sub, Settings& s) {
    sub->add_option("graph", s.input, "graph file, '-' for stdin")->required();
    add_output_flags(sub, s);
}

void add_verify(CLI::App* sub, Settings& s) {
    sub->add_flag("--verify,!--no-verify", s.verify, "re-check every reported cut (default on)");
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Settings s;
    CLI::App app{"Enumerate convex cuts of bipartite and plane graphs", "convexcuts"};
    app.require_subcommand(1);

    auto* bip = app.add_subcommand("bipartite", "convex cuts of a bipartite graph");
    add_input(bip, s);
    add_verify(bip, s);
    bip->add_flag("--dot", s.dot, "DOT output with cut edges highlighted");
    bip->add_option("--threads", s.threads, "worker threads, 0 for all cores")->check(CLI::NonNegativeNumber);

    auto* plane = app.add_subcommand("plane", "convex cuts of a plane graph");
    add_input(plane, s);
    add_verify(plane, s);
    plane->add_flag("--dot", s.dot, "DOT output with cut edges highlighted");
    plane->add_option("--max-frontier", s.max_frontier, "cap on live partial cut-sets")->check(CLI::PositiveNumber);
    plane->add_option("--convention", s.convention, "child edge convention")->check(CLI::IsMember({"low", "high"}));

    auto* oracle = app.add_subcommand("oracle", "brute-force convex cuts (small graphs)");
    add_input(oracle, s);
    oracle->add_flag("--dot", s.dot, "DOT output with cut edges highlighted");
    oracle->add_option("--max-vertices", s.max_vertices, "vertex cap")->check(CLI::Range(1, 63));

    auto* pc = app.add_subcommand("partial-cube", "partial cube recognition");
    add_input(pc, s);
    auto* label = app.add_subcommand("label", "Hamming labeling of a partial cube");
    add_input(label, s);

    auto* alt = app.add_subcommand("alternating", "alternating paths of a plane graph");
    add_input(alt, s);
    auto* wa = app.add_subcommand("well-arranged", "well-arranged test of a plane graph");
    add_input(wa, s);
    wa->add_option("--orders", s.orders, "random processing orders to cross-check")->check(CLI::NonNegativeNumber);
    wa->add_option("--seed", s.seed, "seed for the random orders");

    auto* gen = app.add_subcommand("gen", "write a generated graph file");
    gen->add_option("family", s.family, "graph family")->required();
    gen->add_option("params", s.params, "integer parameters");
    gen->add_option("--seed", s.seed, "seed for random families");
    gen->add_option("-o,--output", s.output, "write to a file");
    std::string families;
    for (const auto& [name, params] : generator_families()) families += "\n  " + name + " " + params;
    gen->footer("Families:" + families);

    auto* bench = app.add_subcommand("bench", "timings for both algorithms");
    bench->add_option("--sizes", s.sizes, "edge counts for the bipartite runs")->delimiter(',');
    bench->add_option("--repeat", s.repeat, "repetitions, best time reported")->check(CLI::PositiveNumber);
    bench->add_option("--seed", s.seed, "seed for the random graphs");
    bench->add_option("--threads", s.threads, "worker threads for the bipartite runs")->check(CLI::NonNegativeNumber);
    bench->add_option("-o,--output", s.output, "write to a file");
    add_verify(bench, s);

    std::vector<std::string> argv_store{"convexcuts"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_store) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*bip) return cmd_bipartite(s, out, err);
        if (*plane) return cmd_plane(s, out, err);
        if (*oracle) return cmd_oracle(s, out, err);
        if (*pc) return cmd_partial_cube(s, out, err);
        if (*label) return cmd_label(s, out, err);
        if (*alt) return cmd_alternating(s, out, err);
        if (*wa) return cmd_well_arranged(s, out, err);
        if (*gen) return cmd_gen(s, out, err);
        if (*bench) return cmd_bench(s, out, err);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return exit_parse;
    } catch (const VerificationError& e) {
        err << "verification failed: " << e.what() << '\n';
        return exit_verification;
    } catch (const VerificationFailure& e) {
        err << "verification failed: " << e.what() << '\n';
        return exit_verification;
    } catch (const ResourceLimitError& e) {
        err << "resource limit: " << e.what() << '\n';
        return exit_resource;
    } catch (const std::length_error& e) {
        err << "resource limit: " << e.what() << '\n';
        return exit_resource;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}

}  // namespace convexcuts
