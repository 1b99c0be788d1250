#include "doctest.h"

#include <unistd.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "convexcuts/cli.hpp"
#include "convexcuts/generators.hpp"
#include "convexcuts/graph_io.hpp"
#include "convexcuts/report.hpp"
#include "json.hpp"

using namespace convexcuts;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_command(args, out, err);
    return {code, out.str(), err.str()};
}

/// Scratch file removed at scope exit.
struct TempFile {
    explicit TempFile(const std::string& text) {
        static int counter = 0;
        path = (std::filesystem::temp_directory_path() /
                ("convexcuts_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++) + ".graph"))
                   .string();
        std::ofstream(path) << text;
    }
    ~TempFile() { std::filesystem::remove(path); }
    std::string path;
};

int count_lines_starting(const std::string& text, const std::string& prefix) {
    std::istringstream in(text);
    std::string line;
    int n = 0;
    while (std::getline(in, line)) n += line.rfind(prefix, 0) == 0;
    return n;
}

std::string gen(const std::vector<std::string>& args) {
    std::vector<std::string> full{"gen"};
    full.insert(full.end(), args.begin(), args.end());
    auto r = run(full);
    REQUIRE(r.code == 0);
    return r.out;
}

}  // namespace

TEST_CASE("parse a triangle with rotations") {
    auto f = parse_graph_string("graph 3 3\nedge 0 0 1\nedge 1 1 2\nedge 2 2 0\nrot 0 2 0\nrot 1 0 1\nrot 2 1 2\n");
    CHECK(f.graph.edge_count() == 3);
    REQUIRE(f.embedding);
    CHECK(f.embedding->face_count() == 2);
    CHECK_FALSE(f.warnings.empty());  // no outer line, tie between the two triangles
}

TEST_CASE("parse without rotations gives no embedding") {
    auto f = parse_graph_string("# comment\ngraph 2 1\n\nedge 0 0 1  # trailing\n");
    CHECK(f.graph.edge_count() == 1);
    CHECK_FALSE(f.embedding);
}

TEST_CASE("parse errors carry line numbers") {
    auto line_of = [](const std::string& text) {
        try {
            parse_graph_string(text);
        } catch (const ParseError& e) {
            return e.line();
        }
        return -1;
    };
    CHECK(line_of("graph 3 2\nedge 0 0 1\nedge 0 1 2\n") == 3);
    CHECK(line_of("graph 3 2\nedge 0 0 1\nedge 1 1 1\n") == 3);
    CHECK(line_of("graph 3 2\nedge 0 0 1\nedge 1 1 x\n") == 3);
    CHECK(line_of("graph 3 2\nedge 0 0 1\nedge 1 1 7\n") == 3);
    CHECK(line_of("edge 0 0 1\n") == 1);
    CHECK(line_of("graph 3 2\nvertex 4\n") == 2);
    CHECK(line_of("graph 3 2\nedge 0 0 1\n") == 0);
    CHECK(line_of("graph 4 5\nedge 0 0 1\nedge 1 1 2\nedge 2 2 3\nedge 3 3 0\nedge 4 0 2\nrot 0 0 4 3\nrot 1 1 0\n"
                  "rot 2 2 4 1\nrot 3 3 2\nouter 0 2\n") == 11);
    // disconnected
    CHECK(line_of("graph 4 2\nedge 0 0 1\nedge 1 2 3\n") == 0);
    // K4 with the centre rotation reversed is not planar
    CHECK_THROWS_AS(parse_graph_string("graph 4 6\nedge 0 0 1\nedge 1 0 2\nedge 2 0 3\nedge 3 1 2\nedge 4 1 3\n"
                                       "edge 5 2 3\nrot 0 0 1 2\nrot 1 0 3 4\nrot 2 1 3 5\nrot 3 2 5 4\n"),
                    ParseError);
}

TEST_CASE("gen, parse, serialize round trip is byte identical") {
    std::vector<std::vector<std::string>> families{
        {"cycle", "7"},         {"path", "5"},          {"grid", "3", "4"},     {"hypercube", "3"},
        {"complete", "4"},      {"complete", "6"},      {"wheel", "5"},         {"complete_bipartite", "2", "3"},
        {"complete_bipartite", "3", "3"}, {"random", "12", "20", "--seed", "4"},
        {"random_bipartite", "12", "16", "--seed", "2"}, {"random_plane", "10", "18", "--seed", "9"}};
    for (const auto& fam : families) {
        CAPTURE(fam[0]);
        auto text = gen(fam);
        auto parsed = parse_graph_string(text);
        auto again = serialize_graph(parsed.graph, parsed.embedding ? &*parsed.embedding : nullptr);
        CHECK(again == text);
    }
}

TEST_CASE("command examples") {
    TempFile c5(gen({"cycle", "5"}));
    auto plane = run({"plane", c5.path});
    CHECK(plane.code == 0);
    CHECK(count_lines_starting(plane.out, "cut ") == 5);
    CHECK(plane.out.find("unverified") == std::string::npos);

    TempFile c6(gen({"cycle", "6"}));
    auto bip = run({"bipartite", c6.path, "--json"});
    CHECK(bip.code == 0);
    auto j = nlohmann::json::parse(bip.out);
    CHECK(j["cuts"].size() == 3);
    CHECK(j["cuts"][0]["status"] == "verified");

    TempFile k4(gen({"complete", "4"}));
    auto oracle = run({"oracle", k4.path});
    CHECK(oracle.code == 0);
    CHECK(count_lines_starting(oracle.out, "cut ") == 7);
}

TEST_CASE("other subcommands") {
    TempFile q3(gen({"hypercube", "3"}));
    auto label = run({"label", q3.path});
    CHECK(label.code == 0);
    CHECK(label.out.find("7 111") != std::string::npos);
    auto pc = run({"partial-cube", q3.path, "--json"});
    CHECK(nlohmann::json::parse(pc.out)["partial_cube"] == true);

    TempFile grid(gen({"grid", "3", "3"}));
    auto alt = run({"alternating", grid.path});
    CHECK(alt.code == 0);
    CHECK(count_lines_starting(alt.out, "path ") == 4);
    auto wa = run({"well-arranged", grid.path, "--orders", "5", "--seed", "3"});
    CHECK(wa.code == 0);
    CHECK(wa.out.rfind("well-arranged: yes", 0) == 0);

    auto dot = run({"plane", grid.path, "--dot"});
    CHECK(count_lines_starting(dot.out, "graph cut") == 4);
    CHECK(dot.out.find("color=red") != std::string::npos);

    auto bench = run({"bench", "--sizes", "40,80", "--repeat", "1"});
    CHECK(bench.code == 0);
    CHECK(count_lines_starting(bench.out, "bipartite m=") == 2);
    CHECK(count_lines_starting(bench.out, "plane grid=20x20") == 1);
}

TEST_CASE("exit codes") {
    CHECK(run({}).code == exit_usage);
    CHECK(run({"frobnicate"}).code == exit_usage);
    CHECK(run({"plane"}).code == exit_usage);
    CHECK(run({"--help"}).code == exit_ok);

    CHECK(run({"plane", "/nonexistent/file.graph"}).code == exit_parse);
    TempFile broken("graph 3 2\nedge 0 0 1\nedge 0 1 2\n");
    auto parse = run({"bipartite", broken.path});
    CHECK(parse.code == exit_parse);
    CHECK(parse.err.find("line 3") != std::string::npos);

    TempFile bare("graph 3 3\nedge 0 0 1\nedge 1 1 2\nedge 2 2 0\n");
    auto refused = run({"plane", bare.path});
    CHECK(refused.code == exit_usage);
    CHECK(refused.err.find("rot") != std::string::npos);

    TempFile c5(gen({"cycle", "5"}));
    CHECK(run({"bipartite", c5.path}).code == exit_usage);

    TempFile tri(gen({"random_plane", "10", "24", "--seed", "3"}));
    CHECK(run({"plane", tri.path, "--max-frontier", "1"}).code == exit_resource);
    TempFile big(gen({"cycle", "20"}));
    CHECK(run({"oracle", big.path}).code == exit_resource);
}

TEST_CASE("reports are deterministic and sorted") {
    TempFile rp(gen({"random_plane", "10", "16", "--seed", "11"}));
    for (const char* cmd : {"plane", "oracle", "alternating", "well-arranged"}) {
        auto a = run({cmd, rp.path, "--json"});
        auto b = run({cmd, rp.path, "--json"});
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
    }
    TempFile rb(gen({"random_bipartite", "30", "45", "--seed", "5"}));
    auto one = run({"bipartite", rb.path});
    auto many = run({"bipartite", rb.path, "--threads", "4"});
    CHECK(one.out == many.out);

    auto j = nlohmann::json::parse(run({"oracle", rp.path, "--json"}).out);
    for (std::size_t i = 1; i < j["cuts"].size(); ++i) {
        auto a = j["cuts"][i - 1]["edges"].get<std::vector<int>>();
        auto b = j["cuts"][i]["edges"].get<std::vector<int>>();
        CHECK((a.size() < b.size() || (a.size() == b.size() && a <= b)));
    }
}

TEST_CASE("output file option") {
    TempFile c6(gen({"cycle", "6"}));
    TempFile out("");
    CHECK(run({"bipartite", c6.path, "-o", out.path}).code == 0);
    std::ifstream in(out.path);
    std::stringstream text;
    text << in.rdbuf();
    CHECK(text.str() == run({"bipartite", c6.path}).out);
}
