#include "convexcuts/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

namespace convexcuts {

ParseError::ParseError(int line, const std::string& message)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message : message), line_(line) {}

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line.substr(0, line.find('#')));
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

long long to_int(const std::string& tok, int line) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
        throw ParseError(line, "expected an integer, got '" + tok + "'");
    }
    return value;
}

long long in_range(const std::string& tok, int line, long long lo, long long hi, const char* what) {
    long long v = to_int(tok, line);
    if (v < lo || v > hi) {
        throw ParseError(line, std::string(what) + " " + tok + " out of range [" + std::to_string(lo) + ", " +
                                   std::to_string(hi) + "]");
    }
    return v;
}

}  // namespace

GraphFile parse_graph(std::istream& in) {
    long long n = -1, m = -1;
    std::vector<std::pair<VertexId, VertexId>> edges;
    std::vector<int> edge_line;
    std::vector<std::vector<EdgeId>> rotation;
    std::vector<int> rot_line;
    bool any_rot = false;
    std::optional<std::vector<EdgeId>> outer;
    int outer_line = 0;

    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        auto tok = tokenize(raw);
        if (tok.empty()) continue;
        const std::string& kw = tok[0];
        if (kw == "graph") {
            if (n >= 0) throw ParseError(lineno, "second graph header");
            if (tok.size() != 3) throw ParseError(lineno, "expected 'graph <n> <m>'");
            n = in_range(tok[1], lineno, 1, 65535, "vertex count");
            m = in_range(tok[2], lineno, 0, 10'000'000, "edge count");
            edges.assign(static_cast<std::size_t>(m), {-1, -1});
            edge_line.assign(static_cast<std::size_t>(m), 0);
            rotation.assign(static_cast<std::size_t>(n), {});
            rot_line.assign(static_cast<std::size_t>(n), 0);
            continue;
        }
        if (n < 0) throw ParseError(lineno, "'" + kw + "' before the graph header");
        if (kw == "edge") {
            if (tok.size() != 4) throw ParseError(lineno, "expected 'edge <id> <u> <v>'");
            auto id = static_cast<std::size_t>(in_range(tok[1], lineno, 0, m - 1, "edge id"));
            if (edge_line[id] != 0) {
                throw ParseError(lineno, "edge id " + tok[1] + " already defined on line " + std::to_string(edge_line[id]));
            }
            auto u = static_cast<VertexId>(in_range(tok[2], lineno, 0, n - 1, "vertex"));
            auto v = static_cast<VertexId>(in_range(tok[3], lineno, 0, n - 1, "vertex"));
            if (u == v) throw ParseError(lineno, "self-loop at vertex " + tok[2]);
            edges[id] = {u, v};
            edge_line[id] = lineno;
        } else if (kw == "rot") {
            if (tok.size() < 2) throw ParseError(lineno, "expected 'rot <v> <edges...>'");
            auto v = static_cast<std::size_t>(in_range(tok[1], lineno, 0, n - 1, "vertex"));
            if (rot_line[v] != 0) {
                throw ParseError(lineno, "rotation of vertex " + tok[1] + " already given on line " +
                                             std::to_string(rot_line[v]));
            }
            for (std::size_t i = 2; i < tok.size(); ++i)
                rotation[v].push_back(static_cast<EdgeId>(in_range(tok[i], lineno, 0, m - 1, "edge id")));
            rot_line[v] = lineno;
            any_rot = true;
        } else if (kw == "outer") {
            if (outer) throw ParseError(lineno, "second outer line");
            outer.emplace();
            for (std::size_t i = 1; i < tok.size(); ++i)
                outer->push_back(static_cast<EdgeId>(in_range(tok[i], lineno, 0, m - 1, "edge id")));
            if (outer->empty()) throw ParseError(lineno, "outer face needs at least one edge");
            outer_line = lineno;
        } else {
            throw ParseError(lineno, "unknown record '" + kw + "'");
        }
    }
    if (n < 0) throw ParseError(0, "missing 'graph <n> <m>' header");
    for (std::size_t e = 0; e < edges.size(); ++e) {
        if (edge_line[e] == 0) throw ParseError(0, "edge " + std::to_string(e) + " is never defined");
    }

    GraphFile out;
    try {
        out.graph = Graph::build(static_cast<int>(n), edges);
    } catch (const GraphError& err) {
        throw ParseError(0, err.what());
    }
    if (!any_rot) {
        if (outer) throw ParseError(outer_line, "outer face given without a rotation system");
        return out;
    }
    for (std::size_t v = 0; v < rotation.size(); ++v) {
        if (rot_line[v] == 0) throw ParseError(0, "vertex " + std::to_string(v) + " has no rotation line");
    }
    try {
        out.embedding = trace_faces(out.graph, std::move(rotation), outer);
    } catch (const EmbeddingError& err) {
        const bool hint = std::string(err.what()).find("outer face hint") != std::string::npos;
        throw ParseError(hint ? outer_line : 0, err.what());
    }
    out.warnings = out.embedding->warnings();
    return out;
}

GraphFile parse_graph_string(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}

GraphFile parse_graph_file(const std::string& path) {
    if (path == "-") return parse_graph(std::cin);
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open '" + path + "'");
    return parse_graph(in);
}

std::string serialize_graph(const Graph& g, const PlaneEmbedding* embedding) {
    std::ostringstream out;
    out << "graph " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (EdgeId e = 0; e < g.edge_count(); ++e) out << "edge " << e << ' ' << g.edge(e).u << ' ' << g.edge(e).v << '\n';
    if (embedding) {
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            out << "rot " << v;
            for (EdgeId e : embedding->rotation(v)) out << ' ' << e;
            out << '\n';
        }
        out << "outer";
        for (const auto& st : embedding->face(embedding->outer_face()).boundary) out << ' ' << st.edge;
        out << '\n';
    }
    return out.str();
}

}  // namespace convexcuts
