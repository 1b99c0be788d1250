#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "convexcuts/graph.hpp"
#include "convexcuts/plane_embedding.hpp"

namespace convexcuts {

/// Malformed graph file. line() is 1-based, 0 when the problem is global
/// (missing edges, failed Euler check).
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& message);
    int line() const { return line_; }

private:
    int line_;
};

struct GraphFile {
    Graph graph;
    std::optional<PlaneEmbedding> embedding;
    std::vector<std::string> warnings;
};

/// Text format, one record per line; '#' starts a comment, blank lines are
/// skipped:
///
///   graph <n> <m>
///   edge <id> <u> <v>          m lines, ids 0..m-1 each once, any order
///   rot <v> <e1> <e2> ...      optional, clockwise, one line per vertex
///   outer <e1> <e2> ...        optional, boundary edges of the outer face
///
/// Without rot lines only the graph is returned. Without an outer line the
/// longest face becomes the outer one and a warning is recorded.
GraphFile parse_graph(std::istream& in);
GraphFile parse_graph_string(const std::string& text);
/// "-" reads standard input.
GraphFile parse_graph_file(const std::string& path);

/// Inverse of parse_graph: edges in id order, rotations as stored, the outer
/// face listed in boundary order.
std::string serialize_graph(const Graph& g, const PlaneEmbedding* embedding = nullptr);

}  // namespace convexcuts
