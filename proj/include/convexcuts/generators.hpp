#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "convexcuts/graph.hpp"
#include "convexcuts/plane_embedding.hpp"

namespace convexcuts {

struct GeneratedGraph {
    std::string name;
    Graph graph;
    std::optional<PlaneEmbedding> embedding;
};

/// Deterministic test-family generators. Planar families come with a
/// straight-line embedding whenever the drawing is bridgeless.
///
/// Vertex and edge numbering:
///   cycle n            v_i, edge i = {v_i, v_{i+1 mod n}}
///   path n             edge i = {v_i, v_{i+1}}
///   grid rows cols     vertex r*cols + c; horizontal edges row by row, then vertical
///   hypercube d        edges {x, x ^ 2^i} for x < x ^ 2^i, ordered by (x, i)
///   complete n         edges (i, j), i < j, lexicographic
///   wheel n            hub 0, rim 1..n; rim edges first, then spokes
///   complete_bipartite a b   parts 0..a-1 and a..a+b-1, lexicographic
GeneratedGraph make_cycle(int n);
GeneratedGraph make_path(int n);
GeneratedGraph make_grid(int rows, int cols);
GeneratedGraph make_hypercube(int d);
GeneratedGraph make_complete(int n);
GeneratedGraph make_wheel(int rim);
GeneratedGraph make_complete_bipartite(int a, int b);
/// Random connected simple graph: random spanning tree plus extra edges.
GeneratedGraph make_random(int n, int m, std::uint64_t seed);
/// Random connected simple bipartite graph with parts of size ceil(n/2), floor(n/2).
GeneratedGraph make_random_bipartite(int n, int m, std::uint64_t seed);
/// Random two-connected plane graph: a stacked triangulation on n vertices
/// with edges deleted (keeping two-connectivity) down to about m edges.
GeneratedGraph make_random_plane(int n, int m, std::uint64_t seed);

/// Dispatch by family name with integer parameters; throws GraphError on an
/// unknown family or parameters out of range.
GeneratedGraph generate(const std::string& family, const std::vector<long long>& params, std::uint64_t seed = 0);

/// Families accepted by generate(), with their parameter names.
std::vector<std::pair<std::string, std::string>> generator_families();

/// Clockwise rotation system from straight-line vertex coordinates.
std::vector<std::vector<EdgeId>> rotation_from_coordinates(const Graph& g, const std::vector<std::pair<double, double>>& xy);

}  // namespace convexcuts
