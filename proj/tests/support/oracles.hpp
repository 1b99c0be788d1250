#pragma once

// Slow reference implementations used only by tests. None of them call into
// the library's metric or convexity code.

#include <cstdint>
#include <set>
#include <vector>

#include "convexcuts/generators.hpp"
#include "convexcuts/graph.hpp"
#include "convexcuts/oracle.hpp"

namespace testsupport {

using convexcuts::Graph;
using convexcuts::VertexPartition;

std::vector<std::vector<int>> floyd_warshall(const Graph& g);

/// Walks every shortest path between every pair of members explicitly.
bool convex_by_path_walk(const Graph& g, const std::vector<std::vector<int>>& dist, const std::vector<bool>& side);

/// All 2^(n-1) bipartitions, both sides checked with convex_by_path_walk.
std::set<VertexPartition> naive_convex_cuts(const Graph& g);

/// Bipartitions with both sides connected, found by plain subset scan.
std::vector<VertexPartition> connected_bipartitions(const Graph& g);

/// Non-isomorphic trees on n vertices (n >= 1).
std::vector<Graph> unlabeled_trees(int n);

/// Every connected labeled simple graph on n vertices that passes `keep`.
template <class Keep>
std::vector<Graph> labeled_connected_graphs(int n, Keep keep) {
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
    std::vector<Graph> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
        std::vector<std::pair<int, int>> edges;
        for (std::size_t b = 0; b < slots.size(); ++b)
            if (mask >> b & 1U) edges.push_back(slots[b]);
        try {
            Graph g = Graph::build(n, edges);
            if (keep(g)) out.push_back(std::move(g));
        } catch (const convexcuts::GraphError&) {
            // disconnected
        }
    }
    return out;
}

std::set<VertexPartition> as_set(const std::vector<VertexPartition>& v);

/// Plane corpus named by the acceptance criteria: C3..C10, grids up to 3x4,
/// K4, K4 minus an edge, W4..W6 and 50 random plane graphs with n <= 10.
std::vector<convexcuts::GeneratedGraph> plane_corpus();

}  // namespace testsupport
