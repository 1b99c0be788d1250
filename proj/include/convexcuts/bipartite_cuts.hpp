#pragma once

#include <vector>

#include "convexcuts/graph.hpp"

namespace convexcuts {

struct BipartiteCutOptions {
    /// Read distances from a precomputed all-pairs table instead of running
    /// BFS per edge. Faster, but O(n^2) memory instead of O(m).
    bool reuse_distance_table = false;
    /// Worker threads for the loop over edges; 0 picks hardware concurrency.
    int threads = 1;
};

struct BipartiteCutReport {
    /// Distinct convex cut-sets, each sorted, ordered by (size, edge ids).
    std::vector<std::vector<EdgeId>> convex_cut_sets;
    /// is_convex[i]: C_{e_i} is the cut-set of a convex cut.
    std::vector<bool> is_convex;
};

/// All convex cuts of a connected bipartite graph.
///
/// For every edge e the cut-set C_e is convex iff C_f == C_e for every
/// f in C_e. Each C_f is streamed against the marked edges of C_e and the
/// check stops at the first unmarked edge; since no proper subset of C_e is
/// a cut-set, C_f == C_e iff all of C_f is marked and the sizes agree.
/// O(m^3) time, O(m) extra space without the distance table.
///
/// Throws GraphError for non-bipartite input.
BipartiteCutReport convex_cuts_bipartite(const Graph& g, const BipartiteCutOptions& options = {});

}  // namespace convexcuts
