#pragma once

#include <string>
#include <vector>

#include "convexcuts/bipartite_cuts.hpp"
#include "convexcuts/graph.hpp"
#include "convexcuts/oracle.hpp"
#include "convexcuts/plane_cuts.hpp"

namespace convexcuts {

struct CutRecord {
    std::string kind;            // "non-cyclic", "cyclic", "bipartite" or "oracle"
    std::vector<EdgeId> edges;   // traversal order for plane cuts, sorted otherwise
    VertexPartition partition;
    std::string status;          // "verified", "unverified" or "FAILED"
};

struct CutReport {
    std::string command;
    int vertex_count = 0;
    int edge_count = 0;
    std::vector<CutRecord> cuts;

    /// Orders records by (cut-set size, sorted edge ids).
    void sort();
    bool all_verified() const;
};

CutReport make_report(const Graph& g, const std::vector<CutSet>& cuts, bool verified);
/// Partitions are recomputed from the cut-sets; with `dist` each cut is
/// re-checked for convexity.
CutReport make_report(const Graph& g, const BipartiteCutReport& result, const DistanceTable* dist);
CutReport make_report(const Graph& g, const std::vector<VertexPartition>& oracle_cuts);

std::string to_text(const CutReport& report);
std::string to_json(const CutReport& report);
/// One undirected DOT graph per cut with the cut edges drawn bold red.
std::string to_dot(const Graph& g, const CutReport& report);

}  // namespace convexcuts
