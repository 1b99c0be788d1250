#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "convexcuts/graph.hpp"

namespace convexcuts {

/// Two-sided vertex partition in canonical form: `first` holds vertex 0,
/// both sides sorted.
struct VertexPartition {
    std::vector<VertexId> first;
    std::vector<VertexId> second;

    /// `in_first[v]` marks one side; sides are swapped if needed so that
    /// vertex 0 ends up in `first`.
    static VertexPartition from_mask(const std::vector<bool>& in_first);
    std::vector<bool> mask(int vertex_count) const;

    friend bool operator==(const VertexPartition&, const VertexPartition&) = default;
    friend auto operator<=>(const VertexPartition&, const VertexPartition&) = default;
};

/// Partition left by deleting `cut_edges`; nullopt unless exactly two
/// components remain.
std::optional<VertexPartition> partition_from_cut_set(const Graph& g, const std::vector<EdgeId>& cut_edges);

/// Edges with one endpoint on each side.
std::vector<EdgeId> cut_set_of(const Graph& g, const VertexPartition& p);

struct ConvexityWitness {
    VertexId u;  // u, v on the same side
    VertexId w;  // on the other side, on a shortest u-v path
    VertexId v;
};

struct ConvexityVerdict {
    bool convex = false;
    std::optional<ConvexityWitness> witness;

    explicit operator bool() const { return convex; }
};

/// Is the vertex set marked in `side` convex (closed under shortest paths)?
/// O(|side| * m) using the BFS layering of each member.
ConvexityVerdict is_convex_set(const Graph& g, const DistanceTable& dist, const std::vector<bool>& side);

/// Both sides convex. Throws std::invalid_argument unless the sides are
/// nonempty, disjoint, and cover V.
ConvexityVerdict is_convex_cut(const Graph& g, const DistanceTable& dist, const VertexPartition& p);

struct BruteForceOptions {
    int max_vertices = 16;
};

/// Every convex cut, found by enumerating connected vertex sets containing
/// vertex 0 with connected complement. Sorted.
/// Throws std::length_error when the vertex cap is exceeded.
std::vector<VertexPartition> enumerate_convex_cuts_bruteforce(const Graph& g, const BruteForceOptions& options = {});

struct PartialCubeVerdict {
    bool is_partial_cube = false;
    std::vector<VertexId> odd_cycle;                    // set when not bipartite
    std::optional<std::array<EdgeId, 3>> violation;     // e theta f, f theta h, not e theta h
    std::vector<std::vector<EdgeId>> theta_classes;     // when partial cube, ordered by smallest edge

    std::string diagnosis() const;
    explicit operator bool() const { return is_partial_cube; }
};

/// Bipartite and the Djokovic relation is transitive.
PartialCubeVerdict is_partial_cube(const Graph& g);

struct HammingLabeling {
    int bits = 0;
    /// labels[v][i] is bit i of vertex v.
    std::vector<std::vector<std::uint8_t>> labels;
    /// class_edges[i]: the theta-class whose cut flips bit i.
    std::vector<std::vector<EdgeId>> class_edges;

    std::string label_string(VertexId v) const;
    int hamming_distance(VertexId a, VertexId b) const;
};

/// Bit i is 0 on the semicube of class i containing vertex 0.
/// Throws GraphError when g is not a partial cube.
HammingLabeling hamming_labeling(const Graph& g);

}  // namespace convexcuts
