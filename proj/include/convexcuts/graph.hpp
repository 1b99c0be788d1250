#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace convexcuts {

using VertexId = std::int32_t;
using EdgeId = std::int32_t;

/// Raised for malformed graphs: self-loops, out-of-range endpoints,
/// disconnected input, or a graph that does not meet an operation's
/// precondition (e.g. bipartiteness).
class GraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Edge {
    VertexId u;
    VertexId v;

    VertexId other(VertexId w) const { return w == u ? v : u; }
    bool has(VertexId w) const { return w == u || w == v; }
};

struct Incidence {
    EdgeId edge;
    VertexId other;
};

/// Connected undirected multigraph without self-loops.
///
/// Edge ids are dense (0..m-1) and assigned in input order; every derived
/// structure (subdivision, embeddings, relation matrices) indexes edges by
/// the same ids.
class Graph {
public:
    Graph() = default;

    /// Throws GraphError on self-loops, endpoints out of range, or when the
    /// graph is disconnected (the message names one vertex per component).
    static Graph build(int vertex_count, std::span<const std::pair<VertexId, VertexId>> edges);
    static Graph build(int vertex_count, const std::vector<std::pair<VertexId, VertexId>>& edges) {
        return build(vertex_count, std::span<const std::pair<VertexId, VertexId>>(edges));
    }

    int vertex_count() const { return vertex_count_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const Edge& edge(EdgeId e) const { return edges_[static_cast<std::size_t>(e)]; }
    std::span<const Edge> edges() const { return edges_; }
    std::span<const Incidence> incident(VertexId v) const;
    int degree(VertexId v) const { return static_cast<int>(incident(v).size()); }

    /// No vertex whose removal disconnects the graph (and at least 3 vertices
    /// or a single parallel class of edges). Reported, never enforced.
    bool is_two_connected() const;

    std::vector<std::pair<VertexId, VertexId>> edge_list() const;

private:
    int vertex_count_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::size_t> offsets_;
    std::vector<Incidence> adjacency_;
};

/// Component label per vertex after deleting the edges flagged in `removed`
/// (may be empty). Labels are 0..k-1 in order of smallest vertex.
std::vector<int> component_labels(const Graph& g, const std::vector<bool>& removed, int* component_count = nullptr);

/// Dense hop-count matrix. Entries are small unsigned integers; unreachable
/// pairs cannot occur because graphs are connected.
class DistanceTable {
public:
    using value_type = std::uint16_t;

    DistanceTable() = default;
    explicit DistanceTable(int n) : n_(n), dist_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0) {}

    int size() const { return n_; }
    value_type operator()(VertexId u, VertexId v) const { return dist_[index(u, v)]; }
    value_type& at(VertexId u, VertexId v) { return dist_[index(u, v)]; }
    std::span<const value_type> row(VertexId u) const {
        return {dist_.data() + index(u, 0), static_cast<std::size_t>(n_)};
    }
    std::span<value_type> row(VertexId u) { return {dist_.data() + index(u, 0), static_cast<std::size_t>(n_)}; }

    friend bool operator==(const DistanceTable&, const DistanceTable&) = default;

private:
    std::size_t index(VertexId u, VertexId v) const {
        return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v);
    }

    int n_ = 0;
    std::vector<value_type> dist_;
};

/// Single-source BFS into `out` (resized to vertex_count).
void bfs_distances(const Graph& g, VertexId source, std::vector<std::uint32_t>& out);

DistanceTable all_pairs_distances(const Graph& g);

struct BipartiteCheck {
    /// 0/1 color per vertex when the graph is bipartite.
    std::optional<std::vector<std::uint8_t>> coloring;
    /// Closed walk of odd length (vertex sequence, first vertex not repeated)
    /// when it is not.
    std::vector<VertexId> odd_cycle;

    explicit operator bool() const { return coloring.has_value(); }
};

BipartiteCheck is_bipartite(const Graph& g);

/// Which endpoint the first child of an edge attaches to.
enum class ChildConvention {
    low_endpoint_first,   // child 2e touches min(u, v)
    high_endpoint_first,  // child 2e touches max(u, v)
};

/// G' obtained by placing a midpoint on every edge. Vertex n+e is the
/// midpoint of edge e; children of e are the edges 2e and 2e+1 of G'.
struct Subdivision {
    Graph prime;
    int original_vertex_count = 0;
    ChildConvention convention = ChildConvention::low_endpoint_first;

    VertexId midpoint_of(EdgeId e) const { return original_vertex_count + e; }
    static constexpr EdgeId child(EdgeId e, int which) { return 2 * e + which; }
    static constexpr EdgeId parent_of(EdgeId child_edge) { return child_edge / 2; }
    /// Original vertex the child edge touches.
    VertexId anchor_of(EdgeId child_edge) const;
};

Subdivision subdivide(const Graph& g, ChildConvention convention = ChildConvention::low_endpoint_first);

}  // namespace convexcuts
