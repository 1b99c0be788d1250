#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "convexcuts/graph.hpp"

namespace convexcuts {

/// Rotation system is not a plane embedding, lists the wrong edges, or the
/// graph has a bridge.
class EmbeddingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// One side of an edge as walked along a face boundary.
struct BoundaryStep {
    EdgeId edge;
    VertexId from;
    VertexId to;
};

struct Face {
    /// Cyclic boundary walk. For bounded faces this order is what the
    /// opposite-edge rules call "clockwise".
    std::vector<BoundaryStep> boundary;
    bool is_outer = false;

    int size() const { return static_cast<int>(boundary.size()); }
    bool is_odd() const { return boundary.size() % 2 == 1; }
};

enum class OppositeKind { unique, left, right };

/// Result of an opposite-edge query on a bounded face.
struct OppositeEdges {
    bool is_unique = false;
    EdgeId unique = -1;  // valid when is_unique
    EdgeId left = -1;    // valid when !is_unique
    EdgeId right = -1;
};

/// Combinatorial plane embedding: clockwise rotation system, traced faces,
/// designated outer face.
class PlaneEmbedding {
public:
    PlaneEmbedding() = default;

    const Graph& graph() const { return graph_; }
    std::span<const EdgeId> rotation(VertexId v) const { return rotation_[static_cast<std::size_t>(v)]; }
    const std::vector<std::vector<EdgeId>>& rotations() const { return rotation_; }

    int face_count() const { return static_cast<int>(faces_.size()); }
    const Face& face(int f) const { return faces_[static_cast<std::size_t>(f)]; }
    std::span<const Face> faces() const { return faces_; }
    int outer_face() const { return outer_; }

    /// Faces on the two sides of e: [0] is the face walking u->v, [1] the
    /// face walking v->u (u, v as stored in the edge).
    std::array<int, 2> edge_faces(EdgeId e) const { return edge_faces_[static_cast<std::size_t>(e)]; }
    int other_face(EdgeId e, int face) const;
    bool on_outer_face(EdgeId e) const;
    /// Position of e in the boundary of face, or -1.
    int position_in_face(int face, EdgeId e) const;

    /// Same graph with every rotation reversed; the outer face keeps its edge set.
    PlaneEmbedding reflected() const;

    /// Set when the outer face was chosen by the longest-boundary default.
    const std::vector<std::string>& warnings() const { return warnings_; }

    friend PlaneEmbedding trace_faces(const Graph& graph, std::vector<std::vector<EdgeId>> rotation,
                                      std::optional<std::vector<EdgeId>> outer_boundary);

private:
    Graph graph_;
    std::vector<std::vector<EdgeId>> rotation_;
    std::vector<Face> faces_;
    int outer_ = -1;
    std::vector<std::array<int, 2>> edge_faces_;
    std::vector<std::array<int, 2>> edge_positions_;
    std::vector<std::string> warnings_;
};

/// Walks the faces of a rotation system.
///
/// `outer_boundary`, when given, names the outer face by its boundary edge
/// set (any order). Otherwise the face with the longest boundary is chosen;
/// ties go to the smallest face index and a warning is recorded.
///
/// Throws EmbeddingError if a rotation does not list exactly the incident
/// edges of its vertex, the Euler check n - m + f = 2 fails, an edge bounds
/// the same face on both sides (bridge), or no face matches the hint.
PlaneEmbedding trace_faces(const Graph& graph, std::vector<std::vector<EdgeId>> rotation,
                           std::optional<std::vector<EdgeId>> outer_boundary = std::nullopt);

/// Opposite edge(s) of e on a bounded face. Even face: the edge splitting
/// the rest of the boundary into two equal paths. Odd face: the left
/// opposite sits (k-1)/2 steps after e in boundary order (shorter path
/// first), the right one (k+1)/2 steps after.
///
/// Throws EmbeddingError for the outer face or when e is not on the face.
OppositeEdges opposite_edges(const PlaneEmbedding& emb, int face, EdgeId e);

}  // namespace convexcuts
