#include "convexcuts/plane_embedding.hpp"

#include <algorithm>
#include <sstream>

namespace convexcuts {

namespace {

// Darts: 2e walks u->v, 2e+1 walks v->u.
VertexId dart_head(const Graph& g, int dart) {
    const Edge& e = g.edge(dart / 2);
    return dart % 2 == 0 ? e.v : e.u;
}

VertexId dart_tail(const Graph& g, int dart) {
    const Edge& e = g.edge(dart / 2);
    return dart % 2 == 0 ? e.u : e.v;
}

int leaving_dart(const Graph& g, EdgeId e, VertexId from) {
    return g.edge(e).u == from ? 2 * e : 2 * e + 1;
}

}  // namespace

PlaneEmbedding trace_faces(const Graph& graph, std::vector<std::vector<EdgeId>> rotation,
                           std::optional<std::vector<EdgeId>> outer_boundary) {
    const int n = graph.vertex_count();
    const int m = graph.edge_count();
    if (static_cast<int>(rotation.size()) != n) {
        throw EmbeddingError("rotation system covers " + std::to_string(rotation.size()) + " vertices, graph has " +
                             std::to_string(n));
    }

    // Index of each (vertex, edge) incidence inside the rotation. Position
    // [2e] is e's slot at u, [2e+1] its slot at v.
    std::vector<int> slot(static_cast<std::size_t>(2 * m), -1);
    for (VertexId v = 0; v < n; ++v) {
        const auto& rot = rotation[static_cast<std::size_t>(v)];
        if (static_cast<int>(rot.size()) != graph.degree(v)) {
            std::ostringstream msg;
            msg << "rotation at vertex " << v << " lists " << rot.size() << " edges, degree is " << graph.degree(v);
            throw EmbeddingError(msg.str());
        }
        for (std::size_t i = 0; i < rot.size(); ++i) {
            EdgeId e = rot[i];
            if (e < 0 || e >= m || !graph.edge(e).has(v)) {
                std::ostringstream msg;
                msg << "rotation at vertex " << v << " lists edge " << e << " which is not incident to it";
                throw EmbeddingError(msg.str());
            }
            int which = graph.edge(e).u == v ? 0 : 1;
            auto& s = slot[static_cast<std::size_t>(2 * e + which)];
            if (s >= 0) {
                std::ostringstream msg;
                msg << "rotation at vertex " << v << " lists edge " << e << " twice";
                throw EmbeddingError(msg.str());
            }
            s = static_cast<int>(i);
        }
    }

    PlaneEmbedding emb;
    emb.graph_ = graph;
    emb.rotation_ = std::move(rotation);

    std::vector<int> dart_face(static_cast<std::size_t>(2 * m), -1);
    for (int start = 0; start < 2 * m; ++start) {
        if (dart_face[static_cast<std::size_t>(start)] >= 0) continue;
        int face_id = static_cast<int>(emb.faces_.size());
        Face face;
        int d = start;
        do {
            dart_face[static_cast<std::size_t>(d)] = face_id;
            face.boundary.push_back({d / 2, dart_tail(graph, d), dart_head(graph, d)});
            VertexId at = dart_head(graph, d);
            EdgeId e = d / 2;
            int which = graph.edge(e).u == at ? 0 : 1;
            const auto& rot = emb.rotation_[static_cast<std::size_t>(at)];
            int idx = slot[static_cast<std::size_t>(2 * e + which)];
            EdgeId next = rot[static_cast<std::size_t>((idx + 1) % static_cast<int>(rot.size()))];
            d = leaving_dart(graph, next, at);
        } while (d != start);
        emb.faces_.push_back(std::move(face));
    }

    const int f = static_cast<int>(emb.faces_.size());
    if (n - m + f != 2) {
        std::ostringstream msg;
        msg << "rotation system is not planar: n - m + f = " << n << " - " << m << " + " << f << " = " << (n - m + f)
            << ", expected 2";
        throw EmbeddingError(msg.str());
    }

    emb.edge_faces_.resize(static_cast<std::size_t>(m));
    emb.edge_positions_.assign(static_cast<std::size_t>(m), {-1, -1});
    for (EdgeId e = 0; e < m; ++e) {
        int a = dart_face[static_cast<std::size_t>(2 * e)];
        int b = dart_face[static_cast<std::size_t>(2 * e + 1)];
        if (a == b) {
            throw EmbeddingError("edge " + std::to_string(e) + " is a bridge (same face on both sides)");
        }
        emb.edge_faces_[static_cast<std::size_t>(e)] = {a, b};
    }
    for (int fi = 0; fi < f; ++fi) {
        const auto& bd = emb.faces_[static_cast<std::size_t>(fi)].boundary;
        for (std::size_t p = 0; p < bd.size(); ++p) {
            EdgeId e = bd[p].edge;
            int side = emb.edge_faces_[static_cast<std::size_t>(e)][0] == fi ? 0 : 1;
            emb.edge_positions_[static_cast<std::size_t>(e)][static_cast<std::size_t>(side)] = static_cast<int>(p);
        }
    }

    if (outer_boundary) {
        std::vector<EdgeId> want = *outer_boundary;
        std::sort(want.begin(), want.end());
        for (int fi = 0; fi < f && emb.outer_ < 0; ++fi) {
            std::vector<EdgeId> have;
            for (const auto& st : emb.faces_[static_cast<std::size_t>(fi)].boundary) have.push_back(st.edge);
            std::sort(have.begin(), have.end());
            if (have == want) emb.outer_ = fi;
        }
        if (emb.outer_ < 0) {
            throw EmbeddingError("outer face hint does not match any traced face");
        }
    } else {
        int best = 0;
        int ties = 0;
        for (int fi = 0; fi < f; ++fi) {
            int len = emb.faces_[static_cast<std::size_t>(fi)].size();
            int best_len = emb.faces_[static_cast<std::size_t>(best)].size();
            if (len > best_len) {
                best = fi;
                ties = 0;
            } else if (len == best_len && fi != best) {
                ++ties;
            }
        }
        emb.outer_ = best;
        if (ties > 0) {
            emb.warnings_.push_back("outer face not specified; " + std::to_string(ties + 1) +
                                    " faces share the longest boundary, picked face " + std::to_string(best));
        }
    }
    emb.faces_[static_cast<std::size_t>(emb.outer_)].is_outer = true;
    return emb;
}

int PlaneEmbedding::other_face(EdgeId e, int face) const {
    const auto& fs = edge_faces_[static_cast<std::size_t>(e)];
    return fs[0] == face ? fs[1] : fs[0];
}

bool PlaneEmbedding::on_outer_face(EdgeId e) const {
    const auto& fs = edge_faces_[static_cast<std::size_t>(e)];
    return fs[0] == outer_ || fs[1] == outer_;
}

int PlaneEmbedding::position_in_face(int face, EdgeId e) const {
    const auto& fs = edge_faces_[static_cast<std::size_t>(e)];
    if (fs[0] == face) return edge_positions_[static_cast<std::size_t>(e)][0];
    if (fs[1] == face) return edge_positions_[static_cast<std::size_t>(e)][1];
    return -1;
}

PlaneEmbedding PlaneEmbedding::reflected() const {
    auto rot = rotation_;
    for (auto& r : rot) std::reverse(r.begin(), r.end());
    std::vector<EdgeId> outer;
    for (const auto& st : faces_[static_cast<std::size_t>(outer_)].boundary) outer.push_back(st.edge);
    return trace_faces(graph_, std::move(rot), std::move(outer));
}

OppositeEdges opposite_edges(const PlaneEmbedding& emb, int face, EdgeId e) {
    if (face < 0 || face >= emb.face_count()) {
        throw EmbeddingError("face index " + std::to_string(face) + " out of range");
    }
    if (face == emb.outer_face()) {
        throw EmbeddingError("opposite edges are undefined on the outer face");
    }
    int p = emb.position_in_face(face, e);
    if (p < 0) {
        throw EmbeddingError("edge " + std::to_string(e) + " does not bound face " + std::to_string(face));
    }
    const auto& bd = emb.face(face).boundary;
    const int k = static_cast<int>(bd.size());
    OppositeEdges out;
    if (k % 2 == 0) {
        out.is_unique = true;
        out.unique = bd[static_cast<std::size_t>((p + k / 2) % k)].edge;
    } else {
        out.left = bd[static_cast<std::size_t>((p + (k - 1) / 2) % k)].edge;
        out.right = bd[static_cast<std::size_t>((p + (k + 1) / 2) % k)].edge;
    }
    return out;
}

}  // namespace convexcuts
