#include "doctest.h"

#include <algorithm>

#include "convexcuts/generators.hpp"
#include "convexcuts/plane_embedding.hpp"
#include "oracles.hpp"

using namespace convexcuts;

namespace {

int bounded_face_of_size(const PlaneEmbedding& emb, int size) {
    for (int f = 0; f < emb.face_count(); ++f)
        if (f != emb.outer_face() && emb.face(f).size() == size) return f;
    return -1;
}

}  // namespace

TEST_CASE("face counts") {
    auto c4 = make_cycle(4);
    CHECK(c4.embedding->face_count() == 2);
    for (const auto& f : c4.embedding->faces()) CHECK(f.size() == 4);

    auto k4 = make_complete(4);
    CHECK(k4.embedding->face_count() == 4);
    for (const auto& f : k4.embedding->faces()) CHECK(f.size() == 3);

    auto grid = make_grid(3, 3);
    const auto& emb = *grid.embedding;
    CHECK(emb.face_count() == 5);
    CHECK(emb.face(emb.outer_face()).size() == 8);
    CHECK(emb.face(emb.outer_face()).is_outer);
}

TEST_CASE("boundary walks close up and cover every edge side once") {
    for (const auto& gg : testsupport::plane_corpus()) {
        CAPTURE(gg.name);
        const auto& emb = *gg.embedding;
        const Graph& g = gg.graph;
        int total = 0;
        for (int f = 0; f < emb.face_count(); ++f) {
            const auto& bd = emb.face(f).boundary;
            total += static_cast<int>(bd.size());
            for (std::size_t i = 0; i < bd.size(); ++i) {
                CHECK(bd[i].to == bd[(i + 1) % bd.size()].from);
                CHECK(g.edge(bd[i].edge).has(bd[i].from));
                CHECK(emb.position_in_face(f, bd[i].edge) == static_cast<int>(i));
            }
        }
        CHECK(total == 2 * g.edge_count());
        CHECK(g.vertex_count() - g.edge_count() + emb.face_count() == 2);
        for (EdgeId e = 0; e < g.edge_count(); ++e) CHECK(emb.edge_faces(e)[0] != emb.edge_faces(e)[1]);
    }
}

TEST_CASE("outer face selection") {
    auto c5 = make_cycle(5).graph;
    std::vector<std::vector<EdgeId>> rot{{4, 0}, {0, 1}, {1, 2}, {2, 3}, {3, 4}};
    auto guessed = trace_faces(c5, rot);
    CHECK_FALSE(guessed.warnings().empty());
    auto hinted = trace_faces(c5, rot, std::vector<EdgeId>{0, 1, 2, 3, 4});
    CHECK(hinted.warnings().empty());
    CHECK_THROWS_AS(trace_faces(c5, rot, std::vector<EdgeId>{0, 1}), EmbeddingError);

    // grid drawing: the default picks the 8-edge boundary without complaint
    auto grid = make_grid(3, 3);
    auto regrown = trace_faces(grid.graph, grid.embedding->rotations());
    CHECK(regrown.warnings().empty());
    CHECK(regrown.face(regrown.outer_face()).size() == 8);
}

TEST_CASE("invalid rotation systems") {
    auto k4 = make_complete(4);
    auto rot = k4.embedding->rotations();
    std::swap(rot[0][0], rot[0][1]);
    // one swapped pair at the centre leaves n - m + f != 2
    CHECK_THROWS_AS(trace_faces(k4.graph, rot), EmbeddingError);

    auto bad = k4.embedding->rotations();
    bad[1].pop_back();
    CHECK_THROWS_AS(trace_faces(k4.graph, bad), EmbeddingError);

    auto path = make_path(3).graph;
    CHECK_THROWS_AS(trace_faces(path, {{0}, {0, 1}, {1}}), EmbeddingError);
}

TEST_CASE("opposite edges by position") {
    auto c6 = make_cycle(6);
    const auto& e6 = *c6.embedding;
    int hex = bounded_face_of_size(e6, 6);
    const auto& bd6 = e6.face(hex).boundary;
    auto o = opposite_edges(e6, hex, bd6[0].edge);
    REQUIRE(o.is_unique);
    CHECK(o.unique == bd6[3].edge);

    auto c5 = make_cycle(5);
    const auto& e5 = *c5.embedding;
    int pent = bounded_face_of_size(e5, 5);
    const auto& bd5 = e5.face(pent).boundary;
    auto p = opposite_edges(e5, pent, bd5[0].edge);
    REQUIRE_FALSE(p.is_unique);
    CHECK(p.left == bd5[2].edge);
    CHECK(p.right == bd5[3].edge);

    auto c4 = make_cycle(4);
    const auto& e4 = *c4.embedding;
    int quad = bounded_face_of_size(e4, 4);
    const auto& bd4 = e4.face(quad).boundary;
    CHECK(opposite_edges(e4, quad, bd4[1].edge).unique == bd4[3].edge);

    CHECK_THROWS_AS(opposite_edges(e4, e4.outer_face(), 0), EmbeddingError);
    auto k4 = make_complete(4);
    const auto& ek = *k4.embedding;
    int tri = ek.outer_face() == 0 ? 1 : 0;
    EdgeId missing = -1;
    for (EdgeId e = 0; e < 6; ++e)
        if (ek.position_in_face(tri, e) < 0) missing = e;
    CHECK_THROWS_AS(opposite_edges(ek, tri, missing), EmbeddingError);
}

TEST_CASE("even faces: opposite is an involution") {
    for (int n : {4, 6, 8, 10}) {
        auto c = make_cycle(n);
        const auto& emb = *c.embedding;
        int f = bounded_face_of_size(emb, n);
        for (EdgeId e = 0; e < n; ++e) {
            auto o = opposite_edges(emb, f, e);
            CHECK(opposite_edges(emb, f, o.unique).unique == e);
        }
    }
}

TEST_CASE("odd faces: left of e is exactly when e is right of it") {
    // The left/left version of this law fails for every odd face; the mirror
    // form below is what holds.
    for (int n : {3, 5, 7, 9}) {
        auto c = make_cycle(n);
        const auto& emb = *c.embedding;
        int f = bounded_face_of_size(emb, n);
        for (EdgeId e = 0; e < n; ++e) {
            for (EdgeId g = 0; g < n; ++g) {
                if (g == e) continue;
                auto oe = opposite_edges(emb, f, e);
                auto og = opposite_edges(emb, f, g);
                CHECK((oe.left == g) == (og.right == e));
            }
            auto oe = opposite_edges(emb, f, e);
            CHECK(opposite_edges(emb, f, oe.left).left != e);
        }
    }
}

TEST_CASE("parallel edges bound a digon") {
    auto g = Graph::build(2, {{0, 1}, {0, 1}, {0, 1}});
    auto emb = trace_faces(g, {{0, 1, 2}, {2, 1, 0}});
    CHECK(emb.face_count() == 3);
    int digon = -1;
    for (int f = 0; f < emb.face_count(); ++f)
        if (f != emb.outer_face()) digon = f;
    const auto& bd = emb.face(digon).boundary;
    REQUIRE(bd.size() == 2);
    auto o = opposite_edges(emb, digon, bd[0].edge);
    CHECK(o.is_unique);
    CHECK(o.unique == bd[1].edge);
}

TEST_CASE("reflection keeps the face structure") {
    for (const auto& gg : testsupport::plane_corpus()) {
        CAPTURE(gg.name);
        const auto& emb = *gg.embedding;
        auto mirror = emb.reflected();
        CHECK(mirror.face_count() == emb.face_count());
        auto edge_sets = [](const PlaneEmbedding& x) {
            std::vector<std::vector<EdgeId>> out;
            for (const auto& f : x.faces()) {
                std::vector<EdgeId> es;
                for (const auto& st : f.boundary) es.push_back(st.edge);
                std::sort(es.begin(), es.end());
                out.push_back(es);
            }
            std::sort(out.begin(), out.end());
            return out;
        };
        CHECK(edge_sets(mirror) == edge_sets(emb));
        CHECK(mirror.face(mirror.outer_face()).size() == emb.face(emb.outer_face()).size());
    }
}
