#include "doctest.h"

#include <algorithm>

#include "convexcuts/generators.hpp"
#include "convexcuts/relations.hpp"
#include "oracles.hpp"

using namespace convexcuts;

namespace {

// Eq. (2) written out against Floyd-Warshall distances.
bool theta_fw(const Graph& g, const std::vector<std::vector<int>>& d, EdgeId e, EdgeId f) {
    auto [x, y] = g.edge(e);
    auto [u, v] = g.edge(f);
    return (d[u][x] < d[u][y] && d[v][y] < d[v][x]) || (d[v][x] < d[v][y] && d[u][y] < d[u][x]);
}

std::vector<GeneratedGraph> corpus() {
    auto out = testsupport::plane_corpus();
    out.push_back(make_hypercube(3));
    out.push_back(make_complete(5));
    out.push_back(make_complete_bipartite(2, 3));
    out.push_back(make_complete_bipartite(3, 3));
    for (std::uint64_t s = 0; s < 10; ++s) out.push_back(make_random(9, 13, s));
    return out;
}

}  // namespace

TEST_CASE("Djokovic relation on C4") {
    auto g = make_cycle(4).graph;
    auto d = all_pairs_distances(g);
    CHECK(djokovic_related(g, d, 0, 2));
    CHECK_FALSE(djokovic_related(g, d, 0, 1));
    for (EdgeId e = 0; e < 4; ++e) CHECK(djokovic_related(g, d, e, e));
    auto w01 = half_space(g, d, 0, 1);
    auto w10 = half_space(g, d, 1, 0);
    CHECK(w01 == std::vector<VertexId>{0, 3});
    CHECK(w10 == std::vector<VertexId>{1, 2});
}

TEST_CASE("cut-sets C_e") {
    CHECK(edge_cut_set(make_cycle(6).graph, 0) == std::vector<EdgeId>{0, 3});

    auto q3 = make_hypercube(3).graph;
    for (EdgeId e = 0; e < q3.edge_count(); ++e) {
        auto ce = edge_cut_set(q3, e);
        REQUIRE(ce.size() == 4);
        auto dir = q3.edge(e).u ^ q3.edge(e).v;
        for (EdgeId f : ce) CHECK((q3.edge(f).u ^ q3.edge(f).v) == dir);
    }

    for (const auto& t : testsupport::unlabeled_trees(7))
        for (EdgeId e = 0; e < t.edge_count(); ++e) CHECK(edge_cut_set(t, e) == std::vector<EdgeId>{e});

    CHECK_THROWS_AS(edge_cut_set(make_cycle(5).graph, 0), GraphError);
}

TEST_CASE("tau relation") {
    auto k4 = make_complete(4).graph;
    auto dk = all_pairs_distances(k4);
    std::vector<std::pair<EdgeId, EdgeId>> related;
    for (EdgeId e = 0; e < 6; ++e)
        for (EdgeId f = e + 1; f < 6; ++f)
            if (tau_related(k4, dk, e, f)) related.emplace_back(e, f);
    // lexicographic K4 edges: the disjoint pairs are 01|23, 02|13, 03|12
    CHECK(related == std::vector<std::pair<EdgeId, EdgeId>>{{0, 5}, {1, 4}, {2, 3}});

    auto c6 = make_cycle(6).graph;
    auto d6 = all_pairs_distances(c6);
    CHECK_FALSE(tau_related(c6, d6, 0, 3));
    CHECK_FALSE(tau_related(c6, d6, 0, 1));
}

TEST_CASE("compatibility matrices") {
    auto k4 = make_complete(4).graph;
    auto mk = build_compatibility_matrices(k4, subdivide(k4));
    for (EdgeId e = 0; e < 6; ++e) {
        CHECK_FALSE(mk.tau.get(e, e));
        for (EdgeId f = 0; f < 6; ++f) CHECK(mk.tau.get(e, f) == (e + f == 5));
    }

    auto c6 = make_cycle(6).graph;
    auto m6 = build_compatibility_matrices(c6, subdivide(c6));
    CHECK(m6.children_related(0, 3));
    CHECK(compatible(m6, 0, 3));
    CHECK(m6.theta_prime.get(0, 0));
    CHECK_THROWS_AS(compatible(m6, 2, 2), std::invalid_argument);

    auto c5 = make_cycle(5).graph;
    auto m5 = build_compatibility_matrices(c5, subdivide(c5));
    CHECK(compatible(m5, 1, 4));
    CHECK(compatible(m5, 0, 2));
    CHECK_FALSE(compatible(m5, 0, 1));
}

TEST_CASE("relations agree with Floyd-Warshall, theta symmetric, Lemma 5.2 exclusivity") {
    for (const auto& gg : corpus()) {
        CAPTURE(gg.name);
        const Graph& g = gg.graph;
        auto d = all_pairs_distances(g);
        auto fw = testsupport::floyd_warshall(g);
        auto sub = subdivide(g);
        auto fw2 = testsupport::floyd_warshall(sub.prime);
        auto mats = build_compatibility_matrices(g, sub);
        const int m = g.edge_count();
        for (EdgeId e = 0; e < m; ++e) {
            for (EdgeId f = 0; f < m; ++f) {
                bool th = djokovic_related(g, d, e, f);
                REQUIRE(th == theta_fw(g, fw, e, f));
                CHECK(th == djokovic_related(g, d, f, e));
                auto [a, b] = g.edge(e);
                auto [u, v] = g.edge(f);
                bool tau = fw[a][u] == fw[b][v] && fw[a][v] == fw[b][u] && fw[a][u] == fw[a][v];
                CHECK(tau_related(g, d, e, f) == tau);
                CHECK(mats.tau.get(e, f) == tau);
                bool kids = false;
                for (int i = 0; i < 2; ++i)
                    for (int j = 0; j < 2; ++j) {
                        bool r = theta_fw(sub.prime, fw2, 2 * e + i, 2 * f + j);
                        CHECK(mats.theta_prime.get(2 * e + i, 2 * f + j) == r);
                        kids = kids || r;
                    }
                CHECK(mats.children_related(e, f) == kids);
                if (e != f) CHECK_FALSE((tau && kids));
            }
        }
    }
}

TEST_CASE("half-spaces cover V exactly for bipartite graphs") {
    for (const auto& gg : corpus()) {
        CAPTURE(gg.name);
        const Graph& g = gg.graph;
        auto d = all_pairs_distances(g);
        bool bip = static_cast<bool>(is_bipartite(g));
        bool all_cover = true;
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            auto [x, y] = g.edge(e);
            auto a = half_space(g, d, x, y);
            auto b = half_space(g, d, y, x);
            std::vector<VertexId> both;
            std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
            CHECK(both.empty());
            all_cover = all_cover && static_cast<int>(a.size() + b.size()) == g.vertex_count();
        }
        CHECK(all_cover == bip);
    }
}

TEST_CASE("C_e leaves two connected halves") {
    std::vector<GeneratedGraph> gs{make_cycle(8), make_hypercube(3), make_grid(3, 4), make_complete_bipartite(2, 3)};
    for (std::uint64_t s = 0; s < 10; ++s) gs.push_back(make_random_bipartite(12, 18, s));
    for (const auto& gg : gs) {
        const Graph& g = gg.graph;
        auto d = all_pairs_distances(g);
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            auto ce = edge_cut_set(g, e);
            std::vector<bool> removed(static_cast<std::size_t>(g.edge_count()), false);
            for (EdgeId f : ce) removed[f] = true;
            int k = 0;
            component_labels(g, removed, &k);
            CHECK(k == 2);
        }
    }
}
