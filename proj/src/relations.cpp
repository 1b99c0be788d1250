#include "convexcuts/relations.hpp"

#include <stdexcept>
#include <string>

namespace convexcuts {

namespace {

template <class Dist>
bool djokovic_from_rows(const Edge& f, const Dist& to_x, const Dist& to_y) {
    auto fu = static_cast<std::size_t>(f.u);
    auto fv = static_cast<std::size_t>(f.v);
    return (to_x[fu] < to_y[fu] && to_y[fv] < to_x[fv]) || (to_y[fu] < to_x[fu] && to_x[fv] < to_y[fv]);
}

}  // namespace

std::vector<VertexId> half_space(const Graph& g, const DistanceTable& dist, VertexId x, VertexId y) {
    std::vector<VertexId> out;
    for (VertexId w = 0; w < g.vertex_count(); ++w) {
        if (dist(w, x) < dist(w, y)) out.push_back(w);
    }
    return out;
}

bool djokovic_related(const Graph& g, const DistanceTable& dist, EdgeId e, EdgeId f) {
    const Edge& ee = g.edge(e);
    return djokovic_from_rows(g.edge(f), dist.row(ee.u), dist.row(ee.v));
}

bool tau_related(const Graph& g, const DistanceTable& dist, EdgeId e, EdgeId f) {
    const Edge& a = g.edge(e);
    const Edge& b = g.edge(f);
    auto d = dist(a.u, b.u);
    return dist(a.v, b.v) == d && dist(a.u, b.v) == d && dist(a.v, b.u) == d;
}

std::vector<EdgeId> edge_cut_set(const Graph& g, EdgeId e) {
    if (!is_bipartite(g)) throw GraphError("edge_cut_set requires a bipartite graph");
    std::vector<std::uint32_t> to_a, to_b;
    bfs_distances(g, g.edge(e).u, to_a);
    bfs_distances(g, g.edge(e).v, to_b);
    std::vector<EdgeId> out;
    for (EdgeId f = 0; f < g.edge_count(); ++f) {
        if (djokovic_from_rows(g.edge(f), to_a, to_b)) out.push_back(f);
    }
    return out;
}

CompatibilityMatrices build_compatibility_matrices(const Graph& g, const Subdivision& sub) {
    return build_compatibility_matrices(g, all_pairs_distances(g), sub, all_pairs_distances(sub.prime));
}

CompatibilityMatrices build_compatibility_matrices(const Graph& g, const DistanceTable& dist, const Subdivision& sub,
                                                   const DistanceTable& prime_dist) {
    const int m = g.edge_count();
    CompatibilityMatrices mats{BitMatrix(m), BitMatrix(2 * m)};
    for (EdgeId e = 0; e < m; ++e) {
        for (EdgeId f = e + 1; f < m; ++f) {
            if (tau_related(g, dist, e, f)) {
                mats.tau.set(e, f);
                mats.tau.set(f, e);
            }
        }
    }
    const Graph& prime = sub.prime;
    for (EdgeId c = 0; c < 2 * m; ++c) {
        const Edge& ce = prime.edge(c);
        auto to_x = prime_dist.row(ce.u);
        auto to_y = prime_dist.row(ce.v);
        for (EdgeId d = c; d < 2 * m; ++d) {
            if (djokovic_from_rows(prime.edge(d), to_x, to_y)) {
                mats.theta_prime.set(c, d);
                mats.theta_prime.set(d, c);
            }
        }
    }
    for (EdgeId e = 0; e < m; ++e) {
        for (EdgeId f = e + 1; f < m; ++f) {
            if (mats.tau.get(e, f) && mats.children_related(e, f)) {
                throw std::logic_error("edges " + std::to_string(e) + " and " + std::to_string(f) +
                                       " are tau-related but have theta'-related children");
            }
        }
    }
    return mats;
}

bool compatible(const CompatibilityMatrices& mats, EdgeId e, EdgeId f) {
    if (e == f) throw std::invalid_argument("compatible() needs two distinct edges");
    return mats.compatible_unchecked(e, f);
}

}  // namespace convexcuts
