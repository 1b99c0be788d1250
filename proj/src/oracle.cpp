#include "convexcuts/oracle.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

#include "convexcuts/relations.hpp"

namespace convexcuts {

VertexPartition VertexPartition::from_mask(const std::vector<bool>& in_first) {
    VertexPartition p;
    const bool flip = !in_first.empty() && !in_first[0];
    for (std::size_t v = 0; v < in_first.size(); ++v) {
        (in_first[v] != flip ? p.first : p.second).push_back(static_cast<VertexId>(v));
    }
    return p;
}

std::vector<bool> VertexPartition::mask(int vertex_count) const {
    std::vector<bool> m(static_cast<std::size_t>(vertex_count), false);
    for (VertexId v : first) m[static_cast<std::size_t>(v)] = true;
    return m;
}

std::optional<VertexPartition> partition_from_cut_set(const Graph& g, const std::vector<EdgeId>& cut_edges) {
    std::vector<bool> removed(static_cast<std::size_t>(g.edge_count()), false);
    for (EdgeId e : cut_edges) removed[static_cast<std::size_t>(e)] = true;
    int count = 0;
    auto labels = component_labels(g, removed, &count);
    if (count != 2) return std::nullopt;
    std::vector<bool> side(labels.size());
    for (std::size_t v = 0; v < labels.size(); ++v) side[v] = labels[v] == 0;
    return VertexPartition::from_mask(side);
}

std::vector<EdgeId> cut_set_of(const Graph& g, const VertexPartition& p) {
    auto side = p.mask(g.vertex_count());
    std::vector<EdgeId> out;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        if (side[static_cast<std::size_t>(ed.u)] != side[static_cast<std::size_t>(ed.v)]) out.push_back(e);
    }
    return out;
}

ConvexityVerdict is_convex_set(const Graph& g, const DistanceTable& dist, const std::vector<bool>& side) {
    const int n = g.vertex_count();
    std::vector<VertexId> by_distance(static_cast<std::size_t>(n));
    std::vector<int> bucket_start;
    // target[w]: some member of `side` reachable from w by moving strictly
    // away from the current source, or -1.
    std::vector<VertexId> target(static_cast<std::size_t>(n));
    for (VertexId u = 0; u < n; ++u) {
        if (!side[static_cast<std::size_t>(u)]) continue;
        auto du = dist.row(u);
        int far = 0;
        for (VertexId w = 0; w < n; ++w) far = std::max<int>(far, du[static_cast<std::size_t>(w)]);
        bucket_start.assign(static_cast<std::size_t>(far) + 2, 0);
        for (VertexId w = 0; w < n; ++w) ++bucket_start[du[static_cast<std::size_t>(w)] + 1U];
        for (std::size_t k = 1; k < bucket_start.size(); ++k) bucket_start[k] += bucket_start[k - 1];
        {
            auto fill = bucket_start;
            for (VertexId w = 0; w < n; ++w) {
                by_distance[static_cast<std::size_t>(fill[du[static_cast<std::size_t>(w)]]++)] = w;
            }
        }
        for (auto it = by_distance.rbegin(); it != by_distance.rend(); ++it) {
            VertexId w = *it;
            auto sw = static_cast<std::size_t>(w);
            if (side[sw]) {
                target[sw] = w;
                continue;
            }
            target[sw] = -1;
            for (const Incidence& in : g.incident(w)) {
                auto so = static_cast<std::size_t>(in.other);
                if (du[so] == du[sw] + 1 && target[so] >= 0) {
                    target[sw] = target[so];
                    break;
                }
            }
            if (target[sw] >= 0) {
                return {false, ConvexityWitness{u, w, target[sw]}};
            }
        }
    }
    return {true, std::nullopt};
}

ConvexityVerdict is_convex_cut(const Graph& g, const DistanceTable& dist, const VertexPartition& p) {
    const int n = g.vertex_count();
    if (p.first.empty() || p.second.empty() || static_cast<int>(p.first.size() + p.second.size()) != n) {
        throw std::invalid_argument("partition sides must be nonempty and cover every vertex");
    }
    std::vector<int> seen(static_cast<std::size_t>(n), 0);
    for (VertexId v : p.first) {
        if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]++) throw std::invalid_argument("invalid partition");
    }
    for (VertexId v : p.second) {
        if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]++) throw std::invalid_argument("invalid partition");
    }
    auto side = p.mask(n);
    auto first = is_convex_set(g, dist, side);
    if (!first) return first;
    side.flip();
    return is_convex_set(g, dist, side);
}

namespace {

class ConnectedSetWalker {
public:
    ConnectedSetWalker(const Graph& g, const DistanceTable& dist) : g_(g), dist_(dist), n_(g.vertex_count()) {
        neighbours_.assign(static_cast<std::size_t>(n_), 0);
        for (VertexId v = 0; v < n_; ++v)
            for (const Incidence& in : g.incident(v)) neighbours_[static_cast<std::size_t>(v)] |= bit(in.other);
        full_ = n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
    }

    std::vector<VertexPartition> run() {
        grow(bit(0), neighbours_[0], 0);
        std::sort(found_.begin(), found_.end());
        return std::move(found_);
    }

private:
    static std::uint64_t bit(VertexId v) { return std::uint64_t{1} << v; }

    bool connected(std::uint64_t set) const {
        if (!set) return false;
        std::uint64_t reached = set & (~set + 1);
        std::uint64_t frontier = reached;
        while (frontier) {
            std::uint64_t next = 0;
            for (std::uint64_t f = frontier; f; f &= f - 1) {
                next |= neighbours_[static_cast<std::size_t>(std::countr_zero(f))];
            }
            next &= set & ~reached;
            reached |= next;
            frontier = next;
        }
        return reached == set;
    }

    void visit(std::uint64_t set) {
        std::uint64_t rest = full_ & ~set;
        if (!rest || !connected(rest)) return;
        std::vector<bool> side(static_cast<std::size_t>(n_));
        for (VertexId v = 0; v < n_; ++v) side[static_cast<std::size_t>(v)] = (set >> v) & 1U;
        if (!is_convex_set(g_, dist_, side)) return;
        side.flip();
        if (!is_convex_set(g_, dist_, side)) return;
        side.flip();
        found_.push_back(VertexPartition::from_mask(side));
    }

    // Each connected set containing vertex 0 is produced exactly once:
    // candidates are tried in order and excluded from later siblings.
    void grow(std::uint64_t set, std::uint64_t candidates, std::uint64_t excluded) {
        visit(set);
        while (candidates) {
            std::uint64_t w = candidates & (~candidates + 1);
            candidates &= ~w;
            auto wi = static_cast<std::size_t>(std::countr_zero(w));
            std::uint64_t next = (candidates | neighbours_[wi]) & ~(set | w | excluded);
            grow(set | w, next, excluded);
            excluded |= w;
        }
    }

    const Graph& g_;
    const DistanceTable& dist_;
    int n_;
    std::uint64_t full_ = 0;
    std::vector<std::uint64_t> neighbours_;
    std::vector<VertexPartition> found_;
};

}  // namespace

std::vector<VertexPartition> enumerate_convex_cuts_bruteforce(const Graph& g, const BruteForceOptions& options) {
    const int cap = std::min(options.max_vertices, 63);
    if (g.vertex_count() > cap) {
        throw std::length_error("brute-force enumeration limited to " + std::to_string(cap) + " vertices, graph has " +
                                std::to_string(g.vertex_count()));
    }
    if (g.vertex_count() < 2) return {};
    auto dist = all_pairs_distances(g);
    return ConnectedSetWalker(g, dist).run();
}

std::string PartialCubeVerdict::diagnosis() const {
    std::ostringstream out;
    if (is_partial_cube) {
        out << "partial cube with " << theta_classes.size() << " theta-classes";
    } else if (!odd_cycle.empty()) {
        out << "not bipartite; odd cycle:";
        for (VertexId v : odd_cycle) out << ' ' << v;
    } else if (violation) {
        auto [e, f, h] = *violation;
        out << "theta not transitive: " << e << " theta " << f << ", " << f << " theta " << h << ", but not " << e
            << " theta " << h;
    }
    return out.str();
}

PartialCubeVerdict is_partial_cube(const Graph& g) {
    PartialCubeVerdict verdict;
    auto bip = is_bipartite(g);
    if (!bip) {
        verdict.odd_cycle = bip.odd_cycle;
        return verdict;
    }
    const int m = g.edge_count();
    auto dist = all_pairs_distances(g);
    BitMatrix theta(m);
    for (EdgeId e = 0; e < m; ++e)
        for (EdgeId f = e; f < m; ++f)
            if (djokovic_related(g, dist, e, f)) {
                theta.set(e, f);
                theta.set(f, e);
            }
    const std::size_t words = theta.words_per_row();
    for (EdgeId e = 0; e < m; ++e) {
        for (EdgeId f = 0; f < m; ++f) {
            if (!theta.get(e, f)) continue;
            if (std::equal(theta.row(e), theta.row(e) + words, theta.row(f))) continue;
            for (EdgeId h = 0; h < m; ++h) {
                if (theta.get(f, h) && !theta.get(e, h)) {
                    verdict.violation = std::array<EdgeId, 3>{e, f, h};
                    return verdict;
                }
                if (theta.get(e, h) && !theta.get(f, h)) {
                    verdict.violation = std::array<EdgeId, 3>{f, e, h};
                    return verdict;
                }
            }
        }
    }
    verdict.is_partial_cube = true;
    std::vector<bool> assigned(static_cast<std::size_t>(m), false);
    for (EdgeId e = 0; e < m; ++e) {
        if (assigned[static_cast<std::size_t>(e)]) continue;
        std::vector<EdgeId> cls;
        for (EdgeId f = e; f < m; ++f) {
            if (theta.get(e, f)) {
                cls.push_back(f);
                assigned[static_cast<std::size_t>(f)] = true;
            }
        }
        verdict.theta_classes.push_back(std::move(cls));
    }
    return verdict;
}

std::string HammingLabeling::label_string(VertexId v) const {
    std::string s;
    for (auto b : labels[static_cast<std::size_t>(v)]) s.push_back(b ? '1' : '0');
    return s;
}

int HammingLabeling::hamming_distance(VertexId a, VertexId b) const {
    int d = 0;
    const auto& la = labels[static_cast<std::size_t>(a)];
    const auto& lb = labels[static_cast<std::size_t>(b)];
    for (std::size_t i = 0; i < la.size(); ++i) d += la[i] != lb[i];
    return d;
}

HammingLabeling hamming_labeling(const Graph& g) {
    auto verdict = is_partial_cube(g);
    if (!verdict) throw GraphError("hamming_labeling requires a partial cube: " + verdict.diagnosis());
    auto dist = all_pairs_distances(g);
    HammingLabeling out;
    out.bits = static_cast<int>(verdict.theta_classes.size());
    out.class_edges = verdict.theta_classes;
    out.labels.assign(static_cast<std::size_t>(g.vertex_count()), std::vector<std::uint8_t>(out.class_edges.size(), 0));
    for (std::size_t i = 0; i < out.class_edges.size(); ++i) {
        const Edge& e = g.edge(out.class_edges[i].front());
        const bool zero_near_u = dist(0, e.u) < dist(0, e.v);
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            const bool near_u = dist(v, e.u) < dist(v, e.v);
            out.labels[static_cast<std::size_t>(v)][i] = near_u == zero_near_u ? 0 : 1;
        }
    }
    return out;
}

}  // namespace convexcuts
