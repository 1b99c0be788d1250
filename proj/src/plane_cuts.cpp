#include "convexcuts/plane_cuts.hpp"

#include <algorithm>
#include <sstream>

namespace convexcuts {

bool SearchGraph::has_arc(EdgeId e, EdgeId f) const {
    const auto& out = arcs[static_cast<std::size_t>(e)];
    return std::any_of(out.begin(), out.end(), [f](const Arc& a) { return a.to == f; });
}

std::size_t SearchGraph::arc_count() const {
    std::size_t total = 0;
    for (const auto& out : arcs) total += out.size();
    return total / 2;
}

const char* to_string(CutKind kind) {
    switch (kind) {
        case CutKind::non_cyclic:
            return "non-cyclic";
        case CutKind::cyclic:
            return "cyclic";
        case CutKind::bipartite:
            return "bipartite";
    }
    return "?";
}

std::vector<EdgeId> sorted_edges(const CutSet& cut) {
    auto out = cut.edges;
    std::sort(out.begin(), out.end());
    return out;
}

SearchGraph build_search_graph(const PlaneEmbedding& emb, const CompatibilityMatrices& mats) {
    const Graph& g = emb.graph();
    SearchGraph s;
    s.arcs.resize(static_cast<std::size_t>(g.edge_count()));
    for (int f = 0; f < emb.face_count(); ++f) {
        if (f == emb.outer_face()) continue;
        const auto& bd = emb.face(f).boundary;
        for (std::size_t i = 0; i < bd.size(); ++i) {
            for (std::size_t j = i + 1; j < bd.size(); ++j) {
                EdgeId a = bd[i].edge;
                EdgeId b = bd[j].edge;
                if (mats.children_related(a, b)) {
                    s.arcs[static_cast<std::size_t>(a)].push_back({b, f});
                    s.arcs[static_cast<std::size_t>(b)].push_back({a, f});
                }
            }
        }
    }
    for (auto& out : s.arcs) {
        std::sort(out.begin(), out.end(),
                  [](const SearchGraph::Arc& x, const SearchGraph::Arc& y) { return std::tie(x.face, x.to) < std::tie(y.face, y.to); });
    }
    return s;
}

namespace {

struct Partial {
    std::vector<EdgeId> edges;
    std::vector<int> faces;
    std::vector<bool> crossed;  // bounded faces already used
    int next_face;              // face entered through edges.back()
};

class PlaneSearch {
public:
    PlaneSearch(const PlaneEmbedding& emb, const SearchGraph& search, const CompatibilityMatrices& mats,
                const PlaneCutOptions& options)
        : emb_(emb),
          g_(emb.graph()),
          search_(search),
          mats_(mats),
          options_(options),
          tabu_(static_cast<std::size_t>(g_.edge_count()), false) {
        if (options.verify) dist_ = all_pairs_distances(g_);
    }

    std::vector<CutSet> run() {
        const int m = g_.edge_count();
        const int outer = emb_.outer_face();
        for (EdgeId e0 = 0; e0 < m; ++e0) {
            if (!emb_.on_outer_face(e0)) continue;
            explore(e0, emb_.other_face(e0, outer), false);
            tabu_[static_cast<std::size_t>(e0)] = true;
        }
        for (EdgeId e0 = 0; e0 < m; ++e0) {
            if (emb_.on_outer_face(e0)) continue;
            explore(e0, emb_.edge_faces(e0)[0], true);
            tabu_[static_cast<std::size_t>(e0)] = true;
        }
        std::sort(found_.begin(), found_.end(), [](const CutSet& a, const CutSet& b) {
            if (a.edges.size() != b.edges.size()) return a.edges.size() < b.edges.size();
            return sorted_edges(a) < sorted_edges(b);
        });
        return std::move(found_);
    }

private:
    void explore(EdgeId e0, int first_face, bool cyclic) {
        const int outer = emb_.outer_face();
        const int closing_face = cyclic ? emb_.other_face(e0, first_face) : -1;
        const auto emitted_before = found_.size();

        Partial start{{e0}, {}, std::vector<bool>(static_cast<std::size_t>(emb_.face_count()), false), first_face};
        start.crossed[static_cast<std::size_t>(first_face)] = true;
        std::vector<Partial> frontier;
        frontier.push_back(std::move(start));
        std::vector<Partial> next;

        while (!frontier.empty()) {
            next.clear();
            for (const Partial& p : frontier) {
                const int face = p.next_face;
                const EdgeId last = p.edges.back();
                for (const SearchGraph::Arc& arc : search_.arcs[static_cast<std::size_t>(last)]) {
                    if (arc.face != face) continue;
                    const EdgeId f = arc.to;
                    if (cyclic && face == closing_face) {
                        if (f == e0) emit(p, face, -1, CutKind::cyclic);
                        continue;
                    }
                    if (f == e0 || tabu_[static_cast<std::size_t>(f)]) continue;
                    if (std::find(p.edges.begin(), p.edges.end(), f) != p.edges.end()) continue;
                    if (cyclic && emb_.on_outer_face(f)) continue;
                    if (!compatible_with_all(p.edges, f)) continue;
                    const int beyond = emb_.other_face(f, face);
                    if (beyond == outer) {
                        emit(p, face, f, CutKind::non_cyclic);
                        continue;
                    }
                    if (p.crossed[static_cast<std::size_t>(beyond)]) continue;
                    Partial grown = p;
                    grown.edges.push_back(f);
                    grown.faces.push_back(face);
                    grown.crossed[static_cast<std::size_t>(beyond)] = true;
                    grown.next_face = beyond;
                    next.push_back(std::move(grown));
                    if (next.size() > options_.max_frontier) {
                        std::ostringstream msg;
                        msg << "search frontier exceeded " << options_.max_frontier << " partial cut-sets at start edge "
                            << e0;
                        throw ResourceLimitError(msg.str());
                    }
                }
            }
            frontier.swap(next);
        }

        const auto m = static_cast<std::size_t>(g_.edge_count());
        if (found_.size() - emitted_before > m * m * m * m) {
            throw std::logic_error("more than |E|^4 convex cuts through edge " + std::to_string(e0));
        }
    }

    bool compatible_with_all(const std::vector<EdgeId>& edges, EdgeId f) const {
        return std::all_of(edges.begin(), edges.end(), [&](EdgeId e) { return mats_.compatible_unchecked(e, f); });
    }

    void emit(const Partial& p, int face, EdgeId closing_edge, CutKind kind) {
        CutSet cut;
        cut.kind = kind;
        cut.edges = p.edges;
        cut.faces = p.faces;
        cut.faces.push_back(face);
        if (closing_edge >= 0) cut.edges.push_back(closing_edge);
        auto partition = partition_from_cut_set(g_, cut.edges);
        if (!partition) {
            throw VerificationError("emitted cut-set does not split the graph into two parts", std::move(cut));
        }
        cut.partition = std::move(*partition);
        if (options_.verify) {
            auto verdict = is_convex_cut(g_, dist_, cut.partition);
            if (!verdict) {
                std::ostringstream msg;
                msg << "emitted cut is not convex: vertex " << verdict.witness->w << " lies on a shortest path between "
                    << verdict.witness->u << " and " << verdict.witness->v;
                throw VerificationError(msg.str(), std::move(cut));
            }
        }
        found_.push_back(std::move(cut));
    }

    const PlaneEmbedding& emb_;
    const Graph& g_;
    const SearchGraph& search_;
    const CompatibilityMatrices& mats_;
    PlaneCutOptions options_;
    std::vector<bool> tabu_;
    DistanceTable dist_;
    std::vector<CutSet> found_;
};

}  // namespace

std::vector<CutSet> enumerate_convex_cuts_plane(const PlaneEmbedding& emb, const SearchGraph& search,
                                                const CompatibilityMatrices& mats, const PlaneCutOptions& options) {
    return PlaneSearch(emb, search, mats, options).run();
}

std::vector<CutSet> find_convex_cuts_plane(const PlaneEmbedding& emb, const PlaneCutOptions& options,
                                           ChildConvention convention) {
    auto sub = subdivide(emb.graph(), convention);
    auto mats = build_compatibility_matrices(emb.graph(), sub);
    auto search = build_search_graph(emb, mats);
    return enumerate_convex_cuts_plane(emb, search, mats, options);
}

}  // namespace convexcuts
