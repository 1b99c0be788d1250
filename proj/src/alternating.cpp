#include "convexcuts/alternating.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <tuple>

namespace convexcuts {

Turn opposite(Turn t) {
    switch (t) {
        case Turn::left:
            return Turn::right;
        case Turn::right:
            return Turn::left;
        case Turn::none:
            break;
    }
    return Turn::none;
}

std::size_t AlternatingPathGraph::arc_count() const {
    std::size_t total = 0;
    for (const auto& out : arcs) total += out.size();
    return total / 2;
}

EdgeId AlternatingPathGraph::step(EdgeId e, int face, OppositeKind kind) const {
    for (const Arc& a : arcs[static_cast<std::size_t>(e)]) {
        if (a.face == face && a.kind == kind) return a.to;
    }
    return -1;
}

AlternatingPathGraph alternating_path_graph(const PlaneEmbedding& emb) {
    AlternatingPathGraph apg;
    apg.arcs.resize(static_cast<std::size_t>(emb.graph().edge_count()));
    for (int f = 0; f < emb.face_count(); ++f) {
        if (f == emb.outer_face()) continue;
        for (const BoundaryStep& st : emb.face(f).boundary) {
            auto opp = opposite_edges(emb, f, st.edge);
            auto& out = apg.arcs[static_cast<std::size_t>(st.edge)];
            if (opp.is_unique) {
                out.push_back({opp.unique, f, OppositeKind::unique});
            } else {
                out.push_back({opp.left, f, OppositeKind::left});
                out.push_back({opp.right, f, OppositeKind::right});
            }
        }
    }
    return apg;
}

Turn AlternatingPath::first_turn() const {
    for (Turn t : turn_log) {
        if (t != Turn::none) return t;
    }
    return Turn::none;
}

namespace {

Turn turn_of(OppositeKind kind) {
    switch (kind) {
        case OppositeKind::left:
            return Turn::left;
        case OppositeKind::right:
            return Turn::right;
        case OppositeKind::unique:
            break;
    }
    return Turn::none;
}

/// Turn taken when stepping from e to f inside face.
Turn turn_between(const AlternatingPathGraph& apg, EdgeId e, EdgeId f, int face) {
    for (const auto& a : apg.arcs[static_cast<std::size_t>(e)]) {
        if (a.face == face && a.to == f) return turn_of(a.kind);
    }
    throw AlternatingError("edges " + std::to_string(e) + " and " + std::to_string(f) + " are not opposite in face " +
                           std::to_string(face));
}

void fill_turn_log(const AlternatingPathGraph& apg, AlternatingPath& p) {
    p.turn_log.clear();
    Turn state = Turn::none;
    bool any_turn = false;
    const std::size_t n = p.edges.size();
    for (std::size_t i = 0; i < p.faces.size(); ++i) {
        Turn t = turn_between(apg, p.edges[i], p.edges[(i + 1) % n], p.faces[i]);
        if (t != Turn::none) {
            state = t;
            any_turn = true;
        }
        p.turn_log.push_back(state);
    }
    p.multiplicity = any_turn ? 1 : 2;
}

AlternatingPath reversed(const AlternatingPathGraph& apg, const AlternatingPath& p) {
    AlternatingPath r;
    r.closed = p.closed;
    if (!p.closed) {
        r.edges.assign(p.edges.rbegin(), p.edges.rend());
        r.faces.assign(p.faces.rbegin(), p.faces.rend());
    } else {
        const std::size_t n = p.edges.size();
        r.edges.push_back(p.edges[0]);
        for (std::size_t i = n - 1; i >= 1; --i) r.edges.push_back(p.edges[i]);
        r.faces.assign(p.faces.rbegin(), p.faces.rend());
    }
    fill_turn_log(apg, r);
    return r;
}

using PathKey = std::pair<std::vector<EdgeId>, std::vector<int>>;

PathKey key_of(const AlternatingPath& p) { return {p.edges, p.faces}; }

AlternatingPath rotated(const AlternatingPathGraph& apg, const AlternatingPath& p, std::size_t by) {
    AlternatingPath r;
    r.closed = true;
    const std::size_t n = p.edges.size();
    for (std::size_t i = 0; i < n; ++i) {
        r.edges.push_back(p.edges[(i + by) % n]);
        r.faces.push_back(p.faces[(i + by) % n]);
    }
    fill_turn_log(apg, r);
    return r;
}

/// Smallest (edges, faces) over both orientations and, for closed paths,
/// every rotation.
AlternatingPath canonical(const AlternatingPathGraph& apg, const AlternatingPath& p) {
    std::vector<AlternatingPath> candidates;
    auto rev = reversed(apg, p);
    if (!p.closed) {
        candidates = {p, rev};
    } else {
        for (std::size_t i = 0; i < p.edges.size(); ++i) {
            candidates.push_back(rotated(apg, p, i));
            candidates.push_back(rotated(apg, rev, i));
        }
    }
    return *std::min_element(candidates.begin(), candidates.end(),
                             [](const AlternatingPath& a, const AlternatingPath& b) { return key_of(a) < key_of(b); });
}

struct WalkState {
    EdgeId edge;
    int face;  // bounded face being entered through edge
    Turn state;
    friend auto operator<=>(const WalkState&, const WalkState&) = default;
};

class PathWalker {
public:
    PathWalker(const PlaneEmbedding& emb, const AlternatingPathGraph& apg)
        : emb_(emb), apg_(apg), step_limit_(6 * static_cast<std::size_t>(emb.graph().edge_count()) + 16) {}

    /// Every maximal path starting at outer edge e, branching on the first turn.
    void open_paths_from(EdgeId e, std::vector<AlternatingPath>& out) const {
        const int face = emb_.other_face(e, emb_.outer_face());
        struct Pending {
            AlternatingPath path;
            WalkState at;
        };
        std::vector<Pending> stack;
        stack.push_back({AlternatingPath{{e}, {}, {}, 1, false}, {e, face, Turn::none}});
        while (!stack.empty()) {
            Pending cur = std::move(stack.back());
            stack.pop_back();
            while (true) {
                if (cur.path.faces.size() > step_limit_) {
                    throw AlternatingError("alternating path from edge " + std::to_string(e) + " does not terminate");
                }
                const Face& f = emb_.face(cur.at.face);
                std::vector<OppositeKind> choices;
                if (!f.is_odd()) {
                    choices = {OppositeKind::unique};
                } else if (cur.at.state == Turn::none) {
                    choices = {OppositeKind::left, OppositeKind::right};
                } else {
                    choices = {cur.at.state == Turn::left ? OppositeKind::right : OppositeKind::left};
                }
                for (std::size_t c = 1; c < choices.size(); ++c) {
                    Pending other = cur;
                    advance(other, choices[c]);
                    if (other.at.face >= 0) {
                        stack.push_back(std::move(other));
                    } else {
                        out.push_back(std::move(other.path));
                    }
                }
                advance(cur, choices[0]);
                if (cur.at.face < 0) {
                    out.push_back(std::move(cur.path));
                    break;
                }
            }
        }
    }

    /// Closed orbit through `start`, if following the deterministic rules
    /// from it returns to it without meeting the outer face.
    std::optional<AlternatingPath> closed_path_from(WalkState start) const {
        AlternatingPath path{{start.edge}, {}, {}, 1, true};
        WalkState at = start;
        std::set<WalkState> seen{start};
        while (path.faces.size() <= step_limit_) {
            const Face& f = emb_.face(at.face);
            OppositeKind kind;
            if (!f.is_odd()) {
                kind = OppositeKind::unique;
            } else if (at.state == Turn::none) {
                return std::nullopt;
            } else {
                kind = at.state == Turn::left ? OppositeKind::right : OppositeKind::left;
            }
            EdgeId next = apg_.step(at.edge, at.face, kind);
            path.faces.push_back(at.face);
            Turn state = kind == OppositeKind::unique ? at.state : turn_of(kind);
            int beyond = emb_.other_face(next, at.face);
            if (beyond == emb_.outer_face()) return std::nullopt;
            WalkState nxt{next, beyond, state};
            if (nxt == start) return path;
            if (!seen.insert(nxt).second) return std::nullopt;
            path.edges.push_back(next);
            at = nxt;
        }
        return std::nullopt;
    }

private:
    template <class Pending>
    void advance(Pending& p, OppositeKind kind) const {
        EdgeId next = apg_.step(p.at.edge, p.at.face, kind);
        p.path.faces.push_back(p.at.face);
        p.path.edges.push_back(next);
        Turn state = kind == OppositeKind::unique ? p.at.state : turn_of(kind);
        int beyond = emb_.other_face(next, p.at.face);
        p.at = {next, beyond == emb_.outer_face() ? -1 : beyond, state};
    }

    const PlaneEmbedding& emb_;
    const AlternatingPathGraph& apg_;
    std::size_t step_limit_;
};

}  // namespace

std::vector<int> edge_coverage(const PlaneEmbedding& emb, const std::vector<AlternatingPath>& paths) {
    std::vector<int> cover(static_cast<std::size_t>(emb.graph().edge_count()), 0);
    for (const auto& p : paths)
        for (EdgeId e : p.edges) cover[static_cast<std::size_t>(e)] += p.multiplicity;
    return cover;
}

std::vector<AlternatingPath> alternating_paths(const PlaneEmbedding& emb, const AlternatingPathGraph& apg) {
    const Graph& g = emb.graph();
    PathWalker walker(emb, apg);
    std::set<PathKey> seen;
    std::vector<AlternatingPath> out;
    auto add = [&](const AlternatingPath& raw) {
        AlternatingPath p = canonical(apg, raw);
        if (seen.insert(key_of(p)).second) out.push_back(std::move(p));
    };

    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (!emb.on_outer_face(e)) continue;
        std::vector<AlternatingPath> found;
        walker.open_paths_from(e, found);
        for (auto& p : found) {
            fill_turn_log(apg, p);
            add(p);
        }
    }

    auto cover = edge_coverage(emb, out);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (cover[static_cast<std::size_t>(e)] >= 2 || emb.on_outer_face(e)) continue;
        for (int face : emb.edge_faces(e)) {
            for (Turn t : {Turn::none, Turn::left, Turn::right}) {
                if (cover[static_cast<std::size_t>(e)] >= 2) break;
                auto closed = walker.closed_path_from({e, face, t});
                if (!closed) continue;
                fill_turn_log(apg, *closed);
                auto before = out.size();
                add(*closed);
                if (out.size() != before) cover = edge_coverage(emb, out);
            }
        }
    }

    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (cover[static_cast<std::size_t>(e)] != 2) {
            std::ostringstream msg;
            msg << "edge " << e << " is covered " << cover[static_cast<std::size_t>(e)]
                << " times by alternating paths, expected 2";
            throw AlternatingError(msg.str());
        }
    }
    std::sort(out.begin(), out.end(), [](const AlternatingPath& a, const AlternatingPath& b) {
        return std::tie(a.closed, a.edges, a.faces) < std::tie(b.closed, b.edges, b.faces);
    });
    return out;
}

std::vector<int> default_instance_order(const std::vector<AlternatingPath>& paths) {
    std::vector<int> order;
    int id = 0;
    for (const auto& p : paths) {
        for (int k = 0; k < p.multiplicity; ++k) order.push_back(id++);
    }
    return order;
}

int CrossingReport::max_pair_crossings() const {
    int best = 0;
    for (const auto& [pair, count] : pair_crossings) best = std::max(best, count);
    return best;
}

int CrossingReport::total_self_crossings() const {
    int total = 0;
    for (int c : self_crossings) total += c;
    return total;
}

namespace {

/// Slot of e that lies on the left when standing on e and looking into face.
int left_slot(const PlaneEmbedding& emb, EdgeId e, int face) {
    const auto& st = emb.face(face).boundary[static_cast<std::size_t>(emb.position_in_face(face, e))];
    return st.to == emb.graph().edge(e).u ? 0 : 1;
}

struct Passage {
    EdgeId edge;
    int slot;
};

struct Chord {
    int instance;
    int a;  // boundary keys
    int b;
};

/// Cyclic boundary key of a slot on face: three keys per boundary position,
/// the outer two for slots near the walk's start/end vertex, the middle one
/// for a single slot.
int boundary_key(const PlaneEmbedding& emb, int face, EdgeId e, int slot, int slots) {
    int p = emb.position_in_face(face, e);
    if (slots == 1) return 3 * p + 1;
    const auto& st = emb.face(face).boundary[static_cast<std::size_t>(p)];
    const VertexId near = slot == 0 ? emb.graph().edge(e).u : emb.graph().edge(e).v;
    return 3 * p + (near == st.from ? 0 : 2);
}

bool strictly_between(int x, int lo, int hi) {
    // on the cyclic arc going forward from lo to hi
    return lo < hi ? (lo < x && x < hi) : (x > lo || x < hi);
}

bool interleave(const Chord& c, const Chord& d) {
    if (c.a == d.a || c.a == d.b || c.b == d.a || c.b == d.b) return false;
    return strictly_between(d.a, c.a, c.b) != strictly_between(d.b, c.a, c.b);
}

}  // namespace

CrossingReport assign_slots_and_count_crossings(const PlaneEmbedding& emb, const std::vector<AlternatingPath>& paths,
                                                const std::vector<int>& order) {
    const Graph& g = emb.graph();
    const int m = g.edge_count();
    CrossingReport report;
    for (std::size_t i = 0; i < paths.size(); ++i)
        for (int k = 0; k < paths[i].multiplicity; ++k) report.instance_path.push_back(static_cast<int>(i));
    const int instances = static_cast<int>(report.instance_path.size());
    std::vector<int> sequence = order.empty() ? default_instance_order(paths) : order;
    {
        auto check = sequence;
        std::sort(check.begin(), check.end());
        if (static_cast<int>(check.size()) != instances || std::adjacent_find(check.begin(), check.end()) != check.end() ||
            (!check.empty() && (check.front() != 0 || check.back() != instances - 1))) {
            throw std::invalid_argument("instance order must be a permutation of 0.." + std::to_string(instances - 1));
        }
    }

    report.slot_count.resize(static_cast<std::size_t>(m));
    report.slot_uses.resize(static_cast<std::size_t>(m));
    for (EdgeId e = 0; e < m; ++e) {
        auto [f0, f1] = emb.edge_faces(e);
        bool single = f0 != emb.outer_face() && f1 != emb.outer_face() && emb.face(f0).is_odd() && emb.face(f1).is_odd();
        report.slot_count[static_cast<std::size_t>(e)] = single ? 1 : 2;
    }
    auto occupied = [&](EdgeId e, int slot) {
        const auto& uses = report.slot_uses[static_cast<std::size_t>(e)];
        return std::count_if(uses.begin(), uses.end(), [slot](const SlotUse& u) { return u.slot == slot; }) > 0;
    };

    std::vector<std::vector<Passage>> passages(static_cast<std::size_t>(instances));
    for (int inst : sequence) {
        const AlternatingPath& p = paths[static_cast<std::size_t>(report.instance_path[static_cast<std::size_t>(inst)])];
        const std::size_t n = p.edges.size();
        // Face looked into from each passage.
        auto facing = [&](std::size_t i) {
            if (i < p.faces.size()) return p.faces[i];
            return emb.other_face(p.edges[i], p.faces[i - 1]);
        };
        Turn pref = p.first_turn();
        bool prev_left = true;
        auto& mine = passages[static_cast<std::size_t>(inst)];
        for (std::size_t i = 0; i < n; ++i) {
            const EdgeId e = p.edges[i];
            if (report.slot_count[static_cast<std::size_t>(e)] == 1) {
                if (report.slot_uses[static_cast<std::size_t>(e)].size() >= 2) {
                    throw AlternatingError("single slot of edge " + std::to_string(e) + " claimed three times");
                }
                report.slot_uses[static_cast<std::size_t>(e)].push_back({inst, 0});
                mine.push_back({e, 0});
                if (i > 0) pref = opposite(pref);
                continue;
            }
            const int left = left_slot(emb, e, facing(i));
            bool want_left;
            if (pref == Turn::none) {
                want_left = i == 0 ? true : prev_left;
            } else {
                want_left = pref == Turn::left;
            }
            int slot = want_left ? left : 1 - left;
            if (occupied(e, slot)) {
                slot = 1 - slot;
                if (occupied(e, slot)) {
                    throw AlternatingError("edge " + std::to_string(e) + " has no vacant slot");
                }
                pref = opposite(pref);
            }
            prev_left = slot == left;
            report.slot_uses[static_cast<std::size_t>(e)].push_back({inst, slot});
            mine.push_back({e, slot});
        }
    }

    report.self_crossings.assign(static_cast<std::size_t>(instances), 0);
    auto record = [&](int i, int j) {
        if (i == j) {
            ++report.self_crossings[static_cast<std::size_t>(i)];
        } else {
            ++report.pair_crossings[{std::min(i, j), std::max(i, j)}];
        }
    };

    std::vector<std::vector<Chord>> chords(static_cast<std::size_t>(emb.face_count()));
    for (int inst = 0; inst < instances; ++inst) {
        const AlternatingPath& p = paths[static_cast<std::size_t>(report.instance_path[static_cast<std::size_t>(inst)])];
        const auto& mine = passages[static_cast<std::size_t>(inst)];
        for (std::size_t i = 0; i < p.faces.size(); ++i) {
            const int face = p.faces[i];
            const Passage& from = mine[i];
            const Passage& to = mine[(i + 1) % mine.size()];
            chords[static_cast<std::size_t>(face)].push_back(
                {inst,
                 boundary_key(emb, face, from.edge, from.slot, report.slot_count[static_cast<std::size_t>(from.edge)]),
                 boundary_key(emb, face, to.edge, to.slot, report.slot_count[static_cast<std::size_t>(to.edge)])});
        }
    }
    for (const auto& in_face : chords) {
        for (std::size_t i = 0; i < in_face.size(); ++i)
            for (std::size_t j = i + 1; j < in_face.size(); ++j)
                if (interleave(in_face[i], in_face[j])) record(in_face[i].instance, in_face[j].instance);
    }
    for (EdgeId e = 0; e < m; ++e) {
        const auto& uses = report.slot_uses[static_cast<std::size_t>(e)];
        if (report.slot_count[static_cast<std::size_t>(e)] == 1 && uses.size() == 2) {
            record(uses[0].instance, uses[1].instance);
        }
    }
    return report;
}

ArrangementVerdict is_well_arranged(const PlaneEmbedding& emb, const std::vector<int>& order) {
    ArrangementVerdict verdict;
    verdict.paths = alternating_paths(emb, alternating_path_graph(emb));
    verdict.crossings = assign_slots_and_count_crossings(emb, verdict.paths, order);
    verdict.well_arranged = verdict.crossings.total_self_crossings() == 0 && verdict.crossings.max_pair_crossings() < 2;
    return verdict;
}

std::optional<VertexPartition> eap_cut(const AlternatingPath& path, const PlaneEmbedding& emb) {
    if (path.closed) return std::nullopt;
    std::vector<EdgeId> edges = path.edges;
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return partition_from_cut_set(emb.graph(), edges);
}

}  // namespace convexcuts
