#include "convexcuts/graph.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace convexcuts {

Graph Graph::build(int vertex_count, std::span<const std::pair<VertexId, VertexId>> edges) {
    if (vertex_count < 1) {
        throw GraphError("graph needs at least one vertex");
    }
    if (vertex_count > std::numeric_limits<DistanceTable::value_type>::max()) {
        throw GraphError("graph too large: " + std::to_string(vertex_count) + " vertices");
    }
    Graph g;
    g.vertex_count_ = vertex_count;
    g.edges_.reserve(edges.size());
    std::vector<std::size_t> degree(static_cast<std::size_t>(vertex_count), 0);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        auto [u, v] = edges[i];
        if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count) {
            std::ostringstream msg;
            msg << "edge " << i << " has endpoint out of range: (" << u << ", " << v << ")";
            throw GraphError(msg.str());
        }
        if (u == v) {
            std::ostringstream msg;
            msg << "edge " << i << " is a self-loop at vertex " << u;
            throw GraphError(msg.str());
        }
        g.edges_.push_back({u, v});
        ++degree[static_cast<std::size_t>(u)];
        ++degree[static_cast<std::size_t>(v)];
    }

    g.offsets_.assign(static_cast<std::size_t>(vertex_count) + 1, 0);
    for (int v = 0; v < vertex_count; ++v) {
        g.offsets_[static_cast<std::size_t>(v) + 1] = g.offsets_[static_cast<std::size_t>(v)] + degree[static_cast<std::size_t>(v)];
    }
    g.adjacency_.resize(g.offsets_.back());
    std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edges_[static_cast<std::size_t>(e)];
        g.adjacency_[fill[static_cast<std::size_t>(ed.u)]++] = {e, ed.v};
        g.adjacency_[fill[static_cast<std::size_t>(ed.v)]++] = {e, ed.u};
    }

    int count = 0;
    auto labels = component_labels(g, {}, &count);
    if (count > 1) {
        std::vector<VertexId> representative(static_cast<std::size_t>(count), -1);
        for (VertexId v = 0; v < vertex_count; ++v) {
            auto& r = representative[static_cast<std::size_t>(labels[static_cast<std::size_t>(v)])];
            if (r < 0) r = v;
        }
        std::ostringstream msg;
        msg << "graph is disconnected: " << count << " components, containing vertices";
        for (VertexId r : representative) msg << ' ' << r;
        throw GraphError(msg.str());
    }
    return g;
}

std::span<const Incidence> Graph::incident(VertexId v) const {
    auto b = offsets_[static_cast<std::size_t>(v)];
    auto e = offsets_[static_cast<std::size_t>(v) + 1];
    return {adjacency_.data() + b, e - b};
}

std::vector<std::pair<VertexId, VertexId>> Graph::edge_list() const {
    std::vector<std::pair<VertexId, VertexId>> out;
    out.reserve(edges_.size());
    for (const Edge& e : edges_) out.emplace_back(e.u, e.v);
    return out;
}

bool Graph::is_two_connected() const {
    const int n = vertex_count_;
    if (n < 2) return false;
    if (n == 2) return edge_count() >= 2;
    // Hopcroft-Tarjan lowpoint, iterative; also catches bridges.
    std::vector<int> order(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
    struct Frame {
        VertexId v;
        EdgeId via;
        std::size_t next;
    };
    std::vector<Frame> stack;
    int counter = 0;
    int root_children = 0;
    order[0] = low[0] = counter++;
    stack.push_back({0, -1, 0});
    while (!stack.empty()) {
        Frame& fr = stack.back();
        auto inc = incident(fr.v);
        if (fr.next < inc.size()) {
            const Incidence in = inc[fr.next++];
            if (in.edge == fr.via) continue;
            auto w = static_cast<std::size_t>(in.other);
            if (order[w] < 0) {
                order[w] = low[w] = counter++;
                if (fr.v == 0) ++root_children;
                stack.push_back({in.other, in.edge, 0});
            } else {
                low[static_cast<std::size_t>(fr.v)] = std::min(low[static_cast<std::size_t>(fr.v)], order[w]);
            }
            continue;
        }
        const Frame done = fr;
        stack.pop_back();
        if (stack.empty()) break;
        auto parent = static_cast<std::size_t>(stack.back().v);
        auto child = static_cast<std::size_t>(done.v);
        low[parent] = std::min(low[parent], low[child]);
        if (low[child] > order[parent]) return false;                  // bridge
        if (stack.back().v != 0 && low[child] >= order[parent]) return false;  // articulation point
    }
    return root_children <= 1;
}

std::vector<int> component_labels(const Graph& g, const std::vector<bool>& removed, int* component_count) {
    const int n = g.vertex_count();
    std::vector<int> label(static_cast<std::size_t>(n), -1);
    std::vector<VertexId> queue;
    queue.reserve(static_cast<std::size_t>(n));
    int count = 0;
    for (VertexId s = 0; s < n; ++s) {
        if (label[static_cast<std::size_t>(s)] >= 0) continue;
        label[static_cast<std::size_t>(s)] = count;
        queue.clear();
        queue.push_back(s);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            for (const Incidence& in : g.incident(queue[head])) {
                if (!removed.empty() && removed[static_cast<std::size_t>(in.edge)]) continue;
                auto& l = label[static_cast<std::size_t>(in.other)];
                if (l < 0) {
                    l = count;
                    queue.push_back(in.other);
                }
            }
        }
        ++count;
    }
    if (component_count) *component_count = count;
    return label;
}

void bfs_distances(const Graph& g, VertexId source, std::vector<std::uint32_t>& out) {
    constexpr auto unseen = std::numeric_limits<std::uint32_t>::max();
    out.assign(static_cast<std::size_t>(g.vertex_count()), unseen);
    std::vector<VertexId> queue;
    queue.reserve(static_cast<std::size_t>(g.vertex_count()));
    out[static_cast<std::size_t>(source)] = 0;
    queue.push_back(source);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        VertexId v = queue[head];
        auto next = out[static_cast<std::size_t>(v)] + 1;
        for (const Incidence& in : g.incident(v)) {
            auto& d = out[static_cast<std::size_t>(in.other)];
            if (d == unseen) {
                d = next;
                queue.push_back(in.other);
            }
        }
    }
}

DistanceTable all_pairs_distances(const Graph& g) {
    DistanceTable table(g.vertex_count());
    std::vector<std::uint32_t> row;
    for (VertexId s = 0; s < g.vertex_count(); ++s) {
        bfs_distances(g, s, row);
        auto dst = table.row(s);
        for (std::size_t i = 0; i < row.size(); ++i) {
            dst[i] = static_cast<DistanceTable::value_type>(row[i]);
        }
    }
    return table;
}

BipartiteCheck is_bipartite(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> color(static_cast<std::size_t>(n), -1);
    std::vector<VertexId> parent(static_cast<std::size_t>(n), -1);
    std::vector<int> depth(static_cast<std::size_t>(n), 0);
    std::vector<VertexId> queue{0};
    color[0] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        VertexId v = queue[head];
        for (const Incidence& in : g.incident(v)) {
            auto w = static_cast<std::size_t>(in.other);
            if (color[w] < 0) {
                color[w] = 1 - color[static_cast<std::size_t>(v)];
                parent[w] = v;
                depth[w] = depth[static_cast<std::size_t>(v)] + 1;
                queue.push_back(in.other);
            } else if (color[w] == color[static_cast<std::size_t>(v)]) {
                // Odd cycle: v -> lca <- w plus the edge {v, w}.
                std::vector<VertexId> left{v}, right{in.other};
                VertexId a = v, b = in.other;
                while (a != b) {
                    if (depth[static_cast<std::size_t>(a)] >= depth[static_cast<std::size_t>(b)]) {
                        a = parent[static_cast<std::size_t>(a)];
                        left.push_back(a);
                    } else {
                        b = parent[static_cast<std::size_t>(b)];
                        right.push_back(b);
                    }
                }
                right.pop_back();  // lca already in left
                BipartiteCheck out;
                out.odd_cycle = std::move(left);
                out.odd_cycle.insert(out.odd_cycle.end(), right.rbegin(), right.rend());
                return out;
            }
        }
    }
    BipartiteCheck out;
    out.coloring.emplace(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) (*out.coloring)[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(color[static_cast<std::size_t>(v)]);
    return out;
}

VertexId Subdivision::anchor_of(EdgeId child_edge) const {
    const Edge& ce = prime.edge(child_edge);
    return ce.u < original_vertex_count ? ce.u : ce.v;
}

Subdivision subdivide(const Graph& g, ChildConvention convention) {
    const int n = g.vertex_count();
    std::vector<std::pair<VertexId, VertexId>> edges;
    edges.reserve(static_cast<std::size_t>(g.edge_count()) * 2);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        VertexId first = std::min(ed.u, ed.v);
        VertexId second = std::max(ed.u, ed.v);
        if (convention == ChildConvention::high_endpoint_first) std::swap(first, second);
        VertexId mid = n + e;
        edges.emplace_back(first, mid);
        edges.emplace_back(mid, second);
    }
    Subdivision sub;
    sub.prime = Graph::build(n + g.edge_count(), edges);
    sub.original_vertex_count = n;
    sub.convention = convention;
    return sub;
}

}  // namespace convexcuts
