#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <string>

namespace testsupport {

using namespace convexcuts;

std::vector<std::vector<int>> floyd_warshall(const Graph& g) {
    const int n = g.vertex_count();
    const int inf = 1 << 28;
    std::vector<std::vector<int>> d(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), inf));
    for (int v = 0; v < n; ++v) d[v][v] = 0;
    for (const auto& [u, v] : g.edge_list()) d[u][v] = d[v][u] = 1;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    return d;
}

bool convex_by_path_walk(const Graph& g, const std::vector<std::vector<int>>& dist, const std::vector<bool>& side) {
    const int n = g.vertex_count();
    std::vector<std::vector<int>> nbr(static_cast<std::size_t>(n));
    for (const auto& [u, v] : g.edge_list()) {
        nbr[u].push_back(v);
        nbr[v].push_back(u);
    }
    // every vertex of every shortest u-v path must be inside
    std::function<bool(int, int)> walk = [&](int cur, int target) {
        if (!side[cur]) return false;
        if (cur == target) return true;
        for (int w : nbr[cur]) {
            if (dist[w][target] == dist[cur][target] - 1 && !walk(w, target)) return false;
        }
        return true;
    };
    for (int u = 0; u < n; ++u) {
        if (!side[u]) continue;
        for (int v = u + 1; v < n; ++v)
            if (side[v] && !walk(u, v)) return false;
    }
    return true;
}

std::set<VertexPartition> naive_convex_cuts(const Graph& g) {
    const int n = g.vertex_count();
    auto dist = floyd_warshall(g);
    std::set<VertexPartition> out;
    for (std::uint32_t mask = 1; mask < (1U << (n - 1)); ++mask) {
        // vertex 0 always on the first side; mask covers vertices 1..n-1 on the second
        std::vector<bool> second(static_cast<std::size_t>(n), false);
        for (int v = 1; v < n; ++v) second[v] = (mask >> (v - 1)) & 1U;
        std::vector<bool> first(second.size());
        for (std::size_t v = 0; v < second.size(); ++v) first[v] = !second[v];
        if (convex_by_path_walk(g, dist, first) && convex_by_path_walk(g, dist, second)) {
            out.insert(VertexPartition::from_mask(first));
        }
    }
    return out;
}

namespace {

bool connected_side(const Graph& g, const std::vector<bool>& side) {
    int start = -1, count = 0;
    for (std::size_t v = 0; v < side.size(); ++v) {
        if (side[v]) {
            ++count;
            if (start < 0) start = static_cast<int>(v);
        }
    }
    if (start < 0) return false;
    std::vector<bool> seen(side.size(), false);
    std::vector<int> stack{start};
    seen[start] = true;
    int reached = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        ++reached;
        for (const auto& inc : g.incident(v)) {
            if (side[inc.other] && !seen[inc.other]) {
                seen[inc.other] = true;
                stack.push_back(inc.other);
            }
        }
    }
    return reached == count;
}

std::string ahu(const std::vector<std::vector<int>>& adj, int v, int parent) {
    std::vector<std::string> kids;
    for (int w : adj[v])
        if (w != parent) kids.push_back(ahu(adj, w, v));
    std::sort(kids.begin(), kids.end());
    std::string s = "(";
    for (const auto& k : kids) s += k;
    return s + ")";
}

std::string tree_code(int n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (auto [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    // minimum over all roots is an isomorphism invariant
    std::string best;
    for (int root = 0; root < n; ++root) {
        auto code = ahu(adj, root, -1);
        if (best.empty() || code < best) best = code;
    }
    return best;
}

}  // namespace

std::vector<VertexPartition> connected_bipartitions(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<VertexPartition> out;
    for (std::uint32_t mask = 1; mask < (1U << (n - 1)); ++mask) {
        std::vector<bool> second(static_cast<std::size_t>(n), false);
        for (int v = 1; v < n; ++v) second[v] = (mask >> (v - 1)) & 1U;
        std::vector<bool> first(second.size());
        for (std::size_t v = 0; v < second.size(); ++v) first[v] = !second[v];
        if (connected_side(g, first) && connected_side(g, second)) out.push_back(VertexPartition::from_mask(first));
    }
    return out;
}

std::vector<Graph> unlabeled_trees(int n) {
    // grow by one leaf at a time, dedup by rooted canonical code minimized over roots
    std::vector<std::vector<std::pair<int, int>>> level{{}};
    for (int size = 2; size <= n; ++size) {
        std::map<std::string, std::vector<std::pair<int, int>>> next;
        for (const auto& t : level) {
            for (int v = 0; v < size - 1; ++v) {
                auto grown = t;
                grown.emplace_back(v, size - 1);
                next.emplace(tree_code(size, grown), grown);
            }
        }
        level.clear();
        for (auto& [code, edges] : next) level.push_back(std::move(edges));
    }
    std::vector<Graph> out;
    for (const auto& edges : level) out.push_back(Graph::build(n, edges));
    return out;
}

std::set<VertexPartition> as_set(const std::vector<VertexPartition>& v) { return {v.begin(), v.end()}; }

namespace {

/// Drops edge `gone` from a generated plane graph, keeping the drawing.
GeneratedGraph without_edge(const GeneratedGraph& src, EdgeId gone, const std::string& name) {
    const Graph& g = src.graph;
    const auto& emb = *src.embedding;
    std::vector<std::pair<VertexId, VertexId>> edges;
    std::vector<EdgeId> remap(static_cast<std::size_t>(g.edge_count()), -1);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (e == gone) continue;
        remap[e] = static_cast<EdgeId>(edges.size());
        edges.emplace_back(g.edge(e).u, g.edge(e).v);
    }
    Graph h = Graph::build(g.vertex_count(), edges);
    std::vector<std::vector<EdgeId>> rot(static_cast<std::size_t>(g.vertex_count()));
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        for (EdgeId e : emb.rotation(v))
            if (e != gone) rot[v].push_back(remap[e]);
    std::vector<EdgeId> outer;
    for (const auto& st : emb.face(emb.outer_face()).boundary)
        if (st.edge != gone) outer.push_back(remap[st.edge]);
    return {name, h, trace_faces(h, rot, outer)};
}

}  // namespace

std::vector<GeneratedGraph> plane_corpus() {
    std::vector<GeneratedGraph> out;
    for (int n = 3; n <= 10; ++n) out.push_back(make_cycle(n));
    for (int r = 2; r <= 3; ++r)
        for (int c = 2; c <= 4; ++c) out.push_back(make_grid(r, c));
    out.push_back(make_complete(4));
    out.push_back(without_edge(make_complete(4), 0, "k4 minus edge"));
    for (int rim = 4; rim <= 6; ++rim) out.push_back(make_wheel(rim));
    for (int s = 0; s < 50; ++s) {
        const int n = 5 + s % 6;
        const int m = std::min(3 * n - 6, n + 1 + s % 5);
        out.push_back(make_random_plane(n, m, 1000 + static_cast<std::uint64_t>(s)));
    }
    return out;
}

}  // namespace testsupport
