#include "convexcuts/bipartite_cuts.hpp"

#include <algorithm>
#include <set>
#include <thread>

namespace convexcuts {

namespace {

/// Per-worker scratch: two distance rows and the edge marks.
class CutSetScanner {
public:
    CutSetScanner(const Graph& g, const DistanceTable* table)
        : g_(g), table_(table), mark_(static_cast<std::size_t>(g.edge_count()), 0) {}

    bool evaluate(EdgeId e) {
        ++stamp_;
        std::size_t size = 0;
        load(e);
        for (EdgeId f = 0; f < g_.edge_count(); ++f) {
            if (crosses(f)) {
                mark_[static_cast<std::size_t>(f)] = stamp_;
                members_.push_back(f);
                ++size;
            }
        }
        // members_ doubles as the stored copy of C_e; C_f is only streamed.
        std::vector<EdgeId> ce;
        ce.swap(members_);
        for (EdgeId f : ce) {
            if (f == e) continue;
            load(f);
            std::size_t agreeing = 0;
            bool equal = true;
            for (EdgeId h = 0; h < g_.edge_count(); ++h) {
                if (!crosses(h)) continue;
                if (mark_[static_cast<std::size_t>(h)] != stamp_) {
                    equal = false;
                    break;
                }
                ++agreeing;
            }
            if (!equal || agreeing != size) return false;
        }
        return true;
    }

private:
    void load(EdgeId e) {
        const Edge& ed = g_.edge(e);
        if (table_) {
            x_ = ed.u;
            y_ = ed.v;
            return;
        }
        bfs_distances(g_, ed.u, to_x_);
        bfs_distances(g_, ed.v, to_y_);
    }

    bool crosses(EdgeId f) const {
        const Edge& ed = g_.edge(f);
        std::uint32_t xu, yu, xv, yv;
        if (table_) {
            xu = (*table_)(x_, ed.u);
            yu = (*table_)(y_, ed.u);
            xv = (*table_)(x_, ed.v);
            yv = (*table_)(y_, ed.v);
        } else {
            xu = to_x_[static_cast<std::size_t>(ed.u)];
            yu = to_y_[static_cast<std::size_t>(ed.u)];
            xv = to_x_[static_cast<std::size_t>(ed.v)];
            yv = to_y_[static_cast<std::size_t>(ed.v)];
        }
        return (xu < yu && yv < xv) || (yu < xu && xv < yv);
    }

    const Graph& g_;
    const DistanceTable* table_;
    std::vector<std::uint32_t> mark_;
    std::uint32_t stamp_ = 0;
    std::vector<EdgeId> members_;
    std::vector<std::uint32_t> to_x_, to_y_;
    VertexId x_ = 0, y_ = 0;
};

}  // namespace

BipartiteCutReport convex_cuts_bipartite(const Graph& g, const BipartiteCutOptions& options) {
    if (!is_bipartite(g)) throw GraphError("convex_cuts_bipartite requires a bipartite graph");
    const int m = g.edge_count();
    std::optional<DistanceTable> table;
    if (options.reuse_distance_table) table = all_pairs_distances(g);
    const DistanceTable* table_ptr = table ? &*table : nullptr;

    std::vector<char> verdict(static_cast<std::size_t>(m), 0);
    int threads = options.threads;
    if (threads <= 0) threads = static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
    threads = std::min(threads, std::max(1, m));

    auto work = [&](int worker) {
        CutSetScanner scanner(g, table_ptr);
        for (EdgeId e = worker; e < m; e += threads) {
            verdict[static_cast<std::size_t>(e)] = scanner.evaluate(e) ? 1 : 0;
        }
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(work, t);
    }

    BipartiteCutReport report;
    report.is_convex.assign(verdict.begin(), verdict.end());
    std::set<std::vector<EdgeId>> distinct;
    std::vector<std::uint32_t> to_x, to_y;
    for (EdgeId e = 0; e < m; ++e) {
        if (!report.is_convex[static_cast<std::size_t>(e)]) continue;
        // Dedup by the smallest member: C_e is reported once, from its
        // smallest edge, since every member yields the same set.
        bfs_distances(g, g.edge(e).u, to_x);
        bfs_distances(g, g.edge(e).v, to_y);
        std::vector<EdgeId> cut;
        for (EdgeId f = 0; f < m; ++f) {
            const Edge& ed = g.edge(f);
            auto xu = to_x[static_cast<std::size_t>(ed.u)], yu = to_y[static_cast<std::size_t>(ed.u)];
            auto xv = to_x[static_cast<std::size_t>(ed.v)], yv = to_y[static_cast<std::size_t>(ed.v)];
            if ((xu < yu && yv < xv) || (yu < xu && xv < yv)) cut.push_back(f);
        }
        if (cut.front() == e) distinct.insert(std::move(cut));
    }
    report.convex_cut_sets.assign(distinct.begin(), distinct.end());
    std::stable_sort(report.convex_cut_sets.begin(), report.convex_cut_sets.end(),
                     [](const auto& a, const auto& b) { return a.size() < b.size(); });
    return report;
}

}  // namespace convexcuts
