#include "convexcuts/report.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "json.hpp"

namespace convexcuts {

namespace {

std::vector<EdgeId> sorted_copy(std::vector<EdgeId> v) {
    std::sort(v.begin(), v.end());
    return v;
}

template <class T>
std::string join(const std::vector<T>& items, char sep = ',') {
    std::ostringstream out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) out << sep;
        out << items[i];
    }
    return out.str();
}

}  // namespace

void CutReport::sort() {
    std::stable_sort(cuts.begin(), cuts.end(), [](const CutRecord& a, const CutRecord& b) {
        if (a.edges.size() != b.edges.size()) return a.edges.size() < b.edges.size();
        return sorted_copy(a.edges) < sorted_copy(b.edges);
    });
}

bool CutReport::all_verified() const {
    return std::all_of(cuts.begin(), cuts.end(), [](const CutRecord& c) { return c.status != "FAILED"; });
}

CutReport make_report(const Graph& g, const std::vector<CutSet>& cuts, bool verified) {
    CutReport report{"plane", g.vertex_count(), g.edge_count(), {}};
    for (const auto& c : cuts) {
        report.cuts.push_back({to_string(c.kind), c.edges, c.partition, verified ? "verified" : "unverified"});
    }
    report.sort();
    return report;
}

CutReport make_report(const Graph& g, const BipartiteCutReport& result, const DistanceTable* dist) {
    CutReport report{"bipartite", g.vertex_count(), g.edge_count(), {}};
    for (const auto& edges : result.convex_cut_sets) {
        CutRecord rec{"bipartite", edges, {}, "unverified"};
        auto part = partition_from_cut_set(g, edges);
        if (part) rec.partition = *part;
        if (dist) rec.status = part && is_convex_cut(g, *dist, *part) ? "verified" : "FAILED";
        report.cuts.push_back(std::move(rec));
    }
    report.sort();
    return report;
}

CutReport make_report(const Graph& g, const std::vector<VertexPartition>& oracle_cuts) {
    CutReport report{"oracle", g.vertex_count(), g.edge_count(), {}};
    for (const auto& p : oracle_cuts) report.cuts.push_back({"oracle", cut_set_of(g, p), p, "verified"});
    report.sort();
    return report;
}

std::string to_text(const CutReport& report) {
    std::ostringstream out;
    out << report.command << ": " << report.cuts.size() << " convex cut" << (report.cuts.size() == 1 ? "" : "s")
        << " (n=" << report.vertex_count << ", m=" << report.edge_count << ")\n";
    for (std::size_t i = 0; i < report.cuts.size(); ++i) {
        const auto& c = report.cuts[i];
        out << "cut " << i << ' ' << c.kind << " edges=" << join(c.edges) << " side0=" << join(c.partition.first)
            << " side1=" << join(c.partition.second) << ' ' << c.status << '\n';
    }
    return out.str();
}

std::string to_json(const CutReport& report) {
    nlohmann::ordered_json j;
    j["command"] = report.command;
    j["vertex_count"] = report.vertex_count;
    j["edge_count"] = report.edge_count;
    j["cuts"] = nlohmann::ordered_json::array();
    for (const auto& c : report.cuts) {
        nlohmann::ordered_json r;
        r["kind"] = c.kind;
        r["edges"] = c.edges;
        r["side0"] = c.partition.first;
        r["side1"] = c.partition.second;
        r["status"] = c.status;
        j["cuts"].push_back(std::move(r));
    }
    return j.dump(2) + "\n";
}

std::string to_dot(const Graph& g, const CutReport& report) {
    std::ostringstream out;
    for (std::size_t i = 0; i < report.cuts.size(); ++i) {
        const auto& c = report.cuts[i];
        std::set<EdgeId> hot(c.edges.begin(), c.edges.end());
        out << "graph cut" << i << " {\n";
        for (VertexId v : c.partition.first) out << "  " << v << ";\n";
        for (VertexId v : c.partition.second) out << "  " << v << " [style=filled];\n";
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            out << "  " << g.edge(e).u << " -- " << g.edge(e).v << " [label=\"e" << e << "\"";
            if (hot.count(e)) out << ", color=red, style=bold";
            out << "];\n";
        }
        out << "}\n";
    }
    return out.str();
}

}  // namespace convexcuts
