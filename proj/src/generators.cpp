#include "convexcuts/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <set>

namespace convexcuts {

namespace {

using Coordinates = std::vector<std::pair<double, double>>;
using EdgeList = std::vector<std::pair<VertexId, VertexId>>;

std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

template <class T>
void shuffle(std::vector<T>& v, std::mt19937_64& rng) {
    for (std::size_t i = v.size(); i > 1; --i) {
        std::swap(v[i - 1], v[static_cast<std::size_t>(draw(rng, i))]);
    }
}

double signed_area(const Face& f, const Coordinates& xy) {
    double a = 0;
    for (const auto& st : f.boundary) {
        auto [x0, y0] = xy[static_cast<std::size_t>(st.from)];
        auto [x1, y1] = xy[static_cast<std::size_t>(st.to)];
        a += x0 * y1 - x1 * y0;
    }
    return a / 2;
}

/// Embeds a straight-line drawing; the outer face is the one whose walk has
/// the opposite orientation from all bounded faces.
std::optional<PlaneEmbedding> embed(const Graph& g, const Coordinates& xy) {
    if (!g.is_two_connected()) return std::nullopt;
    auto rot = rotation_from_coordinates(g, xy);
    PlaneEmbedding first = trace_faces(g, rot);
    // Bounded faces of a clockwise rotation walk counter-clockwise in the
    // plane (positive area); the unbounded one is the single negative face.
    int outer = -1;
    for (int f = 0; f < first.face_count(); ++f) {
        if (signed_area(first.face(f), xy) < 0) outer = f;
    }
    std::vector<EdgeId> hint;
    for (const auto& st : first.face(outer < 0 ? first.outer_face() : outer).boundary) hint.push_back(st.edge);
    return trace_faces(g, std::move(rot), std::move(hint));
}

GeneratedGraph finish(std::string name, int n, EdgeList edges, const Coordinates* xy) {
    GeneratedGraph out;
    out.name = std::move(name);
    out.graph = Graph::build(n, edges);
    if (xy) out.embedding = embed(out.graph, *xy);
    return out;
}

void require(bool ok, const std::string& what) {
    if (!ok) throw GraphError("generator parameters out of range: " + what);
}

Coordinates circle(int n, double radius, double phase = 0) {
    Coordinates xy;
    for (int i = 0; i < n; ++i) {
        double t = phase + 2 * std::numbers::pi * i / n;
        xy.emplace_back(radius * std::cos(t), radius * std::sin(t));
    }
    return xy;
}

}  // namespace

std::vector<std::vector<EdgeId>> rotation_from_coordinates(const Graph& g, const Coordinates& xy) {
    std::vector<std::vector<EdgeId>> rot(static_cast<std::size_t>(g.vertex_count()));
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        std::vector<std::pair<double, EdgeId>> around;
        auto [x, y] = xy[static_cast<std::size_t>(v)];
        for (const Incidence& in : g.incident(v)) {
            auto [ox, oy] = xy[static_cast<std::size_t>(in.other)];
            around.emplace_back(std::atan2(oy - y, ox - x), in.edge);
        }
        // Clockwise: decreasing angle.
        std::sort(around.begin(), around.end(), [](const auto& a, const auto& b) {
            return a.first != b.first ? a.first > b.first : a.second < b.second;
        });
        for (const auto& [angle, e] : around) rot[static_cast<std::size_t>(v)].push_back(e);
    }
    return rot;
}

GeneratedGraph make_cycle(int n) {
    require(n >= 3, "cycle needs n >= 3");
    EdgeList edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    auto xy = circle(n, 1.0);
    return finish("cycle " + std::to_string(n), n, edges, &xy);
}

GeneratedGraph make_path(int n) {
    require(n >= 1, "path needs n >= 1");
    EdgeList edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return finish("path " + std::to_string(n), n, edges, nullptr);
}

GeneratedGraph make_grid(int rows, int cols) {
    require(rows >= 1 && cols >= 1 && rows * cols >= 1, "grid needs rows, cols >= 1");
    EdgeList edges;
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c + 1 < cols; ++c) edges.emplace_back(r * cols + c, r * cols + c + 1);
    for (int r = 0; r + 1 < rows; ++r)
        for (int c = 0; c < cols; ++c) edges.emplace_back(r * cols + c, (r + 1) * cols + c);
    Coordinates xy;
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) xy.emplace_back(c, -r);
    std::string name = "grid " + std::to_string(rows) + " " + std::to_string(cols);
    return finish(name, rows * cols, edges, rows >= 2 && cols >= 2 ? &xy : nullptr);
}

GeneratedGraph make_hypercube(int d) {
    require(d >= 1 && d <= 12, "hypercube needs 1 <= d <= 12");
    const int n = 1 << d;
    EdgeList edges;
    for (int x = 0; x < n; ++x)
        for (int i = 0; i < d; ++i)
            if (x < (x ^ (1 << i))) edges.emplace_back(x, x ^ (1 << i));
    Coordinates xy;
    for (int x = 0; x < n; ++x) {
        double scale = (d == 3 && (x & 4)) ? 0.5 : 1.0;
        xy.emplace_back(scale * (2 * (x & 1) - 1), scale * (2 * ((x >> 1) & 1) - 1));
    }
    return finish("hypercube " + std::to_string(d), n, edges, (d == 2 || d == 3) ? &xy : nullptr);
}

GeneratedGraph make_complete(int n) {
    require(n >= 1 && n <= 256, "complete needs 1 <= n <= 256");
    EdgeList edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    Coordinates xy;
    if (n == 3) {
        xy = circle(3, 1.0, std::numbers::pi / 2);
    } else if (n == 4) {
        xy.emplace_back(0, 0);
        auto tri = circle(3, 1.0, std::numbers::pi / 2);
        xy.insert(xy.end(), tri.begin(), tri.end());
    }
    return finish("complete " + std::to_string(n), n, edges, (n == 3 || n == 4) ? &xy : nullptr);
}

GeneratedGraph make_wheel(int rim) {
    require(rim >= 3, "wheel needs at least 3 rim vertices");
    EdgeList edges;
    for (int i = 0; i < rim; ++i) edges.emplace_back(1 + i, 1 + (i + 1) % rim);
    for (int i = 0; i < rim; ++i) edges.emplace_back(0, 1 + i);
    Coordinates xy{{0.0, 0.0}};
    auto ring = circle(rim, 1.0);
    xy.insert(xy.end(), ring.begin(), ring.end());
    return finish("wheel " + std::to_string(rim), rim + 1, edges, &xy);
}

GeneratedGraph make_complete_bipartite(int a, int b) {
    require(a >= 1 && b >= 1 && a + b <= 512, "complete_bipartite needs a, b >= 1");
    EdgeList edges;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) edges.emplace_back(i, a + j);
    std::string name = "complete_bipartite " + std::to_string(a) + " " + std::to_string(b);
    if (std::min(a, b) != 2) return finish(name, a + b, edges, nullptr);
    // Two poles above and below a row of the other part.
    Coordinates xy(static_cast<std::size_t>(a + b));
    const bool poles_first = a == 2;
    const int others = poles_first ? b : a;
    const int pole0 = poles_first ? 0 : a;
    const int first_other = poles_first ? a : 0;
    xy[static_cast<std::size_t>(pole0)] = {0.0, 1.0};
    xy[static_cast<std::size_t>(pole0 + 1)] = {0.0, -1.0};
    for (int i = 0; i < others; ++i) {
        xy[static_cast<std::size_t>(first_other + i)] = {i - (others - 1) / 2.0, 0.0};
    }
    return finish(name, a + b, edges, &xy);
}

GeneratedGraph make_random(int n, int m, std::uint64_t seed) {
    require(n >= 1 && n <= 4096, "random needs 1 <= n <= 4096");
    require(m >= n - 1 && static_cast<long long>(m) <= static_cast<long long>(n) * (n - 1) / 2,
            "random needs n-1 <= m <= n(n-1)/2");
    std::mt19937_64 rng(seed);
    std::vector<VertexId> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
    shuffle(perm, rng);
    std::set<std::pair<VertexId, VertexId>> chosen;
    for (int i = 1; i < n; ++i) {
        VertexId a = perm[static_cast<std::size_t>(i)];
        VertexId b = perm[static_cast<std::size_t>(draw(rng, static_cast<std::uint64_t>(i)))];
        chosen.emplace(std::min(a, b), std::max(a, b));
    }
    EdgeList rest;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!chosen.count({i, j})) rest.emplace_back(i, j);
    shuffle(rest, rng);
    for (std::size_t i = 0; static_cast<int>(chosen.size()) < m; ++i) chosen.insert(rest[i]);
    EdgeList edges(chosen.begin(), chosen.end());
    std::string name = "random " + std::to_string(n) + " " + std::to_string(m) + " seed " + std::to_string(seed);
    return finish(name, n, edges, nullptr);
}

GeneratedGraph make_random_bipartite(int n, int m, std::uint64_t seed) {
    require(n >= 2 && n <= 4096, "random_bipartite needs 2 <= n <= 4096");
    const int left = (n + 1) / 2;
    const int right = n - left;
    require(m >= n - 1 && static_cast<long long>(m) <= static_cast<long long>(left) * right,
            "random_bipartite needs n-1 <= m <= ceil(n/2)*floor(n/2)");
    std::mt19937_64 rng(seed);
    // Attach vertices in an interleaved order so that each new vertex has an
    // already placed vertex on the other side.
    std::vector<VertexId> lefts, rights;
    for (int i = 0; i < left; ++i) lefts.push_back(i);
    for (int i = 0; i < right; ++i) rights.push_back(left + i);
    shuffle(lefts, rng);
    shuffle(rights, rng);
    std::set<std::pair<VertexId, VertexId>> chosen;
    std::vector<VertexId> placed_left{lefts[0]}, placed_right;
    std::size_t li = 1, ri = 0;
    while (li < lefts.size() || ri < rights.size()) {
        bool take_right = ri < rights.size() && (placed_right.size() <= placed_left.size() || li >= lefts.size());
        if (take_right) {
            VertexId v = rights[ri++];
            VertexId p = placed_left[static_cast<std::size_t>(draw(rng, placed_left.size()))];
            chosen.emplace(std::min(v, p), std::max(v, p));
            placed_right.push_back(v);
        } else {
            VertexId v = lefts[li++];
            VertexId p = placed_right[static_cast<std::size_t>(draw(rng, placed_right.size()))];
            chosen.emplace(std::min(v, p), std::max(v, p));
            placed_left.push_back(v);
        }
    }
    EdgeList rest;
    for (int i = 0; i < left; ++i)
        for (int j = left; j < n; ++j)
            if (!chosen.count({i, j})) rest.emplace_back(i, j);
    shuffle(rest, rng);
    for (std::size_t i = 0; static_cast<int>(chosen.size()) < m; ++i) chosen.insert(rest[i]);
    EdgeList edges(chosen.begin(), chosen.end());
    std::string name =
        "random_bipartite " + std::to_string(n) + " " + std::to_string(m) + " seed " + std::to_string(seed);
    return finish(name, n, edges, nullptr);
}

GeneratedGraph make_random_plane(int n, int m, std::uint64_t seed) {
    require(n >= 3 && n <= 4096, "random_plane needs 3 <= n <= 4096");
    require(m >= n && m <= 3 * n - 6 + (n == 3 ? 3 : 0), "random_plane needs n <= m <= 3n-6");
    std::mt19937_64 rng(seed);
    Coordinates xy{{0.0, 0.0}, {1.0, 0.0}, {0.5, 0.8660254037844386}};
    std::set<std::pair<VertexId, VertexId>> chosen{{0, 1}, {1, 2}, {0, 2}};
    std::vector<std::array<VertexId, 3>> triangles{{0, 1, 2}};
    for (VertexId v = 3; v < n; ++v) {
        auto t = static_cast<std::size_t>(draw(rng, triangles.size()));
        auto tri = triangles[t];
        // Random interior point: barycentric weights bounded away from zero.
        double w[3];
        double total = 0;
        for (double& x : w) {
            x = 1.0 + static_cast<double>(draw(rng, 1000)) / 250.0;
            total += x;
        }
        double x = 0, y = 0;
        for (int i = 0; i < 3; ++i) {
            x += w[i] / total * xy[static_cast<std::size_t>(tri[static_cast<std::size_t>(i)])].first;
            y += w[i] / total * xy[static_cast<std::size_t>(tri[static_cast<std::size_t>(i)])].second;
        }
        xy.emplace_back(x, y);
        for (VertexId c : tri) chosen.emplace(std::min(c, v), std::max(c, v));
        triangles[t] = {tri[0], tri[1], v};
        triangles.push_back({tri[1], tri[2], v});
        triangles.push_back({tri[2], tri[0], v});
    }
    EdgeList edges(chosen.begin(), chosen.end());
    std::vector<std::size_t> order(edges.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    shuffle(order, rng);
    std::vector<bool> dropped(edges.size(), false);
    std::size_t remaining = edges.size();
    for (std::size_t idx : order) {
        if (static_cast<int>(remaining) <= m) break;
        dropped[idx] = true;
        EdgeList trial;
        for (std::size_t i = 0; i < edges.size(); ++i)
            if (!dropped[i]) trial.push_back(edges[i]);
        bool keep_ok = false;
        try {
            keep_ok = Graph::build(n, trial).is_two_connected();
        } catch (const GraphError&) {
            keep_ok = false;
        }
        if (keep_ok) {
            --remaining;
        } else {
            dropped[idx] = false;
        }
    }
    EdgeList kept;
    for (std::size_t i = 0; i < edges.size(); ++i)
        if (!dropped[i]) kept.push_back(edges[i]);
    std::string name = "random_plane " + std::to_string(n) + " " + std::to_string(m) + " seed " + std::to_string(seed);
    return finish(name, n, kept, &xy);
}

std::vector<std::pair<std::string, std::string>> generator_families() {
    return {
        {"cycle", "n"},
        {"path", "n"},
        {"grid", "rows cols"},
        {"hypercube", "d"},
        {"complete", "n"},
        {"wheel", "rim"},
        {"complete_bipartite", "a b"},
        {"random", "n m (uses --seed)"},
        {"random_bipartite", "n m (uses --seed)"},
        {"random_plane", "n m (uses --seed)"},
    };
}

GeneratedGraph generate(const std::string& family, const std::vector<long long>& params, std::uint64_t seed) {
    auto need = [&](std::size_t k) {
        if (params.size() != k) {
            throw GraphError("family '" + family + "' takes " + std::to_string(k) + " parameter(s), got " +
                             std::to_string(params.size()));
        }
        for (long long p : params) require(p >= -1'000'000 && p <= 1'000'000, "parameter magnitude");
    };
    auto p = [&](std::size_t i) { return static_cast<int>(params[i]); };
    if (family == "cycle") return need(1), make_cycle(p(0));
    if (family == "path") return need(1), make_path(p(0));
    if (family == "grid") return need(2), make_grid(p(0), p(1));
    if (family == "hypercube") return need(1), make_hypercube(p(0));
    if (family == "complete") return need(1), make_complete(p(0));
    if (family == "wheel") return need(1), make_wheel(p(0));
    if (family == "complete_bipartite") return need(2), make_complete_bipartite(p(0), p(1));
    if (family == "random") return need(2), make_random(p(0), p(1), seed);
    if (family == "random_bipartite") return need(2), make_random_bipartite(p(0), p(1), seed);
    if (family == "random_plane") return need(2), make_random_plane(p(0), p(1), seed);
    throw GraphError("unknown graph family '" + family + "'");
}

}  // namespace convexcuts
