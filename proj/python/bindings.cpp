#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "convexcuts/alternating.hpp"
#include "convexcuts/bipartite_cuts.hpp"
#include "convexcuts/cli.hpp"
#include "convexcuts/generators.hpp"
#include "convexcuts/graph_io.hpp"
#include "convexcuts/oracle.hpp"
#include "convexcuts/plane_cuts.hpp"

namespace py = pybind11;
using namespace convexcuts;

namespace {

py::tuple partition_tuple(const VertexPartition& p) { return py::make_tuple(p.first, p.second); }

py::dict path_dict(const AlternatingPath& p) {
    py::dict d;
    d["edges"] = p.edges;
    d["faces"] = p.faces;
    d["multiplicity"] = p.multiplicity;
    d["closed"] = p.closed;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Convex cut enumeration for bipartite and plane graphs";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<GraphError>(m, "GraphError", PyExc_ValueError);
    py::register_exception<EmbeddingError>(m, "EmbeddingError", PyExc_ValueError);
    py::register_exception<ResourceLimitError>(m, "ResourceLimitError", PyExc_RuntimeError);
    py::register_exception<VerificationError>(m, "VerificationError", PyExc_RuntimeError);
    py::register_exception<AlternatingError>(m, "AlternatingError", PyExc_RuntimeError);

    py::class_<Graph>(m, "Graph")
        .def(py::init([](int n, const std::vector<std::pair<VertexId, VertexId>>& edges) { return Graph::build(n, edges); }),
             py::arg("vertex_count"), py::arg("edges"))
        .def_property_readonly("vertex_count", &Graph::vertex_count)
        .def_property_readonly("edge_count", &Graph::edge_count)
        .def("edges", &Graph::edge_list)
        .def("is_bipartite", [](const Graph& g) { return static_cast<bool>(is_bipartite(g)); })
        .def("distances", [](const Graph& g) {
            auto d = all_pairs_distances(g);
            std::vector<std::vector<int>> out(static_cast<std::size_t>(g.vertex_count()));
            for (VertexId u = 0; u < g.vertex_count(); ++u)
                for (VertexId v = 0; v < g.vertex_count(); ++v) out[u].push_back(static_cast<int>(d(u, v)));
            return out;
        })
        .def("__repr__", [](const Graph& g) {
            return "<Graph n=" + std::to_string(g.vertex_count()) + " m=" + std::to_string(g.edge_count()) + ">";
        });

    py::class_<PlaneEmbedding>(m, "PlaneEmbedding")
        .def(py::init([](const Graph& g, const std::vector<std::vector<EdgeId>>& rotation,
                         const std::vector<EdgeId>& outer) { return trace_faces(g, rotation, outer); }),
             py::arg("graph"), py::arg("rotation"), py::arg("outer") = std::vector<EdgeId>{})
        .def_property_readonly("graph", &PlaneEmbedding::graph)
        .def_property_readonly("face_count", &PlaneEmbedding::face_count)
        .def_property_readonly("outer_face", &PlaneEmbedding::outer_face)
        .def("rotations", &PlaneEmbedding::rotations)
        .def("face_edges",
             [](const PlaneEmbedding& emb, int f) {
                 std::vector<EdgeId> out;
                 for (const auto& st : emb.face(f).boundary) out.push_back(st.edge);
                 return out;
             })
        .def("reflected", &PlaneEmbedding::reflected)
        .def_property_readonly("warnings", &PlaneEmbedding::warnings);

    m.def(
        "generate",
        [](const std::string& family, const std::vector<long long>& params, std::uint64_t seed) {
            auto gg = generate(family, params, seed);
            return py::make_tuple(gg.graph, gg.embedding ? py::cast(*gg.embedding) : py::none());
        },
        py::arg("family"), py::arg("params") = std::vector<long long>{}, py::arg("seed") = 0,
        "Returns (graph, embedding or None).");
    m.def("generator_families", &generator_families);

    m.def(
        "parse_graph",
        [](const std::string& text) {
            auto f = parse_graph_string(text);
            return py::make_tuple(f.graph, f.embedding ? py::cast(*f.embedding) : py::none());
        },
        py::arg("text"), "Parses the text graph format into (graph, embedding or None).");
    m.def(
        "serialize_graph",
        [](const Graph& g, const PlaneEmbedding* emb) { return serialize_graph(g, emb); },
        py::arg("graph"), py::arg("embedding") = nullptr);

    m.def(
        "bipartite_cuts",
        [](const Graph& g, int threads) {
            BipartiteCutOptions opts;
            opts.threads = threads;
            py::gil_scoped_release release;
            return convex_cuts_bipartite(g, opts).convex_cut_sets;
        },
        py::arg("graph"), py::arg("threads") = 1, "Cut-sets of all convex cuts of a bipartite graph.");

    m.def(
        "plane_cuts",
        [](const PlaneEmbedding& emb, bool verify, std::size_t max_frontier) {
            PlaneCutOptions opts;
            opts.verify = verify;
            opts.max_frontier = max_frontier;
            std::vector<CutSet> cuts;
            {
                py::gil_scoped_release release;
                cuts = find_convex_cuts_plane(emb, opts);
            }
            py::list out;
            for (const auto& c : cuts) {
                py::dict d;
                d["kind"] = to_string(c.kind);
                d["edges"] = c.edges;
                d["faces"] = c.faces;
                d["partition"] = partition_tuple(c.partition);
                out.append(d);
            }
            return out;
        },
        py::arg("embedding"), py::arg("verify") = true, py::arg("max_frontier") = PlaneCutOptions{}.max_frontier);

    m.def(
        "bruteforce_cuts",
        [](const Graph& g, int max_vertices) {
            py::list out;
            for (const auto& p : enumerate_convex_cuts_bruteforce(g, {max_vertices})) out.append(partition_tuple(p));
            return out;
        },
        py::arg("graph"), py::arg("max_vertices") = BruteForceOptions{}.max_vertices);

    m.def(
        "is_convex_cut",
        [](const Graph& g, const std::vector<VertexId>& side) {
            std::vector<bool> mask(static_cast<std::size_t>(g.vertex_count()), false);
            for (VertexId v : side) mask.at(static_cast<std::size_t>(v)) = true;
            return static_cast<bool>(is_convex_cut(g, all_pairs_distances(g), VertexPartition::from_mask(mask)));
        },
        py::arg("graph"), py::arg("side"));

    m.def(
        "partial_cube",
        [](const Graph& g) {
            auto v = is_partial_cube(g);
            py::dict d;
            d["is_partial_cube"] = v.is_partial_cube;
            d["theta_classes"] = v.theta_classes;
            d["diagnosis"] = v.diagnosis();
            return d;
        },
        py::arg("graph"));

    m.def(
        "hamming_labels",
        [](const Graph& g) {
            auto lab = hamming_labeling(g);
            std::vector<std::string> out;
            for (VertexId v = 0; v < g.vertex_count(); ++v) out.push_back(lab.label_string(v));
            return out;
        },
        py::arg("graph"));

    m.def(
        "alternating_paths",
        [](const PlaneEmbedding& emb) {
            py::list out;
            for (const auto& p : alternating_paths(emb, alternating_path_graph(emb))) out.append(path_dict(p));
            return out;
        },
        py::arg("embedding"));

    m.def(
        "well_arranged",
        [](const PlaneEmbedding& emb, const std::vector<int>& order) {
            auto v = is_well_arranged(emb, order);
            py::dict d;
            d["well_arranged"] = v.well_arranged;
            d["self_crossings"] = v.crossings.total_self_crossings();
            d["max_pair_crossings"] = v.crossings.max_pair_crossings();
            py::list paths;
            for (const auto& p : v.paths) paths.append(path_dict(p));
            d["paths"] = paths;
            return d;
        },
        py::arg("embedding"), py::arg("order") = std::vector<int>{});

    m.def(
        "run_command",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            int code = run_command(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Runs a CLI command line, returning (exit code, stdout, stderr).");
}
