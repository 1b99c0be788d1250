#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "convexcuts/graph.hpp"
#include "convexcuts/oracle.hpp"
#include "convexcuts/plane_embedding.hpp"
#include "convexcuts/relations.hpp"

namespace convexcuts {

/// Search graph S inside the line graph: {e, f} is an arc when e and f bound
/// a common bounded face and some child of e is theta'-related to some child
/// of f. Each arc records the witnessing face (an edge pair can share two
/// bounded faces, producing two arcs).
struct SearchGraph {
    struct Arc {
        EdgeId to;
        int face;
    };

    /// arcs[e]: outgoing arcs of e, sorted by (face, to).
    std::vector<std::vector<Arc>> arcs;

    int vertex_count() const { return static_cast<int>(arcs.size()); }
    bool has_arc(EdgeId e, EdgeId f) const;
    std::size_t arc_count() const;  // undirected, per witnessing face
};

SearchGraph build_search_graph(const PlaneEmbedding& emb, const CompatibilityMatrices& mats);

enum class CutKind { non_cyclic, cyclic, bipartite };

const char* to_string(CutKind kind);

struct CutSet {
    CutKind kind = CutKind::non_cyclic;
    /// Ordered sequence e_0 .. e_{k-1}; consecutive edges share faces[i].
    std::vector<EdgeId> edges;
    /// Bounded faces crossed: k-1 of them for non-cyclic cuts (between
    /// consecutive edges), k for cyclic ones (the last closes back to e_0).
    std::vector<int> faces;
    VertexPartition partition;
};

struct PlaneCutOptions {
    /// Re-check every emitted cut with the polynomial convexity test.
    bool verify = true;
    /// Upper bound on live partial sequences during one start edge's search.
    std::size_t max_frontier = 1'000'000;
};

/// The search produced a cut the convexity re-check rejects.
class VerificationError : public std::runtime_error {
public:
    VerificationError(const std::string& what, CutSet cut) : std::runtime_error(what), cut_(std::move(cut)) {}
    const CutSet& cut() const { return cut_; }

private:
    CutSet cut_;
};

/// The frontier grew past PlaneCutOptions::max_frontier.
class ResourceLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// All convex cuts of a plane graph, each exactly once.
///
/// Non-cyclic cut-sets are grown from every outer-face edge, cyclic ones
/// from every other edge through a fixed first face. A partial sequence
/// (e_0, .., e_i) that entered its current bounded face F through e_i may
/// append f when {e_i, f} is an arc of S witnessed by F, f is compatible
/// with every edge already in the sequence, f is neither tabu nor used, and
/// the face behind f has not been crossed yet. Start edges become tabu once
/// exhausted. Results are sorted by (size, sorted edge ids).
std::vector<CutSet> enumerate_convex_cuts_plane(const PlaneEmbedding& emb, const SearchGraph& search,
                                                const CompatibilityMatrices& mats, const PlaneCutOptions& options = {});

/// Builds the subdivision, matrices and search graph, then enumerates.
std::vector<CutSet> find_convex_cuts_plane(const PlaneEmbedding& emb, const PlaneCutOptions& options = {},
                                           ChildConvention convention = ChildConvention::low_endpoint_first);

/// Sorted copy of the cut's edge ids.
std::vector<EdgeId> sorted_edges(const CutSet& cut);

}  // namespace convexcuts
