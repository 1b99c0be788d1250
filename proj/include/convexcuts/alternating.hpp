#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "convexcuts/oracle.hpp"
#include "convexcuts/plane_embedding.hpp"

namespace convexcuts {

/// Rule violation inside the alternating-path layer (coverage or slot
/// capacity). Indicates a bug or an embedding outside the model.
class AlternatingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Turn : std::int8_t { none, left, right };

Turn opposite(Turn t);

/// Alternating path graph A(G): vertices are the edges of G, arcs join
/// opposite edges of bounded faces.
struct AlternatingPathGraph {
    struct Arc {
        EdgeId to;
        int face;
        OppositeKind kind;  // `to` is the <kind> opposite of the source edge in `face`
    };

    /// arcs[e]: every opposite of e, across both bounded faces of e.
    std::vector<std::vector<Arc>> arcs;

    /// Undirected arc count (each opposite pair once per face).
    std::size_t arc_count() const;
    /// The opposite of e in face with the given flavour, or -1.
    EdgeId step(EdgeId e, int face, OppositeKind kind) const;
};

AlternatingPathGraph alternating_path_graph(const PlaneEmbedding& emb);

/// One member of the multiset P(G).
struct AlternatingPath {
    std::vector<EdgeId> edges;
    /// faces[i] is the bounded face between edges[i] and edges[i+1]; closed
    /// paths carry one extra face leading from the last edge back to the first.
    std::vector<int> faces;
    /// Value of a(P) after each step (the turn the next non-unique step must
    /// avoid repeating); one entry per face.
    std::vector<Turn> turn_log;
    int multiplicity = 1;
    bool closed = false;

    /// First turn taken, Turn::none for paths through even faces only.
    Turn first_turn() const;
};

/// Maximal alternating paths, one orientation per reversal pair (the one
/// with the lexicographically smaller (edges, faces)). Each step moves to
/// the face on the far side of the current edge. Closed paths are
/// recognised by a repeated (edge, face, turn state).
///
/// Throws AlternatingError unless every edge is covered exactly twice,
/// counting multiplicity.
std::vector<AlternatingPath> alternating_paths(const PlaneEmbedding& emb, const AlternatingPathGraph& apg);

/// Edge coverage of P(G) counted with multiplicity and once per passage.
std::vector<int> edge_coverage(const PlaneEmbedding& emb, const std::vector<AlternatingPath>& paths);

struct SlotUse {
    int instance;  // EAP instance
    int slot;      // 0: near edge.u, 1: near edge.v; single-slot edges use 0
};

/// Slot choices and crossing counts for one processing order.
struct CrossingReport {
    /// EAP instance -> index into the path list (multiplicity-2 paths give two instances).
    std::vector<int> instance_path;
    /// Per edge: number of slots (1 when both sides are bounded odd faces).
    std::vector<int> slot_count;
    /// Per edge: which instance sits in which slot.
    std::vector<std::vector<SlotUse>> slot_uses;
    /// Per instance.
    std::vector<int> self_crossings;
    /// (i, j) with i < j -> number of crossings.
    std::map<std::pair<int, int>, int> pair_crossings;

    int max_pair_crossings() const;
    int total_self_crossings() const;
};

/// Assigns slots to EAP instances in `order` (default: path order, both
/// copies of a multiplicity-2 path back to back) and counts crossings:
/// chords interleaving on a face boundary, plus one crossing for the two
/// traversals of every single-slot edge.
///
/// Throws AlternatingError if an edge runs out of slots.
CrossingReport assign_slots_and_count_crossings(const PlaneEmbedding& emb, const std::vector<AlternatingPath>& paths,
                                                const std::vector<int>& order = {});

/// Instance list in default order, for building permutations.
std::vector<int> default_instance_order(const std::vector<AlternatingPath>& paths);

struct ArrangementVerdict {
    bool well_arranged = false;
    std::vector<AlternatingPath> paths;
    CrossingReport crossings;

    explicit operator bool() const { return well_arranged; }
};

/// No EAP crosses itself and no pair crosses twice.
ArrangementVerdict is_well_arranged(const PlaneEmbedding& emb, const std::vector<int>& order = {});

/// Partition given by deleting the path's edges; nullopt for closed paths
/// or when the deletion does not leave exactly two components.
std::optional<VertexPartition> eap_cut(const AlternatingPath& path, const PlaneEmbedding& emb);

}  // namespace convexcuts
