#pragma once

#include <cstdint>
#include <vector>

#include "convexcuts/graph.hpp"

namespace convexcuts {

/// Dense square bit matrix.
class BitMatrix {
public:
    BitMatrix() = default;
    explicit BitMatrix(int n) : n_(n), words_((static_cast<std::size_t>(n) + 63) / 64), bits_(static_cast<std::size_t>(n) * words_, 0) {}

    int size() const { return n_; }
    bool get(int i, int j) const {
        return (bits_[static_cast<std::size_t>(i) * words_ + static_cast<std::size_t>(j) / 64] >> (j % 64)) & 1U;
    }
    void set(int i, int j, bool value = true) {
        auto& w = bits_[static_cast<std::size_t>(i) * words_ + static_cast<std::size_t>(j) / 64];
        const std::uint64_t mask = std::uint64_t{1} << (j % 64);
        w = value ? (w | mask) : (w & ~mask);
    }
    /// Row i as packed words; equal rows compare equal.
    const std::uint64_t* row(int i) const { return bits_.data() + static_cast<std::size_t>(i) * words_; }
    std::size_t words_per_row() const { return words_; }

private:
    int n_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> bits_;
};

/// W_xy for an oriented edge (x, y): vertices strictly closer to x than to y.
std::vector<VertexId> half_space(const Graph& g, const DistanceTable& dist, VertexId x, VertexId y);

/// Djokovic relation: f has one endpoint strictly closer to e.u and the other
/// strictly closer to e.v. Reflexive and symmetric.
bool djokovic_related(const Graph& g, const DistanceTable& dist, EdgeId e, EdgeId f);

/// All four endpoint distances between e and f coincide.
bool tau_related(const Graph& g, const DistanceTable& dist, EdgeId e, EdgeId f);

/// C_e of a bipartite graph: the edges Djokovic-related to e, i.e. the
/// cut-set between W_ab and W_ba. Computed with two BFS passes.
/// Throws GraphError when g is not bipartite.
std::vector<EdgeId> edge_cut_set(const Graph& g, EdgeId e);

/// Constant-time relation lookups used by the plane-graph search.
///
/// `tau` is indexed by edges of G, `theta_prime` by edges of the
/// subdivision (child 2e+k of edge e).
struct CompatibilityMatrices {
    BitMatrix tau;
    BitMatrix theta_prime;

    int edge_count() const { return tau.size(); }
    /// Some child of e is theta'-related to some child of f.
    bool children_related(EdgeId e, EdgeId f) const {
        return theta_prime.get(2 * e, 2 * f) || theta_prime.get(2 * e, 2 * f + 1) ||
               theta_prime.get(2 * e + 1, 2 * f) || theta_prime.get(2 * e + 1, 2 * f + 1);
    }
    /// Same as compatible() without the e != f check.
    bool compatible_unchecked(EdgeId e, EdgeId f) const { return tau.get(e, f) || children_related(e, f); }
};

/// Builds both matrices from one distance table of G and one of G'.
/// Throws std::logic_error if some tau-related pair also has theta'-related
/// children, which cannot happen for a correct implementation.
CompatibilityMatrices build_compatibility_matrices(const Graph& g, const Subdivision& sub);
CompatibilityMatrices build_compatibility_matrices(const Graph& g, const DistanceTable& dist, const Subdivision& sub,
                                                   const DistanceTable& prime_dist);

/// e and f are tau-related or have theta'-related children.
/// Throws std::invalid_argument when e == f.
bool compatible(const CompatibilityMatrices& mats, EdgeId e, EdgeId f);

}  // namespace convexcuts
