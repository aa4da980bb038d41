#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace gapforge {

using Index = std::size_t;

/// Marks a hole in a projection table. Only malformed instances contain it.
inline constexpr Index kNoLabel = std::numeric_limits<Index>::max();

struct LcEdge {
    Index a;
    Index b;

    friend bool operator==(const LcEdge&, const LcEdge&) = default;
};

/// Bipartite projection game. Vertices and labels are ordered; every
/// operation iterates in index order.
struct LabelCoverInstance {
    std::vector<std::string> a_vertices;
    std::vector<std::string> b_vertices;
    std::vector<std::string> sigma_a;
    std::vector<std::string> sigma_b;
    std::vector<LcEdge> edges;
    /// projections[e][x] is π_e(x) as an index into sigma_b.
    std::vector<std::vector<Index>> projections;

    Index a_index(const std::string& name) const;
    Index b_index(const std::string& name) const;
    Index sigma_a_index(const std::string& label) const;
    Index sigma_b_index(const std::string& label) const;

    /// Edge index of (a, b); throws UnknownEdge.
    Index edge_index(Index a, Index b) const;
    std::optional<Index> find_edge(Index a, Index b) const;

    /// Edge indices incident to b, in edge-list order. This order defines the
    /// coordinate order of the derived test.
    std::vector<Index> edges_of_b(Index b) const;
    std::vector<Index> edges_of_a(Index a) const;

    friend bool operator==(const LabelCoverInstance&, const LabelCoverInstance&) = default;
};

struct Labeling {
    std::vector<Index> phi_a;
    std::optional<std::vector<Index>> phi_b;

    friend bool operator==(const Labeling&, const Labeling&) = default;
};

struct ValidationReport {
    bool bi_regular = false;
    /// Maximum A-degree and B-degree; equal to the common degree when bi-regular.
    Index d_a = 0;
    Index d_b = 0;
    /// max over edges and b-labels of |π_e⁻¹(y)|.
    Index p = 0;
    /// |A| + |B| + |E|.
    Index size_n = 0;

    friend bool operator==(const ValidationReport&, const ValidationReport&) = default;
};

ValidationReport validate_label_cover(const LabelCoverInstance& lc);

std::vector<Index> preimage(const LabelCoverInstance& lc, Index edge, Index y);

Index count_satisfied_edges(const LabelCoverInstance& lc, const Labeling& lab);

}  // namespace gapforge
