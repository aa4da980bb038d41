#pragma once

#include "gapforge/label_cover.hpp"
#include "gapforge/numeric.hpp"

#include <cstdint>
#include <optional>

namespace gapforge {

struct GenSpec {
    Index num_a = 2;
    Index num_b = 1;
    Index d_b = 2;
    Index sigma_a_size = 2;
    Index sigma_b_size = 2;
    Index arity_p = 1;
    bool planted = true;
    std::uint64_t seed = 0;
};

struct GeneratedLc {
    LabelCoverInstance instance;
    /// The hidden labeling every edge satisfies, for planted specs.
    std::optional<Labeling> planted;
    GenSpec spec;
    /// Filled in by callers that run the exact oracle.
    std::optional<Rational> oracle_value;
};

/// Throws InfeasibleSpec unless the degrees and alphabet sizes admit a
/// total, at-most-p-to-1 instance without isolated vertices.
void check_gen_spec(const GenSpec& spec);

/// B-vertex b is joined to positions b·d_b, …, b·d_b + d_b − 1 (mod |A|)
/// of a seeded permutation of A. Each table sends labels one at a time to
/// a uniformly drawn B-label that still has fewer than p preimages; when
/// planted, the hidden A-label is sent to the hidden B-label first.
GeneratedLc gen_label_cover(const GenSpec& spec);

/// Adds a nonzero cyclic shift mod |Σ_B| to the tables of `num_flips`
/// distinct edges chosen by the seed. Throws BadParameters if
/// num_flips > |E|.
LabelCoverInstance frustrate(const LabelCoverInstance& lc, Index num_flips, std::uint64_t seed);

/// The edges `frustrate` would twist, in increasing order.
std::vector<Index> frustrated_edges(const LabelCoverInstance& lc, Index num_flips, std::uint64_t seed);

}  // namespace gapforge
