#pragma once

#include "gapforge/label_cover.hpp"
#include "gapforge/numeric.hpp"
#include "gapforge/ssat.hpp"
#include "gapforge/superassign.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

namespace gapforge {

/// Per-A-vertex label lists φ̂_A(a), as indices into Σ_A.
struct ListLabeling {
    std::vector<std::set<Index>> lists;
    Index max_list_size = 0;

    friend bool operator==(const ListLabeling&, const ListLabeling&) = default;
};

ListLabeling make_list_labeling(std::vector<std::set<Index>> lists);

/// No two neighbours of b project their labels to a common Σ_B label.
bool totally_disagree(const LabelCoverInstance& lc, const std::vector<Index>& phi_a, Index b);

/// No two neighbours of b have list members with a common image.
bool list_totally_disagree(const LabelCoverInstance& lc, const ListLabeling& lists, Index b);

/// max over φ_A of the fraction of B-vertices not in total disagreement.
Rational agreement_soundness_exact(const LabelCoverInstance& lc, const Integer& max_states);

/// Same with every A-vertex carrying a nonempty list of at most `l` labels.
Rational list_agreement_soundness_exact(const LabelCoverInstance& lc, Index l, const Integer& max_states);

struct ListSoundnessBound {
    Rational lhs;
    Rational rhs;
    bool holds = false;
};

/// lhs = list agreement soundness at l; rhs = min(1, l²·s_agr).
ListSoundnessBound check_list_soundness_bound(const LabelCoverInstance& lc, Index l, const Integer& max_states);

struct ListConstructionParams {
    Rational g;
    Rational s_list;
    Rational g1;
    Rational p_include;
    std::uint64_t seed = 0;
};

/// Largest number of tests any variable occurs in.
Index max_variable_degree(const SsatInstance& ssat);

/// g₁ = g(1 − s)/(1 − 2s) and p = min(1, g₁/D_A), or p = 1 when
/// `derandomize`. Throws BadParameters unless g > 0 and 0 < s_list < 1/2.
ListConstructionParams make_list_params(const SsatInstance& ssat, const Rational& g, const Rational& s_list,
    std::uint64_t seed, bool derandomize = false);

/// Ψ′ = {ψ : ‖S(ψ)‖ ≤ g₁}. Throws NormBoundViolated if ‖S‖₁ > g.
std::vector<Index> markov_select_psi_prime(const SsatInstance& ssat, const SuperAssignment& s,
    const ListConstructionParams& params);

struct ListConstruction {
    /// Indexed by A-vertex.
    ListLabeling labeling;
    /// Tests considered by step 2.
    std::vector<Index> psi_prime;
    /// Tuple chosen in step 2 or 3, per test.
    std::vector<std::optional<Index>> chosen;
    /// Tests marked in step 3 (ℓ∞ only).
    std::vector<Index> psi_double_prime;
    /// Variables with no assigned value (ℓ∞ only).
    std::vector<Index> v_prime;
    Rational p_include;
};

/// Step 1 lists every assigned value. Step 2 visits Ψ′ in order; a test
/// whose nonzero tuples have at most one good coordinate each contributes
/// the lowest-index nonzero tuple with exactly one, and that tuple's
/// non-assigned values enter with probability p. Bad arrays are zeroed first.
/// Throws PreconditionFailed if s is inconsistent or trivial, NotLcDerived
/// without provenance.
ListConstruction list_construction(const SsatInstance& ssat, const SuperAssignment& s,
    const ListConstructionParams& params);

/// The ℓ∞ variant with p = min(1, g/D_A) (or 1 when `derandomize`). Step 2
/// runs over every nonzero test; step 3 walks each variable with no assigned
/// value through its unmarked nonzero tests, taking at most g marked values.
/// Throws PreconditionFailed if g ≤ 0, s is inconsistent or all zero, or
/// ‖S‖∞ > g.
ListConstruction list_construction_linf(const SsatInstance& ssat, const SuperAssignment& s, const Integer& g,
    std::uint64_t seed, bool derandomize = false);

struct DefeatReport {
    Rational non_disagree_fraction;
    bool defeats = false;
};

DefeatReport verify_defeats_list_soundness(const LabelCoverInstance& lc, const ListLabeling& lists,
    const Rational& s_list);

}  // namespace gapforge
