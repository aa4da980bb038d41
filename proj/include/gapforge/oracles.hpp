#pragma once

#include "gapforge/label_cover.hpp"
#include "gapforge/problems.hpp"
#include "gapforge/ssat.hpp"
#include "gapforge/superassign.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace gapforge {

enum class SsatMode { L1, Linf };

std::string to_string(SsatMode mode);

/// The search box [−coeff_box, coeff_box] and the state cap. Searches whose
/// nominal space exceeds max_states fail with SearchSpaceTooLarge before
/// doing any work.
struct SearchBudget {
    Integer coeff_box = 1;
    Integer max_states = 100'000'000;
    SsatMode mode = SsatMode::L1;
};

/// 10⁸, or GAPFORGE_MAX_STATES when set to a positive integer.
Integer default_max_states();

SearchBudget make_budget(const Integer& box, SsatMode mode = SsatMode::L1);

/// Throws SearchSpaceTooLarge if base^exponent > cap.
void require_enumerable(const Integer& base, std::size_t exponent, const Integer& cap, const std::string& what);

struct LcOptimum {
    Rational best_fraction;
    Labeling witness;
    Integer states_visited;
};

/// Exact maximum fraction of satisfied edges. φ_B is chosen per b as the
/// plurality projected label, lowest index on ties; the witness is the
/// lexicographically first optimal φ_A.
LcOptimum solve_lc_max(const LabelCoverInstance& lc, const Integer& max_states = default_max_states());

struct SsatOptimum {
    /// Absent when no admissible super-assignment lies in the box.
    std::optional<Rational> min_norm;
    std::optional<SuperAssignment> witness;
    SsatMode mode = SsatMode::L1;
    Integer states_visited;
};

/// Minimum ℓ1 norm over consistent non-trivial super-assignments (L1 mode) or
/// minimum ℓ∞ norm over consistent not-all-zero ones (Linf mode), with
/// weights in the box. The witness is lexicographically smallest.
SsatOptimum solve_ssat_min_norm(const SsatInstance& ssat, const SearchBudget& budget);

/// Calls `visit` on every consistent super-assignment with weights in
/// [−box, box], in lexicographic order. Returns the number of search nodes.
Integer enumerate_consistent(const SsatInstance& ssat, const Integer& box, const Integer& max_states,
    const std::function<void(const SuperAssignment&)>& visit);

struct SisOptimum {
    std::optional<Integer> min_l1;
    std::optional<IntVector> witness;
    Integer states_visited;
};

/// Minimum ‖z‖₁ over z ∈ [−K, K]^{m′} with B′z = t′.
SisOptimum solve_sis_min(const SisInstance& sis, const SearchBudget& budget);

/// Calls `visit` on every z in the box with B′z = t′, in lexicographic order.
Integer enumerate_sis_solutions(const SisInstance& sis, const Integer& box, const Integer& max_states,
    const std::function<void(const IntVector&)>& visit);

enum class NcpMode { Full, Box };

std::string to_string(NcpMode mode);

struct NcpOptimum {
    Index min_dist = 0;
    IntVector witness;
    NcpMode mode = NcpMode::Full;
    Integer states_visited;
};

/// Full mode ranges z over F_q^{m′}; box mode over [−K, K]^{m′} read mod q.
NcpOptimum solve_ncp_min(const NcpInstance& ncp, const SearchBudget& budget, bool full_field);

/// Strict inequalities violated under (standard, ε) lexicographic evaluation.
Index count_lhp_violations(const LhpSystem& lhp, const LhpAssignment& a);

/// {−1, 0, 1}^{num_x} × {y = 1} × {δ = ε}, lexicographic with −1 first.
std::vector<LhpAssignment> default_lhp_grid(Index num_x, const Integer& max_states = default_max_states());

struct LhpOptimum {
    Index min_violations = 0;
    LhpAssignment witness;
    Integer states_visited;
};

/// Minimum over the grid; an upper bound on the true noise of the system.
LhpOptimum solve_lhp_min(const LhpSystem& lhp, const std::vector<LhpAssignment>& grid);

}  // namespace gapforge
