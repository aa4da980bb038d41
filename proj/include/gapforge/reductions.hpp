#pragma once

#include "gapforge/label_cover.hpp"
#include "gapforge/problems.hpp"
#include "gapforge/ssat.hpp"
#include "gapforge/superassign.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gapforge {

/// One variable per A-vertex, one test per B-vertex. R(ψ_b) is the union
/// over y ∈ Σ_B of the cross product of the neighbours' preimages of y,
/// taken in Σ_B order with the first neighbour varying slowest.
SsatInstance lc_to_ssat(const LabelCoverInstance& lc);

/// Consistency gadget for tests (i, j) on shared variable x. Both matrices
/// have |F| rows; g1 has one column per tuple of test i, g2 per tuple of j.
struct GadgetPair {
    std::vector<IntVector> g1;
    std::vector<IntVector> g2;
};

GadgetPair gadget_pair(const SsatInstance& ssat, Index test_i, Index test_j, Index variable);

/// Non-triviality rows (one per test) followed by |F| consistency rows for
/// every unordered test pair and shared variable; t′ = 1, d = |Ψ|.
SisInstance ssat_to_sis(const SsatInstance& ssat);

/// Concatenation S(ψ_1) ‖ … ‖ S(ψ_n).
IntVector sis_solution_from_superassignment(const SuperAssignment& s);

/// Splits z back into per-test pieces. Throws LengthMismatch.
SuperAssignment superassignment_from_sis_solution(const SsatInstance& ssat, const IntVector& z);

/// A is B′ with every row repeated `d_rep` times, stacked over I_{m′};
/// t = 1^{n′·d_rep} 0^{m′}. Defaults: d_rep = g·d + 1, q = least prime above
/// g·max(n′, m′). Throws BadParameters when an override breaks either bound.
NcpInstance sis_to_ncp(const SisInstance& sis, const Integer& g, std::optional<Integer> d_rep = std::nullopt,
    std::optional<Integer> q = std::nullopt);

/// Homogenised strict-inequality system in groups G1–G5. U defaults to g·d + 1.
LhpSystem sis_to_lhp(const SisInstance& sis, std::optional<Integer> u_param = std::nullopt, const Integer& g = 1);

/// Total inequality count 2U + 2U·n′ + 2U·m′ + 2m′ + U.
Integer expected_lhp_size(const Integer& u, Index rows, Index cols);

/// x = z, y = 1, δ = ε.
LhpAssignment lhp_assignment_from_sis_solution(const IntVector& z);

struct LhpInfeasibility {
    LhpGroup group;
    /// Index into the system's inequality list.
    Index inequality;
    std::string reason;
};

struct LhpExtraction {
    std::optional<IntVector> z;
    std::optional<LhpInfeasibility> infeasible;

    bool ok() const { return z.has_value(); }
};

/// Checks every G1, then G3, then G2 inequality, stopping at the first
/// violation; then divides x by y exactly and requires integral quotients
/// that satisfy every SIS row with zero residual.
LhpExtraction sis_solution_from_lhp_assignment(const LhpSystem& lhp, const LhpAssignment& a);

}  // namespace gapforge
