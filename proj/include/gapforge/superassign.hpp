#pragma once

#include "gapforge/label_cover.hpp"
#include "gapforge/numeric.hpp"
#include "gapforge/ssat.hpp"

#include <map>
#include <optional>
#include <set>
#include <vector>

namespace gapforge {

/// weights[ψ][r] = S(ψ)[r], parallel to the instance's tests and R_ψ lists.
struct SuperAssignment {
    std::vector<IntVector> weights;

    friend bool operator==(const SuperAssignment&, const SuperAssignment&) = default;
    friend auto operator<=>(const SuperAssignment&, const SuperAssignment&) = default;
};

SuperAssignment zero_superassignment(const SsatInstance& ssat);

/// Throws LengthMismatch unless s has one vector of length |R_ψ| per test.
void check_shape(const SsatInstance& ssat, const SuperAssignment& s);

/// Dense over F: entry a is π_x(S(ψ))[a].
using ProjectionVector = IntVector;

ProjectionVector project(const SsatInstance& ssat, const SuperAssignment& s, Index test, Index variable);

struct ConsistencyWitness {
    Index test_i;
    Index test_j;
    Index variable;
    Index value;

    friend bool operator==(const ConsistencyWitness&, const ConsistencyWitness&) = default;
};

struct ConsistencyResult {
    bool consistent = true;
    std::optional<ConsistencyWitness> witness;
};

ConsistencyResult is_consistent(const SsatInstance& ssat, const SuperAssignment& s);

bool is_nontrivial(const SsatInstance& ssat, const SuperAssignment& s);
bool is_not_all_zero(const SuperAssignment& s);

Integer test_norm(const SuperAssignment& s, Index test);
Rational norm_l1(const SuperAssignment& s);
Integer norm_linf(const SuperAssignment& s);

/// Unit super-assignment picking r_b = (φ_A(a_1), …, φ_A(a_{D_B})) in every
/// test. When φ_B is absent each b takes the label its first neighbour
/// projects to. Throws EdgeUnsatisfied naming the first violated edge.
SuperAssignment natural_from_labeling(const LabelCoverInstance& lc, const SsatInstance& ssat, const Labeling& lab);

/// Assigned value sets G_x: a ∈ G_x iff some test containing x projects a
/// nonzero weight onto a.
std::vector<std::set<Index>> assigned_values(const SsatInstance& ssat, const SuperAssignment& s);

/// The block M^y of one test: the tuples produced by B-label y, laid out
/// over the cross product of per-variable axes.
struct ArrayView {
    Index test = 0;
    Index b_label = 0;
    std::vector<Index> variables;
    std::vector<std::vector<Index>> axes;
    std::map<std::vector<Index>, Integer> cells;
    std::vector<Index> assignment_indices;
    Integer norm;
};

std::vector<ArrayView> decompose_arrays(const SsatInstance& ssat, const SuperAssignment& s, Index test);

/// good[k] iff some value on axis k is assigned to the k-th variable.
std::vector<bool> good_coordinates(const ArrayView& view, const std::vector<std::set<Index>>& assigned);

/// Claim 0: overwrite every array whose coordinates are all bad with zeros.
SuperAssignment zero_all_bad_arrays(const SsatInstance& ssat, const SuperAssignment& s);

struct Claim1Violation {
    Index test;
    Index b_label;
    Integer cell_sum;

    friend bool operator==(const Claim1Violation&, const Claim1Violation&) = default;
};

/// Claim 1: an array with a bad coordinate has cell sum zero.
std::vector<Claim1Violation> check_claim1(const SsatInstance& ssat, const SuperAssignment& s);

enum class TestClassification { Zero, MultiGood, AllSingleGood };

std::string to_string(TestClassification kind);

/// Number of coordinates of tuple r of `test` whose value is assigned.
Index count_good(const SsatInstance& ssat, const std::vector<std::set<Index>>& assigned, Index test, Index r);

TestClassification classify_test(const SsatInstance& ssat, const SuperAssignment& s, Index test);

}  // namespace gapforge
