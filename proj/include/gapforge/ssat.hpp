#pragma once

#include "gapforge/label_cover.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gapforge {

/// One test ψ: its ordered variables and the list R_ψ of satisfying tuples.
/// assignments[r][k] is the value (index into field_values) that tuple r
/// gives to variables[k].
struct SsatTest {
    std::string name;
    std::vector<Index> variables;
    std::vector<std::vector<Index>> assignments;

    friend bool operator==(const SsatTest&, const SsatTest&) = default;
};

/// Links an instance built from a label cover back to it.
struct LcProvenance {
    std::vector<Index> test_to_b;
    std::vector<Index> variable_to_a;
    /// The B-label y whose preimage block produced each tuple, per test.
    std::vector<std::vector<Index>> assignment_label;

    friend bool operator==(const LcProvenance&, const LcProvenance&) = default;
};

struct SsatInstance {
    std::vector<std::string> variables;
    std::vector<std::string> field_values;
    std::vector<SsatTest> tests;
    std::optional<LcProvenance> provenance;

    /// Σ_ψ |R_ψ|.
    Index num_columns() const;
    /// Position of `variable` inside the test's tuple, if the test uses it.
    std::optional<Index> position_in_test(Index test, Index variable) const;
    std::vector<Index> tests_of_variable(Index variable) const;
    /// Variables shared by tests i and j, in variable-index order.
    std::vector<Index> shared_variables(Index i, Index j) const;

    friend bool operator==(const SsatInstance&, const SsatInstance&) = default;
};

/// Throws MalformedInstance when a structural invariant fails.
void validate_ssat(const SsatInstance& ssat);

}  // namespace gapforge
