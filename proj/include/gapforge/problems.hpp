#pragma once

#include "gapforge/label_cover.hpp"
#include "gapforge/numeric.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gapforge {

struct SisRowTag {
    enum class Kind { NonTriviality, Consistency };
    Kind kind = Kind::NonTriviality;
    Index test_i = 0;
    /// The remaining fields are meaningful for consistency rows only.
    Index test_j = 0;
    Index variable = 0;
    Index value = 0;

    friend bool operator==(const SisRowTag&, const SisRowTag&) = default;
};

/// Find integer z with B′z = t′ and small ‖z‖₁.
struct SisInstance {
    std::vector<IntVector> matrix;
    IntVector target;
    Integer bound;
    /// (test, assignment) per column; empty when unknown.
    std::vector<std::pair<Index, Index>> column_provenance;
    /// One tag per row; empty when unknown.
    std::vector<SisRowTag> row_provenance;

    Index rows() const { return matrix.size(); }
    Index cols() const { return matrix.empty() ? column_provenance.size() : matrix.front().size(); }

    friend bool operator==(const SisInstance&, const SisInstance&) = default;
};

void validate_sis(const SisInstance& sis);

IntVector multiply(const std::vector<IntVector>& matrix, const IntVector& z);

/// Nearest codeword over F_q: minimise wt(Az − t).
struct NcpInstance {
    Integer modulus;
    std::vector<IntVector> matrix;
    IntVector target;
    Integer bound;
    Integer replication;
    /// Gap parameter the instance was built for; metadata only.
    Integer gap = 1;

    friend bool operator==(const NcpInstance&, const NcpInstance&) = default;
};

void validate_ncp(const NcpInstance& ncp);

/// Reduce an integer into [0, q).
Integer mod_q(const Integer& value, const Integer& q);

/// ‖Az − t‖_H with all arithmetic mod q.
Index hamming_distance(const NcpInstance& ncp, const IntVector& z);

/// Number of nonzero entries of z mod q.
Index hamming_weight(const IntVector& z, const Integer& q);

enum class Sense { GT, LT };
enum class LhpGroup { G1, G2, G3, G4, G5 };

std::string to_string(LhpGroup group);
std::string to_string(Sense sense);

/// coeff_x·x + coeff_y·y + coeff_delta·δ  (>|<)  rhs, with rhs = 0.
struct LhpInequality {
    /// Sparse; strictly increasing indices, no zero coefficients.
    std::vector<std::pair<Index, Rational>> coeff_x;
    Rational coeff_y;
    Rational coeff_delta;
    Sense sense = Sense::GT;
    Rational rhs;
    LhpGroup group = LhpGroup::G1;
    std::string copies_of;

    friend bool operator==(const LhpInequality&, const LhpInequality&) = default;
};

struct LhpSystem {
    Index num_x = 0;
    std::vector<LhpInequality> inequalities;
    Integer u_param;

    friend bool operator==(const LhpSystem&, const LhpSystem&) = default;
};

void validate_lhp(const LhpSystem& lhp);

/// δ is either an explicit rational or, when absent, the symbolic ε.
struct LhpAssignment {
    std::vector<Rational> x_values;
    Rational y_value;
    std::optional<Rational> delta_value;

    friend bool operator==(const LhpAssignment&, const LhpAssignment&) = default;
};

DualValue evaluate_lhs(const LhpInequality& ineq, const LhpAssignment& a);
bool is_satisfied(const LhpInequality& ineq, const LhpAssignment& a);

}  // namespace gapforge
