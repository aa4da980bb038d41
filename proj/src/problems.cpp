#include "gapforge/problems.hpp"

#include "gapforge/error.hpp"

namespace gapforge {

void validate_sis(const SisInstance& sis)
{
    if (sis.target.size() != sis.rows())
        fail(ErrorCode::MalformedInstance, "SIS target length differs from the row count");
    for (const auto& row : sis.matrix)
        if (row.size() != sis.cols())
            fail(ErrorCode::MalformedInstance, "SIS matrix is ragged");
    if (! sis.column_provenance.empty() && sis.column_provenance.size() != sis.cols())
        fail(ErrorCode::MalformedInstance, "SIS column provenance has wrong length");
    if (! sis.row_provenance.empty() && sis.row_provenance.size() != sis.rows())
        fail(ErrorCode::MalformedInstance, "SIS row provenance has wrong length");
}

IntVector multiply(const std::vector<IntVector>& matrix, const IntVector& z)
{
    IntVector result(matrix.size(), 0);
    for (Index i = 0; i < matrix.size(); ++i) {
        if (matrix[i].size() != z.size())
            fail(ErrorCode::LengthMismatch, "vector length " + std::to_string(z.size()) + " vs "
                    + std::to_string(matrix[i].size()) + " columns");
        for (Index j = 0; j < z.size(); ++j)
            if (matrix[i][j] != 0 && z[j] != 0)
                result[i] += matrix[i][j] * z[j];
    }
    return result;
}

void validate_ncp(const NcpInstance& ncp)
{
    if (! is_prime(ncp.modulus))
        fail(ErrorCode::MalformedInstance, "NCP modulus " + ncp.modulus.str() + " is not prime");
    if (ncp.target.size() != ncp.matrix.size())
        fail(ErrorCode::MalformedInstance, "NCP target length differs from the row count");
    if (! ncp.matrix.empty())
        for (const auto& row : ncp.matrix)
            if (row.size() != ncp.matrix.front().size())
                fail(ErrorCode::MalformedInstance, "NCP matrix is ragged");
}

Integer mod_q(const Integer& value, const Integer& q)
{
    Integer r = value % q;
    if (r < 0)
        r += q;
    return r;
}

Index hamming_distance(const NcpInstance& ncp, const IntVector& z)
{
    Index distance = 0;
    auto az = multiply(ncp.matrix, z);
    for (Index i = 0; i < az.size(); ++i)
        if (mod_q(az[i] - ncp.target[i], ncp.modulus) != 0)
            ++distance;
    return distance;
}

Index hamming_weight(const IntVector& z, const Integer& q)
{
    Index w = 0;
    for (const auto& v : z)
        if (mod_q(v, q) != 0)
            ++w;
    return w;
}

std::string to_string(LhpGroup group)
{
    switch (group) {
    case LhpGroup::G1: return "G1";
    case LhpGroup::G2: return "G2";
    case LhpGroup::G3: return "G3";
    case LhpGroup::G4: return "G4";
    case LhpGroup::G5: return "G5";
    }
    return "?";
}

std::string to_string(Sense sense)
{
    return sense == Sense::GT ? "GT" : "LT";
}

void validate_lhp(const LhpSystem& lhp)
{
    for (Index k = 0; k < lhp.inequalities.size(); ++k) {
        const auto& ineq = lhp.inequalities[k];
        if (ineq.rhs != 0)
            fail(ErrorCode::MalformedInstance, "inequality " + std::to_string(k) + " is not homogeneous");
        Index last = 0;
        bool first = true;
        for (const auto& [idx, coeff] : ineq.coeff_x) {
            if (idx >= lhp.num_x || (! first && idx <= last) || coeff == 0)
                fail(ErrorCode::MalformedInstance, "inequality " + std::to_string(k) + " has a bad x-coefficient list");
            last = idx;
            first = false;
        }
    }
}

DualValue evaluate_lhs(const LhpInequality& ineq, const LhpAssignment& a)
{
    Rational standard = ineq.coeff_y * a.y_value;
    for (const auto& [idx, coeff] : ineq.coeff_x) {
        if (idx >= a.x_values.size())
            fail(ErrorCode::LengthMismatch, "assignment has too few x-values");
        standard += coeff * a.x_values[idx];
    }
    if (a.delta_value)
        return DualValue(standard + ineq.coeff_delta * *a.delta_value, 0);
    return DualValue(standard, ineq.coeff_delta);
}

bool is_satisfied(const LhpInequality& ineq, const LhpAssignment& a)
{
    int s = evaluate_lhs(ineq, a).sign();
    // rhs is zero for every validated system
    return ineq.sense == Sense::GT ? s > 0 : s < 0;
}

}  // namespace gapforge
