#include "gapforge/reductions.hpp"

#include "gapforge/error.hpp"

#include <algorithm>

namespace gapforge {

SsatInstance lc_to_ssat(const LabelCoverInstance& lc)
{
    auto report = validate_label_cover(lc);

    SsatInstance ssat;
    ssat.variables = lc.a_vertices;
    ssat.field_values = lc.sigma_a;
    LcProvenance prov;
    for (Index a = 0; a < lc.a_vertices.size(); ++a)
        prov.variable_to_a.push_back(a);

    for (Index b = 0; b < lc.b_vertices.size(); ++b) {
        auto incident = lc.edges_of_b(b);
        SsatTest test;
        test.name = lc.b_vertices[b];
        for (Index e : incident)
            test.variables.push_back(lc.edges[e].a);
        std::vector<Index> labels;

        for (Index y = 0; y < lc.sigma_b.size(); ++y) {
            std::vector<std::vector<Index>> axes;
            bool complete = true;
            for (Index e : incident) {
                axes.push_back(preimage(lc, e, y));
                if (axes.back().empty()) {
                    complete = false;
                    break;
                }
            }
            if (! complete)
                continue;
            // odometer over the axes, last coordinate fastest
            std::vector<Index> digit(axes.size(), 0);
            while (true) {
                std::vector<Index> tuple(axes.size());
                for (Index k = 0; k < axes.size(); ++k)
                    tuple[k] = axes[k][digit[k]];
                test.assignments.push_back(std::move(tuple));
                labels.push_back(y);
                Index k = axes.size();
                while (k > 0 && ++digit[k - 1] == axes[k - 1].size())
                    digit[--k] = 0;
                if (k == 0)
                    break;
            }
        }
        if (test.assignments.empty())
            fail(ErrorCode::EmptyRange, "test '" + test.name + "' has no satisfying assignment");

        Integer cap = Integer(lc.sigma_b.size()) * pow(Integer(report.p), static_cast<unsigned>(incident.size()));
        if (Integer(test.assignments.size()) > cap)
            fail(ErrorCode::MalformedInstance, "test '" + test.name + "' exceeds |Σ_B|·p^{D_B} tuples");

        ssat.tests.push_back(std::move(test));
        prov.test_to_b.push_back(b);
        prov.assignment_label.push_back(std::move(labels));
    }
    ssat.provenance = std::move(prov);
    validate_ssat(ssat);
    return ssat;
}

GadgetPair gadget_pair(const SsatInstance& ssat, Index test_i, Index test_j, Index variable)
{
    auto pos_i = ssat.position_in_test(test_i, variable);
    auto pos_j = ssat.position_in_test(test_j, variable);
    if (! pos_i || ! pos_j)
        fail(ErrorCode::VariableNotShared, "variable '" + ssat.variables.at(variable) + "' is not shared by tests "
                + std::to_string(test_i) + " and " + std::to_string(test_j));
    const auto f = ssat.field_values.size();
    const auto& ri = ssat.tests[test_i].assignments;
    const auto& rj = ssat.tests[test_j].assignments;

    GadgetPair gadget;
    gadget.g1.assign(f, IntVector(ri.size(), 0));
    gadget.g2.assign(f, IntVector(rj.size(), 1));
    for (Index r = 0; r < ri.size(); ++r)
        gadget.g1[ri[r][*pos_i]][r] = 1;
    for (Index r = 0; r < rj.size(); ++r)
        gadget.g2[rj[r][*pos_j]][r] = 0;
    return gadget;
}

SisInstance ssat_to_sis(const SsatInstance& ssat)
{
    validate_ssat(ssat);
    SisInstance sis;
    std::vector<Index> offset;
    for (Index t = 0; t < ssat.tests.size(); ++t) {
        offset.push_back(sis.column_provenance.size());
        for (Index r = 0; r < ssat.tests[t].assignments.size(); ++r)
            sis.column_provenance.emplace_back(t, r);
    }
    const Index m = sis.column_provenance.size();

    for (Index t = 0; t < ssat.tests.size(); ++t) {
        IntVector row(m, 0);
        for (Index r = 0; r < ssat.tests[t].assignments.size(); ++r)
            row[offset[t] + r] = 1;
        sis.matrix.push_back(std::move(row));
        sis.row_provenance.push_back({SisRowTag::Kind::NonTriviality, t, 0, 0, 0});
    }

    for (Index i = 0; i < ssat.tests.size(); ++i)
        for (Index j = i + 1; j < ssat.tests.size(); ++j)
            for (Index x : ssat.shared_variables(i, j)) {
                auto gadget = gadget_pair(ssat, i, j, x);
                for (Index f = 0; f < ssat.field_values.size(); ++f) {
                    IntVector row(m, 0);
                    std::copy(gadget.g1[f].begin(), gadget.g1[f].end(), row.begin() + offset[i]);
                    std::copy(gadget.g2[f].begin(), gadget.g2[f].end(), row.begin() + offset[j]);
                    sis.matrix.push_back(std::move(row));
                    sis.row_provenance.push_back({SisRowTag::Kind::Consistency, i, j, x, f});
                }
            }

    sis.target.assign(sis.matrix.size(), 1);
    sis.bound = ssat.tests.size();
    return sis;
}

IntVector sis_solution_from_superassignment(const SuperAssignment& s)
{
    IntVector z;
    for (const auto& v : s.weights)
        z.insert(z.end(), v.begin(), v.end());
    return z;
}

SuperAssignment superassignment_from_sis_solution(const SsatInstance& ssat, const IntVector& z)
{
    if (z.size() != ssat.num_columns())
        fail(ErrorCode::LengthMismatch, "vector of length " + std::to_string(z.size()) + ", instance has "
                + std::to_string(ssat.num_columns()) + " columns");
    SuperAssignment s;
    auto it = z.begin();
    for (const auto& t : ssat.tests) {
        s.weights.emplace_back(it, it + static_cast<std::ptrdiff_t>(t.assignments.size()));
        it += static_cast<std::ptrdiff_t>(t.assignments.size());
    }
    return s;
}

NcpInstance sis_to_ncp(const SisInstance& sis, const Integer& g, std::optional<Integer> d_rep, std::optional<Integer> q)
{
    validate_sis(sis);
    if (g < 1)
        fail(ErrorCode::BadParameters, "gap g must be at least 1");
    const Integer rep_floor = g * sis.bound;
    const Integer q_floor = g * Integer(std::max(sis.rows(), sis.cols()));
    if (d_rep && *d_rep <= rep_floor)
        fail(ErrorCode::BadParameters, "replication " + d_rep->str() + " must exceed g·d = " + rep_floor.str());
    if (q && (*q <= q_floor || ! is_prime(*q)))
        fail(ErrorCode::BadParameters, "modulus " + q->str() + " must be a prime above " + q_floor.str());

    NcpInstance ncp;
    ncp.replication = d_rep.value_or(rep_floor + 1);
    ncp.modulus = q.value_or(next_prime_above(q_floor));
    ncp.bound = sis.bound;
    ncp.gap = g;

    const auto copies = ncp.replication.convert_to<std::size_t>();
    for (Index i = 0; i < sis.rows(); ++i) {
        IntVector row(sis.cols());
        for (Index j = 0; j < sis.cols(); ++j)
            row[j] = mod_q(sis.matrix[i][j], ncp.modulus);
        for (std::size_t k = 0; k < copies; ++k) {
            ncp.matrix.push_back(row);
            ncp.target.push_back(mod_q(sis.target[i], ncp.modulus));
        }
    }
    for (Index j = 0; j < sis.cols(); ++j) {
        IntVector row(sis.cols(), 0);
        row[j] = 1;
        ncp.matrix.push_back(std::move(row));
        ncp.target.push_back(0);
    }
    return ncp;
}

Integer expected_lhp_size(const Integer& u, Index rows, Index cols)
{
    return 2 * u + 2 * u * rows + 2 * u * cols + 2 * Integer(cols) + u;
}

namespace {
    LhpInequality make(std::vector<std::pair<Index, Rational>> x, Rational y, Rational delta, Sense sense, LhpGroup group,
        std::string tag)
    {
        LhpInequality ineq;
        ineq.coeff_x = std::move(x);
        ineq.coeff_y = std::move(y);
        ineq.coeff_delta = std::move(delta);
        ineq.sense = sense;
        ineq.rhs = 0;
        ineq.group = group;
        ineq.copies_of = std::move(tag);
        return ineq;
    }
}

LhpSystem sis_to_lhp(const SisInstance& sis, std::optional<Integer> u_param, const Integer& g)
{
    validate_sis(sis);
    if (u_param && *u_param < 1)
        fail(ErrorCode::BadParameters, "U must be at least 1");
    if (g < 1)
        fail(ErrorCode::BadParameters, "gap g must be at least 1");

    LhpSystem lhp;
    lhp.num_x = sis.cols();
    lhp.u_param = u_param.value_or(g * sis.bound + 1);
    const auto copies = lhp.u_param.convert_to<std::size_t>();
    const Rational inv_u(Integer(1), lhp.u_param);
    auto& out = lhp.inequalities;
    out.reserve(expected_lhp_size(lhp.u_param, sis.rows(), sis.cols()).convert_to<std::size_t>());

    // G1: −y/U < δ < y/U
    for (std::size_t k = 0; k < copies; ++k) {
        out.push_back(make({}, inv_u, 1, Sense::GT, LhpGroup::G1, "G1:lower"));
        out.push_back(make({}, -inv_u, 1, Sense::LT, LhpGroup::G1, "G1:upper"));
    }

    // G2: Σ a_i x_i − c·y ± δ
    for (Index i = 0; i < sis.rows(); ++i) {
        std::vector<std::pair<Index, Rational>> row;
        for (Index j = 0; j < sis.cols(); ++j)
            if (sis.matrix[i][j] != 0)
                row.emplace_back(j, Rational(sis.matrix[i][j]));
        const Rational c = -Rational(sis.target[i]);
        const auto tag = "G2:row" + std::to_string(i);
        for (std::size_t k = 0; k < copies; ++k)
            out.push_back(make(row, c, 1, Sense::GT, LhpGroup::G2, tag + ":gt"));
        for (std::size_t k = 0; k < copies; ++k)
            out.push_back(make(row, c, -1, Sense::LT, LhpGroup::G2, tag + ":lt"));
    }

    // G3: x_i − 2y < 0, x_i + 2y > 0
    for (Index j = 0; j < sis.cols(); ++j) {
        const auto tag = "G3:x" + std::to_string(j);
        for (std::size_t k = 0; k < copies; ++k)
            out.push_back(make({{j, 1}}, -2, 0, Sense::LT, LhpGroup::G3, tag + ":lt"));
        for (std::size_t k = 0; k < copies; ++k)
            out.push_back(make({{j, 1}}, 2, 0, Sense::GT, LhpGroup::G3, tag + ":gt"));
    }

    // G4: x_i + δ > 0, x_i − δ < 0
    for (Index j = 0; j < sis.cols(); ++j) {
        const auto tag = "G4:x" + std::to_string(j);
        out.push_back(make({{j, 1}}, 0, 1, Sense::GT, LhpGroup::G4, tag + ":gt"));
        out.push_back(make({{j, 1}}, 0, -1, Sense::LT, LhpGroup::G4, tag + ":lt"));
    }

    // G5: y > 0
    for (std::size_t k = 0; k < copies; ++k)
        out.push_back(make({}, 1, 0, Sense::GT, LhpGroup::G5, "G5"));
    return lhp;
}

LhpAssignment lhp_assignment_from_sis_solution(const IntVector& z)
{
    LhpAssignment a;
    for (const auto& v : z)
        a.x_values.emplace_back(v);
    a.y_value = 1;
    return a;
}

LhpExtraction sis_solution_from_lhp_assignment(const LhpSystem& lhp, const LhpAssignment& a)
{
    if (a.x_values.size() != lhp.num_x)
        fail(ErrorCode::LengthMismatch, "assignment has " + std::to_string(a.x_values.size()) + " x-values, system has "
                + std::to_string(lhp.num_x));

    LhpExtraction result;
    for (LhpGroup group : {LhpGroup::G1, LhpGroup::G3, LhpGroup::G2})
        for (Index k = 0; k < lhp.inequalities.size(); ++k) {
            const auto& ineq = lhp.inequalities[k];
            if (ineq.group == group && ! is_satisfied(ineq, a)) {
                result.infeasible = LhpInfeasibility{group, k, "violates " + ineq.copies_of};
                return result;
            }
        }

    // G1 holding forces y > 0
    IntVector z;
    for (Index j = 0; j < a.x_values.size(); ++j) {
        Rational q = a.x_values[j] / a.y_value;
        if (! is_integral(q)) {
            auto first = std::find_if(lhp.inequalities.begin(), lhp.inequalities.end(), [&](const LhpInequality& i) {
                return i.group == LhpGroup::G3 && i.coeff_x.size() == 1 && i.coeff_x.front().first == j;
            });
            result.infeasible = LhpInfeasibility{LhpGroup::G3, static_cast<Index>(first - lhp.inequalities.begin()),
                "x" + std::to_string(j) + " / y is not an integer"};
            return result;
        }
        z.push_back(numerator(q));
    }

    LhpAssignment scaled = lhp_assignment_from_sis_solution(z);
    for (Index k = 0; k < lhp.inequalities.size(); ++k) {
        const auto& ineq = lhp.inequalities[k];
        if (ineq.group == LhpGroup::G2 && evaluate_lhs(ineq, scaled).standard != 0) {
            result.infeasible = LhpInfeasibility{LhpGroup::G2, k, "nonzero residual on " + ineq.copies_of};
            return result;
        }
    }
    result.z = std::move(z);
    return result;
}

}  // namespace gapforge
