#include "gapforge/superassign.hpp"

#include "gapforge/error.hpp"

#include <algorithm>

namespace gapforge {

SuperAssignment zero_superassignment(const SsatInstance& ssat)
{
    SuperAssignment s;
    for (const auto& t : ssat.tests)
        s.weights.emplace_back(t.assignments.size(), 0);
    return s;
}

void check_shape(const SsatInstance& ssat, const SuperAssignment& s)
{
    if (s.weights.size() != ssat.tests.size())
        fail(ErrorCode::LengthMismatch, "super-assignment has " + std::to_string(s.weights.size()) + " tests, instance has "
                + std::to_string(ssat.tests.size()));
    for (Index t = 0; t < ssat.tests.size(); ++t)
        if (s.weights[t].size() != ssat.tests[t].assignments.size())
            fail(ErrorCode::LengthMismatch, "weight vector of test '" + ssat.tests[t].name + "' has wrong length");
}

ProjectionVector project(const SsatInstance& ssat, const SuperAssignment& s, Index test, Index variable)
{
    auto pos = ssat.position_in_test(test, variable);
    if (! pos)
        fail(ErrorCode::VariableNotInTest,
            "variable " + (variable < ssat.variables.size() ? "'" + ssat.variables[variable] + "'" : std::to_string(variable))
                + " is not in test '" + ssat.tests.at(test).name + "'");
    ProjectionVector result(ssat.field_values.size(), 0);
    const auto& rows = ssat.tests[test].assignments;
    for (Index r = 0; r < rows.size(); ++r)
        result[rows[r][*pos]] += s.weights.at(test).at(r);
    return result;
}

ConsistencyResult is_consistent(const SsatInstance& ssat, const SuperAssignment& s)
{
    check_shape(ssat, s);
    for (Index i = 0; i < ssat.tests.size(); ++i)
        for (Index j = i + 1; j < ssat.tests.size(); ++j)
            for (Index x : ssat.shared_variables(i, j)) {
                auto pi = project(ssat, s, i, x);
                auto pj = project(ssat, s, j, x);
                for (Index a = 0; a < pi.size(); ++a)
                    if (pi[a] != pj[a])
                        return {false, ConsistencyWitness{i, j, x, a}};
            }
    return {};
}

bool is_nontrivial(const SsatInstance& ssat, const SuperAssignment& s)
{
    check_shape(ssat, s);
    for (Index x = 0; x < ssat.variables.size(); ++x) {
        bool assigned = false;
        for (Index t : ssat.tests_of_variable(x)) {
            auto proj = project(ssat, s, t, x);
            if (std::any_of(proj.begin(), proj.end(), [](const Integer& w) { return w != 0; })) {
                assigned = true;
                break;
            }
        }
        if (! assigned)
            return false;
    }
    return true;
}

bool is_not_all_zero(const SuperAssignment& s)
{
    for (const auto& v : s.weights)
        for (const auto& w : v)
            if (w != 0)
                return true;
    return false;
}

Integer test_norm(const SuperAssignment& s, Index test)
{
    return abs_sum(s.weights.at(test));
}

Rational norm_l1(const SuperAssignment& s)
{
    if (s.weights.empty())
        return 0;
    Integer total = 0;
    for (Index t = 0; t < s.weights.size(); ++t)
        total += test_norm(s, t);
    return Rational(total, s.weights.size());
}

Integer norm_linf(const SuperAssignment& s)
{
    Integer best = 0;
    for (Index t = 0; t < s.weights.size(); ++t)
        best = std::max(best, test_norm(s, t));
    return best;
}

SuperAssignment natural_from_labeling(const LabelCoverInstance& lc, const SsatInstance& ssat, const Labeling& lab)
{
    if (! ssat.provenance)
        fail(ErrorCode::NotLcDerived, "instance carries no label-cover provenance");
    if (lab.phi_a.size() != lc.a_vertices.size())
        fail(ErrorCode::PartialLabeling, "φ_A does not cover A");
    if (lab.phi_b && lab.phi_b->size() != lc.b_vertices.size())
        fail(ErrorCode::PartialLabeling, "φ_B does not cover B");

    const auto& prov = *ssat.provenance;
    SuperAssignment s = zero_superassignment(ssat);
    for (Index t = 0; t < ssat.tests.size(); ++t) {
        Index b = prov.test_to_b[t];
        auto incident = lc.edges_of_b(b);
        Index y = lab.phi_b ? (*lab.phi_b)[b] : lc.projections[incident.front()][lab.phi_a[lc.edges[incident.front()].a]];
        for (Index e : incident)
            if (lc.projections[e][lab.phi_a[lc.edges[e].a]] != y)
                fail(ErrorCode::EdgeUnsatisfied,
                    "edge (" + lc.a_vertices[lc.edges[e].a] + ", " + lc.b_vertices[lc.edges[e].b] + ")");

        const auto& test = ssat.tests[t];
        std::vector<Index> tuple;
        for (Index v : test.variables)
            tuple.push_back(lab.phi_a[prov.variable_to_a[v]]);
        auto it = std::find(test.assignments.begin(), test.assignments.end(), tuple);
        if (it == test.assignments.end())
            fail(ErrorCode::EdgeUnsatisfied, "tuple of test '" + test.name + "' is not a satisfying assignment");
        s.weights[t][static_cast<Index>(it - test.assignments.begin())] = 1;
    }
    return s;
}

std::vector<std::set<Index>> assigned_values(const SsatInstance& ssat, const SuperAssignment& s)
{
    check_shape(ssat, s);
    std::vector<std::set<Index>> assigned(ssat.variables.size());
    for (Index t = 0; t < ssat.tests.size(); ++t)
        for (Index x : ssat.tests[t].variables) {
            auto proj = project(ssat, s, t, x);
            for (Index a = 0; a < proj.size(); ++a)
                if (proj[a] != 0)
                    assigned[x].insert(a);
        }
    return assigned;
}

std::vector<ArrayView> decompose_arrays(const SsatInstance& ssat, const SuperAssignment& s, Index test)
{
    if (! ssat.provenance)
        fail(ErrorCode::NotLcDerived, "instance carries no label-cover provenance");
    check_shape(ssat, s);
    const auto& t = ssat.tests.at(test);
    const auto& labels = ssat.provenance->assignment_label.at(test);

    std::map<Index, ArrayView> by_label;
    for (Index r = 0; r < t.assignments.size(); ++r) {
        auto& view = by_label[labels[r]];
        if (view.assignment_indices.empty()) {
            view.test = test;
            view.b_label = labels[r];
            view.variables = t.variables;
            view.axes.assign(t.variables.size(), {});
            view.norm = 0;
        }
        view.assignment_indices.push_back(r);
        view.cells[t.assignments[r]] = s.weights[test][r];
        view.norm += abs(s.weights[test][r]);
        for (Index k = 0; k < t.variables.size(); ++k) {
            auto& axis = view.axes[k];
            if (std::find(axis.begin(), axis.end(), t.assignments[r][k]) == axis.end())
                axis.push_back(t.assignments[r][k]);
        }
    }

    std::vector<ArrayView> result;
    std::vector<std::set<Index>> claimed(t.variables.size());
    for (auto& [y, view] : by_label) {
        std::size_t volume = 1;
        for (Index k = 0; k < view.axes.size(); ++k) {
            std::sort(view.axes[k].begin(), view.axes[k].end());
            volume *= view.axes[k].size();
            for (Index value : view.axes[k])
                if (! claimed[k].insert(value).second)
                    fail(ErrorCode::NotLcDerived,
                        "value reused across label blocks of test '" + t.name + "'; blocks would interfere");
        }
        if (volume != view.cells.size())
            fail(ErrorCode::NotLcDerived, "label block of test '" + t.name + "' is not a full cross product");
        result.push_back(std::move(view));
    }
    return result;
}

std::vector<bool> good_coordinates(const ArrayView& view, const std::vector<std::set<Index>>& assigned)
{
    std::vector<bool> good(view.axes.size(), false);
    for (Index k = 0; k < view.axes.size(); ++k) {
        const auto& set = assigned.at(view.variables[k]);
        good[k] = std::any_of(view.axes[k].begin(), view.axes[k].end(), [&](Index v) { return set.contains(v); });
    }
    return good;
}

namespace {
    void require_consistent(const SsatInstance& ssat, const SuperAssignment& s)
    {
        if (! is_consistent(ssat, s).consistent)
            fail(ErrorCode::InconsistentInput, "super-assignment is not consistent");
    }
}

SuperAssignment zero_all_bad_arrays(const SsatInstance& ssat, const SuperAssignment& s)
{
    require_consistent(ssat, s);
    auto assigned = assigned_values(ssat, s);
    SuperAssignment out = s;
    for (Index t = 0; t < ssat.tests.size(); ++t)
        for (const auto& view : decompose_arrays(ssat, s, t)) {
            auto good = good_coordinates(view, assigned);
            if (std::none_of(good.begin(), good.end(), [](bool g) { return g; }))
                for (Index r : view.assignment_indices)
                    out.weights[t][r] = 0;
        }
    return out;
}

std::vector<Claim1Violation> check_claim1(const SsatInstance& ssat, const SuperAssignment& s)
{
    require_consistent(ssat, s);
    auto assigned = assigned_values(ssat, s);
    std::vector<Claim1Violation> violations;
    for (Index t = 0; t < ssat.tests.size(); ++t)
        for (const auto& view : decompose_arrays(ssat, s, t)) {
            auto good = good_coordinates(view, assigned);
            if (std::all_of(good.begin(), good.end(), [](bool g) { return g; }))
                continue;
            Integer sum = 0;
            for (const auto& [coord, w] : view.cells)
                sum += w;
            if (sum != 0)
                violations.push_back({t, view.b_label, sum});
        }
    return violations;
}

std::string to_string(TestClassification kind)
{
    switch (kind) {
    case TestClassification::Zero: return "Zero";
    case TestClassification::MultiGood: return "MultiGood";
    case TestClassification::AllSingleGood: return "AllSingleGood";
    }
    return "?";
}

Index count_good(const SsatInstance& ssat, const std::vector<std::set<Index>>& assigned, Index test, Index r)
{
    const auto& t = ssat.tests[test];
    Index good = 0;
    for (Index k = 0; k < t.variables.size(); ++k)
        if (assigned[t.variables[k]].contains(t.assignments[r][k]))
            ++good;
    return good;
}

TestClassification classify_test(const SsatInstance& ssat, const SuperAssignment& s, Index test)
{
    require_consistent(ssat, s);
    if (test_norm(s, test) == 0)
        return TestClassification::Zero;
    auto assigned = assigned_values(ssat, s);
    bool has_unassigned = false;
    for (Index r = 0; r < ssat.tests[test].assignments.size(); ++r) {
        if (s.weights[test][r] == 0)
            continue;
        Index good = count_good(ssat, assigned, test, r);
        if (good >= 2)
            return TestClassification::MultiGood;
        if (good == 0)
            has_unassigned = true;
    }
    if (has_unassigned)
        fail(ErrorCode::ClassificationImpossible, "test '" + ssat.tests[test].name
                + "' has a nonzero assignment with no assigned value and no assignment with two");
    return TestClassification::AllSingleGood;
}

}  // namespace gapforge
