#include "gapforge/ssat.hpp"

#include "gapforge/error.hpp"

#include <algorithm>
#include <set>

namespace gapforge {

Index SsatInstance::num_columns() const
{
    Index total = 0;
    for (const auto& t : tests)
        total += t.assignments.size();
    return total;
}

std::optional<Index> SsatInstance::position_in_test(Index test, Index variable) const
{
    const auto& vars = tests.at(test).variables;
    auto it = std::find(vars.begin(), vars.end(), variable);
    if (it == vars.end())
        return std::nullopt;
    return static_cast<Index>(it - vars.begin());
}

std::vector<Index> SsatInstance::tests_of_variable(Index variable) const
{
    std::vector<Index> result;
    for (Index t = 0; t < tests.size(); ++t)
        if (position_in_test(t, variable))
            result.push_back(t);
    return result;
}

std::vector<Index> SsatInstance::shared_variables(Index i, Index j) const
{
    std::vector<Index> result;
    for (Index v : tests.at(i).variables)
        if (position_in_test(j, v))
            result.push_back(v);
    std::sort(result.begin(), result.end());
    return result;
}

void validate_ssat(const SsatInstance& ssat)
{
    if (ssat.field_values.empty())
        fail(ErrorCode::MalformedInstance, "empty value range F");
    std::vector<bool> used(ssat.variables.size(), false);
    for (Index t = 0; t < ssat.tests.size(); ++t) {
        const auto& test = ssat.tests[t];
        std::set<Index> vars(test.variables.begin(), test.variables.end());
        if (vars.size() != test.variables.size())
            fail(ErrorCode::MalformedInstance, "test '" + test.name + "' repeats a variable");
        for (Index v : test.variables) {
            if (v >= ssat.variables.size())
                fail(ErrorCode::MalformedInstance, "test '" + test.name + "' names an unknown variable");
            used[v] = true;
        }
        std::set<std::vector<Index>> seen;
        for (const auto& r : test.assignments) {
            if (r.size() != test.variables.size())
                fail(ErrorCode::MalformedInstance, "test '" + test.name + "' has a tuple of the wrong arity");
            for (Index value : r)
                if (value >= ssat.field_values.size())
                    fail(ErrorCode::MalformedInstance, "test '" + test.name + "' has a value outside F");
            if (! seen.insert(r).second)
                fail(ErrorCode::MalformedInstance, "test '" + test.name + "' lists a tuple twice");
        }
    }
    for (Index v = 0; v < used.size(); ++v)
        if (! used[v])
            fail(ErrorCode::MalformedInstance, "variable '" + ssat.variables[v] + "' occurs in no test");

    if (ssat.provenance) {
        const auto& prov = *ssat.provenance;
        if (prov.test_to_b.size() != ssat.tests.size() || prov.variable_to_a.size() != ssat.variables.size()
            || prov.assignment_label.size() != ssat.tests.size())
            fail(ErrorCode::MalformedInstance, "provenance does not match the instance shape");
        for (Index t = 0; t < ssat.tests.size(); ++t)
            if (prov.assignment_label[t].size() != ssat.tests[t].assignments.size())
                fail(ErrorCode::MalformedInstance, "label provenance of test '" + ssat.tests[t].name + "' has wrong length");
    }
}

}  // namespace gapforge
