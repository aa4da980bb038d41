#include "gapforge/oracles.hpp"

#include "gapforge/error.hpp"

#include <algorithm>
#include <cstdlib>

namespace gapforge {

std::string to_string(SsatMode mode)
{
    return mode == SsatMode::L1 ? "l1" : "linf";
}

std::string to_string(NcpMode mode)
{
    return mode == NcpMode::Full ? "full" : "box";
}

Integer default_max_states()
{
    if (const char* env = std::getenv("GAPFORGE_MAX_STATES")) {
        try {
            Integer v = parse_integer(env);
            if (v > 0)
                return v;
        }
        catch (const Error&) {
        }
    }
    return 100'000'000;
}

SearchBudget make_budget(const Integer& box, SsatMode mode)
{
    SearchBudget budget;
    budget.coeff_box = box;
    budget.max_states = default_max_states();
    budget.mode = mode;
    return budget;
}

void require_enumerable(const Integer& base, std::size_t exponent, const Integer& cap, const std::string& what)
{
    Integer size = 1;
    for (std::size_t i = 0; i < exponent; ++i) {
        size *= base;
        if (size > cap)
            fail(ErrorCode::SearchSpaceTooLarge,
                what + ": " + base.str() + "^" + std::to_string(exponent) + " states exceed the cap " + cap.str());
    }
}

namespace {
    void require_box(const Integer& box)
    {
        if (box < 1)
            fail(ErrorCode::BadParameters, "search box K must be at least 1");
    }

    IntVector box_values(const Integer& box)
    {
        IntVector values;
        for (Integer v = -box; v <= box; ++v)
            values.push_back(v);
        return values;
    }
}

LcOptimum solve_lc_max(const LabelCoverInstance& lc, const Integer& max_states)
{
    validate_label_cover(lc);
    require_enumerable(lc.sigma_a.size(), lc.a_vertices.size(), max_states, "label cover");

    LcOptimum best;
    best.best_fraction = -1;
    best.states_visited = 0;
    std::vector<Index> phi(lc.a_vertices.size(), 0);
    std::vector<std::vector<Index>> incident(lc.b_vertices.size());
    for (Index b = 0; b < lc.b_vertices.size(); ++b)
        incident[b] = lc.edges_of_b(b);

    while (true) {
        ++best.states_visited;
        std::vector<Index> phi_b(lc.b_vertices.size(), 0);
        Index satisfied = 0;
        for (Index b = 0; b < lc.b_vertices.size(); ++b) {
            std::vector<Index> votes(lc.sigma_b.size(), 0);
            for (Index e : incident[b])
                ++votes[lc.projections[e][phi[lc.edges[e].a]]];
            auto top = std::max_element(votes.begin(), votes.end());
            phi_b[b] = static_cast<Index>(top - votes.begin());
            satisfied += *top;
        }
        Rational fraction = lc.edges.empty() ? Rational(1) : Rational(Integer(satisfied), Integer(lc.edges.size()));
        if (fraction > best.best_fraction) {
            best.best_fraction = fraction;
            best.witness = Labeling{phi, phi_b};
        }

        Index k = phi.size();
        while (k > 0 && ++phi[k - 1] == lc.sigma_a.size())
            phi[--k] = 0;
        if (k == 0)
            break;
    }
    return best;
}

namespace {
    /// Depth-first search over super-assignments in the box, one column at a
    /// time in (test, assignment) order. A test's consistency with every
    /// earlier test is checked as soon as its last weight is fixed.
    class SsatSearch {
    public:
        SsatSearch(const SsatInstance& ssat, const Integer& box) : ssat_(ssat), values_(box_values(box))
        {
            current_ = zero_superassignment(ssat);
            Index col = 0;
            ends_at_.assign(ssat.num_columns() + 1, {});
            for (Index t = 0; t < ssat.tests.size(); ++t) {
                for (Index r = 0; r < ssat.tests[t].assignments.size(); ++r)
                    columns_.emplace_back(t, r);
                col += ssat.tests[t].assignments.size();
                ends_at_[col].push_back(t);
            }
            test_abs_.assign(ssat.tests.size(), 0);
            for (Index t = 0; t < ssat.tests.size(); ++t) {
                std::vector<std::pair<Index, Index>> checks;
                for (Index i = 0; i < t; ++i)
                    for (Index x : ssat.shared_variables(i, t))
                        checks.emplace_back(i, x);
                checks_.push_back(std::move(checks));
            }
        }

        using Prune = std::function<bool(const SsatSearch&)>;
        using Leaf = std::function<void(const SuperAssignment&)>;

        Integer run(const Prune& prune, const Leaf& leaf)
        {
            nodes_ = 0;
            if (tests_consistent_at(0))
                descend(0, prune, leaf);
            return nodes_;
        }

        const Integer& total_abs() const { return total_abs_; }
        Integer max_test_abs() const { return test_abs_.empty() ? Integer(0) : *std::max_element(test_abs_.begin(), test_abs_.end()); }

    private:
        bool tests_consistent_at(Index depth) const
        {
            for (Index t : ends_at_[depth])
                for (const auto& [i, x] : checks_[t])
                    if (project(ssat_, current_, i, x) != project(ssat_, current_, t, x))
                        return false;
            return true;
        }

        void descend(Index depth, const Prune& prune, const Leaf& leaf)
        {
            ++nodes_;
            if (prune && prune(*this))
                return;
            if (depth == columns_.size()) {
                leaf(current_);
                return;
            }
            const auto [t, r] = columns_[depth];
            auto& slot = current_.weights[t][r];
            for (const auto& v : values_) {
                slot = v;
                total_abs_ += abs(v);
                test_abs_[t] += abs(v);
                if (tests_consistent_at(depth + 1))
                    descend(depth + 1, prune, leaf);
                total_abs_ -= abs(v);
                test_abs_[t] -= abs(v);
            }
            slot = 0;
        }

        const SsatInstance& ssat_;
        IntVector values_;
        SuperAssignment current_;
        std::vector<std::pair<Index, Index>> columns_;
        std::vector<std::vector<Index>> ends_at_;
        std::vector<std::vector<std::pair<Index, Index>>> checks_;
        Integer total_abs_ = 0;
        IntVector test_abs_;
        Integer nodes_ = 0;
    };
}

SsatOptimum solve_ssat_min_norm(const SsatInstance& ssat, const SearchBudget& budget)
{
    validate_ssat(ssat);
    require_box(budget.coeff_box);
    require_enumerable(2 * budget.coeff_box + 1, ssat.num_columns(), budget.max_states, "SSAT");

    const bool l1 = budget.mode == SsatMode::L1;
    SsatOptimum result;
    result.mode = budget.mode;
    std::optional<Integer> best;
    SsatSearch search(ssat, budget.coeff_box);

    auto objective = [&](const SsatSearch& s) { return l1 ? s.total_abs() : s.max_test_abs(); };
    auto prune = [&](const SsatSearch& s) { return best && objective(s) > *best; };
    auto leaf = [&](const SuperAssignment& sa) {
        if (! (l1 ? is_nontrivial(ssat, sa) : is_not_all_zero(sa)))
            return;
        Integer value = objective(search);
        if (! best || value < *best) {
            best = value;
            result.witness = sa;
        }
    };
    result.states_visited = search.run(prune, leaf);
    if (result.witness)
        result.min_norm = l1 ? norm_l1(*result.witness) : Rational(norm_linf(*result.witness));
    return result;
}

Integer enumerate_consistent(const SsatInstance& ssat, const Integer& box, const Integer& max_states,
    const std::function<void(const SuperAssignment&)>& visit)
{
    validate_ssat(ssat);
    require_box(box);
    require_enumerable(2 * box + 1, ssat.num_columns(), max_states, "SSAT");
    SsatSearch search(ssat, box);
    return search.run(nullptr, visit);
}

namespace {
    /// Column-by-column search for B′z = t′. After column j is fixed, every
    /// row touched by it must still be able to reach its target using the
    /// remaining columns.
    class SisSearch {
    public:
        SisSearch(const SisInstance& sis, const Integer& box) : sis_(sis), values_(box_values(box))
        {
            const Index n = sis.rows(), m = sis.cols();
            reach_.assign(n, IntVector(m + 1, 0));
            for (Index i = 0; i < n; ++i)
                for (Index j = m; j-- > 0;)
                    reach_[i][j] = reach_[i][j + 1] + box * abs(sis.matrix[i][j]);
            touched_.assign(m, {});
            for (Index i = 0; i < n; ++i)
                for (Index j = 0; j < m; ++j)
                    if (sis.matrix[i][j] != 0)
                        touched_[j].push_back(i);
            partial_.assign(n, 0);
            z_.assign(m, 0);
        }

        using Prune = std::function<bool(const Integer&)>;
        using Leaf = std::function<void(const IntVector&, const Integer&)>;

        Integer run(const Prune& prune, const Leaf& leaf)
        {
            nodes_ = 0;
            for (Index i = 0; i < sis_.rows(); ++i)
                if (abs(sis_.target[i]) > reach_[i][0])
                    return nodes_;
            descend(0, prune, leaf);
            return nodes_;
        }

    private:
        void descend(Index depth, const Prune& prune, const Leaf& leaf)
        {
            ++nodes_;
            if (prune && prune(l1_))
                return;
            if (depth == z_.size()) {
                leaf(z_, l1_);
                return;
            }
            for (const auto& v : values_) {
                z_[depth] = v;
                l1_ += abs(v);
                bool feasible = true;
                for (Index i : touched_[depth]) {
                    partial_[i] += sis_.matrix[i][depth] * v;
                    if (abs(sis_.target[i] - partial_[i]) > reach_[i][depth + 1])
                        feasible = false;
                }
                if (feasible)
                    descend(depth + 1, prune, leaf);
                for (Index i : touched_[depth])
                    partial_[i] -= sis_.matrix[i][depth] * v;
                l1_ -= abs(v);
            }
            z_[depth] = 0;
        }

        const SisInstance& sis_;
        IntVector values_;
        std::vector<IntVector> reach_;
        std::vector<std::vector<Index>> touched_;
        IntVector partial_;
        IntVector z_;
        Integer l1_ = 0;
        Integer nodes_ = 0;
    };
}

SisOptimum solve_sis_min(const SisInstance& sis, const SearchBudget& budget)
{
    validate_sis(sis);
    require_box(budget.coeff_box);
    require_enumerable(2 * budget.coeff_box + 1, sis.cols(), budget.max_states, "SIS");

    SisOptimum result;
    SisSearch search(sis, budget.coeff_box);
    auto prune = [&](const Integer& l1) { return result.min_l1 && l1 > *result.min_l1; };
    auto leaf = [&](const IntVector& z, const Integer& l1) {
        if (! result.min_l1 || l1 < *result.min_l1) {
            result.min_l1 = l1;
            result.witness = z;
        }
    };
    result.states_visited = search.run(prune, leaf);
    return result;
}

Integer enumerate_sis_solutions(const SisInstance& sis, const Integer& box, const Integer& max_states,
    const std::function<void(const IntVector&)>& visit)
{
    validate_sis(sis);
    require_box(box);
    require_enumerable(2 * box + 1, sis.cols(), max_states, "SIS");
    SisSearch search(sis, box);
    return search.run(nullptr, [&](const IntVector& z, const Integer&) { visit(z); });
}

NcpOptimum solve_ncp_min(const NcpInstance& ncp, const SearchBudget& budget, bool full_field)
{
    validate_ncp(ncp);
    const Index n = ncp.matrix.size();
    const Index m = n == 0 ? 0 : ncp.matrix.front().size();
    IntVector values;
    if (full_field) {
        for (Integer v = 0; v < ncp.modulus; ++v)
            values.push_back(v);
    }
    else {
        require_box(budget.coeff_box);
        values = box_values(budget.coeff_box);
    }
    require_enumerable(values.size(), m, budget.max_states, "NCP");

    // A row's residue is final once its last nonzero column is fixed.
    std::vector<std::vector<Index>> closes(m + 1);
    std::vector<std::vector<Index>> touched(m);
    for (Index i = 0; i < n; ++i) {
        Index last = 0;
        for (Index j = 0; j < m; ++j)
            if (mod_q(ncp.matrix[i][j], ncp.modulus) != 0) {
                touched[j].push_back(i);
                last = j + 1;
            }
        closes[last].push_back(i);
    }

    NcpOptimum result;
    result.mode = full_field ? NcpMode::Full : NcpMode::Box;
    result.states_visited = 0;
    std::optional<Index> best;
    IntVector z(m, 0), partial(n, 0);
    Index mismatches = 0;

    auto close_rows = [&](Index depth) {
        Index added = 0;
        for (Index i : closes[depth])
            if (mod_q(partial[i] - ncp.target[i], ncp.modulus) != 0)
                ++added;
        return added;
    };

    std::function<void(Index)> descend = [&](Index depth) {
        ++result.states_visited;
        if (best && mismatches > *best)
            return;
        if (depth == m) {
            if (! best || mismatches < *best) {
                best = mismatches;
                result.witness = z;
            }
            return;
        }
        for (const auto& v : values) {
            z[depth] = v;
            for (Index i : touched[depth])
                partial[i] += ncp.matrix[i][depth] * v;
            Index added = close_rows(depth + 1);
            mismatches += added;
            descend(depth + 1);
            mismatches -= added;
            for (Index i : touched[depth])
                partial[i] -= ncp.matrix[i][depth] * v;
        }
        z[depth] = 0;
    };
    mismatches = close_rows(0);
    descend(0);
    result.min_dist = best.value_or(0);
    return result;
}

Index count_lhp_violations(const LhpSystem& lhp, const LhpAssignment& a)
{
    if (a.x_values.size() != lhp.num_x)
        fail(ErrorCode::LengthMismatch,
            "assignment has " + std::to_string(a.x_values.size()) + " x-values, system has " + std::to_string(lhp.num_x));
    Index violated = 0;
    for (const auto& ineq : lhp.inequalities)
        if (! is_satisfied(ineq, a))
            ++violated;
    return violated;
}

std::vector<LhpAssignment> default_lhp_grid(Index num_x, const Integer& max_states)
{
    require_enumerable(3, num_x, max_states, "LHP grid");
    std::vector<LhpAssignment> grid;
    LhpAssignment a;
    a.x_values.assign(num_x, Rational(-1));
    a.y_value = 1;
    while (true) {
        grid.push_back(a);
        Index k = num_x;
        while (k > 0 && a.x_values[k - 1] == 1)
            a.x_values[--k] = -1;
        if (k == 0)
            break;
        a.x_values[k - 1] += 1;
    }
    return grid;
}

LhpOptimum solve_lhp_min(const LhpSystem& lhp, const std::vector<LhpAssignment>& grid)
{
    validate_lhp(lhp);
    if (grid.empty())
        fail(ErrorCode::EmptyGrid, "no candidate assignments");
    LhpOptimum result;
    result.states_visited = 0;
    std::optional<Index> best;
    for (const auto& a : grid) {
        ++result.states_visited;
        Index v = count_lhp_violations(lhp, a);
        if (! best || v < *best) {
            best = v;
            result.witness = a;
        }
    }
    result.min_violations = *best;
    return result;
}

}  // namespace gapforge
