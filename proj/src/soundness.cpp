#include "gapforge/soundness.hpp"

#include "gapforge/error.hpp"
#include "gapforge/oracles.hpp"
#include "gapforge/random.hpp"

#include <algorithm>

namespace gapforge {

ListLabeling make_list_labeling(std::vector<std::set<Index>> lists)
{
    ListLabeling out;
    out.lists = std::move(lists);
    for (const auto& l : out.lists)
        out.max_list_size = std::max(out.max_list_size, l.size());
    return out;
}

namespace {
    std::vector<std::set<Index>> neighbour_images(const LabelCoverInstance& lc, const ListLabeling& lists, Index b)
    {
        std::vector<std::set<Index>> images;
        for (Index e : lc.edges_of_b(b)) {
            std::set<Index> img;
            for (Index label : lists.lists.at(lc.edges[e].a))
                img.insert(lc.projections[e].at(label));
            images.push_back(std::move(img));
        }
        return images;
    }

    Rational fraction_agreeing(const LabelCoverInstance& lc, const ListLabeling& lists)
    {
        if (lc.b_vertices.empty())
            return 0;
        Index agreeing = 0;
        for (Index b = 0; b < lc.b_vertices.size(); ++b)
            if (! list_totally_disagree(lc, lists, b))
                ++agreeing;
        return Rational(Integer(agreeing), Integer(lc.b_vertices.size()));
    }

    /// Nonempty subsets of {0..n−1} of size at most l, smallest first.
    std::vector<std::set<Index>> small_subsets(Index n, Index l)
    {
        std::vector<std::set<Index>> out;
        for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << n); ++mask) {
            std::set<Index> s;
            for (Index i = 0; i < n; ++i)
                if (mask >> i & 1)
                    s.insert(i);
            if (s.size() <= l)
                out.push_back(std::move(s));
        }
        std::stable_sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.size() < y.size(); });
        return out;
    }

    Rational max_over_lists(const LabelCoverInstance& lc, const std::vector<std::set<Index>>& choices,
        const Integer& max_states)
    {
        validate_label_cover(lc);
        require_enumerable(choices.size(), lc.a_vertices.size(), max_states, "list labelings");
        std::vector<Index> odometer(lc.a_vertices.size(), 0);
        Rational best = 0;
        ListLabeling lists;
        lists.lists.resize(lc.a_vertices.size());
        while (true) {
            for (Index a = 0; a < odometer.size(); ++a)
                lists.lists[a] = choices[odometer[a]];
            best = std::max(best, fraction_agreeing(lc, lists));
            Index k = odometer.size();
            while (k > 0 && ++odometer[k - 1] == choices.size())
                odometer[--k] = 0;
            if (k == 0)
                break;
        }
        return best;
    }
}

bool totally_disagree(const LabelCoverInstance& lc, const std::vector<Index>& phi_a, Index b)
{
    std::set<Index> seen;
    for (Index e : lc.edges_of_b(b))
        if (! seen.insert(lc.projections[e].at(phi_a.at(lc.edges[e].a))).second)
            return false;
    return true;
}

bool list_totally_disagree(const LabelCoverInstance& lc, const ListLabeling& lists, Index b)
{
    auto images = neighbour_images(lc, lists, b);
    for (Index i = 0; i < images.size(); ++i)
        for (Index j = i + 1; j < images.size(); ++j)
            for (Index y : images[i])
                if (images[j].count(y))
                    return false;
    return true;
}

Rational agreement_soundness_exact(const LabelCoverInstance& lc, const Integer& max_states)
{
    return list_agreement_soundness_exact(lc, 1, max_states);
}

Rational list_agreement_soundness_exact(const LabelCoverInstance& lc, Index l, const Integer& max_states)
{
    if (l == 0)
        fail(ErrorCode::BadParameters, "list size must be at least 1");
    if (lc.sigma_a.size() > 20)
        fail(ErrorCode::SearchSpaceTooLarge, "alphabet too large to enumerate lists");
    return max_over_lists(lc, small_subsets(lc.sigma_a.size(), l), max_states);
}

ListSoundnessBound check_list_soundness_bound(const LabelCoverInstance& lc, Index l, const Integer& max_states)
{
    ListSoundnessBound out;
    out.lhs = list_agreement_soundness_exact(lc, l, max_states);
    Rational scaled = Rational(Integer(l) * Integer(l)) * agreement_soundness_exact(lc, max_states);
    out.rhs = std::min(Rational(1), scaled);
    out.holds = out.lhs <= out.rhs;
    return out;
}

Index max_variable_degree(const SsatInstance& ssat)
{
    Index d = 0;
    for (Index x = 0; x < ssat.variables.size(); ++x)
        d = std::max(d, ssat.tests_of_variable(x).size());
    return d;
}

ListConstructionParams make_list_params(const SsatInstance& ssat, const Rational& g, const Rational& s_list,
    std::uint64_t seed, bool derandomize)
{
    if (g <= 0)
        fail(ErrorCode::BadParameters, "g must be positive");
    if (s_list <= 0 || s_list >= Rational(1, 2))
        fail(ErrorCode::BadParameters, "s_list must lie in (0, 1/2)");
    ListConstructionParams params;
    params.g = g;
    params.s_list = s_list;
    params.g1 = g * (1 - s_list) / (1 - 2 * s_list);
    params.seed = seed;
    const Index d_a = std::max<Index>(1, max_variable_degree(ssat));
    params.p_include = derandomize ? Rational(1) : std::min(Rational(1), Rational(params.g1 / Integer(d_a)));
    return params;
}

std::vector<Index> markov_select_psi_prime(const SsatInstance& ssat, const SuperAssignment& s,
    const ListConstructionParams& params)
{
    check_shape(ssat, s);
    const Rational norm = norm_l1(s);
    if (norm > params.g)
        fail(ErrorCode::NormBoundViolated,
            "norm " + format_rational(norm) + " exceeds g = " + format_rational(params.g));
    std::vector<Index> selected;
    for (Index t = 0; t < ssat.tests.size(); ++t)
        if (Rational(test_norm(s, t)) <= params.g1)
            selected.push_back(t);
    if (Rational(Integer(selected.size())) < params.s_list * Integer(ssat.tests.size()))
        fail(ErrorCode::PreconditionFailed, "Markov selection kept fewer than s_list·|Ψ| tests");
    return selected;
}

namespace {
    struct Builder {
        const SsatInstance& ssat;
        SuperAssignment s;
        std::vector<std::set<Index>> assigned;
        std::vector<std::set<Index>> lists;
        ListConstruction result;
        std::uint64_t seed;

        Builder(const SsatInstance& instance, const SuperAssignment& input, std::uint64_t seed_)
            : ssat(instance), seed(seed_)
        {
            if (! ssat.provenance)
                fail(ErrorCode::NotLcDerived, "list construction needs label-cover provenance");
            s = zero_all_bad_arrays(ssat, input);
            assigned = assigned_values(ssat, s);
            lists = assigned;
            result.chosen.assign(ssat.tests.size(), std::nullopt);
        }

        std::vector<Index> nonzero_tuples(Index t) const
        {
            std::vector<Index> out;
            for (Index r = 0; r < s.weights[t].size(); ++r)
                if (s.weights[t][r] != 0)
                    out.push_back(r);
            return out;
        }

        /// Adds the tuple's values of every variable other than `except`
        /// that is not already assigned, each with probability p.
        void sample_tuple(Index t, Index r, std::optional<Index> except, const Rational& p)
        {
            SeededStream stream(derive_seed(seed, t));
            const auto& test = ssat.tests[t];
            for (Index k = 0; k < test.variables.size(); ++k) {
                const Index x = test.variables[k];
                const Index value = test.assignments[r][k];
                if (except && *except == x)
                    continue;
                if (assigned[x].count(value))
                    continue;
                if (stream.bernoulli(p))
                    lists[x].insert(value);
            }
            result.chosen[t] = r;
        }

        void step_two(const std::vector<Index>& tests, const Rational& p)
        {
            for (Index t : tests) {
                std::optional<Index> pick;
                bool multi = false;
                for (Index r : nonzero_tuples(t)) {
                    Index good = count_good(ssat, assigned, t, r);
                    if (good >= 2) {
                        multi = true;
                        break;
                    }
                    if (good == 1 && ! pick)
                        pick = r;
                }
                if (! multi && pick)
                    sample_tuple(t, *pick, std::nullopt, p);
            }
        }

        ListConstruction finish()
        {
            std::vector<std::set<Index>> by_a(lists.size());
            for (Index x = 0; x < lists.size(); ++x)
                by_a.at(ssat.provenance->variable_to_a.at(x)) = lists[x];
            result.labeling = make_list_labeling(std::move(by_a));
            return std::move(result);
        }
    };
}

ListConstruction list_construction(const SsatInstance& ssat, const SuperAssignment& s,
    const ListConstructionParams& params)
{
    check_shape(ssat, s);
    if (! is_consistent(ssat, s).consistent)
        fail(ErrorCode::PreconditionFailed, "super-assignment is not consistent");
    if (! is_nontrivial(ssat, s))
        fail(ErrorCode::PreconditionFailed, "super-assignment is trivial");

    Builder builder(ssat, s, params.seed);
    builder.result.p_include = params.p_include;
    builder.result.psi_prime = markov_select_psi_prime(ssat, builder.s, params);
    builder.step_two(builder.result.psi_prime, params.p_include);
    return builder.finish();
}

ListConstruction list_construction_linf(const SsatInstance& ssat, const SuperAssignment& s, const Integer& g,
    std::uint64_t seed, bool derandomize)
{
    check_shape(ssat, s);
    if (g <= 0)
        fail(ErrorCode::PreconditionFailed, "g must be positive");
    if (! is_consistent(ssat, s).consistent)
        fail(ErrorCode::PreconditionFailed, "super-assignment is not consistent");
    if (! is_not_all_zero(s))
        fail(ErrorCode::PreconditionFailed, "super-assignment is all zero");
    if (norm_linf(s) > g)
        fail(ErrorCode::PreconditionFailed, "max test norm " + norm_linf(s).str() + " exceeds g = " + g.str());

    Builder builder(ssat, s, seed);
    const Index d_a = std::max<Index>(1, max_variable_degree(ssat));
    const Rational p = derandomize ? Rational(1) : std::min(Rational(1), Rational(g, Integer(d_a)));
    builder.result.p_include = p;

    for (Index t = 0; t < ssat.tests.size(); ++t)
        if (test_norm(builder.s, t) != 0)
            builder.result.psi_prime.push_back(t);
    builder.step_two(builder.result.psi_prime, p);

    for (Index x = 0; x < ssat.variables.size(); ++x)
        if (builder.assigned[x].empty())
            builder.result.v_prime.push_back(x);

    for (Index x : builder.result.v_prime) {
        std::set<Index> marked_values;
        for (Index t : ssat.tests_of_variable(x)) {
            if (builder.result.chosen[t])
                continue;
            const auto tuples = builder.nonzero_tuples(t);
            if (tuples.empty())
                continue;
            const Index k = *ssat.position_in_test(t, x);
            auto listed = std::find_if(tuples.begin(), tuples.end(),
                [&](Index r) { return builder.lists[x].count(ssat.tests[t].assignments[r][k]) > 0; });
            Index r;
            if (listed != tuples.end())
                r = *listed;
            else if (Integer(marked_values.size()) < g) {
                r = tuples.front();
                marked_values.insert(ssat.tests[t].assignments[r][k]);
                builder.lists[x].insert(ssat.tests[t].assignments[r][k]);
            }
            else
                continue;
            builder.sample_tuple(t, r, x, p);
            builder.result.psi_double_prime.push_back(t);
        }
    }
    std::sort(builder.result.psi_double_prime.begin(), builder.result.psi_double_prime.end());
    return builder.finish();
}

DefeatReport verify_defeats_list_soundness(const LabelCoverInstance& lc, const ListLabeling& lists,
    const Rational& s_list)
{
    DefeatReport out;
    out.non_disagree_fraction = fraction_agreeing(lc, lists);
    out.defeats = out.non_disagree_fraction >= s_list;
    return out;
}

}  // namespace gapforge
