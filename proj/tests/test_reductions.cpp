#include "gapforge/fixtures.hpp"
#include "gapforge/genlab.hpp"
#include "gapforge/oracles.hpp"
#include "gapforge/reductions.hpp"

#include "naive.hpp"
#include "support.hpp"

using namespace gapforge;
namespace fx = gapforge::fixtures;

namespace {
    IntVector iv(std::vector<int> v)
    {
        return IntVector(v.begin(), v.end());
    }

    std::vector<IntVector> mat(std::vector<std::vector<int>> rows)
    {
        std::vector<IntVector> out;
        for (const auto& r : rows)
            out.push_back(iv(r));
        return out;
    }

    using Tuples = std::vector<std::vector<Index>>;

    Index count_group(const LhpSystem& lhp, LhpGroup g)
    {
        Index n = 0;
        for (const auto& i : lhp.inequalities)
            n += i.group == g;
        return n;
    }
}

TEST_CASE("label cover to SSAT")
{
    auto id2 = lc_to_ssat(fx::lc_id2());
    CHECK(id2.variables.size() == 2);
    REQUIRE(id2.tests.size() == 1);
    CHECK(id2.tests[0].assignments == Tuples{{0, 0}, {1, 1}});

    auto cyc = lc_to_ssat(fx::lc_cyc());
    REQUIRE(cyc.tests.size() == 2);
    CHECK(cyc.tests[0].assignments == Tuples{{0, 0}, {1, 1}});
    CHECK(cyc.tests[1].assignments == Tuples{{0, 1}, {1, 0}});

    LabelCoverInstance single;
    single.a_vertices = {"a"};
    single.b_vertices = {"b"};
    single.sigma_a = {"0", "1"};
    single.sigma_b = {"0", "1"};
    single.edges = {{0, 0}};
    single.projections = {{0, 0}};
    auto s = lc_to_ssat(single);
    CHECK(s.tests[0].assignments == Tuples{{0}, {1}});
    REQUIRE(s.provenance);
    CHECK(s.provenance->assignment_label[0] == std::vector<Index>{0, 0});
}

TEST_CASE("test with no satisfying tuple")
{
    LabelCoverInstance lc;
    lc.a_vertices = {"a0", "a1"};
    lc.b_vertices = {"b"};
    lc.sigma_a = {"0"};
    lc.sigma_b = {"0", "1"};
    lc.edges = {{0, 0}, {1, 0}};
    lc.projections = {{0}, {1}};
    CHECK_CODE(lc_to_ssat(lc), ErrorCode::EmptyRange);
}

TEST_CASE("SIS matrix of SSAT-SHARE")
{
    auto sis = ssat_to_sis(fx::ssat_share());
    CHECK(sis.matrix == mat({{1, 1, 0, 0}, {0, 0, 1, 1}, {1, 0, 0, 1}, {0, 1, 1, 0}}));
    CHECK(sis.target == iv({1, 1, 1, 1}));
    CHECK(sis.bound == 2);
    CHECK(multiply(sis.matrix, iv({1, 0, 1, 0})) == sis.target);
}

TEST_CASE("SIS matrix of SSAT(LC-CYC)")
{
    auto sis = ssat_to_sis(lc_to_ssat(fx::lc_cyc()));
    CHECK(sis.rows() == 6);
    CHECK(sis.cols() == 4);
    CHECK(sis.bound == 2);
    CHECK(sis.matrix
        == mat({{1, 1, 0, 0}, {0, 0, 1, 1}, {1, 0, 0, 1}, {0, 1, 1, 0}, {1, 0, 1, 0}, {0, 1, 0, 1}}));
}

TEST_CASE("disjoint tests yield only non-triviality rows")
{
    LabelCoverInstance lc;
    lc.a_vertices = {"a0", "a1"};
    lc.b_vertices = {"b0", "b1"};
    lc.sigma_a = {"0", "1"};
    lc.sigma_b = {"0", "1"};
    lc.edges = {{0, 0}, {1, 1}};
    lc.projections = {{0, 1}, {0, 1}};
    auto sis = ssat_to_sis(lc_to_ssat(lc));
    CHECK(sis.matrix == mat({{1, 1, 0, 0}, {0, 0, 1, 1}}));
}

TEST_CASE("gadget pair")
{
    auto share = fx::ssat_share();
    auto g = gadget_pair(share, 0, 1, 0);
    CHECK(g.g1 == mat({{1, 0}, {0, 1}}));
    CHECK(g.g2 == mat({{0, 1}, {1, 0}}));

    LabelCoverInstance three;
    three.a_vertices = {"x"};
    three.b_vertices = {"p", "q"};
    three.sigma_a = {"0", "1", "2"};
    three.sigma_b = {"0", "1", "2"};
    three.edges = {{0, 0}, {0, 1}};
    three.projections = {{0, 1, 2}, {0, 1, 2}};
    auto s3 = lc_to_ssat(three);
    auto g3 = gadget_pair(s3, 0, 1, 0);
    CHECK(g3.g1[0][1] == 0);
    CHECK(g3.g1[1][1] == 1);
    CHECK(g3.g1[2][1] == 0);
    CHECK(g3.g2[0][1] == 1);
    CHECK(g3.g2[1][1] == 0);
    CHECK(g3.g2[2][1] == 1);

    auto lc = fx::lc_cyc();
    lc.edges = {{0, 0}, {1, 1}};
    lc.projections = {{0, 1}, {0, 1}};
    CHECK_CODE(gadget_pair(lc_to_ssat(lc), 0, 1, 0), ErrorCode::VariableNotShared);
}

TEST_CASE("gadget columns sum to all-ones exactly when the values agree")
{
    auto ssat = lc_to_ssat(fx::lc_cyc());
    for (Index x : ssat.shared_variables(0, 1)) {
        auto g = gadget_pair(ssat, 0, 1, x);
        const Index ki = *ssat.position_in_test(0, x);
        const Index kj = *ssat.position_in_test(1, x);
        for (Index r = 0; r < ssat.tests[0].assignments.size(); ++r)
            for (Index rr = 0; rr < ssat.tests[1].assignments.size(); ++rr) {
                bool all_ones = true;
                for (Index v = 0; v < ssat.field_values.size(); ++v)
                    all_ones = all_ones && g.g1[v][r] + g.g2[v][rr] == 1;
                const bool agree = ssat.tests[0].assignments[r][ki] == ssat.tests[1].assignments[rr][kj];
                CHECK(all_ones == agree);
            }
        for (Index r = 0; r < ssat.tests[0].assignments.size(); ++r) {
            Integer ones = 0;
            for (Index v = 0; v < ssat.field_values.size(); ++v)
                ones += g.g1[v][r];
            CHECK(ones == 1);
        }
    }
}

TEST_CASE("embedding natural solutions into SIS")
{
    auto share = fx::ssat_share();
    auto sis = ssat_to_sis(share);
    SuperAssignment nat{{iv({1, 0}), iv({1, 0})}};
    auto z = sis_solution_from_superassignment(nat);
    CHECK(z == iv({1, 0, 1, 0}));
    CHECK(multiply(sis.matrix, z) == sis.target);
    CHECK(abs_sum(z) == 2);

    auto zero = sis_solution_from_superassignment(zero_superassignment(share));
    CHECK(multiply(sis.matrix, zero) != sis.target);

    auto cyc = lc_to_ssat(fx::lc_cyc());
    SuperAssignment ones{{iv({1, 1}), iv({1, 1})}};
    CHECK(abs_sum(sis_solution_from_superassignment(ones)) == 4);
}

TEST_CASE("extracting super-assignments from SIS vectors")
{
    auto share = fx::ssat_share();
    auto s = superassignment_from_sis_solution(share, iv({1, 0, 1, 0}));
    CHECK(s == SuperAssignment{{iv({1, 0}), iv({1, 0})}});
    CHECK(is_consistent(share, s).consistent);
    CHECK(norm_l1(s) == 1);

    s = superassignment_from_sis_solution(share, iv({2, -1, 0, 1}));
    CHECK(s.weights[0][0] + s.weights[0][1] == 1);
    CHECK(s.weights[1][0] + s.weights[1][1] == 1);
    CHECK_FALSE(is_consistent(share, s).consistent);
    CHECK_CODE(superassignment_from_sis_solution(share, iv({1, 0, 1})), ErrorCode::LengthMismatch);

    naive::odometer(4, -2, 2, [&](const std::vector<long>& v) {
        auto sv = naive::split(share, v);
        CHECK(superassignment_from_sis_solution(share, sis_solution_from_superassignment(sv)) == sv);
    });
}

TEST_CASE("SIS equations are consistency plus unit test sums")
{
    for (const auto& ssat : {fx::ssat_share(), lc_to_ssat(fx::lc_cyc())}) {
        auto sis = ssat_to_sis(ssat);
        naive::odometer(ssat.num_columns(), -2, 2, [&](const std::vector<long>& v) {
            auto z = naive::to_int(v);
            auto s = naive::split(ssat, v);
            bool unit_sums = true;
            for (const auto& w : s.weights) {
                Integer sum = 0;
                for (const auto& x : w)
                    sum += x;
                unit_sums = unit_sums && sum == 1;
            }
            const bool solves = multiply(sis.matrix, z) == sis.target;
            CHECK(solves == (unit_sums && naive::consistent(ssat, s)));
            if (solves)
                CHECK(norm_l1(s) == Rational(abs_sum(z), Integer(ssat.tests.size())));
        });
    }
}

TEST_CASE("NCP construction")
{
    auto sis = ssat_to_sis(fx::ssat_share());
    auto ncp = sis_to_ncp(sis, 1);
    CHECK(ncp.replication == 3);
    CHECK(ncp.modulus == 5);
    CHECK(ncp.matrix.size() == 16);
    CHECK(ncp.bound == 2);
    for (Index i = 0; i < 12; ++i) {
        CHECK(ncp.target[i] == 1);
        CHECK(ncp.matrix[i] == sis.matrix[i / 3]);
    }
    for (Index i = 0; i < 4; ++i) {
        CHECK(ncp.target[12 + i] == 0);
        for (Index j = 0; j < 4; ++j)
            CHECK(ncp.matrix[12 + i][j] == (i == j ? 1 : 0));
    }
    CHECK(hamming_distance(ncp, iv({1, 0, 1, 0})) == 2);
    CHECK(hamming_distance(ncp, iv({0, 0, 0, 0})) == 12);
    CHECK_CODE(sis_to_ncp(sis, 1, Integer(2)), ErrorCode::BadParameters);
    CHECK_CODE(sis_to_ncp(sis, 1, std::nullopt, Integer(4)), ErrorCode::BadParameters);
    CHECK_CODE(sis_to_ncp(sis, 1, std::nullopt, Integer(3)), ErrorCode::BadParameters);
    CHECK(sis_to_ncp(sis, 1, Integer(4), Integer(7)).modulus == 7);
}

TEST_CASE("NCP distance splits into upper block and weight")
{
    auto sis = ssat_to_sis(fx::ssat_share());
    auto ncp = sis_to_ncp(sis, 1);
    NcpInstance upper = ncp;
    upper.matrix.resize(12);
    upper.target.resize(12);
    naive::odometer(4, -2, 2, [&](const std::vector<long>& v) {
        auto z = naive::to_int(v);
        CHECK(hamming_distance(ncp, z) == hamming_distance(upper, z) + hamming_weight(z, ncp.modulus));
        CHECK(hamming_distance(ncp, z) == naive::ncp_distance(ncp, v));
    });
}

TEST_CASE("LHP construction")
{
    auto sis = ssat_to_sis(fx::ssat_share());
    auto lhp = sis_to_lhp(sis, Integer(10));
    CHECK(lhp.inequalities.size() == 198);
    CHECK(expected_lhp_size(10, 4, 4) == 198);
    CHECK(count_group(lhp, LhpGroup::G1) == 20);
    CHECK(count_group(lhp, LhpGroup::G2) == 80);
    CHECK(count_group(lhp, LhpGroup::G3) == 80);
    CHECK(count_group(lhp, LhpGroup::G4) == 8);
    CHECK(count_group(lhp, LhpGroup::G5) == 10);
    validate_lhp(lhp);

    auto g4 = std::find_if(lhp.inequalities.begin(), lhp.inequalities.end(),
        [](const LhpInequality& i) { return i.group == LhpGroup::G4; });
    REQUIRE(g4 != lhp.inequalities.end());
    CHECK(g4->coeff_x == std::vector<std::pair<Index, Rational>>{{0, 1}});
    CHECK(g4->coeff_y == 0);
    CHECK(g4->coeff_delta == 1);
    CHECK(g4->sense == Sense::GT);
    CHECK((g4 + 1)->coeff_delta == -1);
    CHECK((g4 + 1)->sense == Sense::LT);

    CHECK(count_group(sis_to_lhp(sis, Integer(1)), LhpGroup::G1) == 2);
    CHECK(sis_to_lhp(sis).u_param == 3);
    CHECK_CODE(sis_to_lhp(sis, Integer(0)), ErrorCode::BadParameters);
}

TEST_CASE("LHP violations of embedded solutions")
{
    auto sis = ssat_to_sis(fx::ssat_share());
    auto lhp = sis_to_lhp(sis, Integer(10));
    auto a = lhp_assignment_from_sis_solution(iv({1, 0, 1, 0}));
    CHECK(count_lhp_violations(lhp, a) == 2);
    for (const auto& ineq : lhp.inequalities)
        if (! is_satisfied(ineq, a))
            CHECK(ineq.group == LhpGroup::G4);

    auto zero = lhp_assignment_from_sis_solution(iv({0, 0, 0, 0}));
    CHECK(count_lhp_violations(lhp, zero) == 4 * 10);
    for (const auto& ineq : lhp.inequalities)
        if (ineq.group == LhpGroup::G1 || ineq.group == LhpGroup::G5)
            CHECK(is_satisfied(ineq, zero));
}

TEST_CASE("0/1 solutions violate exactly their weight")
{
    auto sis = ssat_to_sis(lc_to_ssat(fx::lc_cyc()));
    auto lhp = sis_to_lhp(sis, Integer(5));
    naive::odometer(4, 0, 1, [&](const std::vector<long>& v) {
        auto a = lhp_assignment_from_sis_solution(naive::to_int(v));
        Index g4 = 0;
        for (const auto& ineq : lhp.inequalities)
            g4 += ineq.group == LhpGroup::G4 && ! is_satisfied(ineq, a);
        CHECK(g4 == Index(abs_sum(naive::to_int(v))));
    });
}

TEST_CASE("extracting SIS vectors from LHP points")
{
    auto sis = ssat_to_sis(fx::ssat_share());
    auto lhp = sis_to_lhp(sis, Integer(10));
    auto back = sis_solution_from_lhp_assignment(lhp, lhp_assignment_from_sis_solution(iv({1, 0, 1, 0})));
    REQUIRE(back.ok());
    CHECK(*back.z == iv({1, 0, 1, 0}));

    LhpAssignment far{{2, 0, 0, 0}, 1, std::nullopt};
    auto r = sis_solution_from_lhp_assignment(lhp, far);
    REQUIRE(r.infeasible);
    CHECK(r.infeasible->group == LhpGroup::G3);
    CHECK(lhp.inequalities[r.infeasible->inequality].sense == Sense::LT);

    LhpAssignment half{{Rational(1, 2), Rational(1, 2), 1, 0}, Rational(1, 2), std::nullopt};
    r = sis_solution_from_lhp_assignment(lhp, half);
    REQUIRE(r.infeasible);
    CHECK(r.infeasible->group == LhpGroup::G3);

    LhpAssignment scaled{{3, 0, 3, 0}, 3, std::nullopt};
    back = sis_solution_from_lhp_assignment(lhp, scaled);
    REQUIRE(back.ok());
    CHECK(*back.z == iv({1, 0, 1, 0}));

    LhpAssignment off{{1, 1, 1, 0}, 1, std::nullopt};
    r = sis_solution_from_lhp_assignment(lhp, off);
    REQUIRE(r.infeasible);
    CHECK(r.infeasible->group == LhpGroup::G2);
}

TEST_CASE("completeness chain on planted instances")
{
    for (std::uint64_t seed = 100; seed < 110; ++seed) {
        GenSpec spec{5, 3, 2, 3, 2, 2, true, seed};
        auto gen = gen_label_cover(spec);
        auto ssat = lc_to_ssat(gen.instance);
        auto s = natural_from_labeling(gen.instance, ssat, *gen.planted);
        CHECK(norm_l1(s) == 1);
        CHECK(naive::consistent(ssat, s));
        auto sis = ssat_to_sis(ssat);
        auto z = sis_solution_from_superassignment(s);
        CHECK(multiply(sis.matrix, z) == sis.target);
        CHECK(abs_sum(z) == Integer(ssat.tests.size()));
        CHECK(hamming_distance(sis_to_ncp(sis, 1), z) == ssat.tests.size());
        auto lhp = sis_to_lhp(sis);
        CHECK(count_lhp_violations(lhp, lhp_assignment_from_sis_solution(z)) == ssat.tests.size());
        auto back = sis_solution_from_lhp_assignment(lhp, lhp_assignment_from_sis_solution(z));
        REQUIRE(back.ok());
        CHECK(*back.z == z);
    }
}
