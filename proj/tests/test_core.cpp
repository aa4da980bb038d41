#include "gapforge/fixtures.hpp"
#include "gapforge/genlab.hpp"
#include "gapforge/label_cover.hpp"
#include "gapforge/numeric.hpp"
#include "gapforge/random.hpp"
#include "gapforge/reductions.hpp"

#include "naive.hpp"
#include "support.hpp"

using namespace gapforge;
namespace fx = gapforge::fixtures;

TEST_CASE("validate reports degrees and size")
{
    auto r = validate_label_cover(fx::lc_id2());
    CHECK(r == ValidationReport{true, 1, 2, 1, 5});
    r = validate_label_cover(fx::lc_cyc());
    CHECK(r == ValidationReport{true, 2, 2, 1, 8});
    CHECK(validate_label_cover(fx::lc_two_to_one()).p == 2);
}

TEST_CASE("validate flags irregular instances without rejecting them")
{
    auto r = validate_label_cover(fx::lc_linf());
    CHECK_FALSE(r.bi_regular);
    CHECK(r.d_b == 3);
    CHECK(r.d_a == 2);
}

TEST_CASE("malformed label covers")
{
    auto lc = fx::lc_id2();
    lc.projections[0][1] = kNoLabel;
    CHECK_CODE(validate_label_cover(lc), ErrorCode::MalformedInstance);

    lc = fx::lc_id2();
    lc.edges[1].b = 5;
    CHECK_CODE(validate_label_cover(lc), ErrorCode::MalformedInstance);

    lc = fx::lc_id2();
    lc.projections[0].pop_back();
    CHECK_CODE(validate_label_cover(lc), ErrorCode::MalformedInstance);
}

TEST_CASE("preimage")
{
    auto id2 = fx::lc_id2();
    CHECK(preimage(id2, 0, 0) == std::vector<Index>{0});
    auto cyc = fx::lc_cyc();
    CHECK(preimage(cyc, cyc.edge_index(1, 1), 0) == std::vector<Index>{1});
    auto two = fx::lc_two_to_one();
    two.sigma_b = {"0", "1"};
    CHECK(preimage(two, 0, 1).empty());
    CHECK_CODE(preimage(id2, 7, 0), ErrorCode::UnknownEdge);
    CHECK_CODE(preimage(id2, 0, 9), ErrorCode::UnknownLabel);
}

TEST_CASE("preimages partition the A alphabet")
{
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        GenSpec spec{4, 3, 2, 3, 2, 2, seed % 2 == 0, seed};
        auto lc = gen_label_cover(spec).instance;
        for (Index e = 0; e < lc.edges.size(); ++e) {
            std::vector<int> hits(lc.sigma_a.size(), 0);
            for (Index y = 0; y < lc.sigma_b.size(); ++y)
                for (Index x : preimage(lc, e, y))
                    ++hits[x];
            for (int h : hits)
                CHECK(h == 1);
        }
    }
}

TEST_CASE("count satisfied edges")
{
    CHECK(count_satisfied_edges(fx::lc_id2(), Labeling{{0, 0}, std::vector<Index>{0}}) == 2);
    auto cyc = fx::lc_cyc();
    CHECK(count_satisfied_edges(cyc, Labeling{{0, 0}, std::vector<Index>{0, 0}}) == 3);
    CHECK(count_satisfied_edges(cyc, Labeling{{0, 1}, std::vector<Index>{0, 0}}) == 3);
    CHECK_CODE(count_satisfied_edges(cyc, Labeling{{0, 0}, std::nullopt}), ErrorCode::PartialLabeling);
}

TEST_CASE("satisfied count agrees with direct evaluation and never exceeds |E|")
{
    auto cyc = fx::lc_cyc();
    naive::odometer(2, 0, 1, [&](const std::vector<long>& a) {
        naive::odometer(2, 0, 1, [&](const std::vector<long>& b) {
            Labeling lab{{Index(a[0]), Index(a[1])}, std::vector<Index>{Index(b[0]), Index(b[1])}};
            Index direct = 0;
            for (Index e = 0; e < cyc.edges.size(); ++e)
                direct += cyc.projections[e][a[cyc.edges[e].a]] == Index(b[cyc.edges[e].b]);
            CHECK(count_satisfied_edges(cyc, lab) == direct);
            CHECK(direct <= cyc.edges.size());
        });
    });
}

TEST_CASE("validation is pure")
{
    auto lc = fx::lc_cyc();
    CHECK(validate_label_cover(lc) == validate_label_cover(lc));
}

TEST_CASE("rational formatting and parsing")
{
    CHECK(format_rational(Rational(-3, 2)) == "-3/2");
    CHECK(format_rational(Rational(4)) == "4/1");
    CHECK(parse_rational("6/4") == Rational(3, 2));
    CHECK(parse_rational("7") == Rational(7));
    CHECK_CODE(parse_rational("1/0"), ErrorCode::SchemaViolation);
    CHECK_CODE(parse_rational("x"), ErrorCode::SchemaViolation);
    CHECK(is_integral(Rational(4, 2)));
    CHECK_FALSE(is_integral(Rational(1, 2)));
}

TEST_CASE("dual values order lexicographically")
{
    CHECK(DualValue(0, 1).sign() == 1);
    CHECK(DualValue(-1, 5).sign() == -1);
    CHECK(DualValue(0, 0).sign() == 0);
    DualValue v(1, -1);
    v += DualValue(-1, 0);
    CHECK(v.sign() == -1);
}

TEST_CASE("primes")
{
    CHECK(is_prime(5));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(9));
    CHECK(next_prime_above(4) == 5);
    CHECK(next_prime_above(5) == 7);
    CHECK(next_prime_above(24) == 29);
}

TEST_CASE("seeded streams are reproducible")
{
    SeededStream a(derive_seed(9, 3));
    SeededStream b(derive_seed(9, 3));
    for (int i = 0; i < 10; ++i)
        CHECK(a.next() == b.next());
    CHECK(derive_seed(9, 3) != derive_seed(9, 4));
    SeededStream c(1);
    for (int i = 0; i < 100; ++i) {
        CHECK(c.below(7) < 7);
        CHECK(c.bernoulli(Rational(1)));
        CHECK_FALSE(c.bernoulli(Rational(0)));
    }
}

TEST_CASE("bernoulli frequency tracks p")
{
    SeededStream s(42);
    int hits = 0;
    const int n = 20000;
    for (int i = 0; i < n; ++i)
        hits += s.bernoulli(Rational(1, 3));
    // Three standard errors of a Binomial(20000, 1/3) count is about 200.
    CHECK(std::abs(hits - n / 3) < 200);
}

TEST_CASE("ssat validation")
{
    auto ssat = lc_to_ssat(fx::lc_cyc());
    validate_ssat(ssat);
    auto bad = ssat;
    bad.tests[0].assignments[1] = bad.tests[0].assignments[0];
    CHECK_CODE(validate_ssat(bad), ErrorCode::MalformedInstance);
    bad = ssat;
    bad.tests[0].assignments[0].push_back(0);
    CHECK_CODE(validate_ssat(bad), ErrorCode::MalformedInstance);
    CHECK(ssat.num_columns() == 4);
    CHECK(ssat.shared_variables(0, 1) == std::vector<Index>{0, 1});
    CHECK(ssat.tests_of_variable(1) == std::vector<Index>{0, 1});
}
