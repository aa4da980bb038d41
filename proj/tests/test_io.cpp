#include "gapforge/fixtures.hpp"
#include "gapforge/io.hpp"
#include "gapforge/pipeline.hpp"
#include "gapforge/reductions.hpp"

#include "support.hpp"

#include <filesystem>

using namespace gapforge;
namespace fx = gapforge::fixtures;

namespace {
    std::string temp_file(const std::string& name)
    {
        auto dir = std::filesystem::temp_directory_path() / "gapforge_io_tests";
        std::filesystem::create_directories(dir);
        return (dir / name).string();
    }

    std::vector<AnyInstance> every_kind()
    {
        auto ssat = lc_to_ssat(fx::lc_cyc());
        auto sis = ssat_to_sis(ssat);
        return {fx::lc_cyc(), ssat, sis, sis_to_ncp(sis, 1), sis_to_lhp(sis, Integer(2))};
    }
}

TEST_CASE("shipped fixtures are canonical")
{
    for (const auto& name : fx::names()) {
        const auto path = fixture_path(name);
        const auto text = read_text_file(path);
        auto lc = std::get<LabelCoverInstance>(read_instance(path, "label_cover"));
        CHECK(lc == fx::by_name(name));
        CHECK(canonical_dump(to_json(AnyInstance(lc))) == text);
    }
}

TEST_CASE("write then read is the identity for every kind")
{
    for (const auto& inst : every_kind()) {
        const auto path = temp_file(kind_of(inst) + ".json");
        write_instance(path, inst);
        const auto first = read_text_file(path);
        auto back = read_instance(path, kind_of(inst));
        CHECK(back == inst);
        write_instance(path, back);
        CHECK(read_text_file(path) == first);
    }
}

TEST_CASE("kind checks")
{
    const auto path = temp_file("kind.json");
    write_instance(path, fx::lc_id2());
    CHECK_CODE(read_instance(path, "sis"), ErrorCode::SchemaViolation);
    CHECK(kind_of(read_instance(path)) == "label_cover");
}

TEST_CASE("schema violations name a location")
{
    auto j = to_json(fx::lc_id2());
    j["edges"][1]["pi"].erase("1");
    try {
        label_cover_from_json(j);
        FAIL("expected an error");
    }
    catch (const Error& e) {
        CHECK((e.code() == ErrorCode::SchemaViolation || e.code() == ErrorCode::MalformedInstance));
    }

    j = to_json(fx::lc_id2());
    j["edges"][0]["a"] = 3;
    try {
        label_cover_from_json(j);
        FAIL("expected an error");
    }
    catch (const Error& e) {
        CHECK(e.code() == ErrorCode::SchemaViolation);
        CHECK(e.detail().find("/edges/0/a") != std::string::npos);
    }

    j = to_json(fx::lc_id2());
    j["version"] = 7;
    CHECK_CODE(label_cover_from_json(j), ErrorCode::SchemaViolation);
}

TEST_CASE("truncated and missing files")
{
    const auto path = temp_file("truncated.json");
    auto text = canonical_dump(to_json(fx::lc_cyc()));
    write_text_file(path, text.substr(0, text.size() / 2));
    CHECK_CODE(read_instance(path), ErrorCode::SchemaViolation);
    CHECK_CODE(read_instance(temp_file("absent.json")), ErrorCode::FileNotFound);
}

TEST_CASE("integers beyond 53 bits become strings")
{
    CHECK(integer_to_json(Integer(42)).is_number());
    const Integer big = Integer(1) << 60;
    CHECK(integer_to_json(big).is_string());
    CHECK(integer_to_json(-big).get<std::string>() == "-" + big.str());
    CHECK(integer_to_json((Integer(1) << 53) - 1).is_number());
    CHECK(integer_to_json(Integer(1) << 53).is_string());
    CHECK(rational_to_json(Rational(3, 6)) == "1/2");

    SisInstance sis = ssat_to_sis(fx::ssat_share());
    sis.bound = big;
    auto back = sis_from_json(to_json(sis));
    CHECK(back.bound == big);
}

TEST_CASE("super-assignments, labelings and list labelings")
{
    SuperAssignment s{{IntVector{1, -2}, IntVector{0, 3}}};
    CHECK(superassignment_from_json(to_json(s)) == s);

    auto lc = fx::lc_cyc();
    Labeling lab{{0, 1}, std::vector<Index>{1, 0}};
    CHECK(labeling_from_json(lc, labeling_to_json(lc, lab)) == lab);
    Labeling partial{{1, 1}, std::nullopt};
    CHECK(labeling_from_json(lc, labeling_to_json(lc, partial)) == partial);

    auto lists = make_list_labeling({{0, 1}, {1}});
    CHECK(list_labeling_from_json(to_json(lists)) == lists);

    LhpAssignment a{{Rational(1, 2), -3}, Rational(1, 2), std::nullopt};
    CHECK(lhp_assignment_from_json(to_json(a)) == a);
    a.delta_value = Rational(1, 100);
    CHECK(lhp_assignment_from_json(to_json(a)) == a);
}

TEST_CASE("plain-text matrices")
{
    auto sis = ssat_to_sis(lc_to_ssat(fx::lc_cyc()));
    auto text = sis_to_text(sis);
    CHECK(text.rfind("6 4 2\n", 0) == 0);
    auto back = sis_from_text(text);
    CHECK(back.matrix == sis.matrix);
    CHECK(back.target == sis.target);
    CHECK(back.bound == sis.bound);
    CHECK(sis_to_text(back) == text);

    auto ncp = sis_to_ncp(ssat_to_sis(fx::ssat_share()), 1);
    auto ntext = ncp_to_text(ncp);
    CHECK(ntext.rfind("16 4 5 2\n", 0) == 0);
    auto nback = ncp_from_text(ntext);
    CHECK(nback.matrix == ncp.matrix);
    CHECK(nback.target == ncp.target);
    CHECK(nback.modulus == ncp.modulus);
    CHECK(nback.bound == ncp.bound);

    CHECK_CODE(sis_from_text("2 2 1\n1 0\n"), ErrorCode::SchemaViolation);
}

TEST_CASE("hashing")
{
    CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("manifests round-trip and chain by hash")
{
    ChainParams params;
    params.run_oracles = false;
    auto chain = run_chain(fx::lc_id2(), params);
    CHECK(manifest_chains(chain.manifest));
    REQUIRE(chain.manifest.stages.size() == 4);
    CHECK(chain.manifest.stages[3].input_hash == chain.manifest.stages[1].output_hash);
    CHECK(chain.manifest.stages[1].output_hash
        == sha256_hex(canonical_dump(to_json(AnyInstance(chain.sis)))));

    auto back = manifest_from_json(to_json(chain.manifest));
    CHECK(canonical_dump(to_json(back)) == canonical_dump(to_json(chain.manifest)));

    auto broken = chain.manifest;
    broken.stages[2].input_hash = "00";
    CHECK_FALSE(manifest_chains(broken));
}

TEST_CASE("gap report")
{
    ChainParams params;
    auto chain = run_chain(fx::lc_id2(), params);
    REQUIRE(chain.completeness);
    CHECK(chain.completeness->passes);
    for (const auto& row : chain.gap.rows) {
        CHECK(row.matches_prediction);
        REQUIRE(row.ratio);
        CHECK(*row.ratio == 1);
    }
    CHECK_FALSE(gap_report_text(chain.gap).empty());

    auto share = run_chain(fx::lc_share(), params);
    auto ncp = std::find_if(share.gap.rows.begin(), share.gap.rows.end(), [](const GapRow& r) { return r.stage == "ncp"; });
    REQUIRE(ncp != share.gap.rows.end());
    CHECK(ncp->completeness_value == Rational(2));
    CHECK(ncp->oracle_minimum == Rational(2));
    CHECK(ncp->ratio == Rational(1));

    auto cyc = run_chain(fx::lc_cyc(), params);
    CHECK_FALSE(cyc.completeness);
    auto ssat = std::find_if(cyc.gap.rows.begin(), cyc.gap.rows.end(), [](const GapRow& r) { return r.stage == "ssat"; });
    REQUIRE(ssat != cyc.gap.rows.end());
    CHECK(ssat->oracle_minimum == Rational(2));
    CHECK(ssat->ratio == Rational(2));
}
