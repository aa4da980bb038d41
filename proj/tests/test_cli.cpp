#include "gapforge/cli.hpp"
#include "gapforge/io.hpp"

#include "support.hpp"

#include <filesystem>
#include <sstream>

using namespace gapforge;

namespace {
    struct Run {
        int code;
        std::string out;
        std::string err;
    };

    Run run(std::vector<std::string> args)
    {
        std::ostringstream out, err;
        int code = cli_main(args, out, err);
        return {code, out.str(), err.str()};
    }

    std::string scratch(const std::string& name)
    {
        auto dir = std::filesystem::temp_directory_path() / "gapforge_cli_tests";
        std::filesystem::create_directories(dir);
        return (dir / name).string();
    }
}

TEST_CASE("reduce lc2ssat writes the SSAT instance")
{
    const auto out = scratch("ssat.json");
    auto r = run({"reduce", "lc2ssat", "--in", fixture_path("lc_cyc"), "--out", out});
    CHECK(r.code == 0);
    auto j = read_json_file(out);
    CHECK(j["kind"] == "ssat");
    CHECK(j["tests"].size() == 2);
}

TEST_CASE("reduce through to text matrices")
{
    const auto ssat = scratch("cyc_ssat.json");
    const auto sis = scratch("cyc_sis.json");
    REQUIRE(run({"reduce", "lc2ssat", "--in", fixture_path("lc_cyc"), "--out", ssat}).code == 0);
    REQUIRE(run({"reduce", "ssat2sis", "--in", ssat, "--out", sis}).code == 0);
    auto r = run({"reduce", "ssat2sis", "--in", ssat, "--text"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("6 4 2\n", 0) == 0);
    r = run({"reduce", "sis2ncp", "--in", sis, "--g", "1", "--text"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("22 4 7 2\n", 0) == 0);
    r = run({"reduce", "sis2lhp", "--in", sis, "--u", "2"});
    CHECK(r.code == 0);
    CHECK(Json::parse(r.out)["kind"] == "lhp");
}

TEST_CASE("check chain on LC-ID2 passes")
{
    auto r = run({"check", "chain", "--in", fixture_path("lc_id2"), "--g", "1"});
    CHECK(r.code == 0);
    auto j = Json::parse(r.out);
    CHECK(j["manifest_chains"] == true);
    CHECK(j["completeness"]["all_pass"] == true);
}

TEST_CASE("exit codes and diagnostics")
{
    auto r = run({"reduce", "ssat2sis", "--in", "missing.json"});
    CHECK(r.code == 1);
    CHECK(Json::parse(r.err)["error"] == "FileNotFound");

    r = run({});
    CHECK(r.code == 2);
    CHECK(Json::parse(r.err)["error"] == "Usage");

    r = run({"solve", "sis", "--in", fixture_path("lc_id2"), "--bogus"});
    CHECK(r.code == 2);

    r = run({"--help"});
    CHECK(r.code == 0);
    CHECK_FALSE(r.out.empty());
}

TEST_CASE("solve verbs")
{
    auto r = run({"solve", "lc", "--in", fixture_path("lc_cyc")});
    CHECK(r.code == 0);
    CHECK(Json::parse(r.out)["optimum"] == "3/4");

    const auto ssat = scratch("solve_ssat.json");
    REQUIRE(run({"reduce", "lc2ssat", "--in", fixture_path("lc_cyc"), "--out", ssat}).code == 0);
    r = run({"solve", "ssat", "--in", ssat, "--box", "2", "--mode", "linf"});
    CHECK(r.code == 0);
    auto j = Json::parse(r.out);
    CHECK(j["optimum"] == "2/1");
    CHECK(j["mode"] == "linf");

    const auto sis = scratch("solve_sis.json");
    REQUIRE(run({"reduce", "ssat2sis", "--in", ssat, "--out", sis}).code == 0);
    r = run({"solve", "sis", "--in", sis, "--box", "2"});
    CHECK(r.code == 0);
    CHECK(Json::parse(r.out)["optimum"] == "inf");
}

TEST_CASE("check verbs")
{
    auto r = run({"check", "agreement", "--in", fixture_path("lc_cyc"), "--l", "2"});
    CHECK(r.code == 0);
    auto j = Json::parse(r.out);
    CHECK(j["s_agr"] == "1/2");
    CHECK(j["bound_holds"] == true);

    const auto weights = scratch("ones.json");
    write_text_file(weights, canonical_dump(to_json(SuperAssignment{{IntVector{1, 1}, IntVector{1, 1}}})));
    r = run({"check", "consistency", "--in", fixture_path("lc_cyc"), "--weights", weights});
    CHECK(r.code == 0);
    CHECK(Json::parse(r.out)["consistent"] == true);

    r = run({"check", "lists", "--in", fixture_path("lc_cyc"), "--weights", weights, "--g", "2", "--s-list", "1/4",
        "--derandomize"});
    CHECK(r.code == 0);
    CHECK(Json::parse(r.out)["defeats"] == true);

    r = run({"check", "claims", "--in", fixture_path("lc_cyc"), "--weights", weights});
    CHECK(r.code == 0);
}

TEST_CASE("gen lc writes an instance and its metadata")
{
    const auto out = scratch("gen.json");
    auto r = run({"gen", "lc", "--num-a", "3", "--num-b", "2", "--d-b", "2", "--seed", "4", "--out", out, "--oracle"});
    CHECK(r.code == 0);
    auto meta = read_json_file(out + ".meta.json");
    CHECK(meta["planted"] == true);
    CHECK(meta["seed"] == 4);
    CHECK(meta["oracle_value"] == "1/1");
    CHECK(read_json_file(out)["kind"] == "label_cover");
}

TEST_CASE("report")
{
    auto r = run({"report", "--in", fixture_path("lc_cyc"), "--box", "2"});
    CHECK(r.code == 0);
    auto j = Json::parse(r.out);
    CHECK(j["rows"].size() == 5);
    r = run({"report", "--in", fixture_path("lc_id2"), "--text"});
    CHECK(r.code == 0);
    CHECK(r.out.find("ssat") != std::string::npos);
}
