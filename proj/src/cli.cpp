#include "gapforge/cli.hpp"

#include "gapforge/error.hpp"
#include "gapforge/genlab.hpp"
#include "gapforge/io.hpp"
#include "gapforge/oracles.hpp"
#include "gapforge/pipeline.hpp"
#include "gapforge/reductions.hpp"
#include "gapforge/soundness.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <iostream>

namespace gapforge {

namespace {
    /// Raised for flag combinations CLI11 cannot express; exits with 2.
    struct UsageError : std::runtime_error {
        using std::runtime_error::runtime_error;
    };

    struct Options {
        std::string in;
        std::string out;
        std::string weights;
        std::string spec_file;
        std::string labeling_file;
        std::string out_dir;
        std::string g = "1";
        std::string box = "2";
        std::string s_list = "1/4";
        std::string u;
        std::string d_rep;
        std::string q;
        std::string mode = "l1";
        std::uint64_t seed = 0;
        Index l = 1;
        Index flips = 0;
        bool text = false;
        bool full_field = false;
        bool derandomize = false;
        bool linf = false;
        bool oracle = false;
        bool no_oracles = false;
        GenSpec gen;
        bool unplanted = false;
    };

    std::optional<Integer> optional_integer(const std::string& text, const char* flag)
    {
        if (text.empty())
            return std::nullopt;
        try {
            return parse_integer(text);
        }
        catch (const Error&) {
            throw UsageError(std::string(flag) + " expects an integer, got '" + text + "'");
        }
    }

    Integer required_integer(const std::string& text, const char* flag)
    {
        return *optional_integer(text, flag);
    }

    Rational rational_flag(const std::string& text, const char* flag)
    {
        try {
            return parse_rational(text);
        }
        catch (const Error&) {
            throw UsageError(std::string(flag) + " expects a rational, got '" + text + "'");
        }
    }

    void emit(std::ostream& out, const Json& j)
    {
        out << canonical_dump(j);
    }

    ChainParams chain_params(const Options& o, const LabelCoverInstance& lc)
    {
        ChainParams p;
        p.g = required_integer(o.g, "--g");
        p.box = required_integer(o.box, "--box");
        p.s_list = rational_flag(o.s_list, "--s-list");
        p.u = optional_integer(o.u, "--u");
        p.d_rep = optional_integer(o.d_rep, "--d-rep");
        p.q = optional_integer(o.q, "--q");
        p.max_states = default_max_states();
        p.run_oracles = ! o.no_oracles;
        if (! o.labeling_file.empty())
            p.labeling = labeling_from_json(lc, read_json_file(o.labeling_file));
        return p;
    }

    Json spec_to_json(const GenSpec& s)
    {
        return {{"num_a", s.num_a}, {"num_b", s.num_b}, {"d_b", s.d_b}, {"sigma_a_size", s.sigma_a_size},
            {"sigma_b_size", s.sigma_b_size}, {"arity_p", s.arity_p}, {"planted", s.planted}, {"seed", s.seed}};
    }

    void merge_spec_file(GenSpec& spec, const std::string& path)
    {
        const Json j = read_json_file(path);
        try {
            auto take = [&](const char* key, Index& field) {
                if (j.contains(key))
                    field = j.at(key).get<Index>();
            };
            take("num_a", spec.num_a);
            take("num_b", spec.num_b);
            take("d_b", spec.d_b);
            take("sigma_a_size", spec.sigma_a_size);
            take("sigma_b_size", spec.sigma_b_size);
            take("arity_p", spec.arity_p);
            if (j.contains("planted"))
                spec.planted = j.at("planted").get<bool>();
            if (j.contains("seed"))
                spec.seed = j.at("seed").get<std::uint64_t>();
        }
        catch (const Json::exception& e) {
            fail(ErrorCode::SchemaViolation, "'" + path + "': " + e.what());
        }
    }

    int run_gen(const Options& o, const CLI::App& cmd, std::ostream& out)
    {
        GenSpec spec = o.gen;
        if (! o.spec_file.empty()) {
            GenSpec from_file = spec;
            merge_spec_file(from_file, o.spec_file);
            // Explicit flags win over the file.
            auto given = [&](const char* name) { return cmd.count(name) > 0; };
            if (! given("--num-a")) spec.num_a = from_file.num_a;
            if (! given("--num-b")) spec.num_b = from_file.num_b;
            if (! given("--d-b")) spec.d_b = from_file.d_b;
            if (! given("--sigma-a")) spec.sigma_a_size = from_file.sigma_a_size;
            if (! given("--sigma-b")) spec.sigma_b_size = from_file.sigma_b_size;
            if (! given("--p")) spec.arity_p = from_file.arity_p;
            if (! given("--seed")) spec.seed = from_file.seed;
            if (! given("--unplanted")) spec.planted = from_file.planted;
        }
        if (o.unplanted)
            spec.planted = false;

        GeneratedLc gen = gen_label_cover(spec);
        LabelCoverInstance lc = gen.instance;
        std::vector<Index> twisted;
        if (o.flips > 0) {
            twisted = frustrated_edges(lc, o.flips, spec.seed);
            lc = frustrate(lc, o.flips, spec.seed);
        }
        Json meta{{"kind", "gen_metadata"}, {"version", kFormatVersion}, {"planted", spec.planted && o.flips == 0},
            {"seed", spec.seed}, {"spec", spec_to_json(spec)}, {"flips", o.flips}, {"twisted_edges", twisted}};
        if (gen.planted)
            meta["planted_labeling"] = labeling_to_json(gen.instance, *gen.planted);
        if (o.oracle)
            meta["oracle_value"] = rational_to_json(solve_lc_max(lc).best_fraction);
        else
            meta["oracle_value"] = nullptr;

        if (o.out.empty()) {
            emit(out, {{"instance", to_json(lc)}, {"metadata", meta}});
            return 0;
        }
        write_instance(o.out, lc);
        write_text_file(o.out + ".meta.json", canonical_dump(meta));
        emit(out, {{"written", o.out}, {"metadata", meta}});
        return 0;
    }

    int run_reduce(const std::string& stage, const Options& o, std::ostream& out)
    {
        if (o.in.empty())
            throw UsageError("reduce " + stage + " requires --in");
        AnyInstance result;
        std::string text;
        if (stage == "lc2ssat")
            result = lc_to_ssat(std::get<LabelCoverInstance>(read_instance(o.in, "label_cover")));
        else if (stage == "ssat2sis") {
            auto sis = ssat_to_sis(std::get<SsatInstance>(read_instance(o.in, "ssat")));
            text = sis_to_text(sis);
            result = std::move(sis);
        }
        else if (stage == "sis2ncp") {
            auto ncp = sis_to_ncp(std::get<SisInstance>(read_instance(o.in, "sis")), required_integer(o.g, "--g"),
                optional_integer(o.d_rep, "--d-rep"), optional_integer(o.q, "--q"));
            text = ncp_to_text(ncp);
            result = std::move(ncp);
        }
        else {
            result = sis_to_lhp(std::get<SisInstance>(read_instance(o.in, "sis")), optional_integer(o.u, "--u"),
                required_integer(o.g, "--g"));
        }
        if (o.text && text.empty())
            throw UsageError("--text is only available for ssat2sis and sis2ncp");

        const std::string body = o.text ? text : canonical_dump(to_json(result));
        if (o.out.empty()) {
            out << body;
            return 0;
        }
        write_text_file(o.out, body);
        emit(out, {{"stage", stage}, {"output_kind", kind_of(result)}, {"written", o.out},
            {"output_hash", sha256_hex(body)}});
        return 0;
    }

    SsatMode parse_mode(const std::string& mode)
    {
        if (mode == "l1")
            return SsatMode::L1;
        if (mode == "linf")
            return SsatMode::Linf;
        throw UsageError("--mode must be l1 or linf");
    }

    int run_solve(const std::string& kind, const Options& o, std::ostream& out)
    {
        if (o.in.empty())
            throw UsageError("solve " + kind + " requires --in");
        SearchBudget budget = make_budget(required_integer(o.box, "--box"), parse_mode(o.mode));
        Json j{{"kind", "solve_result"}, {"problem", kind}};
        if (kind == "lc") {
            auto lc = std::get<LabelCoverInstance>(read_instance(o.in, "label_cover"));
            auto r = solve_lc_max(lc, budget.max_states);
            j["optimum"] = rational_to_json(r.best_fraction);
            j["witness"] = labeling_to_json(lc, r.witness);
            j["mode"] = "max_fraction";
            j["states_visited"] = integer_to_json(r.states_visited);
        }
        else if (kind == "ssat") {
            auto ssat = std::get<SsatInstance>(read_instance(o.in, "ssat"));
            auto r = solve_ssat_min_norm(ssat, budget);
            j["optimum"] = r.min_norm ? rational_to_json(*r.min_norm) : Json("inf");
            j["witness"] = r.witness ? to_json(*r.witness) : Json(nullptr);
            j["mode"] = to_string(r.mode);
            j["states_visited"] = integer_to_json(r.states_visited);
        }
        else if (kind == "sis") {
            auto sis = std::get<SisInstance>(read_instance(o.in, "sis"));
            auto r = solve_sis_min(sis, budget);
            j["optimum"] = r.min_l1 ? integer_to_json(*r.min_l1) : Json("inf");
            Json w = nullptr;
            if (r.witness) {
                w = Json::array();
                for (const auto& v : *r.witness)
                    w.push_back(integer_to_json(v));
            }
            j["witness"] = w;
            j["mode"] = "l1";
            j["states_visited"] = integer_to_json(r.states_visited);
        }
        else if (kind == "ncp") {
            auto ncp = std::get<NcpInstance>(read_instance(o.in, "ncp"));
            auto r = solve_ncp_min(ncp, budget, o.full_field);
            j["optimum"] = r.min_dist;
            Json w = Json::array();
            for (const auto& v : r.witness)
                w.push_back(integer_to_json(v));
            j["witness"] = w;
            j["mode"] = to_string(r.mode);
            j["states_visited"] = integer_to_json(r.states_visited);
        }
        else {
            auto lhp = std::get<LhpSystem>(read_instance(o.in, "lhp"));
            auto r = solve_lhp_min(lhp, default_lhp_grid(lhp.num_x, budget.max_states));
            j["optimum"] = r.min_violations;
            j["witness"] = to_json(r.witness);
            j["mode"] = "grid";
            j["states_visited"] = integer_to_json(r.states_visited);
        }
        emit(out, j);
        return 0;
    }

    SuperAssignment read_weights(const Options& o)
    {
        if (o.weights.empty())
            throw UsageError("this check requires --weights");
        return superassignment_from_json(read_json_file(o.weights));
    }

    /// Label Cover input is reduced first.
    SsatInstance read_ssat_or_lc(const std::string& path)
    {
        auto inst = read_instance(path);
        if (auto* lc = std::get_if<LabelCoverInstance>(&inst))
            return lc_to_ssat(*lc);
        if (auto* ssat = std::get_if<SsatInstance>(&inst))
            return *ssat;
        fail(ErrorCode::SchemaViolation, path + ": expected kind 'ssat' or 'label_cover', got '" + kind_of(inst) + "'");
    }

    int run_check(const std::string& what, const Options& o, std::ostream& out)
    {
        if (o.in.empty())
            throw UsageError("check " + what + " requires --in");
        if (what == "consistency") {
            auto ssat = read_ssat_or_lc(o.in);
            auto s = read_weights(o);
            auto r = is_consistent(ssat, s);
            Json j{{"kind", "consistency_report"}, {"consistent", r.consistent}, {"non_trivial", is_nontrivial(ssat, s)},
                {"not_all_zero", is_not_all_zero(s)}, {"norm_l1", rational_to_json(norm_l1(s))},
                {"norm_linf", integer_to_json(norm_linf(s))}, {"witness", nullptr}};
            if (r.witness)
                j["witness"] = {{"test_i", ssat.tests[r.witness->test_i].name},
                    {"test_j", ssat.tests[r.witness->test_j].name}, {"variable", ssat.variables[r.witness->variable]},
                    {"value", ssat.field_values[r.witness->value]}};
            emit(out, j);
            return r.consistent ? 0 : 1;
        }
        if (what == "claims") {
            auto ssat = read_ssat_or_lc(o.in);
            auto s = read_weights(o);
            Json violations = Json::array();
            for (const auto& v : check_claim1(ssat, s))
                violations.push_back({{"test", ssat.tests[v.test].name}, {"b_label", v.b_label},
                    {"cell_sum", integer_to_json(v.cell_sum)}});
            auto zeroed = zero_all_bad_arrays(ssat, s);
            Json classes = Json::array();
            bool ok = violations.empty();
            for (Index t = 0; t < ssat.tests.size(); ++t) {
                try {
                    classes.push_back(to_string(classify_test(ssat, s, t)));
                }
                catch (const Error& e) {
                    if (e.code() != ErrorCode::ClassificationImpossible)
                        throw;
                    classes.push_back("ClassificationImpossible");
                    ok = false;
                }
            }
            emit(out, {{"kind", "claims_report"}, {"claim1_violations", violations},
                {"claim0", {{"norm_before", rational_to_json(norm_l1(s))}, {"norm_after", rational_to_json(norm_l1(zeroed))},
                    {"consistent_after", is_consistent(ssat, zeroed).consistent}, {"weights_after", to_json(zeroed)}}},
                {"classification", classes}, {"ok", ok}});
            return ok ? 0 : 1;
        }
        if (what == "agreement") {
            auto lc = std::get<LabelCoverInstance>(read_instance(o.in, "label_cover"));
            const Integer cap = default_max_states();
            auto bound = check_list_soundness_bound(lc, o.l, cap);
            emit(out, {{"kind", "agreement_report"}, {"s_agr", rational_to_json(agreement_soundness_exact(lc, cap))},
                {"l", o.l}, {"s_list_exact", rational_to_json(bound.lhs)}, {"rhs", rational_to_json(bound.rhs)},
                {"bound_holds", bound.holds}});
            return bound.holds ? 0 : 1;
        }
        if (what == "lists") {
            auto lc = std::get<LabelCoverInstance>(read_instance(o.in, "label_cover"));
            auto ssat = lc_to_ssat(lc);
            auto s = read_weights(o);
            const Rational s_list = rational_flag(o.s_list, "--s-list");
            ListConstruction built;
            if (o.linf)
                built = list_construction_linf(ssat, s, required_integer(o.g, "--g"), o.seed, o.derandomize);
            else
                built = list_construction(ssat, s,
                    make_list_params(ssat, rational_flag(o.g, "--g"), s_list, o.seed, o.derandomize));
            auto verdict = verify_defeats_list_soundness(lc, built.labeling, s_list);
            emit(out, {{"kind", "lists_report"}, {"lists", to_json(built.labeling)}, {"psi_prime", built.psi_prime},
                {"psi_double_prime", built.psi_double_prime}, {"v_prime", built.v_prime},
                {"p_include", rational_to_json(built.p_include)},
                {"fraction", rational_to_json(verdict.non_disagree_fraction)}, {"defeats", verdict.defeats}});
            return 0;
        }
        auto lc = std::get<LabelCoverInstance>(read_instance(o.in, "label_cover"));
        auto chain = run_chain(lc, chain_params(o, lc));
        if (! o.out_dir.empty()) {
            std::filesystem::create_directories(o.out_dir);
            const std::filesystem::path dir(o.out_dir);
            write_instance((dir / "ssat.json").string(), chain.ssat);
            write_instance((dir / "sis.json").string(), chain.sis);
            write_instance((dir / "ncp.json").string(), chain.ncp);
            write_instance((dir / "lhp.json").string(), chain.lhp);
            write_text_file((dir / "manifest.json").string(), canonical_dump(to_json(chain.manifest)));
            write_text_file((dir / "report.json").string(), canonical_dump(to_json(chain)));
        }
        emit(out, to_json(chain));
        const bool ok = manifest_chains(chain.manifest) && (! chain.completeness || chain.completeness->passes);
        return ok ? 0 : 1;
    }

    int run_report(const Options& o, std::ostream& out)
    {
        if (o.in.empty())
            throw UsageError("report requires --in");
        auto lc = std::get<LabelCoverInstance>(read_instance(o.in, "label_cover"));
        auto chain = run_chain(lc, chain_params(o, lc));
        if (o.text)
            out << gap_report_text(chain.gap);
        else
            emit(out, to_json(chain.gap));
        return 0;
    }

    void error_json(std::ostream& err, const std::string& code, const std::string& detail)
    {
        err << Json{{"error", code}, {"detail", detail}}.dump() << "\n";
    }
}

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"Label Cover reduction pipeline with exact oracles", "gapforge"};
    app.require_subcommand(1);

    auto add_in = [&](CLI::App* c) { c->add_option("--in,--input", o.in, "Input file"); };
    auto add_params = [&](CLI::App* c) {
        c->add_option("--g", o.g, "Gap parameter g");
        c->add_option("--u", o.u, "LHP copy count U");
        c->add_option("--d-rep", o.d_rep, "NCP row replication D");
        c->add_option("--q", o.q, "NCP field size q");
    };

    auto* gen = app.add_subcommand("gen", "Generate instances")->require_subcommand(1);
    auto* gen_lc = gen->add_subcommand("lc", "Seeded Label Cover instance");
    gen_lc->add_option("--num-a", o.gen.num_a);
    gen_lc->add_option("--num-b", o.gen.num_b);
    gen_lc->add_option("--d-b", o.gen.d_b);
    gen_lc->add_option("--sigma-a", o.gen.sigma_a_size);
    gen_lc->add_option("--sigma-b", o.gen.sigma_b_size);
    gen_lc->add_option("--p", o.gen.arity_p);
    gen_lc->add_option("--seed", o.gen.seed);
    gen_lc->add_flag("--unplanted", o.unplanted);
    gen_lc->add_option("--flips", o.flips, "Number of edges to twist");
    gen_lc->add_option("--spec", o.spec_file, "JSON file with GenSpec fields");
    gen_lc->add_option("--out", o.out);
    gen_lc->add_flag("--oracle", o.oracle, "Record the exact LC optimum in the metadata");

    auto* reduce = app.add_subcommand("reduce", "Apply one reduction")->require_subcommand(1);
    for (const char* stage : {"lc2ssat", "ssat2sis", "sis2ncp", "sis2lhp"}) {
        auto* c = reduce->add_subcommand(stage);
        add_in(c);
        add_params(c);
        c->add_option("--out", o.out);
        c->add_flag("--text", o.text, "Plain-text matrix output (ssat2sis, sis2ncp)");
    }

    auto* solve = app.add_subcommand("solve", "Exact brute-force oracle")->require_subcommand(1);
    for (const char* kind : {"lc", "ssat", "sis", "ncp", "lhp"}) {
        auto* c = solve->add_subcommand(kind);
        add_in(c);
        c->add_option("--box", o.box, "Coefficient box K");
        c->add_option("--mode", o.mode, "l1 or linf (ssat)");
        c->add_flag("--full-field", o.full_field, "Range over all of F_q (ncp)");
    }

    auto* check = app.add_subcommand("check", "Checkers")->require_subcommand(1);
    for (const char* what : {"consistency", "claims", "agreement", "lists", "chain"}) {
        auto* c = check->add_subcommand(what);
        add_in(c);
        c->add_option("--weights", o.weights, "Super-assignment JSON");
        c->add_option("--l", o.l, "List size");
        c->add_option("--s-list", o.s_list);
        c->add_option("--seed", o.seed);
        c->add_flag("--derandomize", o.derandomize, "Include with probability 1");
        c->add_flag("--linf", o.linf, "Use the max-norm construction");
        c->add_option("--box", o.box);
        c->add_option("--labeling", o.labeling_file);
        c->add_option("--out-dir", o.out_dir);
        c->add_flag("--no-oracles", o.no_oracles);
        add_params(c);
    }

    auto* report = app.add_subcommand("report", "Gap report for the whole chain");
    add_in(report);
    add_params(report);
    report->add_option("--box", o.box);
    report->add_option("--s-list", o.s_list);
    report->add_option("--labeling", o.labeling_file);
    report->add_flag("--text", o.text);
    report->add_flag("--no-oracles", o.no_oracles);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    }
    catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    }
    catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    }
    catch (const CLI::ParseError& e) {
        error_json(err, "Usage", e.what());
        return 2;
    }

    auto chosen = [](CLI::App* parent) -> std::string {
        auto subs = parent->get_subcommands();
        return subs.empty() ? std::string() : subs.front()->get_name();
    };

    try {
        if (gen->parsed())
            return run_gen(o, *gen_lc, out);
        if (reduce->parsed())
            return run_reduce(chosen(reduce), o, out);
        if (solve->parsed())
            return run_solve(chosen(solve), o, out);
        if (check->parsed())
            return run_check(chosen(check), o, out);
        return run_report(o, out);
    }
    catch (const UsageError& e) {
        error_json(err, "Usage", e.what());
        return 2;
    }
    catch (const Error& e) {
        error_json(err, std::string(to_string(e.code())), e.detail());
        return 1;
    }
    catch (const std::exception& e) {
        error_json(err, "Internal", e.what());
        return 1;
    }
}

int cli_main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return cli_main(args, std::cout, std::cerr);
}

}  // namespace gapforge
