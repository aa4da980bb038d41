#include "gapforge/pipeline.hpp"

#include "gapforge/error.hpp"
#include "gapforge/oracles.hpp"
#include "gapforge/reductions.hpp"
#include "gapforge/superassign.hpp"

#include <map>
#include <sstream>

namespace gapforge {

namespace {
    Json optional_rational(const std::optional<Rational>& v)
    {
        return v ? rational_to_json(*v) : Json(nullptr);
    }

    std::string hash_of(const Json& j)
    {
        return sha256_hex(canonical_dump(j));
    }
}

Json to_json(const PipelineManifest& manifest)
{
    Json stages = Json::array();
    for (const auto& s : manifest.stages)
        stages.push_back({{"kind", s.kind}, {"input_kind", s.input_kind}, {"output_kind", s.output_kind},
            {"input_hash", s.input_hash}, {"output_hash", s.output_hash}, {"parameters", s.parameters}});
    const auto& g = manifest.gap_params;
    return {{"kind", "manifest"}, {"version", kFormatVersion}, {"stages", stages},
        {"gap_params",
            {{"g", integer_to_json(g.g)}, {"s_list", rational_to_json(g.s_list)}, {"U", integer_to_json(g.u)},
                {"D", integer_to_json(g.d_rep)}, {"q", integer_to_json(g.q)}, {"K", integer_to_json(g.box)}}}};
}

PipelineManifest manifest_from_json(const Json& j)
{
    try {
        if (j.at("kind") != "manifest")
            fail(ErrorCode::SchemaViolation, "/kind: expected 'manifest'");
        PipelineManifest m;
        for (const auto& s : j.at("stages"))
            m.stages.push_back({s.at("kind").get<std::string>(), s.at("input_kind").get<std::string>(),
                s.at("output_kind").get<std::string>(), s.at("input_hash").get<std::string>(),
                s.at("output_hash").get<std::string>(), s.at("parameters")});
        const auto& g = j.at("gap_params");
        auto integer = [](const Json& v) { return v.is_string() ? parse_integer(v.get<std::string>()) : Integer(v.get<long long>()); };
        m.gap_params.g = integer(g.at("g"));
        m.gap_params.s_list = parse_rational(g.at("s_list").get<std::string>());
        m.gap_params.u = integer(g.at("U"));
        m.gap_params.d_rep = integer(g.at("D"));
        m.gap_params.q = integer(g.at("q"));
        m.gap_params.box = integer(g.at("K"));
        return m;
    }
    catch (const Json::exception& e) {
        fail(ErrorCode::SchemaViolation, std::string("manifest: ") + e.what());
    }
}

bool manifest_chains(const PipelineManifest& manifest)
{
    std::map<std::string, std::string> latest;
    for (Index k = 0; k < manifest.stages.size(); ++k) {
        const auto& s = manifest.stages[k];
        if (k > 0) {
            auto it = latest.find(s.input_kind);
            if (it == latest.end() || it->second != s.input_hash)
                return false;
        }
        else
            latest[s.input_kind] = s.input_hash;
        latest[s.output_kind] = s.output_hash;
    }
    return true;
}

GapReport report_gap(const PipelineManifest& manifest, const OracleResults& results)
{
    GapReport report;
    report.params = manifest.gap_params;
    for (const auto& e : results.stages) {
        GapRow row;
        row.stage = e.stage;
        row.predicted = e.predicted;
        row.completeness_value = e.completeness;
        row.oracle_minimum = e.oracle;
        row.oracle_computed = e.oracle_computed;
        row.oracle_note = e.oracle_note;
        if (e.oracle && e.predicted != 0)
            row.ratio = *e.oracle / e.predicted;
        row.matches_prediction = e.completeness && *e.completeness == e.predicted;
        report.rows.push_back(std::move(row));
    }
    return report;
}

Json to_json(const GapReport& report)
{
    Json rows = Json::array();
    for (const auto& r : report.rows)
        rows.push_back({{"stage", r.stage}, {"predicted", rational_to_json(r.predicted)},
            {"completeness_value", optional_rational(r.completeness_value)},
            {"oracle_minimum", optional_rational(r.oracle_minimum)}, {"oracle_computed", r.oracle_computed},
            {"oracle_note", r.oracle_note}, {"ratio", optional_rational(r.ratio)},
            {"matches_prediction", r.matches_prediction}});
    return {{"kind", "gap_report"}, {"version", kFormatVersion}, {"rows", rows}};
}

std::string gap_report_text(const GapReport& report)
{
    auto show = [](const std::optional<Rational>& v) { return v ? format_rational(*v) : std::string("-"); };
    std::ostringstream out;
    out << "stage  predicted  completeness  oracle  ratio\n";
    for (const auto& r : report.rows) {
        out << r.stage << "  " << format_rational(r.predicted) << "  " << show(r.completeness_value) << "  ";
        if (r.oracle_computed)
            out << (r.oracle_minimum ? format_rational(*r.oracle_minimum) : std::string("inf"));
        else
            out << "n/a";
        out << "  " << show(r.ratio);
        if (! r.oracle_note.empty())
            out << "  (" << r.oracle_note << ")";
        out << "\n";
    }
    return out.str();
}

namespace {
    template <typename F>
    void run_oracle(StageEvidence& ev, F&& f)
    {
        try {
            f();
            ev.oracle_computed = true;
        }
        catch (const Error& e) {
            if (e.code() != ErrorCode::SearchSpaceTooLarge)
                throw;
            ev.oracle_note = "skipped: " + e.detail();
        }
    }

    Labeling complete_phi_b(const LabelCoverInstance& lc, Labeling lab)
    {
        if (lab.phi_b)
            return lab;
        std::vector<Index> phi_b(lc.b_vertices.size(), 0);
        for (Index b = 0; b < lc.b_vertices.size(); ++b) {
            auto incident = lc.edges_of_b(b);
            if (! incident.empty())
                phi_b[b] = lc.projections[incident.front()][lab.phi_a.at(lc.edges[incident.front()].a)];
        }
        lab.phi_b = phi_b;
        return lab;
    }
}

ChainResult run_chain(const LabelCoverInstance& lc, const ChainParams& params)
{
    validate_label_cover(lc);
    ChainResult out;
    out.lc = lc;
    out.ssat = lc_to_ssat(lc);
    out.sis = ssat_to_sis(out.ssat);
    out.ncp = sis_to_ncp(out.sis, params.g, params.d_rep, params.q);
    out.lhp = sis_to_lhp(out.sis, params.u, params.g);

    auto& m = out.manifest;
    m.gap_params = {params.g, params.s_list, out.lhp.u_param, out.ncp.replication, out.ncp.modulus, params.box};
    const std::string h_lc = hash_of(to_json(lc));
    const std::string h_ssat = hash_of(to_json(out.ssat));
    const std::string h_sis = hash_of(to_json(out.sis));
    m.stages.push_back({"lc2ssat", "label_cover", "ssat", h_lc, h_ssat, Json::object()});
    m.stages.push_back({"ssat2sis", "ssat", "sis", h_ssat, h_sis, Json::object()});
    m.stages.push_back({"sis2ncp", "sis", "ncp", h_sis, hash_of(to_json(out.ncp)),
        {{"g", integer_to_json(params.g)}, {"d_rep", integer_to_json(out.ncp.replication)},
            {"q", integer_to_json(out.ncp.modulus)}}});
    m.stages.push_back({"sis2lhp", "sis", "lhp", h_sis, hash_of(to_json(out.lhp)),
        {{"g", integer_to_json(params.g)}, {"u", integer_to_json(out.lhp.u_param)}}});

    std::optional<LcOptimum> lc_opt;
    if (params.labeling) {
        out.labeling = complete_phi_b(lc, *params.labeling);
        out.labeling_source = "given";
    }
    else {
        try {
            lc_opt = solve_lc_max(lc, params.max_states);
            if (lc_opt->best_fraction == 1) {
                out.labeling = lc_opt->witness;
                out.labeling_source = "oracle";
            }
            else
                out.labeling_source = "none";
        }
        catch (const Error& e) {
            if (e.code() != ErrorCode::SearchSpaceTooLarge)
                throw;
            out.labeling_source = "none";
        }
    }

    const Index n = out.ssat.tests.size();
    const Rational psi{Integer(n)};
    auto evidence = [](const std::string& stage, const Rational& predicted) {
        StageEvidence ev;
        ev.stage = stage;
        ev.predicted = predicted;
        return ev;
    };
    StageEvidence ev_lc = evidence("lc", 1), ev_ssat = evidence("ssat", 1), ev_sis = evidence("sis", psi),
                  ev_ncp = evidence("ncp", psi), ev_lhp = evidence("lhp", psi);

    if (out.labeling) {
        Completeness c;
        c.num_tests = n;
        const auto s = natural_from_labeling(lc, out.ssat, *out.labeling);
        c.ssat_norm = norm_l1(s);
        c.ssat_consistent = is_consistent(out.ssat, s).consistent && is_nontrivial(out.ssat, s);
        const IntVector z = sis_solution_from_superassignment(s);
        c.sis_l1 = abs_sum(z);
        c.sis_solves = multiply(out.sis.matrix, z) == out.sis.target;
        c.ncp_distance = hamming_distance(out.ncp, z);
        c.lhp_violations = count_lhp_violations(out.lhp, lhp_assignment_from_sis_solution(z));
        c.passes = c.ssat_consistent && c.ssat_norm == 1 && c.sis_solves && c.sis_l1 == Integer(n) &&
            c.ncp_distance == n && c.lhp_violations == n;
        ev_lc.completeness = lc.edges.empty()
            ? Rational(1)
            : Rational(Integer(count_satisfied_edges(lc, *out.labeling)), Integer(lc.edges.size()));
        ev_ssat.completeness = c.ssat_norm;
        ev_sis.completeness = Rational(c.sis_l1);
        ev_ncp.completeness = Rational(Integer(c.ncp_distance));
        ev_lhp.completeness = Rational(Integer(c.lhp_violations));
        out.completeness = c;
    }

    if (params.run_oracles) {
        SearchBudget budget{params.box, params.max_states, SsatMode::L1};
        run_oracle(ev_lc, [&] {
            if (! lc_opt)
                lc_opt = solve_lc_max(lc, params.max_states);
            ev_lc.oracle = lc_opt->best_fraction;
        });
        run_oracle(ev_ssat, [&] { ev_ssat.oracle = solve_ssat_min_norm(out.ssat, budget).min_norm; });
        run_oracle(ev_sis, [&] {
            auto r = solve_sis_min(out.sis, budget);
            if (r.min_l1)
                ev_sis.oracle = Rational(*r.min_l1);
        });
        run_oracle(ev_ncp, [&] {
            ev_ncp.oracle = Rational(Integer(solve_ncp_min(out.ncp, budget, true).min_dist));
        });
        run_oracle(ev_lhp, [&] {
            auto grid = default_lhp_grid(out.lhp.num_x, params.max_states);
            ev_lhp.oracle = Rational(Integer(solve_lhp_min(out.lhp, grid).min_violations));
        });
        if (ev_ssat.oracle_computed)
            ev_ssat.oracle_note = "box K=" + params.box.str();
        if (ev_sis.oracle_computed)
            ev_sis.oracle_note = "box K=" + params.box.str();
        if (ev_lhp.oracle_computed)
            ev_lhp.oracle_note = "grid {-1,0,1}";
    }
    out.oracles.stages = {ev_lc, ev_ssat, ev_sis, ev_ncp, ev_lhp};
    out.gap = report_gap(out.manifest, out.oracles);
    return out;
}

Json to_json(const ChainResult& chain)
{
    Json j{{"kind", "chain_report"}, {"version", kFormatVersion}, {"manifest", to_json(chain.manifest)},
        {"manifest_chains", manifest_chains(chain.manifest)}, {"labeling_source", chain.labeling_source},
        {"gap_report", to_json(chain.gap)}, {"num_tests", chain.ssat.tests.size()},
        {"sis_shape", {chain.sis.rows(), chain.sis.cols()}}, {"lhp_size", chain.lhp.inequalities.size()}};
    if (chain.labeling)
        j["labeling"] = labeling_to_json(chain.lc, *chain.labeling);
    if (chain.completeness) {
        const auto& c = *chain.completeness;
        j["completeness"] = {{"ssat_norm", rational_to_json(c.ssat_norm)}, {"ssat_consistent", c.ssat_consistent},
            {"sis_l1", integer_to_json(c.sis_l1)}, {"sis_solves", c.sis_solves}, {"ncp_distance", c.ncp_distance},
            {"lhp_violations", c.lhp_violations}, {"all_pass", c.passes}};
    }
    else
        j["completeness"] = nullptr;
    return j;
}

}  // namespace gapforge
