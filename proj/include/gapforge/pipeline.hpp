#pragma once

#include "gapforge/io.hpp"
#include "gapforge/label_cover.hpp"
#include "gapforge/problems.hpp"
#include "gapforge/ssat.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gapforge {

struct ManifestStage {
    std::string kind;
    std::string input_kind;
    std::string output_kind;
    std::string input_hash;
    std::string output_hash;
    Json parameters = Json::object();
};

struct GapParams {
    Integer g = 1;
    Rational s_list = Rational(1, 4);
    Integer u;
    Integer d_rep;
    Integer q;
    Integer box = 2;
};

struct PipelineManifest {
    std::vector<ManifestStage> stages;
    GapParams gap_params;
};

Json to_json(const PipelineManifest& manifest);
PipelineManifest manifest_from_json(const Json& j);

/// Every stage's input hash equals the output hash of the latest earlier
/// stage producing its input kind; the first stage is unconstrained.
bool manifest_chains(const PipelineManifest& manifest);

struct ChainParams {
    Integer g = 1;
    Integer box = 2;
    Rational s_list = Rational(1, 4);
    std::optional<Integer> u;
    std::optional<Integer> d_rep;
    std::optional<Integer> q;
    Integer max_states = 100'000'000;
    bool run_oracles = true;
    /// A satisfying labeling to embed; found by the LC oracle when absent.
    std::optional<Labeling> labeling;
};

/// Value of the natural solution at each stage next to the value the
/// completeness lemmas predict for it.
struct Completeness {
    Rational ssat_norm;
    bool ssat_consistent = false;
    Integer sis_l1;
    bool sis_solves = false;
    Index ncp_distance = 0;
    Index lhp_violations = 0;
    Index num_tests = 0;
    bool passes = false;
};

struct StageEvidence {
    std::string stage;
    Rational predicted;
    std::optional<Rational> completeness;
    bool oracle_computed = false;
    /// Absent with oracle_computed set when nothing admissible lies in the box.
    std::optional<Rational> oracle;
    std::string oracle_note;
};

struct OracleResults {
    std::vector<StageEvidence> stages;
};

struct GapRow {
    std::string stage;
    Rational predicted;
    std::optional<Rational> completeness_value;
    std::optional<Rational> oracle_minimum;
    bool oracle_computed = false;
    std::string oracle_note;
    std::optional<Rational> ratio;
    bool matches_prediction = false;
};

struct GapReport {
    std::vector<GapRow> rows;
    GapParams params;
};

/// ratio = oracle / predicted; matches_prediction when the natural
/// solution's value equals the predicted one.
GapReport report_gap(const PipelineManifest& manifest, const OracleResults& results);

Json to_json(const GapReport& report);
std::string gap_report_text(const GapReport& report);

struct ChainResult {
    LabelCoverInstance lc;
    SsatInstance ssat;
    SisInstance sis;
    NcpInstance ncp;
    LhpSystem lhp;
    PipelineManifest manifest;
    std::optional<Labeling> labeling;
    std::string labeling_source;
    std::optional<Completeness> completeness;
    OracleResults oracles;
    GapReport gap;
};

/// LC → SSAT → SIS → {NCP, LHP}, the natural solution pushed through every
/// stage, and (optionally) every oracle that fits the state cap.
ChainResult run_chain(const LabelCoverInstance& lc, const ChainParams& params);

Json to_json(const ChainResult& chain);

}  // namespace gapforge
