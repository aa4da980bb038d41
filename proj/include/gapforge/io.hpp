#pragma once

#include "gapforge/label_cover.hpp"
#include "gapforge/problems.hpp"
#include "gapforge/soundness.hpp"
#include "gapforge/ssat.hpp"
#include "gapforge/superassign.hpp"

#include <json.hpp>

#include <string>
#include <variant>

namespace gapforge {

using Json = nlohmann::json;

inline constexpr int kFormatVersion = 1;

/// Sorted keys, two-space indent, trailing newline.
std::string canonical_dump(const Json& j);

/// Throws FileNotFound, or SchemaViolation if the text is not JSON.
Json read_json_file(const std::string& path);
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

/// A JSON number within ±(2⁵³ − 1), a decimal string otherwise.
Json integer_to_json(const Integer& v);
Json rational_to_json(const Rational& v);

Json to_json(const LabelCoverInstance& lc);
Json to_json(const SsatInstance& ssat);
Json to_json(const SuperAssignment& s);
Json to_json(const SisInstance& sis);
Json to_json(const NcpInstance& ncp);
Json to_json(const LhpSystem& lhp);
Json to_json(const LhpAssignment& a);
Json to_json(const ListLabeling& lists);
Json labeling_to_json(const LabelCoverInstance& lc, const Labeling& lab);

/// Each reader throws SchemaViolation naming a JSON pointer, then runs the
/// kind's validator.
LabelCoverInstance label_cover_from_json(const Json& j);
SsatInstance ssat_from_json(const Json& j);
SuperAssignment superassignment_from_json(const Json& j);
SisInstance sis_from_json(const Json& j);
NcpInstance ncp_from_json(const Json& j);
LhpSystem lhp_from_json(const Json& j);
LhpAssignment lhp_assignment_from_json(const Json& j);
ListLabeling list_labeling_from_json(const Json& j);
Labeling labeling_from_json(const LabelCoverInstance& lc, const Json& j);

using AnyInstance = std::variant<LabelCoverInstance, SsatInstance, SisInstance, NcpInstance, LhpSystem>;

/// "label_cover", "ssat", "sis", "ncp" or "lhp".
std::string kind_of(const AnyInstance& instance);
Json to_json(const AnyInstance& instance);

/// An empty `kind` accepts whatever the file declares.
AnyInstance instance_from_json(const Json& j, const std::string& kind = "");
AnyInstance read_instance(const std::string& path, const std::string& kind = "");
void write_instance(const std::string& path, const AnyInstance& instance);

/// Header "n' m' d", one matrix row per line, then the target.
std::string sis_to_text(const SisInstance& sis);
SisInstance sis_from_text(const std::string& text);

/// Header "rows cols q d", one matrix row per line, then the target.
std::string ncp_to_text(const NcpInstance& ncp);
NcpInstance ncp_from_text(const std::string& text);

/// Lower-case hex SHA-256 of the bytes.
std::string sha256_hex(const std::string& bytes);

}  // namespace gapforge
