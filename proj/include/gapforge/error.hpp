#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gapforge {

enum class ErrorCode {
    MalformedInstance,
    UnknownEdge,
    UnknownLabel,
    UnknownVertex,
    PartialLabeling,
    VariableNotInTest,
    VariableNotShared,
    EdgeUnsatisfied,
    NotLcDerived,
    InconsistentInput,
    ClassificationImpossible,
    EmptyRange,
    LengthMismatch,
    BadParameters,
    SearchSpaceTooLarge,
    NormBoundViolated,
    PreconditionFailed,
    InfeasibleSpec,
    EmptyGrid,
    SchemaViolation,
    FileNotFound,
};

std::string_view to_string(ErrorCode code);

/// The single exception type raised by the library. `code()` is stable and
/// machine-readable; `what()` carries the human-readable detail.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& detail);

    ErrorCode code() const noexcept { return code_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    ErrorCode code_;
    std::string detail_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& detail);

}  // namespace gapforge
