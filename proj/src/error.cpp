#include "gapforge/error.hpp"

namespace gapforge {

std::string_view to_string(ErrorCode code)
{
    switch (code) {
    case ErrorCode::MalformedInstance: return "MalformedInstance";
    case ErrorCode::UnknownEdge: return "UnknownEdge";
    case ErrorCode::UnknownLabel: return "UnknownLabel";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::PartialLabeling: return "PartialLabeling";
    case ErrorCode::VariableNotInTest: return "VariableNotInTest";
    case ErrorCode::VariableNotShared: return "VariableNotShared";
    case ErrorCode::EdgeUnsatisfied: return "EdgeUnsatisfied";
    case ErrorCode::NotLcDerived: return "NotLcDerived";
    case ErrorCode::InconsistentInput: return "InconsistentInput";
    case ErrorCode::ClassificationImpossible: return "ClassificationImpossible";
    case ErrorCode::EmptyRange: return "EmptyRange";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::BadParameters: return "BadParameters";
    case ErrorCode::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case ErrorCode::NormBoundViolated: return "NormBoundViolated";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::InfeasibleSpec: return "InfeasibleSpec";
    case ErrorCode::EmptyGrid: return "EmptyGrid";
    case ErrorCode::SchemaViolation: return "SchemaViolation";
    case ErrorCode::FileNotFound: return "FileNotFound";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code), detail_(detail)
{
}

void fail(ErrorCode code, const std::string& detail)
{
    throw Error(code, detail);
}

}  // namespace gapforge
