#include "sympcalc/error.hpp"

namespace sympcalc {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::OddTotal: return "OddTotal";
    case ErrorCode::OddMultiplicity: return "OddMultiplicity";
    case ErrorCode::NonPositivePart: return "NonPositivePart";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::MismatchedTotal: return "MismatchedTotal";
    case ErrorCode::OddLeadingPart: return "OddLeadingPart";
    case ErrorCode::LeadingNotMaximal: return "LeadingNotMaximal";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::InvalidComposite: return "InvalidComposite";
    case ErrorCode::OddDimension: return "OddDimension";
    case ErrorCode::BadIndices: return "BadIndices";
    case ErrorCode::MissingSquareClass: return "MissingSquareClass";
    case ErrorCode::NotSquarefree: return "NotSquarefree";
    case ErrorCode::NoSolution: return "NoSolution";
    case ErrorCode::NotNilpotent: return "NotNilpotent";
    case ErrorCode::NotUnipotent: return "NotUnipotent";
    case ErrorCode::NotSymplectic: return "NotSymplectic";
    case ErrorCode::RankMismatch: return "RankMismatch";
    case ErrorCode::NotNilpotentSubalgebra: return "NotNilpotentSubalgebra";
    case ErrorCode::BadPlace: return "BadPlace";
    case ErrorCode::ZeroCoefficient: return "ZeroCoefficient";
    case ErrorCode::OddPartPresent: return "OddPartPresent";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

}  // namespace sympcalc
