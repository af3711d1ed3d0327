#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sympcalc {

enum class ErrorCode {
  OddTotal,
  OddMultiplicity,
  NonPositivePart,
  EmptyInput,
  MismatchedTotal,
  OddLeadingPart,
  LeadingNotMaximal,
  HypothesisViolated,
  InvalidComposite,
  OddDimension,
  BadIndices,
  MissingSquareClass,
  NotSquarefree,
  NoSolution,
  NotNilpotent,
  NotUnipotent,
  NotSymplectic,
  RankMismatch,
  NotNilpotentSubalgebra,
  BadPlace,
  ZeroCoefficient,
  OddPartPresent,
  ParseError,
};

std::string_view to_string(ErrorCode code);

// All library failures are reported through this type; the code identifies
// the contract that was violated and what() carries a human-readable detail.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace sympcalc
