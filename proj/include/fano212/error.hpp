#pragma once

#include <stdexcept>
#include <string>

namespace fano212 {

// Distinct failure classes. The CLI maps each to an exit code.
enum class ErrorCode {
  kDivisionByZero,
  kArityMismatch,
  kNotSquare,
  kWrongShape,
  kNotHomogeneous,
  kDegreeCapExceeded,
  kDependentForms,
  kDegenerateQuartic,
  kRankDrop,
  kPointOnCentre,
  kPointNotOnCurve,
  kKernelDimension,
  kPencilNotInvariant,
  kNotDiagonalisable,
  kInvalidOrder,
  kParityViolation,
  kOrderMismatch,
  kEmptyEigenspace,
  kGeneratorExhausted,
  kHypothesisViolated,
  kNotEigenvector,
  kNotRootOfUnity,
  kCharacterOrderMismatch,
  kInconclusive,
  kSyntax,
  kSemantic,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  // column is 1-based within the text that was being parsed
  Error(ErrorCode code, const std::string& what, int column)
      : std::runtime_error(what), code_(code), column_(column) {}

  ErrorCode code() const noexcept { return code_; }
  // 0 when not a parse error
  int column() const noexcept { return column_; }

 private:
  ErrorCode code_;
  int column_ = 0;
};

}  // namespace fano212
