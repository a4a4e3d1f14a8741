#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace strata {

enum class ErrorCode {
  DivisionByZero,
  FieldMismatch,
  DegreeMismatch,
  NotDivisible,
  BothZero,
  ZeroPoint,
  ZeroForm,
  AllZero,
  DimensionMismatch,
  SingularMatrix,
  DuplicatePoint,
  IndeterminateAtPoint,
  ConstantMorphism,
  ConstantReparametrization,
  InconclusiveOverSmallField,
  NonIntegralRatio,
  AmbiguousLift,
  ExceptionalCurve,
  ConstantExceptional,
  NoExceptionalCurves,
  InvalidLift,
  IncidenceViolation,
  ConstantLabel,
  BudgetExceeded,
  NonPrimeField,
  InsufficientData,
  ZeroCount,
  SyntaxError,
  NotHomogeneous,
  BadScalarLiteral,
};

constexpr std::string_view code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::BothZero: return "BothZero";
    case ErrorCode::ZeroPoint: return "ZeroPoint";
    case ErrorCode::ZeroForm: return "ZeroForm";
    case ErrorCode::AllZero: return "AllZero";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::DuplicatePoint: return "DuplicatePoint";
    case ErrorCode::IndeterminateAtPoint: return "IndeterminateAtPoint";
    case ErrorCode::ConstantMorphism: return "ConstantMorphism";
    case ErrorCode::ConstantReparametrization: return "ConstantReparametrization";
    case ErrorCode::InconclusiveOverSmallField: return "InconclusiveOverSmallField";
    case ErrorCode::NonIntegralRatio: return "NonIntegralRatio";
    case ErrorCode::AmbiguousLift: return "AmbiguousLift";
    case ErrorCode::ExceptionalCurve: return "ExceptionalCurve";
    case ErrorCode::ConstantExceptional: return "ConstantExceptional";
    case ErrorCode::NoExceptionalCurves: return "NoExceptionalCurves";
    case ErrorCode::InvalidLift: return "InvalidLift";
    case ErrorCode::IncidenceViolation: return "IncidenceViolation";
    case ErrorCode::ConstantLabel: return "ConstantLabel";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::NonPrimeField: return "NonPrimeField";
    case ErrorCode::InsufficientData: return "InsufficientData";
    case ErrorCode::ZeroCount: return "ZeroCount";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::NotHomogeneous: return "NotHomogeneous";
    case ErrorCode::BadScalarLiteral: return "BadScalarLiteral";
  }
  return "Unknown";
}

/// Input-level failures (malformed text, bad field flag) as opposed to
/// domain failures raised by a well-formed request.
constexpr bool is_usage_error(ErrorCode code) {
  return code == ErrorCode::SyntaxError || code == ErrorCode::NotHomogeneous ||
         code == ErrorCode::BadScalarLiteral || code == ErrorCode::NonPrimeField;
}

/// Every library failure. Carries the operation that raised it so the CLI can
/// report "<operation>: <Code>: <detail>".
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string operation, std::string detail = {},
        std::optional<std::size_t> position = std::nullopt)
      : std::runtime_error(format(code, operation, detail, position)),
        code_(code),
        operation_(std::move(operation)),
        detail_(std::move(detail)),
        position_(position) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& operation() const noexcept { return operation_; }
  const std::string& detail() const noexcept { return detail_; }
  std::optional<std::size_t> position() const noexcept { return position_; }

 private:
  static std::string format(ErrorCode code, const std::string& operation,
                            const std::string& detail,
                            std::optional<std::size_t> position) {
    std::string out = operation;
    out += ": ";
    out += code_name(code);
    if (position) {
      out += " at position " + std::to_string(*position);
    }
    if (!detail.empty()) {
      out += ": ";
      out += detail;
    }
    return out;
  }

  ErrorCode code_;
  std::string operation_;
  std::string detail_;
  std::optional<std::size_t> position_;
};

}  // namespace strata
