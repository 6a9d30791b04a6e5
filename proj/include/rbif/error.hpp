#pragma once

#include <stdexcept>
#include <string>

namespace rbif {

enum class ErrorKind {
  DegreeTooSmall,
  DivisionByZero,
  ZeroOperand,
  ConstantInVariable,
  ZeroPolynomial,
  PositiveDimensional,
  NonIsolated,
  NonIsolatedSingularity,
  NonUniform,
  RequiresStrictDegree,
  CriterionInapplicable,
  CommonFactor,
  DegenerateCriticalLocus,
  PencilNonReduced,
  CurveInPolarLocus,
  Parse,
  Internal,
};

const char* to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above.
class MathError : public std::runtime_error {
 public:
  MathError(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public MathError {
 public:
  ParseError(std::size_t column, const std::string& what)
      : MathError(ErrorKind::Parse, "column " + std::to_string(column) + ": " + what),
        column_(column) {}

  /// 1-based column of the offending character.
  std::size_t column() const { return column_; }

 private:
  std::size_t column_;
};

}  // namespace rbif
