#include <rbif/error.hpp>

namespace rbif {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DegreeTooSmall: return "DegreeTooSmall";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::ZeroOperand: return "ZeroOperand";
    case ErrorKind::ConstantInVariable: return "ConstantInVariable";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::PositiveDimensional: return "PositiveDimensional";
    case ErrorKind::NonIsolated: return "NonIsolated";
    case ErrorKind::NonIsolatedSingularity: return "NonIsolatedSingularity";
    case ErrorKind::NonUniform: return "NonUniform";
    case ErrorKind::RequiresStrictDegree: return "RequiresStrictDegree";
    case ErrorKind::CriterionInapplicable: return "CriterionInapplicable";
    case ErrorKind::CommonFactor: return "CommonFactor";
    case ErrorKind::DegenerateCriticalLocus: return "DegenerateCriticalLocus";
    case ErrorKind::PencilNonReduced: return "PencilNonReduced";
    case ErrorKind::CurveInPolarLocus: return "CurveInPolarLocus";
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::Internal: return "InternalError";
  }
  return "UnknownError";
}

}  // namespace rbif
