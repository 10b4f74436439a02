#include "dqalg/errors.hpp"

namespace dq {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotInAlgebra: return "NotInAlgebra";
    case ErrorCode::UnsupportedCharacteristic: return "UnsupportedCharacteristic";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::NotNilpotent: return "NotNilpotent";
    case ErrorCode::NotAnIdeal: return "NotAnIdeal";
    case ErrorCode::ZeroIdeal: return "ZeroIdeal";
    case ErrorCode::InadmissibleId: return "InadmissibleId";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::InvalidQ: return "InvalidQ";
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::NotBlockTypeMaxDim: return "NotBlockTypeMaxDim";
    case ErrorCode::NotCanonical: return "NotCanonical";
    case ErrorCode::ClosureViolation: return "ClosureViolation";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code), detail_(message) {}

}  // namespace dq
