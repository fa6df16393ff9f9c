#include "qstar/error.hpp"

namespace qstar {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisorNearZero: return "DivisorNearZero";
    case ErrorCode::InnerNotVanishing: return "InnerNotVanishing";
    case ErrorCode::OrderMismatch: return "OrderMismatch";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::DegenerateDivisor: return "DegenerateDivisor";
    case ErrorCode::InvalidSchwarz: return "InvalidSchwarz";
    case ErrorCode::DenominatorVanished: return "DenominatorVanished";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::UnknownId: return "UnknownId";
    case ErrorCode::MissingCaseFlag: return "MissingCaseFlag";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::UnknownFunctional: return "UnknownFunctional";
  }
  return "Unknown";
}

}  // namespace qstar
