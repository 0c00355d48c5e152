#include "semicat/error.hpp"

namespace semicat {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::TagMismatch: return "TagMismatch";
    case ErrorCode::NoInvolution: return "NoInvolution";
    case ErrorCode::ElementOutsideCarrier: return "ElementOutsideCarrier";
    case ErrorCode::KeyNotMultiset: return "KeyNotMultiset";
    case ErrorCode::NotAdditive: return "NotAdditive";
    case ErrorCode::NotCommutative: return "NotCommutative";
    case ErrorCode::CarrierMismatch: return "CarrierMismatch";
    case ErrorCode::MonoidMismatch: return "MonoidMismatch";
    case ErrorCode::MonadMismatch: return "MonadMismatch";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::MalformedTerm: return "MalformedTerm";
    case ErrorCode::NotAMonoidMap: return "NotAMonoidMap";
    case ErrorCode::NotASemiringMap: return "NotASemiringMap";
    case ErrorCode::UnknownSuite: return "UnknownSuite";
    case ErrorCode::UnknownSemiring: return "UnknownSemiring";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidValue: return "InvalidValue";
  }
  return "Unknown";
}

}  // namespace semicat
