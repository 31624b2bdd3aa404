#include "sforms/error.hpp"

namespace sforms {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::MalformedInput: return "MalformedInput";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::NotRankOne: return "NotRankOne";
    case ErrorCode::WrongRank: return "WrongRank";
    case ErrorCode::DegreeNotOne: return "DegreeNotOne";
    case ErrorCode::SpanTooSmall: return "SpanTooSmall";
    case ErrorCode::WrongShape: return "WrongShape";
    case ErrorCode::InternalContradiction: return "InternalContradiction";
  }
  return "Unknown";
}

}  // namespace sforms
