#include "pfusion/error.hpp"

namespace pfusion
{

char const *error_code_name(ErrorCode code)
{
  switch (code) {
  case ErrorCode::DegreeMismatch:       return "DegreeMismatch";
  case ErrorCode::SizeLimitExceeded:    return "SizeLimitExceeded";
  case ErrorCode::NotInAmbient:         return "NotInAmbient";
  case ErrorCode::AmbientMismatch:      return "AmbientMismatch";
  case ErrorCode::DoesNotNormalize:     return "DoesNotNormalize";
  case ErrorCode::NotAPGroup:           return "NotAPGroup";
  case ErrorCode::LatticeTooLarge:      return "LatticeTooLarge";
  case ErrorCode::NotInP:               return "NotInP";
  case ErrorCode::NotNormalInP:         return "NotNormalInP";
  case ErrorCode::NotAbelian:           return "NotAbelian";
  case ErrorCode::MethodDisagreement:   return "MethodDisagreement";
  case ErrorCode::PreconditionViolated: return "PreconditionViolated";
  case ErrorCode::PropertyFailure:      return "PropertyFailure";
  case ErrorCode::ParseError:           return "ParseError";
  case ErrorCode::InvalidCycle:         return "InvalidCycle";
  case ErrorCode::UnknownGroup:         return "UnknownGroup";
  case ErrorCode::InvalidArgument:      return "InvalidArgument";
  }
  return "Unknown";
}

} // namespace pfusion
