#ifndef PFUSION_ERROR_HPP
#define PFUSION_ERROR_HPP

#include <stdexcept>
#include <string>

namespace pfusion
{

enum class ErrorCode
{
  DegreeMismatch,
  SizeLimitExceeded,
  NotInAmbient,
  AmbientMismatch,
  DoesNotNormalize,
  NotAPGroup,
  LatticeTooLarge,
  NotInP,
  NotNormalInP,
  NotAbelian,
  MethodDisagreement,
  PreconditionViolated,
  PropertyFailure,
  ParseError,
  InvalidCycle,
  UnknownGroup,
  InvalidArgument
};

char const *error_code_name(ErrorCode code);

// Single exception type for the library; callers dispatch on code().
class Error : public std::runtime_error
{
public:
  Error(ErrorCode code, std::string const &what)
  : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
    _code(code)
  {}

  ErrorCode code() const { return _code; }

  // Errors that indicate a bug in this library rather than bad input.
  bool is_internal() const
  {
    return _code == ErrorCode::MethodDisagreement ||
           _code == ErrorCode::PropertyFailure;
  }

private:
  ErrorCode _code;
};

} // namespace pfusion

#endif // PFUSION_ERROR_HPP
