#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace suval {

enum class ErrorCode {
  RankDeficient,
  ShapeMismatch,
  NotSkew,
  OddDimension,
  WrongDimension,
  NotUnitary,
  NotOrthogonal,
  DimensionMismatch,
  InconsistentTheta,
  UnknownName,
  BadIndex,
  ArityMismatch,
  DegreeMismatch,
  NotProportional,
  UnsupportedDimension,
  DegeneratePolytope,
  ExactUnavailable,
  LowerDimensional,
  OddN,
  UnsupportedBody,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so
/// callers (and tests) can branch on the kind without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& what);

}  // namespace suval
