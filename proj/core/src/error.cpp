#include "suval/error.hpp"

namespace suval {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::RankDeficient: return "RankDeficient";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::NotSkew: return "NotSkew";
    case ErrorCode::OddDimension: return "OddDimension";
    case ErrorCode::WrongDimension: return "WrongDimension";
    case ErrorCode::NotUnitary: return "NotUnitary";
    case ErrorCode::NotOrthogonal: return "NotOrthogonal";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::InconsistentTheta: return "InconsistentTheta";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::BadIndex: return "BadIndex";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::NotProportional: return "NotProportional";
    case ErrorCode::UnsupportedDimension: return "UnsupportedDimension";
    case ErrorCode::DegeneratePolytope: return "DegeneratePolytope";
    case ErrorCode::ExactUnavailable: return "ExactUnavailable";
    case ErrorCode::LowerDimensional: return "LowerDimensional";
    case ErrorCode::OddN: return "OddN";
    case ErrorCode::UnsupportedBody: return "UnsupportedBody";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace suval
