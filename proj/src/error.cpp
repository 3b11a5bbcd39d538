#include "nzi/error.hpp"

namespace nzi {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::MalformedLine: return "MalformedLine";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::NonContiguousIds: return "NonContiguousIds";
    case ErrorCode::InvalidGraph6: return "InvalidGraph6";
    case ErrorCode::ForbiddenAlpha: return "ForbiddenAlpha";
    case ErrorCode::ZeroBaseNegativeExponent: return "ZeroBaseNegativeExponent";
    case ErrorCode::NeighborhoodRegular: return "NeighborhoodRegular";
    case ErrorCode::NotDiameterTwo: return "NotDiameterTwo";
    case ErrorCode::ZeroMinDist2Degree: return "ZeroMinDist2Degree";
    case ErrorCode::Dist2Regular: return "Dist2Regular";
    case ErrorCode::OutOfRangeIndex: return "OutOfRangeIndex";
    case ErrorCode::GapTooSmall: return "GapTooSmall";
    case ErrorCode::NonPositiveQuotient: return "NonPositiveQuotient";
    case ErrorCode::RemainderZero: return "RemainderZero";
    case ErrorCode::UnoccupiedRemainderDegree: return "UnoccupiedRemainderDegree";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::EmptyGraph: return "EmptyGraph";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::NTooLarge: return "NTooLarge";
    case ErrorCode::UnknownBoundSource: return "UnknownBoundSource";
  }
  return "Unknown";
}

ErrorKind kind_of(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::MalformedLine:
    case ErrorCode::SelfLoop:
    case ErrorCode::DuplicateEdge:
    case ErrorCode::NonContiguousIds:
    case ErrorCode::InvalidGraph6:
      return ErrorKind::Parse;
    case ErrorCode::NoConvergence:
      return ErrorKind::Numerical;
    case ErrorCode::NTooLarge:
    case ErrorCode::UnknownBoundSource:
      return ErrorKind::Usage;
    default:
      return ErrorKind::Precondition;
  }
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

}  // namespace nzi
