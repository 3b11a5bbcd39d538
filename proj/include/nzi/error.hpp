#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nzi {

enum class ErrorCode {
  // input parsing
  MalformedLine,
  SelfLoop,
  DuplicateEdge,
  NonContiguousIds,
  InvalidGraph6,
  // exponent and index preconditions
  ForbiddenAlpha,
  ZeroBaseNegativeExponent,
  NeighborhoodRegular,
  NotDiameterTwo,
  ZeroMinDist2Degree,
  Dist2Regular,
  OutOfRangeIndex,
  GapTooSmall,
  NonPositiveQuotient,
  RemainderZero,
  UnoccupiedRemainderDegree,
  // spectral
  Disconnected,
  EmptyGraph,
  NoConvergence,
  // enumeration
  NTooLarge,
  UnknownBoundSource,
};

enum class ErrorKind { Parse, Precondition, Numerical, Usage };

std::string_view to_string(ErrorCode code) noexcept;
ErrorKind kind_of(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);

  ErrorCode code() const noexcept { return code_; }
  ErrorKind kind() const noexcept { return kind_of(code_); }

 private:
  ErrorCode code_;
};

}  // namespace nzi
