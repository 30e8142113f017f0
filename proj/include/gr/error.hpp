#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gr {

enum class ErrorCode {
  // coloring model and serialization
  MissingEdge,
  DuplicateEdge,
  ColorOutOfRange,
  VertexOutOfRange,
  ArityMismatch,
  NonInjectiveMap,
  TargetOutOfRange,
  SyntaxError,
  InconsistentHeader,
  // patterns
  UnknownPattern,
  ParameterOutOfRange,
  TooLarge,
  // decomposition
  RainbowTriangle,
  TooSmall,
  InvalidPartition,
  InternalInvariantViolation,
  // constructions and formulas
  EqualColors,
  NoFixtureAndSearchFailed,
  UnsupportedKipas,
  ParityViolation,
  RangeViolation,
  UnsupportedTarget,
  MissingR2,
  CertificationFailed,
  Overflow,
  // search and CNF
  ScopeExceeded,
  NotExactlyOne,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Exception raised by every module. `detail()` carries the witness that
/// explains the failure when one exists (a rainbow triple, the offending
/// part pair, the edge with a bad assignment, ...).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::vector<int> detail = {});

  ErrorCode code() const noexcept { return code_; }
  const std::vector<int>& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::vector<int> detail_;
};

}  // namespace gr
