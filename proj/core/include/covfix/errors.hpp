#pragma once

#include <stdexcept>
#include <string>

namespace covfix {

enum class ErrorCode {
  // instance construction / reduction
  EmptyRow,
  NonPositiveCost,
  IndexOutOfRange,
  DuplicateIndex,
  InfeasibleReduction,
  // text formats
  Truncated,
  TrailingGarbage,
  DuplicateName,
  NonPositiveUb,
  MalformedLine,
  // generator
  Degenerate,
  // solver
  NumericalBreakdown,
  Unbounded,
  // fixing
  InvalidBound,
  NotOptimal,
  // oracle
  TooLarge,
  Infeasible,
  // harness
  MissingUb,
};

const char* to_string(ErrorCode code);

/// Exception carrying a machine-checkable error code alongside the message.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace covfix
