#pragma once

#include <stdexcept>
#include <string>

namespace zigzag {

enum class ErrorCode {
  SelfLoop,
  DuplicateArc,
  CycleDetected,
  NoRoot,
  MultipleRoots,
  DegreeViolation,
  NegativeWeight,
  NoLeaves,
  DuplicateLeafName,
  UnknownVertex,
  UnknownArc,
  SyntaxError,
  UnpairedHybridTag,
  MalformedTrail,
  InvalidChoice,
  WFenceHasNoSelection,
  LengthMismatch,
  NotTreeBased,
  KExceedsCount,
  InvalidTree,
  TooLarge,
  InfeasibleParameters,
  Unrealizable,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message)
      : std::runtime_error(std::move(message)), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace zigzag
