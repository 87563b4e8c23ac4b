#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace latcon {

enum class ErrorKind {
  DuplicateLabel,
  CycleDetected,
  NotALattice,
  NoBounds,
  UnknownLabel,
  NotComparable,
  UnknownName,
  BadParam,
  OverlappingBlocks,
  CarrierMismatch,
  EmptySubset,
  SizeCapExceeded,
  NotACongruence,
  EmptyGeneratorSet,
  NotAFilter,
  NotAnIdeal,
  NotPrime,
  EmptyFamily,
  TrivialSummand,
  NablaSummandCongruence,
  IntervalTooSmall,
  SummandTooSmall,
  TrivialInput,
  BadConfig,
  SyntaxError,
  ArityError,
  IoError,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library. The kind is stable and suitable for
/// dispatch (the CLI maps it onto exit codes); the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised by the expression parser; `position` is a 1-based column.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& message)
      : Error(ErrorKind::SyntaxError,
              "at offset " + std::to_string(position) + ": " + message),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace latcon
