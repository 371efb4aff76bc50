#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace extcauchy {

enum class ErrorKind {
  Pole,
  DegreeTooLarge,
  DegenerateBase,
  Domain,
  BranchCut,
  DegenerateParameters,
  NonConvergence,
  SingularEvaluation,
  OutputIO,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Pole: return "PoleError";
    case ErrorKind::DegreeTooLarge: return "DegreeTooLarge";
    case ErrorKind::DegenerateBase: return "DegenerateBase";
    case ErrorKind::Domain: return "DomainError";
    case ErrorKind::BranchCut: return "BranchCutError";
    case ErrorKind::DegenerateParameters: return "DegenerateParameters";
    case ErrorKind::NonConvergence: return "NonConvergence";
    case ErrorKind::SingularEvaluation: return "SingularEvaluation";
    case ErrorKind::OutputIO: return "OutputIOError";
  }
  return "UnknownError";
}

/// Base of every failure raised by the library. The kind tag is what the
/// verification harness records; what() carries the human-readable detail.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::string_view tag() const noexcept { return to_string(kind_); }

 private:
  ErrorKind kind_;
};

template <ErrorKind K>
class TaggedError : public Error {
 public:
  explicit TaggedError(const std::string& what) : Error(K, what) {}
};

using PoleError = TaggedError<ErrorKind::Pole>;
using DegreeTooLarge = TaggedError<ErrorKind::DegreeTooLarge>;
using DegenerateBase = TaggedError<ErrorKind::DegenerateBase>;
using DomainError = TaggedError<ErrorKind::Domain>;
using BranchCutError = TaggedError<ErrorKind::BranchCut>;
using DegenerateParameters = TaggedError<ErrorKind::DegenerateParameters>;
using NonConvergence = TaggedError<ErrorKind::NonConvergence>;
using SingularEvaluation = TaggedError<ErrorKind::SingularEvaluation>;
using OutputIOError = TaggedError<ErrorKind::OutputIO>;

}  // namespace extcauchy
