#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace betadyn {

// Every failure a pipeline can report. The CLI maps all of these to exit 2.
enum class ErrorKind {
  NoRootInRange,
  MultipleRootsInRange,
  NotIrreducible,
  InvalidPolynomial,
  Undecidable,
  FieldMismatch,
  InadmissibleDigit,
  OutOfDomain,
  DepthLimit,
  BudgetExceeded,
  NotMarkov,
  NotPisot,
  IndexOutOfRange,
  EmptyGapSet,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace betadyn
