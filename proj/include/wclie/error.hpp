#ifndef WCLIE_ERROR_HPP
#define WCLIE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace wclie {

enum class ErrorKind {
  AmbientMismatch,
  DimensionMismatch,
  NotAnIdeal,
  NotGenerating,
  NotWellDefined,
  InvalidAlgebra,
  BudgetExceeded,
  IndexOutOfRange,
  NotNilpotent,
  NotStabilized,
  ConsistencyFailure,
  NotPerfect,
  NonvanishingH2,
  Unsupported,
  UnknownName,
  BadParams,
  InputMismatch,
  Parse,
};

const char* to_string(ErrorKind kind);

// Single exception type for the library; callers dispatch on kind().
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace wclie

#endif
