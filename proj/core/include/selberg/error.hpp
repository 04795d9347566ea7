#pragma once

#include <stdexcept>
#include <string>

namespace selberg {

enum class ErrorCode {
  DimensionMismatch,
  NotSymmetric,
  NotPositiveDefinite,
  NotDeterminantOne,
  NotBoundaryPoint,
  ZeroMatrix,
  Singular,
  InvalidArgument,
  PreconditionViolated,
  Degenerate,
  Convergence,
  Parse,
  Budget,
};

const char* to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(selberg::to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline void require(bool condition, ErrorCode code, const std::string& message) {
  if (!condition) throw Error(code, message);
}

}  // namespace selberg
