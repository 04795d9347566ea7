#include "selberg/error.hpp"

namespace selberg {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "dimension mismatch";
    case ErrorCode::NotSymmetric: return "not symmetric";
    case ErrorCode::NotPositiveDefinite: return "not positive definite";
    case ErrorCode::NotDeterminantOne: return "determinant is not one";
    case ErrorCode::NotBoundaryPoint: return "not a boundary point";
    case ErrorCode::ZeroMatrix: return "zero matrix";
    case ErrorCode::Singular: return "singular matrix";
    case ErrorCode::InvalidArgument: return "invalid argument";
    case ErrorCode::PreconditionViolated: return "precondition violated";
    case ErrorCode::Degenerate: return "degenerate configuration";
    case ErrorCode::Convergence: return "convergence failure";
    case ErrorCode::Parse: return "parse error";
    case ErrorCode::Budget: return "budget exceeded";
  }
  return "unknown error";
}

}  // namespace selberg
