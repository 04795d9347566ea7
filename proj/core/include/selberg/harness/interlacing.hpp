#pragma once

#include <cstddef>
#include <vector>

namespace selberg {

/// Sum of squared deviations from the mean.
double centered_square_sum(const std::vector<double>& x);

struct InterlacingResult {
  bool holds;
  double lhs;
  double rhs;
};

/// Requires descending a and b with len(b) = len(a) - k, k >= 1 and
/// a_i >= b_i >= a_{i+k}; throws PreconditionViolated otherwise.
/// lhs and rhs are the centered square sums of a and b.
InterlacingResult interlacing_check(const std::vector<double>& a, const std::vector<double>& b, std::size_t k);

/// Largest centered square sum of b over all descending corner choices
/// b_i in {a_i, ..., a_{i+k}}. k in {1, 2}, len(a) <= 12.
double interlacing_oracle(const std::vector<double>& a, std::size_t k);

}  // namespace selberg
