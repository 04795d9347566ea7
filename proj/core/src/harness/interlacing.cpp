#include "selberg/harness/interlacing.hpp"

#include <algorithm>
#include <functional>

#include "selberg/error.hpp"

namespace selberg {

double centered_square_sum(const std::vector<double>& x) {
  if (x.empty()) return 0;
  double mean = 0;
  for (double v : x) mean += v;
  mean /= static_cast<double>(x.size());
  double s = 0;
  for (double v : x) s += (v - mean) * (v - mean);
  return s;
}

namespace {

bool descending(const std::vector<double>& x) { return std::is_sorted(x.begin(), x.end(), std::greater<>()); }

}  // namespace

InterlacingResult interlacing_check(const std::vector<double>& a, const std::vector<double>& b, std::size_t k) {
  require(k >= 1 && k < a.size(), ErrorCode::PreconditionViolated, "need 1 <= k < len(a)");
  require(b.size() == a.size() - k, ErrorCode::PreconditionViolated, "len(b) must be len(a) - k");
  require(descending(a) && descending(b), ErrorCode::PreconditionViolated, "sequences must be descending");
  for (std::size_t i = 0; i < b.size(); ++i) {
    require(a[i] >= b[i] && b[i] >= a[i + k], ErrorCode::PreconditionViolated,
            "interlacing fails at index " + std::to_string(i));
  }
  const double lhs = centered_square_sum(a);
  const double rhs = centered_square_sum(b);
  // Relative slack for rounding in the two sums.
  return {lhs >= rhs - 1e-12 * std::max(1.0, lhs), lhs, rhs};
}

double interlacing_oracle(const std::vector<double>& a, std::size_t k) {
  require(a.size() <= 12, ErrorCode::Budget, "oracle is limited to len(a) <= 12");
  require(k >= 1 && k <= 2 && k < a.size(), ErrorCode::PreconditionViolated, "oracle needs k in {1, 2} and k < len(a)");
  require(descending(a), ErrorCode::PreconditionViolated, "a must be descending");
  const std::size_t m = a.size() - k;
  std::vector<double> b(m);
  double best = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == m) {
      best = std::max(best, centered_square_sum(b));
      return;
    }
    for (std::size_t j = i; j <= i + k; ++j) {
      if (i > 0 && a[j] > b[i - 1]) continue;
      b[i] = a[j];
      rec(i + 1);
    }
  };
  rec(0);
  return best;
}

}  // namespace selberg
