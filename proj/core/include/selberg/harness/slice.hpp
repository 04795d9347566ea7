#pragma once

#include <string>
#include <vector>

#include "selberg/busemann.hpp"

namespace selberg {

/// Grid over the diagonal plane diag(e^s, e^t, e^(-s-t)) of X_3.
struct SliceGrid {
  double s_min = -3;
  double s_max = 3;
  double t_min = -3;
  double t_max = 3;
  std::size_t s_steps = 101;
  std::size_t t_steps = 101;
};

SpacePoint slice_point(double s, double t);

/// CSV with a "# levels: ..." line, a "s,t,value" header and one row per
/// grid point, s varying slowest.
std::string emit_slice(const BusemannSpec& spec, const std::vector<double>& levels, const SliceGrid& grid);

}  // namespace selberg
