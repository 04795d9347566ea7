#include "selberg/harness/slice.hpp"

#include <cmath>
#include <cstdio>

#include "selberg/error.hpp"

namespace selberg {

SpacePoint slice_point(double s, double t) {
  return SpacePoint::from(SymMatrix::diagonal({Scalar(std::exp(s)), Scalar(std::exp(t)), Scalar(std::exp(-s - t))}));
}

std::string emit_slice(const BusemannSpec& spec, const std::vector<double>& levels, const SliceGrid& grid) {
  require(spec.dim() == 3, ErrorCode::DimensionMismatch, "slices live in X_3");
  require(grid.s_steps >= 2 && grid.t_steps >= 2, ErrorCode::Degenerate, "grid needs at least 2 steps per axis");
  require(grid.s_min < grid.s_max && grid.t_min < grid.t_max, ErrorCode::Degenerate, "grid range is empty");
  for (double l : levels) require(l > 0, ErrorCode::InvalidArgument, "levels must be positive");

  std::string out = "# levels:";
  char buf[96];
  for (double l : levels) {
    std::snprintf(buf, sizeof buf, " %.17g", l);
    out += buf;
  }
  out += "\ns,t,value\n";
  for (std::size_t i = 0; i < grid.s_steps; ++i) {
    const double s = grid.s_min + (grid.s_max - grid.s_min) * static_cast<double>(i) / static_cast<double>(grid.s_steps - 1);
    for (std::size_t j = 0; j < grid.t_steps; ++j) {
      const double t =
          grid.t_min + (grid.t_max - grid.t_min) * static_cast<double>(j) / static_cast<double>(grid.t_steps - 1);
      std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", s, t, busemann(spec, slice_point(s, t)));
      out += buf;
    }
  }
  return out;
}

}  // namespace selberg
