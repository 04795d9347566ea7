#pragma once

#include <cstddef>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "selberg/matcore/matrix.hpp"

namespace selberg {

/// Generators of the cone {y : c_i . y >= 0 for all i} in Q^dim.
struct ConeGenerators {
  std::size_t dim = 0;
  /// Basis of the largest linear subspace in the cone.
  std::vector<RVec> lineality;
  /// Extreme rays modulo the lineality space, as primitive integer vectors.
  std::vector<RVec> rays;
  /// incidence[r][i] is set when constraint i is tight on ray r.
  std::vector<boost::dynamic_bitset<>> incidence;
};

/// Exact double description (Motzkin) with a combinatorial adjacency test.
ConeGenerators double_description(const std::vector<RVec>& constraints, std::size_t dim);

Rational dot(const RVec& a, const RVec& b);

/// Scales v to a primitive integer vector (positive multiple).
RVec primitive(const RVec& v);

}  // namespace selberg
