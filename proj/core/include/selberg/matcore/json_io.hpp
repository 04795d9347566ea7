#pragma once

#include <nlohmann/json.hpp>

#include "selberg/matcore/space.hpp"

namespace selberg {

// Matrix literals are arrays of rows. Each entry is a JSON number or a string
// "p/q". Integers and strings are read exactly; non-integral JSON numbers are
// read as float64.

Scalar scalar_from_json(const nlohmann::json& j);
nlohmann::json scalar_to_json(const Scalar& s);

Matrix matrix_from_json(const nlohmann::json& j);
nlohmann::json matrix_to_json(const Matrix& m);

SymMatrix sym_from_json(const nlohmann::json& j);
nlohmann::json sym_to_json(const SymMatrix& s);

/// Accepts any positive definite literal and rescales it to determinant one.
SpacePoint point_from_json(const nlohmann::json& j);

}  // namespace selberg
