#include "selberg/matcore/json_io.hpp"

#include <limits>

#include "selberg/error.hpp"

namespace selberg {

Scalar scalar_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Scalar(Rational(j.get<long long>()));
  if (j.is_number_unsigned()) return Scalar(Rational(std::to_string(j.get<unsigned long long>()).c_str()));
  if (j.is_number_float()) return Scalar(j.get<double>());
  if (j.is_string()) return Scalar(parse_rational(j.get<std::string>()));
  throw Error(ErrorCode::Parse, "matrix entry must be a number or a \"p/q\" string, got " + j.dump());
}

nlohmann::json scalar_to_json(const Scalar& s) {
  if (!s.is_exact()) return s.to_double();
  const Rational& r = s.exact();
  if (denominator_of(r) == 1) {
    const BigInt p = numerator_of(r);
    if (p >= std::numeric_limits<long long>::min() && p <= std::numeric_limits<long long>::max()) {
      return p.convert_to<long long>();
    }
  }
  return to_string(r);
}

Matrix matrix_from_json(const nlohmann::json& j) {
  require(j.is_array() && !j.empty(), ErrorCode::Parse, "matrix literal must be a non-empty array of rows");
  const std::size_t rows = j.size();
  require(j[0].is_array(), ErrorCode::Parse, "matrix literal rows must be arrays");
  const std::size_t cols = j[0].size();
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    require(j[i].is_array() && j[i].size() == cols, ErrorCode::Parse, "ragged matrix literal");
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = scalar_from_json(j[i][k]);
  }
  return m;
}

nlohmann::json matrix_to_json(const Matrix& m) {
  nlohmann::json out = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(scalar_to_json(m(i, k)));
    out.push_back(std::move(row));
  }
  return out;
}

SymMatrix sym_from_json(const nlohmann::json& j) { return SymMatrix::from_matrix(matrix_from_json(j)); }

nlohmann::json sym_to_json(const SymMatrix& s) { return matrix_to_json(s.to_matrix()); }

SpacePoint point_from_json(const nlohmann::json& j) { return SpacePoint::normalize(sym_from_json(j)); }

}  // namespace selberg
