#include "selberg/satake.hpp"

#include <cmath>

#include "selberg/error.hpp"
#include "selberg/matcore/json_io.hpp"

namespace selberg {

namespace {

// Eigen decomposition with the rank decided relative to the largest
// eigenvalue magnitude.
std::size_t float_rank_psd(const SymMatrix& m, double tol, bool* psd) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m.to_eigen(), Eigen::EigenvaluesOnly);
  const auto& ev = es.eigenvalues();
  const double big = ev.cwiseAbs().maxCoeff();
  std::size_t r = 0;
  *psd = true;
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (std::abs(ev(i)) > tol * big) ++r;
    if (ev(i) < -tol * big) *psd = false;
  }
  return r;
}

}  // namespace

SatakePoint SatakePoint::from(const SymMatrix& m) {
  const Classification c = classify(m);
  require(c.cls != CompactificationClass::Outside, ErrorCode::NotPositiveDefinite, "matrix is not positive semidefinite");
  return SatakePoint(trace_normalized(m), c.rank);
}

std::string to_string(CompactificationClass c) {
  switch (c) {
    case CompactificationClass::Interior: return "interior";
    case CompactificationClass::Boundary: return "boundary";
    case CompactificationClass::Outside: return "outside";
  }
  return "?";
}

BoundaryComponent BoundaryComponent::from_span(const Matrix& spanning, double tol) {
  require(spanning.rows() > 0, ErrorCode::DimensionMismatch, "empty spanning set");
  const bool exact = spanning.is_exact();
  Matrix basis = column_basis(spanning, tol);
  require(basis.cols() > 0, ErrorCode::ZeroMatrix, "spanning set is zero");
  Eigen::MatrixXd frame = orthonormal_columns(basis, tol);
  return BoundaryComponent(std::move(basis), std::move(frame), exact);
}

BoundaryComponent BoundaryComponent::from_frame(const Eigen::MatrixXd& frame, double tol) {
  Matrix m = Matrix::from_eigen(frame);
  Eigen::MatrixXd q = orthonormal_columns(m, tol);
  require(q.cols() > 0, ErrorCode::ZeroMatrix, "frame is zero");
  return BoundaryComponent(Matrix::from_eigen(q), q, false);
}

BoundaryComponent BoundaryComponent::with_rotated_frame(const Eigen::MatrixXd& rotation) const {
  require(rotation.rows() == frame_.cols() && rotation.cols() == frame_.cols(), ErrorCode::DimensionMismatch,
          "rotation must be k x k");
  const Eigen::MatrixXd check = rotation.transpose() * rotation - Eigen::MatrixXd::Identity(rotation.rows(), rotation.cols());
  require(check.norm() < 1e-10, ErrorCode::InvalidArgument, "rotation is not orthogonal");
  return BoundaryComponent(basis_, frame_ * rotation, exact_);
}

nlohmann::json BoundaryComponent::to_json() const {
  nlohmann::json span = nlohmann::json::array();
  for (std::size_t j = 0; j < basis_.cols(); ++j) {
    nlohmann::json v = nlohmann::json::array();
    for (std::size_t i = 0; i < basis_.rows(); ++i) v.push_back(scalar_to_json(basis_(i, j)));
    span.push_back(std::move(v));
  }
  return {{"span", span}};
}

BoundaryComponent BoundaryComponent::from_json(const nlohmann::json& j) {
  require(j.is_object() && j.contains("span"), ErrorCode::Parse, "boundary component needs a \"span\" list");
  const auto& span = j.at("span");
  require(span.is_array() && !span.empty(), ErrorCode::Parse, "\"span\" must be a non-empty list of vectors");
  std::vector<std::vector<Scalar>> cols;
  for (const auto& v : span) {
    require(v.is_array() && !v.empty(), ErrorCode::Parse, "span vectors must be arrays");
    std::vector<Scalar> c;
    for (const auto& x : v) c.push_back(scalar_from_json(x));
    cols.push_back(std::move(c));
  }
  return from_span(Matrix::from_columns(cols));
}

Classification classify(const SymMatrix& m, double tol) {
  require(m.dim() > 0, ErrorCode::DimensionMismatch, "empty matrix");
  require(!m.is_zero(), ErrorCode::ZeroMatrix, "the zero matrix is not a Satake point");
  if (m.is_exact()) {
    if (is_positive_definite(m)) return {CompactificationClass::Interior, m.dim(), true};
    if (!is_positive_semidefinite(m)) return {CompactificationClass::Outside, rank(m), true};
    return {CompactificationClass::Boundary, rank(m), true};
  }
  bool psd = true;
  const std::size_t r = float_rank_psd(m, tol, &psd);
  if (!psd) return {CompactificationClass::Outside, r, false};
  return {r == m.dim() ? CompactificationClass::Interior : CompactificationClass::Boundary, r, false};
}

BoundaryComponent component_of(const SatakePoint& alpha, double tol) {
  require(alpha.is_boundary(), ErrorCode::NotBoundaryPoint, "interior point has no boundary component");
  if (alpha.is_exact()) return BoundaryComponent::from_span(alpha.matrix().to_matrix());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(alpha.matrix().to_eigen());
  const auto& ev = es.eigenvalues();
  const double big = ev.cwiseAbs().maxCoeff();
  std::vector<Eigen::Index> keep;
  for (Eigen::Index i = 0; i < ev.size(); ++i)
    if (ev(i) > tol * big) keep.push_back(i);
  Eigen::MatrixXd frame(ev.size(), static_cast<Eigen::Index>(keep.size()));
  for (std::size_t k = 0; k < keep.size(); ++k) frame.col(static_cast<Eigen::Index>(k)) = es.eigenvectors().col(keep[k]);
  return BoundaryComponent::from_frame(frame, tol);
}

bool component_leq(const BoundaryComponent& w, const BoundaryComponent& v, double tol) {
  require(w.ambient_dim() == v.ambient_dim(), ErrorCode::DimensionMismatch, "components live in different spaces");
  if (w.dim() > v.dim()) return false;
  if (w.has_exact_basis() && v.has_exact_basis()) {
    return rank(v.basis().hstack(w.basis())) == v.dim();
  }
  const Eigen::MatrixXd& q = v.frame();
  const Eigen::MatrixXd resid = w.frame() - q * (q.transpose() * w.frame());
  return resid.norm() <= tol * std::sqrt(static_cast<double>(w.dim()));
}

SymMatrix project(const BoundaryComponent& v, const SymMatrix& m) {
  require(v.ambient_dim() == m.dim(), ErrorCode::DimensionMismatch, "projection dimension mismatch");
  const Eigen::MatrixXd r = v.frame().transpose() * m.to_eigen() * v.frame();
  const SymMatrix s = SymMatrix::from_eigen(0.5 * (r + r.transpose()));
  require(is_positive_definite(s), ErrorCode::NotPositiveDefinite, "restriction to the component is not positive definite");
  const double d = r.determinant();
  return s * Scalar(std::pow(d, -1.0 / static_cast<double>(v.dim())));
}

SymMatrix restrict_to(const BoundaryComponent& v, const SymMatrix& m) {
  require(v.ambient_dim() == m.dim(), ErrorCode::DimensionMismatch, "restriction dimension mismatch");
  return congruence(v.basis(), m);
}

BoundaryComponent transform(const Isometry& g, const BoundaryComponent& v) {
  require(g.dim() == v.ambient_dim(), ErrorCode::DimensionMismatch, "transform dimension mismatch");
  if (v.has_exact_basis() && g.is_exact()) return BoundaryComponent::from_span(g.matrix().transpose() * v.basis());
  const Eigen::MatrixXd img = g.matrix().to_eigen().transpose() * v.frame();
  return BoundaryComponent::from_frame(img);
}

}  // namespace selberg
