#pragma once

#include <cstddef>

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

#include "selberg/matcore/space.hpp"

namespace selberg {

enum class CompactificationClass { Interior, Boundary, Outside };
std::string to_string(CompactificationClass c);

struct Classification {
  CompactificationClass cls;
  std::size_t rank;
  bool exact;  // decided with exact arithmetic
};

/// A nonzero positive semidefinite matrix normalized to trace one.
class SatakePoint {
 public:
  /// Throws ZeroMatrix or NotPositiveDefinite (for a matrix that is not PSD).
  static SatakePoint from(const SymMatrix& m);

  const SymMatrix& matrix() const noexcept { return m_; }
  std::size_t dim() const noexcept { return m_.dim(); }
  std::size_t rank() const noexcept { return rank_; }
  bool is_boundary() const noexcept { return rank_ < m_.dim(); }
  bool is_exact() const { return m_.is_exact(); }

  friend bool operator==(const SatakePoint& a, const SatakePoint& b) { return a.m_ == b.m_; }

 private:
  SatakePoint(SymMatrix m, std::size_t r) : m_(std::move(m)), rank_(r) {}
  SymMatrix m_;
  std::size_t rank_;
};

/// A subspace V of R^n, labelling the boundary component of Satake points
/// whose column space is V. Keeps an exact rational basis when one is known
/// and always keeps an orthonormal float frame.
class BoundaryComponent {
 public:
  /// The columns of `spanning` span V; they need not be independent.
  static BoundaryComponent from_span(const Matrix& spanning, double tol = 1e-10);
  /// Float-only component from any frame whose columns span V.
  static BoundaryComponent from_frame(const Eigen::MatrixXd& frame, double tol = 1e-10);

  std::size_t ambient_dim() const noexcept { return static_cast<std::size_t>(frame_.rows()); }
  std::size_t dim() const noexcept { return static_cast<std::size_t>(frame_.cols()); }
  bool is_proper() const noexcept { return dim() > 0 && dim() < ambient_dim(); }
  bool has_exact_basis() const noexcept { return exact_; }
  /// Independent spanning columns (exact when has_exact_basis()).
  const Matrix& basis() const noexcept { return basis_; }
  /// Orthonormal columns spanning V.
  const Eigen::MatrixXd& frame() const noexcept { return frame_; }
  /// Same subspace, frame multiplied on the right by an orthogonal k x k matrix.
  BoundaryComponent with_rotated_frame(const Eigen::MatrixXd& rotation) const;

  nlohmann::json to_json() const;
  static BoundaryComponent from_json(const nlohmann::json& j);

 private:
  BoundaryComponent(Matrix basis, Eigen::MatrixXd frame, bool exact)
      : basis_(std::move(basis)), frame_(std::move(frame)), exact_(exact) {}
  Matrix basis_;
  Eigen::MatrixXd frame_;
  bool exact_;
};

/// Interior (positive definite), boundary (singular PSD, type = rank) or
/// outside (not PSD). Throws ZeroMatrix on zero input.
Classification classify(const SymMatrix& m, double tol = 1e-10);

/// Column space of alpha. Requires a boundary point.
BoundaryComponent component_of(const SatakePoint& alpha, double tol = 1e-10);

/// W <= V iff the subspace W is contained in V.
bool component_leq(const BoundaryComponent& w, const BoundaryComponent& v, double tol = 1e-10);

/// iota^T M iota rescaled to determinant one, using the orthonormal frame.
/// Throws NotPositiveDefinite when the restriction is not positive definite.
SymMatrix project(const BoundaryComponent& v, const SymMatrix& m);

/// U^T M U for the exact basis U. Differs from project() by a congruence.
SymMatrix restrict_to(const BoundaryComponent& v, const SymMatrix& m);

/// Image subspace g^T V, the component of g.alpha when alpha lies in V.
BoundaryComponent transform(const Isometry& g, const BoundaryComponent& v);

}  // namespace selberg
