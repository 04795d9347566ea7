#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "selberg/matcore/matrix.hpp"

namespace selberg {

/// Symmetric matrix stored as its upper triangle, so symmetry holds by
/// construction.
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(std::size_t n);

  /// Throws NotSymmetric unless m equals its transpose (exactly for exact
  /// entries, within 1e-12 relative for float entries).
  static SymMatrix from_matrix(const Matrix& m);
  static SymMatrix from_eigen(const Eigen::MatrixXd& m);
  static SymMatrix identity(std::size_t n);
  static SymMatrix diagonal(const std::vector<Scalar>& d);
  /// v v^T.
  static SymMatrix outer(const std::vector<Scalar>& v);

  std::size_t dim() const noexcept { return n_; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[index(i, j)]; }
  void set(std::size_t i, std::size_t j, Scalar v) { data_[index(i, j)] = std::move(v); }

  bool is_exact() const;
  bool is_zero() const;
  Matrix to_matrix() const;
  Eigen::MatrixXd to_eigen() const;
  SymMatrix to_float() const;

  /// Coordinates (y_ij)_{i<=j} in row-major upper-triangle order.
  RVec coordinates() const;
  /// Coefficient vector c with c . coordinates(Y) = tr(this * Y).
  RVec trace_form() const;
  static SymMatrix from_coordinates(std::size_t n, const RVec& y);
  static SymMatrix from_trace_form(std::size_t n, const RVec& c);

  SymMatrix& operator+=(const SymMatrix& o);
  SymMatrix& operator-=(const SymMatrix& o);
  SymMatrix& operator*=(const Scalar& s);
  friend SymMatrix operator+(SymMatrix a, const SymMatrix& b) { return a += b; }
  friend SymMatrix operator-(SymMatrix a, const SymMatrix& b) { return a -= b; }
  friend SymMatrix operator*(SymMatrix a, const Scalar& s) { return a *= s; }
  friend SymMatrix operator*(const Scalar& s, SymMatrix a) { return a *= s; }
  friend SymMatrix operator-(const SymMatrix& a);
  friend bool operator==(const SymMatrix& a, const SymMatrix& b);
  friend bool operator!=(const SymMatrix& a, const SymMatrix& b) { return !(a == b); }

 private:
  std::size_t index(std::size_t i, std::size_t j) const {
    if (i > j) std::swap(i, j);
    return i * n_ - i * (i + 1) / 2 + j;
  }
  std::size_t n_ = 0;
  std::vector<Scalar> data_;
};

Scalar trace(const SymMatrix& s);
/// tr(A B).
Scalar trace_product(const SymMatrix& a, const SymMatrix& b);
/// g^T S g.
SymMatrix congruence(const Matrix& g, const SymMatrix& s);
SymMatrix inverse(const SymMatrix& s);
Scalar determinant(const SymMatrix& s);
std::size_t rank(const SymMatrix& s, double tol = 1e-10);

/// Exact input: all leading principal minors positive.
/// Float input: Cholesky succeeds and the smallest eigenvalue exceeds
/// tol times the largest.
bool is_positive_definite(const SymMatrix& s, double tol = 1e-12);
/// Exact input: all principal minors nonnegative.
bool is_positive_semidefinite(const SymMatrix& s, double tol = 1e-10);
/// Has both a positive and a negative eigenvalue.
bool is_indefinite(const SymMatrix& s, double tol = 1e-10);

/// S / tr(S). Throws ZeroMatrix on zero trace.
SymMatrix trace_normalized(const SymMatrix& s);

/// Eigenvalues in descending order. Throws Convergence if the eigen residual
/// exceeds tol times the matrix norm.
std::vector<double> spectrum(const SymMatrix& s, double tol = 1e-10);

}  // namespace selberg
