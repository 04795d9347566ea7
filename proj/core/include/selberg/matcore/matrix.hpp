#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include <Eigen/Dense>

#include "selberg/matcore/scalar.hpp"

namespace selberg {

using RVec = std::vector<Rational>;
using RMat = std::vector<RVec>;  // row-major

/// Dense row-major matrix of Scalars. Rows and columns are indexed from 0.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);

  static Matrix identity(std::size_t n);
  static Matrix from_rational(const RMat& rows);
  static Matrix from_eigen(const Eigen::MatrixXd& m);
  /// Columns given as vectors of equal length.
  static Matrix from_columns(const std::vector<std::vector<Scalar>>& columns);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_exact() const;
  bool is_zero() const;
  Matrix transpose() const;
  std::vector<Scalar> column(std::size_t j) const;
  Matrix columns(std::size_t first, std::size_t count) const;
  Matrix hstack(const Matrix& right) const;

  /// Throws InvalidArgument if any entry is float.
  RMat to_rational() const;
  Eigen::MatrixXd to_eigen() const;
  Matrix to_float() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Scalar& s);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Scalar& s) { return a *= s; }
  friend Matrix operator*(const Scalar& s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a);
  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

Scalar trace(const Matrix& m);

/// Exact matrices use fraction-free elimination; float matrices use LU.
Scalar determinant(const Matrix& m);

/// Throws Singular when the matrix is not invertible.
Matrix inverse(const Matrix& m);

/// Exact rank for exact input; float input is ranked with relative
/// threshold `tol` on the singular values.
std::size_t rank(const Matrix& m, double tol = 1e-10);

/// A maximal linearly independent subset of the columns, in order.
Matrix column_basis(const Matrix& m, double tol = 1e-10);

/// Basis of {x : m x = 0}, exact input only.
Matrix nullspace(const Matrix& m);

/// Orthonormal basis of the column space (float).
Eigen::MatrixXd orthonormal_columns(const Matrix& m, double tol = 1e-10);

// Exact helpers on plain rational arrays, used by the polytope engine.
std::size_t rank_rational(RMat rows);
Rational determinant_rational(RMat rows);
RMat nullspace_rational(const RMat& rows, std::size_t cols);

}  // namespace selberg
