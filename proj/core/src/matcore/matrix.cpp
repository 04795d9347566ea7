#include "selberg/matcore/matrix.hpp"

#include <algorithm>
#include <cmath>

#include "selberg/error.hpp"

namespace selberg {

namespace {

using IMat = std::vector<std::vector<BigInt>>;

// Scales every row by the lcm of its denominators. Returns the product of the
// scale factors so determinants can be recovered.
IMat clear_denominators(const RMat& rows, Rational* scale_product) {
  IMat out;
  out.reserve(rows.size());
  Rational prod = 1;
  for (const RVec& row : rows) {
    BigInt l = 1;
    for (const Rational& x : row) l = boost::multiprecision::lcm(l, denominator_of(x));
    std::vector<BigInt> irow;
    irow.reserve(row.size());
    for (const Rational& x : row) irow.push_back(numerator_of(x) * (l / denominator_of(x)));
    out.push_back(std::move(irow));
    prod *= Rational(l);
  }
  if (scale_product) *scale_product = prod;
  return out;
}

// Fraction-free (Bareiss) elimination in place. Returns the rank and the
// number of row swaps performed. All divisions are exact.
std::size_t bareiss(IMat& a, std::size_t ncols, int* swaps) {
  const std::size_t m = a.size();
  BigInt prev = 1;
  std::size_t r = 0;
  int sw = 0;
  for (std::size_t c = 0; c < ncols && r < m; ++c) {
    std::size_t p = r;
    while (p < m && a[p][c] == 0) ++p;
    if (p == m) continue;
    if (p != r) {
      std::swap(a[p], a[r]);
      ++sw;
    }
    for (std::size_t i = r + 1; i < m; ++i) {
      for (std::size_t j = c + 1; j < ncols; ++j) {
        a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  if (swaps) *swaps = sw;
  return r;
}

void check_multipliable(const Matrix& a, const Matrix& b) {
  require(a.cols() == b.rows(), ErrorCode::DimensionMismatch, "matrix product shape mismatch");
}

// Reduced row echelon form over the rationals; returns pivot columns.
std::vector<std::size_t> rref(RMat& a, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    const Rational piv = a[r][c];
    for (std::size_t j = c; j < a[r].size(); ++j) a[r][j] /= piv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Rational f = a[i][c];
      for (std::size_t j = c; j < a[i].size(); ++j) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<Scalar>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    require(row.size() == cols_, ErrorCode::DimensionMismatch, "ragged matrix literal");
    for (const auto& x : row) data_.push_back(x);
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rational(const RMat& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r ? rows[0].size() : 0;
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    require(rows[i].size() == c, ErrorCode::DimensionMismatch, "ragged rational matrix");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::from_eigen(const Eigen::MatrixXd& e) {
  Matrix m(static_cast<std::size_t>(e.rows()), static_cast<std::size_t>(e.cols()));
  for (Eigen::Index i = 0; i < e.rows(); ++i)
    for (Eigen::Index j = 0; j < e.cols(); ++j) m(i, j) = Scalar(e(i, j));
  return m;
}

Matrix Matrix::from_columns(const std::vector<std::vector<Scalar>>& columns) {
  const std::size_t c = columns.size();
  const std::size_t r = c ? columns[0].size() : 0;
  Matrix m(r, c);
  for (std::size_t j = 0; j < c; ++j) {
    require(columns[j].size() == r, ErrorCode::DimensionMismatch, "columns of unequal length");
    for (std::size_t i = 0; i < r; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

bool Matrix::is_exact() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_exact(); });
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

std::vector<Scalar> Matrix::column(std::size_t j) const {
  std::vector<Scalar> v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

Matrix Matrix::columns(std::size_t first, std::size_t count) const {
  require(first + count <= cols_, ErrorCode::DimensionMismatch, "column range out of bounds");
  Matrix m(rows_, count);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < count; ++j) m(i, j) = (*this)(i, first + j);
  return m;
}

Matrix Matrix::hstack(const Matrix& right) const {
  if (cols_ == 0) return right;
  if (right.cols_ == 0) return *this;
  require(rows_ == right.rows_, ErrorCode::DimensionMismatch, "hstack row mismatch");
  Matrix m(rows_, cols_ + right.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j);
    for (std::size_t j = 0; j < right.cols_; ++j) m(i, cols_ + j) = right(i, j);
  }
  return m;
}

RMat Matrix::to_rational() const {
  RMat out(rows_, RVec(cols_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i][j] = (*this)(i, j).exact();
  return out;
}

Eigen::MatrixXd Matrix::to_eigen() const {
  Eigen::MatrixXd e(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) e(i, j) = (*this)(i, j).to_double();
  return e;
}

Matrix Matrix::to_float() const {
  Matrix m(rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] = Scalar(data_[k].to_double());
  return m;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  require(rows_ == o.rows_ && cols_ == o.cols_, ErrorCode::DimensionMismatch, "matrix sum shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  require(rows_ == o.rows_ && cols_ == o.cols_, ErrorCode::DimensionMismatch, "matrix difference shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

Matrix& Matrix::operator*=(const Scalar& s) {
  for (auto& x : data_) x *= s;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  check_multipliable(a, b);
  Matrix c(a.rows(), b.cols());
  if (a.is_exact() && b.is_exact()) {
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) {
        Rational s = 0;
        for (std::size_t k = 0; k < a.cols(); ++k) s += a(i, k).exact() * b(k, j).exact();
        c(i, j) = std::move(s);
      }
  } else {
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) {
        double s = 0;
        for (std::size_t k = 0; k < a.cols(); ++k) s += a(i, k).to_double() * b(k, j).to_double();
        c(i, j) = Scalar(s);
      }
  }
  return c;
}

Matrix operator-(const Matrix& a) {
  Matrix m = a;
  m *= Scalar(-1);
  return m;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Scalar trace(const Matrix& m) {
  require(m.is_square(), ErrorCode::DimensionMismatch, "trace of a non-square matrix");
  Scalar t = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

Rational determinant_rational(RMat rows) {
  const std::size_t n = rows.size();
  if (n == 0) return 1;
  Rational scale;
  IMat a = clear_denominators(rows, &scale);
  int swaps = 0;
  if (bareiss(a, n, &swaps) < n) return 0;
  Rational d(a[n - 1][n - 1]);
  if (swaps % 2) d = -d;
  return d / scale;
}

std::size_t rank_rational(RMat rows) {
  if (rows.empty()) return 0;
  const std::size_t ncols = rows[0].size();
  IMat a = clear_denominators(rows, nullptr);
  return bareiss(a, ncols, nullptr);
}

RMat nullspace_rational(const RMat& rows, std::size_t cols) {
  RMat a = rows;
  const std::vector<std::size_t> pivots = rref(a, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  RMat basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    RVec v(cols, Rational(0));
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

Scalar determinant(const Matrix& m) {
  require(m.is_square(), ErrorCode::DimensionMismatch, "determinant of a non-square matrix");
  if (m.is_exact()) return determinant_rational(m.to_rational());
  return Scalar(m.to_eigen().partialPivLu().determinant());
}

Matrix inverse(const Matrix& m) {
  require(m.is_square(), ErrorCode::DimensionMismatch, "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  if (m.is_exact()) {
    RMat a = m.to_rational();
    for (std::size_t i = 0; i < n; ++i) {
      a[i].resize(2 * n, Rational(0));
      a[i][n + i] = 1;
    }
    const auto pivots = rref(a, n);
    require(pivots.size() == n, ErrorCode::Singular, "matrix is not invertible");
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) inv(i, j) = a[i][n + j];
    return inv;
  }
  const Eigen::MatrixXd e = m.to_eigen();
  Eigen::FullPivLU<Eigen::MatrixXd> lu(e);
  require(lu.isInvertible(), ErrorCode::Singular, "matrix is not invertible");
  return Matrix::from_eigen(lu.inverse());
}

std::size_t rank(const Matrix& m, double tol) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  if (m.is_exact()) return rank_rational(m.to_rational());
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m.to_eigen());
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s(0) == 0.0) return 0;
  std::size_t r = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > tol * s(0)) ++r;
  return r;
}

Matrix column_basis(const Matrix& m, double tol) {
  std::vector<std::vector<Scalar>> chosen;
  std::size_t current = 0;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    auto trial = chosen;
    trial.push_back(m.column(j));
    const std::size_t r = rank(Matrix::from_columns(trial), tol);
    if (r > current) {
      chosen = std::move(trial);
      current = r;
    }
  }
  if (chosen.empty()) return Matrix(m.rows(), 0);
  return Matrix::from_columns(chosen);
}

Matrix nullspace(const Matrix& m) {
  const RMat basis = nullspace_rational(m.to_rational(), m.cols());
  Matrix out(m.cols(), basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t i = 0; i < m.cols(); ++i) out(i, j) = basis[j][i];
  return out;
}

Eigen::MatrixXd orthonormal_columns(const Matrix& m, double tol) {
  const Eigen::MatrixXd e = m.to_eigen();
  if (e.cols() == 0) return Eigen::MatrixXd(e.rows(), 0);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(e, Eigen::ComputeThinU);
  const auto& s = svd.singularValues();
  Eigen::Index r = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(0) > 0 && s(i) > tol * s(0)) ++r;
  return svd.matrixU().leftCols(r);
}

}  // namespace selberg
