#include "selberg/matcore/sym_matrix.hpp"

#include <algorithm>
#include <cmath>

#include "selberg/error.hpp"

namespace selberg {

SymMatrix::SymMatrix(std::size_t n) : n_(n), data_(n * (n + 1) / 2) {}

SymMatrix SymMatrix::from_matrix(const Matrix& m) {
  require(m.is_square(), ErrorCode::DimensionMismatch, "symmetric matrix must be square");
  const std::size_t n = m.rows();
  double scale = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) scale = std::max(scale, std::abs(m(i, j).to_double()));
  SymMatrix s(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const Scalar& a = m(i, j);
      const Scalar& b = m(j, i);
      if (a.is_exact() && b.is_exact()) {
        require(a == b, ErrorCode::NotSymmetric, "entries (" + std::to_string(i) + "," + std::to_string(j) + ") differ");
        s.set(i, j, a);
      } else {
        const double x = a.to_double();
        const double y = b.to_double();
        require(std::abs(x - y) <= 1e-12 * std::max(1.0, scale), ErrorCode::NotSymmetric,
                "entries (" + std::to_string(i) + "," + std::to_string(j) + ") differ");
        s.set(i, j, Scalar(0.5 * (x + y)));
      }
    }
  }
  return s;
}

SymMatrix SymMatrix::from_eigen(const Eigen::MatrixXd& e) { return from_matrix(Matrix::from_eigen(e)); }

SymMatrix SymMatrix::identity(std::size_t n) {
  SymMatrix s(n);
  for (std::size_t i = 0; i < n; ++i) s.set(i, i, 1);
  return s;
}

SymMatrix SymMatrix::diagonal(const std::vector<Scalar>& d) {
  SymMatrix s(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) s.set(i, i, d[i]);
  return s;
}

SymMatrix SymMatrix::outer(const std::vector<Scalar>& v) {
  SymMatrix s(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i; j < v.size(); ++j) s.set(i, j, v[i] * v[j]);
  return s;
}

bool SymMatrix::is_exact() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& x) { return x.is_exact(); });
}

bool SymMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& x) { return x.is_zero(); });
}

Matrix SymMatrix::to_matrix() const {
  Matrix m(n_, n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) m(i, j) = (*this)(i, j);
  return m;
}

Eigen::MatrixXd SymMatrix::to_eigen() const {
  Eigen::MatrixXd e(n_, n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) e(i, j) = (*this)(i, j).to_double();
  return e;
}

SymMatrix SymMatrix::to_float() const {
  SymMatrix s = *this;
  for (auto& x : s.data_) x = Scalar(x.to_double());
  return s;
}

RVec SymMatrix::coordinates() const {
  RVec y;
  y.reserve(data_.size());
  for (const auto& x : data_) y.push_back(x.exact());
  return y;
}

RVec SymMatrix::trace_form() const {
  RVec c;
  c.reserve(data_.size());
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i; j < n_; ++j) c.push_back(i == j ? (*this)(i, j).exact() : Rational(2 * (*this)(i, j).exact()));
  return c;
}

SymMatrix SymMatrix::from_coordinates(std::size_t n, const RVec& y) {
  require(y.size() == n * (n + 1) / 2, ErrorCode::DimensionMismatch, "coordinate vector length");
  SymMatrix s(n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) s.set(i, j, y[k++]);
  return s;
}

SymMatrix SymMatrix::from_trace_form(std::size_t n, const RVec& c) {
  require(c.size() == n * (n + 1) / 2, ErrorCode::DimensionMismatch, "trace form length");
  SymMatrix s(n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      s.set(i, j, i == j ? c[k] : Rational(c[k] / 2));
      ++k;
    }
  return s;
}

SymMatrix& SymMatrix::operator+=(const SymMatrix& o) {
  require(n_ == o.n_, ErrorCode::DimensionMismatch, "symmetric sum dimension mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

SymMatrix& SymMatrix::operator-=(const SymMatrix& o) {
  require(n_ == o.n_, ErrorCode::DimensionMismatch, "symmetric difference dimension mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

SymMatrix& SymMatrix::operator*=(const Scalar& s) {
  for (auto& x : data_) x *= s;
  return *this;
}

SymMatrix operator-(const SymMatrix& a) { return a * Scalar(-1); }

bool operator==(const SymMatrix& a, const SymMatrix& b) { return a.n_ == b.n_ && a.data_ == b.data_; }

Scalar trace(const SymMatrix& s) {
  Scalar t = 0;
  for (std::size_t i = 0; i < s.dim(); ++i) t += s(i, i);
  return t;
}

Scalar trace_product(const SymMatrix& a, const SymMatrix& b) {
  require(a.dim() == b.dim(), ErrorCode::DimensionMismatch, "trace product dimension mismatch");
  Scalar t = 0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) t += a(i, j) * b(j, i);
  return t;
}

SymMatrix congruence(const Matrix& g, const SymMatrix& s) {
  require(g.rows() == s.dim(), ErrorCode::DimensionMismatch, "congruence dimension mismatch");
  const Matrix r = g.transpose() * s.to_matrix() * g;
  const std::size_t k = r.rows();
  SymMatrix out(k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) {
      if (r(i, j).is_exact() && r(j, i).is_exact()) out.set(i, j, r(i, j));
      else out.set(i, j, Scalar(0.5 * (r(i, j).to_double() + r(j, i).to_double())));
    }
  return out;
}

SymMatrix inverse(const SymMatrix& s) {
  const Matrix inv = inverse(s.to_matrix());
  SymMatrix out(s.dim());
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = i; j < s.dim(); ++j) {
      if (inv(i, j).is_exact()) out.set(i, j, inv(i, j));
      else out.set(i, j, Scalar(0.5 * (inv(i, j).to_double() + inv(j, i).to_double())));
    }
  return out;
}

Scalar determinant(const SymMatrix& s) { return determinant(s.to_matrix()); }

std::size_t rank(const SymMatrix& s, double tol) { return rank(s.to_matrix(), tol); }

namespace {

Rational principal_minor(const SymMatrix& s, unsigned mask) {
  RMat sub;
  const std::size_t n = s.dim();
  for (std::size_t i = 0; i < n; ++i) {
    if (!(mask >> i & 1u)) continue;
    RVec row;
    for (std::size_t j = 0; j < n; ++j)
      if (mask >> j & 1u) row.push_back(s(i, j).exact());
    sub.push_back(std::move(row));
  }
  return determinant_rational(std::move(sub));
}

double spectral_floor(const Eigen::VectorXd& ev, double tol) {
  const double big = ev.cwiseAbs().maxCoeff();
  return tol * std::max(big, 1e-300);
}

}  // namespace

bool is_positive_definite(const SymMatrix& s, double tol) {
  const std::size_t n = s.dim();
  if (n == 0) return false;
  if (s.is_exact()) {
    for (std::size_t k = 1; k <= n; ++k)
      if (principal_minor(s, (1u << k) - 1u) <= 0) return false;
    return true;
  }
  const Eigen::MatrixXd e = s.to_eigen();
  Eigen::LLT<Eigen::MatrixXd> llt(e);
  if (llt.info() != Eigen::Success) return false;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(e, Eigen::EigenvaluesOnly);
  const auto& ev = es.eigenvalues();
  return ev(0) > tol * ev(ev.size() - 1);
}

bool is_positive_semidefinite(const SymMatrix& s, double tol) {
  const std::size_t n = s.dim();
  if (s.is_exact()) {
    require(n < 20, ErrorCode::Budget, "exact semidefiniteness test limited to n < 20");
    for (unsigned mask = 1; mask < (1u << n); ++mask)
      if (principal_minor(s, mask) < 0) return false;
    return true;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(s.to_eigen(), Eigen::EigenvaluesOnly);
  const auto& ev = es.eigenvalues();
  return ev(0) >= -spectral_floor(ev, tol);
}

bool is_indefinite(const SymMatrix& s, double tol) {
  if (s.is_exact()) return !is_positive_semidefinite(s) && !is_positive_semidefinite(-s);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(s.to_eigen(), Eigen::EigenvaluesOnly);
  const auto& ev = es.eigenvalues();
  const double floor = spectral_floor(ev, tol);
  return ev(0) < -floor && ev(ev.size() - 1) > floor;
}

SymMatrix trace_normalized(const SymMatrix& s) {
  const Scalar t = trace(s);
  require(!t.is_zero(), ErrorCode::ZeroMatrix, "cannot normalize a matrix of zero trace");
  return s * (Scalar(1) / t);
}

std::vector<double> spectrum(const SymMatrix& s, double tol) {
  const Eigen::MatrixXd e = s.to_eigen();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(e);
  if (es.info() != Eigen::Success) throw Error(ErrorCode::Convergence, "symmetric eigensolver did not converge");
  const double norm = std::max(e.norm(), 1e-300);
  const double residual = (e * es.eigenvectors() - es.eigenvectors() * es.eigenvalues().asDiagonal()).norm();
  if (residual > tol * norm) {
    throw Error(ErrorCode::Convergence, "eigen residual " + std::to_string(residual) + " exceeds tolerance");
  }
  std::vector<double> out(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
  std::sort(out.rbegin(), out.rend());
  return out;
}

}  // namespace selberg
