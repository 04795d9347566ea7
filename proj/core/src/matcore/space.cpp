#include "selberg/matcore/space.hpp"

#include <cmath>

#include "selberg/error.hpp"

namespace selberg {

SpacePoint SpacePoint::from(const SymMatrix& m) {
  require(m.dim() > 0, ErrorCode::DimensionMismatch, "empty matrix");
  require(is_positive_definite(m), ErrorCode::NotPositiveDefinite, "space point must be positive definite");
  const Scalar d = determinant(m);
  if (d.is_exact()) {
    require(d.exact() == 1, ErrorCode::NotDeterminantOne, "determinant is " + d.to_string());
  } else {
    require(std::abs(d.to_double() - 1.0) <= 1e-12, ErrorCode::NotDeterminantOne,
            "determinant is " + d.to_string());
  }
  return SpacePoint(m, selberg::inverse(m));
}

SpacePoint SpacePoint::normalize(const SymMatrix& m) {
  require(m.dim() > 0, ErrorCode::DimensionMismatch, "empty matrix");
  require(is_positive_definite(m), ErrorCode::NotPositiveDefinite, "space point must be positive definite");
  const unsigned n = static_cast<unsigned>(m.dim());
  const Scalar d = determinant(m);
  if (d.is_exact()) {
    if (auto root = exact_root(d.exact(), n)) {
      SymMatrix s = m * Scalar(Rational(1) / *root);
      return SpacePoint(s, selberg::inverse(s));
    }
  }
  SymMatrix s = m.to_float() * Scalar(std::pow(d.to_double(), -1.0 / n));
  return SpacePoint(s, selberg::inverse(s));
}

SpacePoint SpacePoint::identity(std::size_t n) { return SpacePoint(SymMatrix::identity(n), SymMatrix::identity(n)); }

Isometry Isometry::from(const Matrix& m) {
  require(m.is_square() && m.rows() > 0, ErrorCode::DimensionMismatch, "isometry must be a square matrix");
  const Scalar d = determinant(m);
  if (d.is_exact()) {
    require(d.exact() == 1, ErrorCode::NotDeterminantOne, "isometry determinant is " + d.to_string());
  } else {
    require(std::abs(d.to_double() - 1.0) <= 1e-12, ErrorCode::NotDeterminantOne,
            "isometry determinant is " + d.to_string());
  }
  return Isometry(m);
}

Isometry Isometry::identity(std::size_t n) { return Isometry(Matrix::identity(n)); }

Isometry Isometry::inverse() const { return Isometry(selberg::inverse(m_)); }

bool Isometry::is_identity() const { return m_ == Matrix::identity(m_.rows()); }

Isometry operator*(const Isometry& a, const Isometry& b) {
  require(a.dim() == b.dim(), ErrorCode::DimensionMismatch, "isometry product dimension mismatch");
  return Isometry(a.m_ * b.m_);
}

IsometryWord::IsometryWord(std::vector<Isometry> letters, std::vector<std::string> labels)
    : letters_(std::move(letters)), labels_(std::move(labels)) {
  if (labels_.empty()) labels_.assign(letters_.size(), "g");
  require(labels_.size() == letters_.size(), ErrorCode::DimensionMismatch, "one label per letter");
  if (!letters_.empty()) {
    Isometry p = letters_[0];
    for (std::size_t i = 1; i < letters_.size(); ++i) p = p * letters_[i];
    product_ = p;
  }
}

const Isometry& IsometryWord::product() const {
  require(product_.has_value(), ErrorCode::InvalidArgument, "empty word has no fixed dimension");
  return *product_;
}

IsometryWord IsometryWord::inverse() const {
  std::vector<Isometry> l;
  std::vector<std::string> s;
  for (std::size_t i = letters_.size(); i-- > 0;) {
    l.push_back(letters_[i].inverse());
    s.push_back(inverse_label(labels_[i]));
  }
  return IsometryWord(std::move(l), std::move(s));
}

IsometryWord IsometryWord::power(int k) const {
  if (k < 0) return inverse().power(-k);
  std::vector<Isometry> l;
  std::vector<std::string> s;
  for (int r = 0; r < k; ++r) {
    l.insert(l.end(), letters_.begin(), letters_.end());
    s.insert(s.end(), labels_.begin(), labels_.end());
  }
  return IsometryWord(std::move(l), std::move(s));
}

IsometryWord IsometryWord::then(const IsometryWord& next) const {
  std::vector<Isometry> l = letters_;
  std::vector<std::string> s = labels_;
  l.insert(l.end(), next.letters_.begin(), next.letters_.end());
  s.insert(s.end(), next.labels_.begin(), next.labels_.end());
  return IsometryWord(std::move(l), std::move(s));
}

std::string IsometryWord::to_string() const {
  if (labels_.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (i) out += ' ';
    out += labels_[i];
  }
  return out;
}

std::string inverse_label(const std::string& label) {
  const std::string suffix = "^-1";
  if (label.size() > suffix.size() && label.compare(label.size() - suffix.size(), suffix.size(), suffix) == 0) {
    return label.substr(0, label.size() - suffix.size());
  }
  return label + suffix;
}

SymMatrix act(const Isometry& g, const SymMatrix& s) { return congruence(g.matrix(), s); }

SpacePoint act(const Isometry& g, const SpacePoint& x) {
  require(g.dim() == x.dim(), ErrorCode::DimensionMismatch, "action dimension mismatch");
  SymMatrix m = congruence(g.matrix(), x.matrix());
  if (!m.is_exact()) return SpacePoint::normalize(m);
  return SpacePoint::from(m);
}

SymMatrix act(const IsometryWord& w, const SymMatrix& s) {
  if (w.length() == 0) return s;
  return act(w.product(), s);
}

SpacePoint act(const IsometryWord& w, const SpacePoint& x) {
  if (w.length() == 0) return x;
  return act(w.product(), x);
}

double geodesic_distance(const SpacePoint& x, const SpacePoint& y, double tol) {
  require(x.dim() == y.dim(), ErrorCode::DimensionMismatch, "distance dimension mismatch");
  const Eigen::MatrixXd xm = x.matrix().to_eigen();
  const Eigen::MatrixXd ym = y.matrix().to_eigen();
  Eigen::LLT<Eigen::MatrixXd> llt(xm);
  if (llt.info() != Eigen::Success) throw Error(ErrorCode::NotPositiveDefinite, "Cholesky factorization failed");
  const Eigen::MatrixXd linv = llt.matrixL().solve(Eigen::MatrixXd::Identity(xm.rows(), xm.cols()));
  Eigen::MatrixXd w = linv * ym * linv.transpose();
  w = 0.5 * (w + w.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(w);
  if (es.info() != Eigen::Success) throw Error(ErrorCode::Convergence, "eigensolver did not converge");
  const double residual = (w * es.eigenvectors() - es.eigenvectors() * es.eigenvalues().asDiagonal()).norm();
  if (residual > tol * std::max(w.norm(), 1e-300)) {
    throw Error(ErrorCode::Convergence, "eigen residual " + std::to_string(residual));
  }
  double s = 0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    const double l = es.eigenvalues()(i);
    if (!(l > 0)) throw Error(ErrorCode::Convergence, "nonpositive eigenvalue of X^-1 Y");
    s += std::log(l) * std::log(l);
  }
  return std::sqrt(s);
}

}  // namespace selberg
