#include "selberg/poincare/angles.hpp"

#include <algorithm>
#include <cmath>

#include "selberg/error.hpp"

namespace selberg {

namespace {

double gram_det(const Eigen::MatrixXd& x, const std::vector<Eigen::MatrixXd>& p, const std::vector<Eigen::MatrixXd>& q) {
  const std::size_t k = p.size();
  Eigen::MatrixXd g(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) g(i, j) = (x * p[i] * x * q[j]).trace();
  return g.determinant();
}

double wedge_angle(const Eigen::MatrixXd& x, const std::vector<Eigen::MatrixXd>& shared, const Eigen::MatrixXd& b,
                   const Eigen::MatrixXd& bp) {
  const double xn = x.norm();
  auto check_incident = [&](const Eigen::MatrixXd& a) {
    const double v = (a * x).trace();
    if (std::abs(v) > 1e-10 * a.norm() * xn) {
      throw Error(ErrorCode::PreconditionViolated,
                  "point is not on the plane: |tr(A X)| = " + std::to_string(std::abs(v)));
    }
  };
  for (const auto& a : shared) check_incident(a);
  check_incident(b);
  check_incident(bp);

  std::vector<Eigen::MatrixXd> p = shared;
  std::vector<Eigen::MatrixXd> q = shared;
  p.push_back(b);
  q.push_back(bp);
  const double gpp = gram_det(x, p, p);
  const double gqq = gram_det(x, q, q);
  double scale_p = 1;
  double scale_q = 1;
  for (const auto& a : p) scale_p *= (x * a * x * a).trace();
  for (const auto& a : q) scale_q *= (x * a * x * a).trace();
  if (!(gpp > 1e-14 * scale_p) || !(gqq > 1e-14 * scale_q)) {
    throw Error(ErrorCode::Degenerate, "normals are linearly dependent");
  }
  std::vector<Eigen::MatrixXd> all = shared;
  all.push_back(b);
  all.push_back(bp);
  double scale_all = scale_p * (x * bp * x * bp).trace();
  if (!(gram_det(x, all, all) > 1e-14 * scale_all)) {
    throw Error(ErrorCode::Degenerate, "normals are linearly dependent");
  }
  const double c = -gram_det(x, p, q) / std::sqrt(gpp * gqq);
  return std::acos(std::clamp(c, -1.0, 1.0));
}

}  // namespace

double dihedral_angle(const SpacePoint& x, const std::vector<SymMatrix>& shared, const SymMatrix& b,
                      const SymMatrix& b_prime) {
  require(b.dim() == x.dim() && b_prime.dim() == x.dim(), ErrorCode::DimensionMismatch, "normal dimension mismatch");
  std::vector<Eigen::MatrixXd> sh;
  for (const auto& a : shared) {
    require(a.dim() == x.dim(), ErrorCode::DimensionMismatch, "normal dimension mismatch");
    sh.push_back(a.to_eigen());
  }
  return wedge_angle(x.matrix().to_eigen(), sh, b.to_eigen(), b_prime.to_eigen());
}

double angle_limit(const SatakePoint& alpha, const BoundaryComponent& pi, const std::vector<SymMatrix>& shared,
                   const SymMatrix& b, const SymMatrix& b_prime) {
  require(alpha.dim() == pi.ambient_dim(), ErrorCode::DimensionMismatch, "alpha and component dimensions differ");
  const Eigen::MatrixXd& iota = pi.frame();
  const Eigen::Index k = iota.cols();
  Eigen::MatrixXd a0 = iota.transpose() * alpha.matrix().to_eigen() * iota;
  a0 = 0.5 * (a0 + a0.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a0, Eigen::EigenvaluesOnly);
  require(es.eigenvalues()(0) > 1e-12 * es.eigenvalues().cwiseAbs().maxCoeff(), ErrorCode::NotBoundaryPoint,
          "alpha does not lie in the component");
  const Eigen::MatrixXd residual = alpha.matrix().to_eigen() - iota * a0 * iota.transpose();
  require(residual.norm() <= 1e-10 * alpha.matrix().to_eigen().norm(), ErrorCode::NotBoundaryPoint,
          "alpha does not lie in the closure of the component");
  a0 *= std::pow(a0.determinant(), -1.0 / static_cast<double>(k));

  auto restrict = [&](const SymMatrix& n) -> Eigen::MatrixXd {
    const Eigen::MatrixXd full = n.to_eigen();
    Eigen::MatrixXd r = iota.transpose() * full * iota;
    r = 0.5 * (r + r.transpose());
    require(r.norm() > 1e-10 * full.norm(), ErrorCode::Degenerate, "a plane contains the component");
    return r;
  };
  std::vector<Eigen::MatrixXd> sh;
  for (const auto& a : shared) sh.push_back(restrict(a));
  const Eigen::MatrixXd b0 = restrict(b);
  const Eigen::MatrixXd bp0 = restrict(b_prime);

  // Transversality: the restricted normals stay linearly independent.
  std::vector<Eigen::MatrixXd> all = sh;
  all.push_back(b0);
  all.push_back(bp0);
  Eigen::MatrixXd stacked(k * k, static_cast<Eigen::Index>(all.size()));
  for (std::size_t i = 0; i < all.size(); ++i)
    stacked.col(static_cast<Eigen::Index>(i)) = Eigen::Map<const Eigen::VectorXd>(all[i].data(), k * k);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(stacked);
  const auto& s = svd.singularValues();
  require(s.size() == static_cast<Eigen::Index>(all.size()) && s(s.size() - 1) > 1e-10 * s(0), ErrorCode::Degenerate,
          "component is not transverse to the planes");
  return wedge_angle(a0, sh, b0, bp0);
}

}  // namespace selberg
