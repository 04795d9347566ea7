#include "selberg/matcore/random.hpp"

#include <cmath>

namespace selberg {

Rational random_rational(Rng& rng, int bound, int max_den) {
  std::uniform_int_distribution<int> den(1, max_den);
  const int q = den(rng);
  std::uniform_int_distribution<int> num(-bound * q, bound * q);
  return Rational(num(rng), q);
}

Isometry random_rational_isometry(std::size_t n, Rng& rng) {
  Matrix l = Matrix::identity(n);
  Matrix u = Matrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) {
      l(i, j) = random_rational(rng, 1, 3);
      u(j, i) = random_rational(rng, 1, 3);
    }
  Matrix d = Matrix::identity(n);
  std::uniform_int_distribution<int> pick(1, 3);
  Rational prod = 1;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    Rational x(pick(rng), pick(rng));
    d(i, i) = x;
    prod *= x;
  }
  d(n - 1, n - 1) = Rational(1) / prod;
  return Isometry::from(l * d * u);
}

Isometry random_rational_rotation(std::size_t n, Rng& rng) {
  // Cayley transform (I - S)(I + S)^-1 of a skew matrix S.
  Matrix s(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      s(i, j) = random_rational(rng, 1, 3);
      s(j, i) = Scalar(0) - s(i, j);
    }
  const Matrix id = Matrix::identity(n);
  return Isometry::from((id - s) * inverse(id + s));
}

SpacePoint random_rational_point(std::size_t n, Rng& rng) {
  const Isometry g = random_rational_isometry(n, rng);
  return act(g, SpacePoint::identity(n));
}

SpacePoint random_float_point(std::size_t n, Rng& rng, double scale) {
  std::normal_distribution<double> gauss(0.0, scale);
  Eigen::MatrixXd s(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) s(i, j) = s(j, i) = gauss(rng);
  s -= (s.trace() / static_cast<double>(n)) * Eigen::MatrixXd::Identity(n, n);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(s);
  const Eigen::VectorXd ev = es.eigenvalues().array().exp();
  const Eigen::MatrixXd m = es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().transpose();
  return SpacePoint::normalize(SymMatrix::from_eigen(0.5 * (m + m.transpose())));
}

Eigen::MatrixXd random_orthogonal(std::size_t k, Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXd a(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) a(i, j) = gauss(rng);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(a);
  Eigen::MatrixXd q = qr.householderQ();
  return q;
}

std::vector<Scalar> random_rational_vector(std::size_t n, Rng& rng, int bound) {
  while (true) {
    std::vector<Scalar> v(n);
    bool nonzero = false;
    for (auto& x : v) {
      x = random_rational(rng, bound, 2);
      nonzero = nonzero || !x.is_zero();
    }
    if (nonzero) return v;
  }
}

}  // namespace selberg
