#pragma once

#include <cstdint>
#include <random>

#include "selberg/matcore/space.hpp"

namespace selberg {

using Rng = std::mt19937_64;

/// Rational in [-bound, bound] with denominator in 1..max_den.
Rational random_rational(Rng& rng, int bound = 3, int max_den = 4);

/// Exact det-1 matrix L D U with unit triangular L, U and rational diagonal D.
Isometry random_rational_isometry(std::size_t n, Rng& rng);

/// Exact rational rotation with det 1 (Cayley transform of a random skew matrix).
Isometry random_rational_rotation(std::size_t n, Rng& rng);

/// g^T g for a random exact isometry g: an exact det-1 point.
SpacePoint random_rational_point(std::size_t n, Rng& rng);

/// exp(S) for a random traceless symmetric S with entries of size ~scale.
SpacePoint random_float_point(std::size_t n, Rng& rng, double scale = 1.0);

/// Haar-like random orthogonal matrix (QR of a Gaussian matrix).
Eigen::MatrixXd random_orthogonal(std::size_t k, Rng& rng);

/// Exact rational vector with entries in [-bound, bound], never zero.
std::vector<Scalar> random_rational_vector(std::size_t n, Rng& rng, int bound = 3);

}  // namespace selberg
