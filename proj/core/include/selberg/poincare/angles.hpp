#pragma once

#include <vector>

#include "selberg/satake.hpp"

namespace selberg {

/// Interior dihedral angle at X between the planes shared + B and
/// shared + B'. Normals are oriented: each half-space tr(N Y) >= 0 contains
/// the domain. Uses <A1, A2> = tr(X A1 X A2) and Gram determinants.
/// Throws PreconditionViolated if X is off a plane (relative 1e-10) and
/// Degenerate for dependent normals.
double dihedral_angle(const SpacePoint& x, const std::vector<SymMatrix>& shared, const SymMatrix& b,
                      const SymMatrix& b_prime);

/// Limit of the dihedral angle at points approaching alpha inside the
/// component Pi: the same formula in the lower-rank space after restricting
/// all normals and alpha to Pi.
double angle_limit(const SatakePoint& alpha, const BoundaryComponent& pi, const std::vector<SymMatrix>& shared,
                   const SymMatrix& b, const SymMatrix& b_prime);

}  // namespace selberg
