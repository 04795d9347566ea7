#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "selberg/busemann.hpp"
#include "selberg/poincare/domain.hpp"
#include "selberg/tolerances.hpp"

namespace selberg {

/// Orbit of a ridge under successive pairings. Step i leaves ridges[i]
/// through facet exit_facets[i] and applies elements[i], landing on
/// ridges[i+1] (cyclically).
struct RidgeCycle {
  std::vector<std::size_t> ridges;
  std::vector<std::size_t> entry_facets;
  std::vector<std::size_t> exit_facets;
  std::vector<std::size_t> elements;
  IsometryWord word;
  /// Order of the word restricted to the span of the first ridge, or -1
  /// beyond 64 powers.
  int restricted_order = -1;
  /// k with angle sum 2 pi / k, when determined.
  std::optional<int> order_k;

  nlohmann::json to_json(const DomainWithPairing& d) const;
};

/// Partitions the ridges into cycles and fills order_k from a short
/// angle-sum run. Throws Degenerate if an orbit fails to close.
std::vector<RidgeCycle> ridge_cycles(const DomainWithPairing& d, const Tolerances& tol = {});

struct AngleSumReport {
  std::vector<double> sums;
  std::optional<int> k;
  std::vector<std::string> failures;
  bool passed() const { return failures.empty() && k.has_value(); }
  nlohmann::json to_json() const;
};

/// Radical-inverse weight in base `base` for index i >= 1, exact.
Rational halton(std::uint64_t i, unsigned base);

/// Samples interior points of the first ridge with weights 1/2 + halton,
/// transports them exactly through the cycle and sums dihedral angles.
AngleSumReport angle_sum(const RidgeCycle& cycle, const DomainWithPairing& d, std::size_t samples = 10,
                         const Tolerances& tol = {});

/// Matches a cycle against expected (ridge vertex-label pair, letter)
/// sequences up to rotation and reversal.
struct CycleSignature {
  std::vector<std::string> ridges;
  std::vector<std::string> letters;
};
bool same_cycle(const CycleSignature& a, const CycleSignature& b);

/// Words w (letters are pairing elements g_F^-1) with w.face = face, found by
/// breadth-first search up to max_length, shortest first.
std::vector<IsometryWord> satake_cycle_words(const DomainWithPairing& d, const SatakeFace& face,
                                             const std::vector<SatakeFace>& all, std::size_t max_length,
                                             std::size_t max_words = 8);

/// Shortest word mapping Satake face `from` onto `to`, if any within max_length.
std::optional<IsometryWord> satake_face_word(const DomainWithPairing& d, const SatakeFace& from,
                                             const SatakeFace& to, const std::vector<SatakeFace>& all,
                                             std::size_t max_length);

struct FixedPoint {
  SatakePoint alpha;
  std::string method;  // "minimizer" or "orbit-barycenter"
  int order;           // orbit length used
};

/// Point of the face's component fixed by w. Tries U (U^T X^-1 U)^-1 U^T first,
/// then averages an orbit. Throws PreconditionViolated when w does not map
/// the face to itself and Budget when no finite order shows within 64 powers.
FixedPoint cycle_fixed_point(const SatakeFace& face, const IsometryWord& w, const DomainWithPairing& d);

struct InvarianceReport {
  std::string mode;  // "invariance" or "scaling"
  int trials = 0;
  int exact_checks = 0;
  int exact_failures = 0;
  double max_relative_deviation = 0;
  std::optional<double> scaling_constant;
  double scaling_spread = 0;
  std::vector<std::string> notes;
  bool passed() const;
  nlohmann::json to_json() const;
};

/// If w.alpha = alpha: checks b(Y) = b(w.Y) at random rational Y and
/// reference Z (type 0 exactly, type k within 1e-12 when pi is given).
/// Otherwise measures C = b'(w.Y) / b(Y) for alpha' = w.alpha and pi' = w^T pi,
/// which should not depend on Y.
InvarianceReport invariance_check(const IsometryWord& w, const SatakePoint& alpha,
                                  const std::optional<BoundaryComponent>& pi, int trials, std::uint64_t seed);

}  // namespace selberg
