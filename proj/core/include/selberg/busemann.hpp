#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "selberg/satake.hpp"

namespace selberg {

/// tr(X^-1 Y). Exact when both points are exact.
Scalar selberg(const SpacePoint& x, const SpacePoint& y);

enum class BusemannKind { Type0, TypeK };

/// Busemann-Selberg function based at alpha, normalized to 1 at `reference`.
/// TypeK additionally carries the component Pi whose closure contains alpha.
class BusemannSpec {
 public:
  /// alpha must be a boundary point.
  static BusemannSpec type0(SatakePoint alpha, SpacePoint reference);
  /// rank(alpha) < dim(component) < n and col(alpha) inside the component.
  static BusemannSpec type_k(SatakePoint alpha, BoundaryComponent component, SpacePoint reference);

  BusemannKind kind() const noexcept { return kind_; }
  const SatakePoint& alpha() const noexcept { return alpha_; }
  const std::optional<BoundaryComponent>& component() const noexcept { return component_; }
  const SpacePoint& reference() const noexcept { return reference_; }
  std::size_t dim() const noexcept { return alpha_.dim(); }
  /// n - dim(component); 0 for type 0.
  std::size_t k() const noexcept;
  /// Same spec with a different reference point.
  BusemannSpec with_reference(SpacePoint reference) const;

  /// {"kind": "type0"|"typek", "alpha", "component"?, "reference"}.
  static BusemannSpec from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;

 private:
  BusemannSpec(BusemannKind kind, SatakePoint alpha, std::optional<BoundaryComponent> component, SpacePoint reference)
      : kind_(kind), alpha_(std::move(alpha)), component_(std::move(component)), reference_(std::move(reference)) {}
  BusemannKind kind_;
  SatakePoint alpha_;
  std::optional<BoundaryComponent> component_;
  SpacePoint reference_;
};

/// tr(Y^-1 alpha) / tr(X^-1 alpha). Exact when alpha, X and Y are exact.
Scalar busemann0(const BusemannSpec& spec, const SpacePoint& y);

/// tr(Y^-1 alpha) det(iota^T Y^-1 iota)^(-1/(n-k)) over the same at X.
double busemann_k(const BusemannSpec& spec, const SpacePoint& y);

/// Dispatches on the spec kind.
double busemann(const BusemannSpec& spec, const SpacePoint& y);

/// Same expression evaluated on any positive definite matrix; the function is
/// invariant under positive rescaling of its argument.
double busemann_unnormalized(const BusemannSpec& spec, const Eigen::MatrixXd& y);

/// sqrt(n/(j(n-j))) log(det(U^T Y^-1 U) / det(U^T X^-1 U)), j = dim V, computed
/// by moving V onto the first j coordinates and reading leading minors.
double classical_busemann_vertex(const BoundaryComponent& v, const SpacePoint& x, const SpacePoint& y);

struct HoroballSpec {
  BusemannSpec busemann;
  double level;
  bool closed = true;

  HoroballSpec(BusemannSpec b, double r, bool closed_ball = true);
};

bool horoball_contains(const HoroballSpec& h, const SpacePoint& y);

enum class LimitTag { Zero, Finite, Infinity };
std::string to_string(LimitTag tag);

struct AsymptoticResult {
  LimitTag tag;
  std::optional<double> value;
  /// Which row of the classification table applied.
  std::string rule;
  std::vector<double> epsilons;
  std::vector<double> samples;
  bool numeric_consistent = true;
  std::string diagnostic;

  nlohmann::json to_json() const;
};

/// Limit of the spec's function along beta + eps Y as eps -> 0+. The tag is
/// decided from exact column-space relations; the eps schedule only serves
/// as a cross-check, reported through numeric_consistent/diagnostic.
AsymptoticResult asymptotic_limit(const BusemannSpec& spec, const SatakePoint& beta, const SpacePoint& y,
                                  const std::vector<double>& schedule = {1e-2, 1e-4, 1e-6});

/// sqrt((m-1)/m) with m = n - k.
double lipschitz_constant(const BusemannSpec& spec);

/// lipschitz_constant * d(Y1, Y2) - |log b(Y1) - log b(Y2)|.
double lipschitz_margin(const BusemannSpec& spec, const SpacePoint& y1, const SpacePoint& y2);

}  // namespace selberg
