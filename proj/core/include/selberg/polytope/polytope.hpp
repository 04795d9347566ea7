#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "selberg/polytope/double_description.hpp"
#include "selberg/satake.hpp"

namespace selberg {

/// Normal A of the hyperplane {Y : tr(A Y) = 0}, up to nonzero scale.
/// Canonical form: integer-primitive (exact) or unit Frobenius norm (float),
/// first nonzero upper-triangle entry positive.
class HyperplaneNormal {
 public:
  /// Throws ZeroMatrix, or PreconditionViolated when `require_indefinite`
  /// is set and A is semidefinite.
  static HyperplaneNormal from(const SymMatrix& a, bool require_indefinite = true);

  const SymMatrix& matrix() const noexcept { return a_; }
  std::size_t dim() const noexcept { return a_.dim(); }
  friend bool operator==(const HyperplaneNormal& x, const HyperplaneNormal& y) { return x.a_ == y.a_; }

 private:
  explicit HyperplaneNormal(SymMatrix a) : a_(std::move(a)) {}
  SymMatrix a_;
};

/// {Y : orientation * tr(A Y) >= 0} for the canonical normal A.
struct HalfSpace {
  HyperplaneNormal normal;
  int orientation = 1;

  /// Half-space tr(A Y) >= 0 for the given (unnormalized) A.
  static HalfSpace from_oriented(const SymMatrix& a, bool require_indefinite = true);
  /// orientation * A.
  SymMatrix oriented() const;
  Scalar evaluate(const SymMatrix& y) const;
  friend bool operator==(const HalfSpace& x, const HalfSpace& y) {
    return x.normal == y.normal && x.orientation == y.orientation;
  }
};

/// Closure of the Dirichlet-Selberg cell is cut by the half-space
/// tr(((g.X)^-1 - X^-1) Y) >= 0, which contains X.
HyperplaneNormal bisector_normal(const SpacePoint& x, const Isometry& g);
HalfSpace bisector_halfspace(const SpacePoint& x, const Isometry& g);

/// Convex polytope in the chart tr(Y) = 1 of the projectivized symmetric
/// matrices, cut out by half-spaces. Exact arithmetic throughout.
class ProjPolytope {
 public:
  /// Throws Degenerate when the intersection is empty.
  static ProjPolytope from_halfspaces(std::size_t n, std::vector<HalfSpace> halfspaces);
  /// Convex hull of trace-normalizable points (each must have positive trace).
  static ProjPolytope from_vertices(std::size_t n, const std::vector<SymMatrix>& points);

  std::size_t n() const noexcept { return n_; }
  const std::vector<HalfSpace>& halfspaces() const noexcept { return halfspaces_; }
  /// Trace-one minimal-face representatives; for bounded polytopes these are the vertices.
  const std::vector<SymMatrix>& vertices() const noexcept { return vertices_; }
  /// Directions with zero trace (recession rays in the chart).
  const std::vector<SymMatrix>& recession_rays() const noexcept { return rays_; }
  std::size_t lineality_dim() const noexcept { return lineality_.size(); }
  const std::vector<SymMatrix>& lineality() const noexcept { return lineality_; }
  bool bounded() const noexcept { return lineality_.empty() && rays_.empty(); }
  /// Chart dimension.
  int dim() const noexcept { return dim_; }
  std::size_t generator_count() const noexcept { return vertices_.size() + rays_.size(); }

  /// Indices of irredundant half-spaces (first of any duplicate group).
  const std::vector<std::size_t>& facets() const noexcept { return facets_; }
  const std::vector<std::size_t>& redundant() const noexcept { return redundant_; }
  const std::vector<std::size_t>& implicit_equalities() const noexcept { return implicit_; }
  /// Generators (vertices first, then rays) tight on half-space i.
  const std::vector<std::size_t>& incidence(std::size_t i) const { return incidence_.at(i); }
  const std::vector<std::string>& warnings() const noexcept { return warnings_; }

  /// Index of an exact vertex equal to tr-normalized `p`, or -1.
  int find_vertex(const SymMatrix& p) const;
  /// Facet slot (position in facets()) whose half-space has the given index, or -1.
  int facet_slot(std::size_t halfspace) const;

  nlohmann::json to_json() const;
  /// {"halfspaces": [...], "vertices": [...]}; half-spaces win when both are given,
  /// and the listed vertices must then match the computed ones.
  static ProjPolytope from_json(const nlohmann::json& j);

 private:
  ProjPolytope() = default;
  std::size_t n_ = 0;
  std::vector<HalfSpace> halfspaces_;
  std::vector<SymMatrix> vertices_;
  std::vector<SymMatrix> rays_;
  std::vector<SymMatrix> lineality_;
  int dim_ = -1;
  std::vector<std::size_t> facets_;
  std::vector<std::size_t> redundant_;
  std::vector<std::size_t> implicit_;
  std::vector<std::vector<std::size_t>> incidence_;
  std::vector<std::string> warnings_;
};

struct Face {
  int dim;
  /// Sorted generator indices (vertices, then rays offset by the vertex count).
  std::vector<std::size_t> generators;
  /// Half-spaces tight on the whole face.
  std::vector<std::size_t> tight;
};

/// Nonempty faces ordered by dimension, the polytope itself last.
struct FacePoset {
  int dim = -1;
  bool bounded = true;
  std::vector<Face> faces;

  std::vector<std::size_t> of_dim(int d) const;
  /// Counts of faces of dimension 0..dim-1.
  std::vector<std::size_t> f_vector() const;
  /// Face index with exactly these generators, or -1.
  int find(std::vector<std::size_t> generators) const;
  nlohmann::json to_json() const;
};

/// Throws Degenerate for an empty polytope.
FacePoset face_poset(const ProjPolytope& p);

struct SatakeFace {
  std::size_t face;
  BoundaryComponent component;
  std::size_t type;
};

/// Faces all of whose generators are singular PSD vertices spanning a proper
/// subspace; the component is the column space of the vertex sum.
std::vector<SatakeFace> satake_faces(const ProjPolytope& p, const FacePoset& poset);

/// True iff bounded and every vertex is PSD. `why` gets the reason on false.
bool finite_volume(const ProjPolytope& p, std::string* why = nullptr);

}  // namespace selberg
