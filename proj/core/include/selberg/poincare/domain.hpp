#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "selberg/polytope/polytope.hpp"

namespace selberg {

/// A finite set of isometries closed under inversion, with the center X.
class GeneratorSet {
 public:
  /// Adds missing inverses (labelled "x^-1"), drops exact duplicates, and
  /// rejects elements that fix the center or the identity.
  static GeneratorSet closed(SpacePoint center, const std::vector<Isometry>& gens,
                             std::vector<std::string> labels = {});

  const SpacePoint& center() const noexcept { return center_; }
  const std::vector<Isometry>& elements() const noexcept { return elements_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::size_t size() const noexcept { return elements_.size(); }
  std::size_t inverse_of(std::size_t i) const { return inverse_.at(i); }
  /// Element index with this label, or -1.
  int find(const std::string& label) const;

  /// {"center": matrix, "generators": [{"label": .., "matrix": ..}, ...]}.
  static GeneratorSet from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;

 private:
  GeneratorSet(SpacePoint c) : center_(std::move(c)) {}
  SpacePoint center_;
  std::vector<Isometry> elements_;
  std::vector<std::string> labels_;
  std::vector<std::size_t> inverse_;
};

/// Polytope of the Dirichlet-Selberg domain with facet labels. Half-space i
/// of the polytope is the bisector half-space of element i.
struct DomainWithPairing {
  GeneratorSet generators;
  ProjPolytope polytope;
  FacePoset poset;
  /// Per facet slot (index into polytope.facets()): the element g with the
  /// facet inside Bis(X, g.X).
  std::vector<std::size_t> facet_element;
  /// Per facet slot: slot of the facet of g^-1, or -1 if g^-1 gives no facet.
  std::vector<int> partner;

  std::size_t facet_count() const noexcept { return facet_element.size(); }
  /// Oriented (inward) normal of a facet slot.
  SymMatrix facet_normal(std::size_t slot) const;
  /// Facet slots containing the given face.
  std::vector<std::size_t> facets_of_face(std::size_t face) const;
  /// Face index of a facet slot.
  std::size_t face_of_facet(std::size_t slot) const;
  nlohmann::json to_json() const;
};

DomainWithPairing build_domain(const GeneratorSet& gens);

/// Image of the face's generators under g, matched back to faces of the same
/// polytope. Returns the face index, or -1 when the image is not a face.
int face_image(const DomainWithPairing& d, std::size_t face, const Isometry& g);

enum class PairingStatus { Verified, Refuted, NoPartner, Unresolved };
std::string to_string(PairingStatus s);

struct PairingEntry {
  std::size_t facet;
  int partner;
  std::string element;
  PairingStatus status;
  std::string detail;
  /// Exact point of the facet whose image leaves the domain, when refuted.
  std::optional<SymMatrix> witness;
};

struct ExactnessReport {
  std::vector<PairingEntry> entries;
  bool passed() const;
  nlohmann::json to_json() const;
};

/// For each facet F with element g, checks that g^-1 maps F onto the facet
/// of g^-1. Bounded domains compare exact vertex sets; unbounded domains
/// compare generator cones and fall back to an exact witness search.
ExactnessReport check_exact(const DomainWithPairing& d);

struct ExpressibilityEntry {
  std::string generator;
  std::optional<IsometryWord> witness;
};

struct ExpressibilityReport {
  int depth;
  std::vector<ExpressibilityEntry> entries;
  bool passed() const;
  nlohmann::json to_json() const;
};

/// Breadth-first search over words in the pairings up to the given length.
ExpressibilityReport expressibility(const std::vector<Isometry>& gens, const std::vector<std::string>& gen_labels,
                                    const std::vector<Isometry>& pairings,
                                    const std::vector<std::string>& pairing_labels, int depth);

}  // namespace selberg
