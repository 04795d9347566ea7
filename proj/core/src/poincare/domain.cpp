#include "selberg/poincare/domain.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "selberg/error.hpp"
#include "selberg/matcore/json_io.hpp"
#include "selberg/matcore/random.hpp"

namespace selberg {

namespace {

std::string matrix_key(const Matrix& m) {
  std::string k;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      k += m(i, j).to_string();
      k += ',';
    }
  return k;
}

bool in_domain(const ProjPolytope& p, const SymMatrix& y) {
  for (const auto& h : p.halfspaces())
    if (h.evaluate(y).sign() < 0) return false;
  return true;
}

// Positive multiple test for exact symmetric matrices.
bool positive_multiple(const SymMatrix& a, const SymMatrix& b) {
  std::optional<Rational> ratio;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i; j < a.dim(); ++j) {
      const Rational& x = a(i, j).exact();
      const Rational& y = b(i, j).exact();
      if ((x == 0) != (y == 0)) return false;
      if (x == 0) continue;
      const Rational r = x / y;
      if (r <= 0) return false;
      if (ratio && *ratio != r) return false;
      ratio = r;
    }
  return ratio.has_value();
}

int find_ray(const ProjPolytope& p, const SymMatrix& r) {
  for (std::size_t i = 0; i < p.recession_rays().size(); ++i)
    if (positive_multiple(r, p.recession_rays()[i])) return static_cast<int>(p.vertices().size() + i);
  return -1;
}

// Generators of the bare cone {Y : all half-spaces}, without the trace constraint.
ConeGenerators bare_cone(const ProjPolytope& p) {
  std::vector<RVec> cons;
  for (const auto& h : p.halfspaces()) cons.push_back(h.oriented().trace_form());
  return double_description(cons, p.n() * (p.n() + 1) / 2);
}

// Every generator of the bare-cone face on half-space `from_h` maps under g
// into the bare-cone face on half-space `to_h`.
bool cone_face_maps_into(const ProjPolytope& p, const ConeGenerators& c, std::size_t from_h, std::size_t to_h,
                         const Isometry& g) {
  const std::size_t n = p.n();
  // Lineality images must stay in the lineality; ray images must satisfy
  // every half-space and be tight on the target one.
  auto maps_ok = [&](const RVec& gen, bool line) {
    const SymMatrix img = act(g, SymMatrix::from_coordinates(n, gen));
    for (std::size_t i = 0; i < p.halfspaces().size(); ++i) {
      const int s = p.halfspaces()[i].evaluate(img).sign();
      if (line ? s != 0 : (s < 0 || (i == to_h && s != 0))) return false;
    }
    return true;
  };
  for (const auto& l : c.lineality)
    if (!maps_ok(l, true)) return false;
  for (std::size_t r = 0; r < c.rays.size(); ++r) {
    if (!c.incidence[r].test(from_h)) continue;
    if (!maps_ok(c.rays[r], false)) return false;
  }
  return true;
}

// Random exact points of a chart facet; returns one that is positive definite
// and whose image under g leaves the domain.
std::optional<SymMatrix> leaving_witness(const DomainWithPairing& d, std::size_t slot, const Isometry& g,
                                         std::size_t budget) {
  const ProjPolytope& p = d.polytope;
  const Face& face = d.poset.faces[d.face_of_facet(slot)];
  std::vector<const SymMatrix*> verts;
  std::vector<const SymMatrix*> rays;
  for (auto idx : face.generators) {
    if (idx < p.vertices().size()) verts.push_back(&p.vertices()[idx]);
    else rays.push_back(&p.recession_rays()[idx - p.vertices().size()]);
  }
  if (verts.empty()) return std::nullopt;
  // Lineality of the chart polytope that stays on the facet hyperplane.
  const SymMatrix normal = d.facet_normal(slot);
  std::vector<const SymMatrix*> lines;
  for (const auto& l : p.lineality())
    if (trace_product(normal, l).is_zero()) lines.push_back(&l);

  Rng rng(0x5eed + slot);
  std::uniform_int_distribution<int> pos(0, 8);
  for (std::size_t trial = 0; trial < budget; ++trial) {
    SymMatrix w(p.n());
    for (const auto* v : verts) w += *v * Scalar(Rational(pos(rng) + 1, 8));
    for (const auto* r : rays) w += *r * Scalar(Rational(pos(rng), 4));
    for (const auto* l : lines) w += *l * Scalar(random_rational(rng, 4, 4));
    if (!is_positive_definite(w)) continue;
    if (!in_domain(p, w)) continue;
    if (!in_domain(p, act(g, w))) return w;
  }
  // Crossing points of segments between random positive definite matrices on
  // opposite sides of the facet hyperplane; these stay positive definite.
  for (std::size_t trial = 0; trial < budget; ++trial) {
    const SymMatrix y0 = random_rational_point(p.n(), rng).matrix();
    const SymMatrix y1 = random_rational_point(p.n(), rng).matrix();
    const Scalar s0 = trace_product(normal, y0);
    const Scalar s1 = trace_product(normal, y1);
    if (s0.sign() * s1.sign() >= 0) continue;
    const Scalar sign(s0.sign());
    const SymMatrix w = y0 * (s1 * Scalar(-1) * sign) + y1 * (s0 * sign);
    if (!in_domain(p, w)) continue;
    if (!in_domain(p, act(g, w))) return w;
  }
  return std::nullopt;
}

}  // namespace

GeneratorSet GeneratorSet::closed(SpacePoint center, const std::vector<Isometry>& gens,
                                  std::vector<std::string> labels) {
  if (labels.empty())
    for (std::size_t i = 0; i < gens.size(); ++i) labels.push_back("g" + std::to_string(i + 1));
  require(labels.size() == gens.size(), ErrorCode::DimensionMismatch, "one label per generator");
  GeneratorSet s(std::move(center));
  auto index_of = [&s](const Isometry& g) -> int {
    for (std::size_t i = 0; i < s.elements_.size(); ++i)
      if (s.elements_[i] == g) return static_cast<int>(i);
    return -1;
  };
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const Isometry& g = gens[i];
    require(g.dim() == s.center_.dim(), ErrorCode::DimensionMismatch, "generator dimension mismatch");
    require(!(act(g, s.center_) == s.center_), ErrorCode::PreconditionViolated,
            "generator " + labels[i] + " stabilizes the center");
    if (index_of(g) >= 0) continue;
    s.elements_.push_back(g);
    s.labels_.push_back(labels[i]);
    const Isometry inv = g.inverse();
    if (index_of(inv) < 0) {
      // Keep an explicitly listed inverse's own label.
      std::string inv_label = inverse_label(labels[i]);
      for (std::size_t j = i + 1; j < gens.size(); ++j)
        if (gens[j] == inv) inv_label = labels[j];
      s.elements_.push_back(inv);
      s.labels_.push_back(inv_label);
    }
  }
  s.inverse_.resize(s.elements_.size());
  for (std::size_t i = 0; i < s.elements_.size(); ++i) s.inverse_[i] = static_cast<std::size_t>(index_of(s.elements_[i].inverse()));
  return s;
}

int GeneratorSet::find(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return static_cast<int>(i);
  return -1;
}

GeneratorSet GeneratorSet::from_json(const nlohmann::json& j) {
  require(j.is_object(), ErrorCode::Parse, "generator set must be an object");
  SpacePoint center = j.contains("center") ? point_from_json(j.at("center")) : SpacePoint::identity(0);
  std::vector<Isometry> gens;
  std::vector<std::string> labels;
  require(j.contains("generators"), ErrorCode::Parse, "generator set needs \"generators\"");
  const auto& g = j.at("generators");
  if (g.is_object()) {
    for (auto it = g.begin(); it != g.end(); ++it) {
      labels.push_back(it.key());
      gens.push_back(Isometry::from(matrix_from_json(it.value())));
    }
  } else {
    require(g.is_array(), ErrorCode::Parse, "\"generators\" must be a list or an object");
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (g[i].is_object()) {
        labels.push_back(g[i].value("label", "g" + std::to_string(i + 1)));
        gens.push_back(Isometry::from(matrix_from_json(g[i].at("matrix"))));
      } else {
        labels.push_back("g" + std::to_string(i + 1));
        gens.push_back(Isometry::from(matrix_from_json(g[i])));
      }
    }
  }
  if (!j.contains("center")) {
    require(!gens.empty(), ErrorCode::Parse, "need a center when no generators are given");
    center = SpacePoint::identity(gens[0].dim());
  }
  return closed(std::move(center), gens, std::move(labels));
}

nlohmann::json GeneratorSet::to_json() const {
  nlohmann::json g = nlohmann::json::array();
  for (std::size_t i = 0; i < elements_.size(); ++i)
    g.push_back({{"label", labels_[i]}, {"matrix", matrix_to_json(elements_[i].matrix())}});
  return {{"center", sym_to_json(center_.matrix())}, {"generators", g}};
}

SymMatrix DomainWithPairing::facet_normal(std::size_t slot) const {
  return polytope.halfspaces().at(polytope.facets().at(slot)).oriented();
}

std::vector<std::size_t> DomainWithPairing::facets_of_face(std::size_t face) const {
  std::vector<std::size_t> out;
  const auto& tight = poset.faces.at(face).tight;
  for (std::size_t s = 0; s < facet_count(); ++s)
    if (std::binary_search(tight.begin(), tight.end(), polytope.facets()[s])) out.push_back(s);
  return out;
}

std::size_t DomainWithPairing::face_of_facet(std::size_t slot) const {
  const int f = poset.find(polytope.incidence(polytope.facets().at(slot)));
  require(f >= 0, ErrorCode::Degenerate, "facet missing from the face poset");
  return static_cast<std::size_t>(f);
}

nlohmann::json DomainWithPairing::to_json() const {
  nlohmann::json facets = nlohmann::json::array();
  for (std::size_t s = 0; s < facet_count(); ++s) {
    nlohmann::json f = {{"slot", s},
                        {"halfspace", polytope.facets()[s]},
                        {"element", generators.labels()[facet_element[s]]},
                        {"normal", sym_to_json(facet_normal(s))},
                        {"generators", poset.faces[face_of_facet(s)].generators}};
    f["partner"] = partner[s] >= 0 ? nlohmann::json(partner[s]) : nlohmann::json(nullptr);
    facets.push_back(std::move(f));
  }
  std::string why;
  const bool fv = finite_volume(polytope, &why);
  return {{"generators", generators.to_json()},
          {"polytope", polytope.to_json()},
          {"facets", facets},
          {"poset", poset.to_json()},
          {"finite_volume", fv},
          {"finite_volume_reason", why}};
}

DomainWithPairing build_domain(const GeneratorSet& gens) {
  std::vector<HalfSpace> hs;
  for (const auto& g : gens.elements()) hs.push_back(bisector_halfspace(gens.center(), g));
  ProjPolytope poly = ProjPolytope::from_halfspaces(gens.center().dim(), std::move(hs));
  FacePoset poset = face_poset(poly);
  DomainWithPairing d{gens, std::move(poly), std::move(poset), {}, {}};
  for (std::size_t s = 0; s < d.polytope.facets().size(); ++s) d.facet_element.push_back(d.polytope.facets()[s]);
  for (std::size_t s = 0; s < d.facet_element.size(); ++s) {
    d.partner.push_back(d.polytope.facet_slot(gens.inverse_of(d.facet_element[s])));
  }
  return d;
}

int face_image(const DomainWithPairing& d, std::size_t face, const Isometry& g) {
  const ProjPolytope& p = d.polytope;
  std::vector<std::size_t> img;
  for (auto idx : d.poset.faces.at(face).generators) {
    int k;
    if (idx < p.vertices().size()) k = p.find_vertex(act(g, p.vertices()[idx]));
    else k = find_ray(p, act(g, p.recession_rays()[idx - p.vertices().size()]));
    if (k < 0) return -1;
    img.push_back(static_cast<std::size_t>(k));
  }
  return d.poset.find(img);
}

std::string to_string(PairingStatus s) {
  switch (s) {
    case PairingStatus::Verified: return "verified";
    case PairingStatus::Refuted: return "refuted";
    case PairingStatus::NoPartner: return "no-partner";
    case PairingStatus::Unresolved: return "unresolved";
  }
  return "?";
}

bool ExactnessReport::passed() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](const PairingEntry& e) { return e.status == PairingStatus::Verified; });
}

nlohmann::json ExactnessReport::to_json() const {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& e : entries) {
    nlohmann::json j = {{"facet", e.facet}, {"element", e.element}, {"status", to_string(e.status)}, {"detail", e.detail}};
    j["partner"] = e.partner >= 0 ? nlohmann::json(e.partner) : nlohmann::json(nullptr);
    if (e.witness) j["witness"] = sym_to_json(*e.witness);
    a.push_back(std::move(j));
  }
  return {{"passed", passed()}, {"pairs", a}};
}

ExactnessReport check_exact(const DomainWithPairing& d) {
  ExactnessReport rep;
  const auto& gs = d.generators;
  std::optional<ConeGenerators> bare;
  for (std::size_t s = 0; s < d.facet_count(); ++s) {
    PairingEntry e{s, d.partner[s], gs.labels()[d.facet_element[s]], PairingStatus::Unresolved, "", std::nullopt};
    const Isometry& g = gs.elements()[d.facet_element[s]];
    const Isometry ginv = g.inverse();
    if (e.partner < 0) {
      e.status = PairingStatus::NoPartner;
      e.detail = "the bisector of " + inverse_label(e.element) + " carries no facet";
      rep.entries.push_back(std::move(e));
      continue;
    }
    const std::size_t ps = static_cast<std::size_t>(e.partner);
    if (d.polytope.bounded()) {
      const int img = face_image(d, d.face_of_facet(s), ginv);
      if (img >= 0 && static_cast<std::size_t>(img) == d.face_of_facet(ps)) {
        e.status = PairingStatus::Verified;
        e.detail = "vertex set maps onto the partner facet";
      } else {
        e.status = PairingStatus::Refuted;
        for (auto idx : d.poset.faces[d.face_of_facet(s)].generators) {
          const SymMatrix& v = d.polytope.vertices()[idx];
          const int k = d.polytope.find_vertex(act(ginv, v));
          const auto& target = d.poset.faces[d.face_of_facet(ps)].generators;
          if (k < 0 || !std::binary_search(target.begin(), target.end(), static_cast<std::size_t>(k))) {
            e.witness = v;
            e.detail = "vertex " + std::to_string(idx) + " does not map to a vertex of the partner facet";
            break;
          }
        }
        if (!e.witness) e.detail = "image vertex set differs from the partner facet";
      }
      rep.entries.push_back(std::move(e));
      continue;
    }
    if (!bare) bare = bare_cone(d.polytope);
    const std::size_t h = d.polytope.facets()[s];
    const std::size_t ph = d.polytope.facets()[ps];
    if (cone_face_maps_into(d.polytope, *bare, h, ph, ginv) && cone_face_maps_into(d.polytope, *bare, ph, h, g)) {
      e.status = PairingStatus::Verified;
      e.detail = "generator cones of the facets correspond";
    } else if (auto w = leaving_witness(d, s, ginv, 4000)) {
      e.status = PairingStatus::Refuted;
      e.witness = *w;
      e.detail = "positive definite point of the facet maps outside the domain";
    } else if (auto w2 = leaving_witness(d, ps, g, 4000)) {
      e.status = PairingStatus::Refuted;
      e.witness = *w2;
      e.detail = "positive definite point of the partner facet maps outside the domain";
    } else {
      e.detail = "generator cones differ but no positive definite witness was found";
    }
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

bool ExpressibilityReport::passed() const {
  return std::all_of(entries.begin(), entries.end(), [](const ExpressibilityEntry& e) { return e.witness.has_value(); });
}

nlohmann::json ExpressibilityReport::to_json() const {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& e : entries) {
    nlohmann::json j = {{"generator", e.generator}, {"found", e.witness.has_value()}};
    if (e.witness) {
      j["word"] = e.witness->labels();
      j["length"] = e.witness->length();
    }
    a.push_back(std::move(j));
  }
  return {{"depth", depth}, {"passed", passed()}, {"generators", a}};
}

ExpressibilityReport expressibility(const std::vector<Isometry>& gens, const std::vector<std::string>& gen_labels,
                                    const std::vector<Isometry>& pairings,
                                    const std::vector<std::string>& pairing_labels, int depth) {
  require(depth >= 1, ErrorCode::InvalidArgument, "depth must be at least 1");
  require(gens.size() == gen_labels.size() && pairings.size() == pairing_labels.size(), ErrorCode::DimensionMismatch,
          "one label per matrix");
  ExpressibilityReport rep{depth, {}};
  std::map<std::string, std::size_t> targets;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    rep.entries.push_back({gen_labels[i], std::nullopt});
    targets.emplace(matrix_key(gens[i].matrix()), i);
  }
  std::size_t remaining = gens.size();
  std::set<std::string> seen;
  std::vector<IsometryWord> layer;
  for (std::size_t i = 0; i < pairings.size(); ++i) {
    IsometryWord w({pairings[i]}, {pairing_labels[i]});
    if (seen.insert(matrix_key(w.product().matrix())).second) layer.push_back(std::move(w));
  }
  for (int len = 1; len <= depth && remaining > 0; ++len) {
    for (const auto& w : layer) {
      auto it = targets.find(matrix_key(w.product().matrix()));
      if (it != targets.end() && !rep.entries[it->second].witness) {
        rep.entries[it->second].witness = w;
        --remaining;
      }
    }
    if (len == depth || remaining == 0) break;
    std::vector<IsometryWord> next;
    for (const auto& w : layer)
      for (std::size_t i = 0; i < pairings.size(); ++i) {
        IsometryWord x = w.then(IsometryWord({pairings[i]}, {pairing_labels[i]}));
        if (seen.insert(matrix_key(x.product().matrix())).second) next.push_back(std::move(x));
      }
    layer = std::move(next);
  }
  return rep;
}

}  // namespace selberg
