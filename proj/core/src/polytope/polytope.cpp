#include "selberg/polytope/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "selberg/error.hpp"
#include "selberg/matcore/json_io.hpp"

namespace selberg {

namespace {

SymMatrix canonicalize(const SymMatrix& a) {
  const std::size_t n = a.dim();
  if (a.is_exact()) {
    RVec c = primitive(a.coordinates());
    for (const auto& x : c) {
      if (x == 0) continue;
      if (x < 0)
        for (auto& y : c) y = -y;
      break;
    }
    return SymMatrix::from_coordinates(n, c);
  }
  double norm = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) norm += a(i, j).to_double() * a(i, j).to_double();
  norm = std::sqrt(norm);
  double s = 1.0 / norm;
  for (std::size_t i = 0; i < n && s != 0; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const double v = a(i, j).to_double();
      if (v != 0) {
        if (v < 0) s = -s;
        i = n;
        break;
      }
    }
  return a.to_float() * Scalar(s);
}

RVec identity_form(std::size_t n) { return SymMatrix::identity(n).trace_form(); }

std::size_t generator_rank(const std::vector<const RVec*>& rows) {
  RMat m;
  for (const auto* r : rows) m.push_back(*r);
  return rank_rational(std::move(m));
}

}  // namespace

HyperplaneNormal HyperplaneNormal::from(const SymMatrix& a, bool require_indefinite) {
  require(!a.is_zero(), ErrorCode::ZeroMatrix, "hyperplane normal is zero");
  if (require_indefinite) {
    require(is_indefinite(a), ErrorCode::PreconditionViolated,
            "hyperplane normal is semidefinite, so its hyperplane misses the symmetric space");
  }
  return HyperplaneNormal(canonicalize(a));
}

HalfSpace HalfSpace::from_oriented(const SymMatrix& a, bool require_indefinite) {
  HyperplaneNormal nrm = HyperplaneNormal::from(a, require_indefinite);
  // Compare signs on the first nonzero entry.
  int orientation = 1;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    bool done = false;
    for (std::size_t j = i; j < a.dim(); ++j) {
      if (!a(i, j).is_zero()) {
        orientation = (a(i, j).sign() == nrm.matrix()(i, j).sign()) ? 1 : -1;
        done = true;
        break;
      }
    }
    if (done) break;
  }
  return HalfSpace{std::move(nrm), orientation};
}

SymMatrix HalfSpace::oriented() const { return normal.matrix() * Scalar(orientation); }

Scalar HalfSpace::evaluate(const SymMatrix& y) const { return trace_product(oriented(), y); }

HyperplaneNormal bisector_normal(const SpacePoint& x, const Isometry& g) {
  const SpacePoint gx = act(g, x);
  const SymMatrix a = x.inverse() - gx.inverse();
  require(!a.is_zero(), ErrorCode::PreconditionViolated, "g stabilizes the center");
  return HyperplaneNormal::from(a, x.is_exact() && g.is_exact());
}

HalfSpace bisector_halfspace(const SpacePoint& x, const Isometry& g) {
  const SpacePoint gx = act(g, x);
  const SymMatrix a = gx.inverse() - x.inverse();
  require(!a.is_zero(), ErrorCode::PreconditionViolated, "g stabilizes the center");
  HalfSpace h = HalfSpace::from_oriented(a, x.is_exact() && g.is_exact());
  require(h.evaluate(x.matrix()).sign() > 0, ErrorCode::Degenerate, "center lies on the bisector");
  return h;
}

ProjPolytope ProjPolytope::from_halfspaces(std::size_t n, std::vector<HalfSpace> halfspaces) {
  require(n > 0, ErrorCode::DimensionMismatch, "n must be positive");
  const std::size_t d = n * (n + 1) / 2;
  std::vector<RVec> constraints;
  constraints.push_back(identity_form(n));
  for (const auto& h : halfspaces) {
    require(h.normal.dim() == n, ErrorCode::DimensionMismatch, "half-space dimension mismatch");
    require(h.normal.matrix().is_exact(), ErrorCode::InvalidArgument, "polytope construction needs exact half-spaces");
    constraints.push_back(h.oriented().trace_form());
  }
  const ConeGenerators cone = double_description(constraints, d);
  const RVec trace_form = constraints[0];

  // Sort generators canonically: vertices (positive trace) by normalized
  // coordinates, then rays.
  struct Gen {
    RVec coords;
    boost::dynamic_bitset<> tight;
    bool vertex;
  };
  std::vector<Gen> gens;
  for (std::size_t r = 0; r < cone.rays.size(); ++r) {
    const Rational t = dot(trace_form, cone.rays[r]);
    RVec c = cone.rays[r];
    if (t > 0)
      for (auto& x : c) x /= t;
    gens.push_back({std::move(c), cone.incidence[r], t > 0});
  }
  std::stable_sort(gens.begin(), gens.end(), [](const Gen& a, const Gen& b) {
    if (a.vertex != b.vertex) return a.vertex;
    return std::greater<>()(a.coords, b.coords);
  });

  ProjPolytope p;
  p.n_ = n;
  p.halfspaces_ = std::move(halfspaces);
  for (const auto& l : cone.lineality) p.lineality_.push_back(SymMatrix::from_coordinates(n, l));
  std::vector<const RVec*> all_rows;
  for (const auto& g : gens) {
    if (g.vertex) p.vertices_.push_back(SymMatrix::from_coordinates(n, g.coords));
    else p.rays_.push_back(SymMatrix::from_coordinates(n, g.coords));
  }
  require(!p.vertices_.empty(), ErrorCode::Degenerate, "the half-spaces have empty intersection in the chart");
  for (const auto& g : gens) all_rows.push_back(&g.coords);
  for (const auto& l : cone.lineality) all_rows.push_back(&l);
  const std::size_t cone_dim = generator_rank(all_rows);
  p.dim_ = static_cast<int>(cone_dim) - 1;

  const std::size_t m = p.halfspaces_.size();
  p.incidence_.resize(m);
  std::map<std::vector<std::size_t>, std::size_t> seen;
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<const RVec*> rows;
    for (std::size_t gidx = 0; gidx < gens.size(); ++gidx) {
      if (gens[gidx].tight.test(i + 1)) {
        p.incidence_[i].push_back(gidx);
        rows.push_back(&gens[gidx].coords);
      }
    }
    if (p.incidence_[i].size() == gens.size()) {
      p.implicit_.push_back(i);
      continue;
    }
    for (const auto& l : cone.lineality) rows.push_back(&l);
    if (generator_rank(rows) + 1 != cone_dim) {
      p.redundant_.push_back(i);
      continue;
    }
    if (seen.count(p.incidence_[i])) {
      p.redundant_.push_back(i);
      continue;
    }
    seen[p.incidence_[i]] = i;
    p.facets_.push_back(i);
  }

  if (!p.bounded()) {
    p.warnings_.push_back("unbounded in the trace-1 chart: " + std::to_string(p.rays_.size()) +
                          " recession rays, lineality dimension " + std::to_string(p.lineality_.size()));
  }
  if (!p.implicit_.empty()) {
    p.warnings_.push_back(std::to_string(p.implicit_.size()) + " half-spaces hold with equality on the whole polytope");
  }
  return p;
}

ProjPolytope ProjPolytope::from_vertices(std::size_t n, const std::vector<SymMatrix>& points) {
  require(!points.empty(), ErrorCode::Degenerate, "no points given");
  const std::size_t d = n * (n + 1) / 2;
  std::vector<RVec> constraints;
  std::vector<SymMatrix> normalized;
  for (const auto& pt : points) {
    require(pt.dim() == n, ErrorCode::DimensionMismatch, "vertex dimension mismatch");
    require(pt.is_exact(), ErrorCode::InvalidArgument, "polytope construction needs exact vertices");
    require(trace(pt).sign() > 0, ErrorCode::InvalidArgument, "vertices must have positive trace");
    normalized.push_back(trace_normalized(pt));
    constraints.push_back(normalized.back().coordinates());
  }
  const ConeGenerators dual = double_description(constraints, d);
  std::vector<HalfSpace> hs;
  bool semidefinite = false;
  for (const auto& c : dual.rays) {
    const SymMatrix a = SymMatrix::from_trace_form(n, c);
    semidefinite = semidefinite || !is_indefinite(a);
    hs.push_back(HalfSpace::from_oriented(a, false));
  }
  for (const auto& c : dual.lineality) {
    const SymMatrix a = SymMatrix::from_trace_form(n, c);
    hs.push_back(HalfSpace::from_oriented(a, false));
    hs.push_back(HalfSpace::from_oriented(-a, false));
  }
  ProjPolytope p = from_halfspaces(n, std::move(hs));
  for (const auto& v : p.vertices_) {
    require(std::find(normalized.begin(), normalized.end(), v) != normalized.end(), ErrorCode::Degenerate,
            "hull computation produced a vertex outside the input");
  }
  const std::size_t dropped = normalized.size() - p.vertices_.size();
  if (dropped > 0) p.warnings_.push_back(std::to_string(dropped) + " input points are not vertices of their hull");
  if (semidefinite) p.warnings_.push_back("some facet normals are semidefinite");
  return p;
}

int ProjPolytope::find_vertex(const SymMatrix& q) const {
  if (!q.is_exact() || trace(q).sign() <= 0) return -1;
  const SymMatrix t = trace_normalized(q);
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (vertices_[i] == t) return static_cast<int>(i);
  return -1;
}

int ProjPolytope::facet_slot(std::size_t halfspace) const {
  for (std::size_t s = 0; s < facets_.size(); ++s)
    if (facets_[s] == halfspace) return static_cast<int>(s);
  return -1;
}

nlohmann::json ProjPolytope::to_json() const {
  nlohmann::json j;
  j["n"] = n_;
  j["dim"] = dim_;
  j["bounded"] = bounded();
  auto list = [](const std::vector<SymMatrix>& v) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& m : v) a.push_back(sym_to_json(m));
    return a;
  };
  nlohmann::json hs = nlohmann::json::array();
  for (const auto& h : halfspaces_) hs.push_back(sym_to_json(h.oriented()));
  j["halfspaces"] = hs;
  j["vertices"] = list(vertices_);
  j["recession_rays"] = list(rays_);
  j["lineality_dim"] = lineality_.size();
  j["facets"] = facets_;
  j["redundant"] = redundant_;
  j["implicit_equalities"] = implicit_;
  j["warnings"] = warnings_;
  return j;
}

ProjPolytope ProjPolytope::from_json(const nlohmann::json& j) {
  require(j.is_object(), ErrorCode::Parse, "polytope JSON must be an object");
  const bool has_h = j.contains("halfspaces") && !j.at("halfspaces").empty();
  const bool has_v = j.contains("vertices") && !j.at("vertices").empty();
  require(has_h || has_v, ErrorCode::Parse, "polytope JSON needs \"halfspaces\" or \"vertices\"");
  std::vector<SymMatrix> verts;
  if (has_v)
    for (const auto& v : j.at("vertices")) verts.push_back(sym_from_json(v));
  if (!has_h) return from_vertices(verts.front().dim(), verts);

  std::vector<HalfSpace> hs;
  std::size_t n = 0;
  for (const auto& h : j.at("halfspaces")) {
    const SymMatrix a = sym_from_json(h);
    n = a.dim();
    hs.push_back(HalfSpace::from_oriented(a, false));
  }
  ProjPolytope p = from_halfspaces(n, std::move(hs));
  if (has_v) {
    bool match = verts.size() == p.vertices_.size();
    for (const auto& v : verts) match = match && p.find_vertex(v) >= 0;
    require(match, ErrorCode::Degenerate, "listed vertices do not match the half-space description");
  }
  return p;
}

std::vector<std::size_t> FacePoset::of_dim(int d) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < faces.size(); ++i)
    if (faces[i].dim == d) out.push_back(i);
  return out;
}

std::vector<std::size_t> FacePoset::f_vector() const {
  std::vector<std::size_t> f(dim > 0 ? static_cast<std::size_t>(dim) : 0, 0);
  for (const auto& face : faces)
    if (face.dim >= 0 && face.dim < dim) ++f[static_cast<std::size_t>(face.dim)];
  return f;
}

int FacePoset::find(std::vector<std::size_t> generators) const {
  std::sort(generators.begin(), generators.end());
  for (std::size_t i = 0; i < faces.size(); ++i)
    if (faces[i].generators == generators) return static_cast<int>(i);
  return -1;
}

nlohmann::json FacePoset::to_json() const {
  nlohmann::json by_dim = nlohmann::json::array();
  for (int d = 0; d <= dim; ++d) {
    nlohmann::json layer = nlohmann::json::array();
    for (auto i : of_dim(d)) layer.push_back(faces[i].generators);
    by_dim.push_back(std::move(layer));
  }
  return {{"dim", dim}, {"bounded", bounded}, {"f_vector", f_vector()}, {"faces_by_dim", by_dim}};
}

FacePoset face_poset(const ProjPolytope& p) {
  const std::size_t nv = p.vertices().size();
  const std::size_t ng = p.generator_count();
  require(nv > 0, ErrorCode::Degenerate, "empty polytope");

  std::vector<RVec> coords;
  for (const auto& v : p.vertices()) coords.push_back(v.coordinates());
  for (const auto& r : p.recession_rays()) coords.push_back(r.coordinates());
  std::vector<RVec> lin;
  for (const auto& l : p.lineality()) lin.push_back(l.coordinates());

  auto to_bits = [ng](const std::vector<std::size_t>& idx) {
    boost::dynamic_bitset<> b(ng);
    for (auto i : idx) b.set(i);
    return b;
  };
  auto has_vertex = [nv](const boost::dynamic_bitset<>& b) {
    for (std::size_t i = 0; i < nv; ++i)
      if (b.test(i)) return true;
    return false;
  };

  std::vector<boost::dynamic_bitset<>> facet_sets;
  for (auto h : p.facets()) facet_sets.push_back(to_bits(p.incidence(h)));

  std::set<boost::dynamic_bitset<>> found;
  std::vector<boost::dynamic_bitset<>> queue;
  for (const auto& f : facet_sets) {
    if (has_vertex(f) && found.insert(f).second) queue.push_back(f);
  }
  for (std::size_t q = 0; q < queue.size(); ++q) {
    for (const auto& f : facet_sets) {
      boost::dynamic_bitset<> meet = queue[q] & f;
      if (has_vertex(meet) && found.insert(meet).second) queue.push_back(meet);
    }
  }
  boost::dynamic_bitset<> all(ng);
  all.set();
  found.insert(all);

  FacePoset poset;
  poset.dim = p.dim();
  poset.bounded = p.bounded();
  for (const auto& b : found) {
    Face face;
    RMat rows;
    for (std::size_t i = 0; i < ng; ++i)
      if (b.test(i)) {
        face.generators.push_back(i);
        rows.push_back(coords[i]);
      }
    for (const auto& l : lin) rows.push_back(l);
    face.dim = static_cast<int>(rank_rational(std::move(rows))) - 1;
    const boost::dynamic_bitset<> gens = b;
    for (std::size_t h = 0; h < p.halfspaces().size(); ++h)
      if (gens.is_subset_of(to_bits(p.incidence(h)))) face.tight.push_back(h);
    poset.faces.push_back(std::move(face));
  }
  std::sort(poset.faces.begin(), poset.faces.end(), [](const Face& a, const Face& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.generators < b.generators;
  });
  return poset;
}

std::vector<SatakeFace> satake_faces(const ProjPolytope& p, const FacePoset& poset) {
  const std::size_t nv = p.vertices().size();
  const std::size_t n = p.n();
  std::vector<bool> singular_psd(nv);
  for (std::size_t i = 0; i < nv; ++i) {
    const SymMatrix& v = p.vertices()[i];
    singular_psd[i] = is_positive_semidefinite(v) && rank(v) < n;
  }
  std::vector<SatakeFace> out;
  for (std::size_t f = 0; f < poset.faces.size(); ++f) {
    const Face& face = poset.faces[f];
    bool ok = !face.generators.empty();
    SymMatrix sum(n);
    for (auto g : face.generators) {
      if (g >= nv || !singular_psd[g]) {
        ok = false;
        break;
      }
      sum += p.vertices()[g];
    }
    if (!ok) continue;
    const std::size_t r = rank(sum);
    if (r >= n) continue;
    out.push_back({f, BoundaryComponent::from_span(sum.to_matrix()), r});
  }
  return out;
}

bool finite_volume(const ProjPolytope& p, std::string* why) {
  if (!p.bounded()) {
    if (why) *why = "polytope is unbounded in the trace-1 chart (recession directions present)";
    return false;
  }
  for (std::size_t i = 0; i < p.vertices().size(); ++i) {
    if (!is_positive_semidefinite(p.vertices()[i])) {
      if (why) *why = "vertex " + std::to_string(i) + " is not positive semidefinite";
      return false;
    }
  }
  if (why) *why = "bounded with all vertices positive semidefinite";
  return true;
}

}  // namespace selberg
