#include "selberg/poincare/cycles.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numbers>
#include <set>

#include "selberg/error.hpp"
#include "selberg/matcore/json_io.hpp"
#include "selberg/matcore/random.hpp"
#include "selberg/poincare/angles.hpp"

namespace selberg {

namespace {

constexpr unsigned kPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71};

bool in_domain(const ProjPolytope& p, const SymMatrix& y) {
  for (const auto& h : p.halfspaces())
    if (h.evaluate(y).sign() < 0) return false;
  return true;
}

// Exact relative-interior test for a face given its tight half-spaces.
bool in_relative_interior(const ProjPolytope& p, const Face& face, const SymMatrix& y) {
  for (std::size_t h = 0; h < p.halfspaces().size(); ++h) {
    const int s = p.halfspaces()[h].evaluate(y).sign();
    const bool tight = std::binary_search(face.tight.begin(), face.tight.end(), h);
    if (tight ? s != 0 : s <= 0) return false;
  }
  return true;
}

bool maps_generators_to_self(const DomainWithPairing& d, std::size_t face, const Isometry& g) {
  const ProjPolytope& p = d.polytope;
  for (auto idx : d.poset.faces[face].generators) {
    if (idx >= p.vertices().size()) return false;
    const SymMatrix& v = p.vertices()[idx];
    if (!(act(g, v) == v)) return false;
  }
  return true;
}

std::optional<Rational> exact_scale(const SymMatrix& a, const SymMatrix& b) {
  // a = s b for a rational s, when it exists.
  std::optional<Rational> s;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i; j < a.dim(); ++j) {
      const Rational& x = a(i, j).exact();
      const Rational& y = b(i, j).exact();
      if (y == 0) {
        if (x != 0) return std::nullopt;
        continue;
      }
      const Rational r = x / y;
      if (s && *s != r) return std::nullopt;
      s = r;
    }
  return s;
}

}  // namespace

nlohmann::json RidgeCycle::to_json(const DomainWithPairing& d) const {
  nlohmann::json r = nlohmann::json::array();
  nlohmann::json letters = nlohmann::json::array();
  for (std::size_t i = 0; i < ridges.size(); ++i) {
    r.push_back(d.poset.faces[ridges[i]].generators);
    letters.push_back(d.generators.labels()[elements[i]]);
  }
  nlohmann::json j = {{"ridges", r}, {"letters", letters}, {"restricted_order", restricted_order}};
  j["k"] = order_k ? nlohmann::json(*order_k) : nlohmann::json(nullptr);
  return j;
}

std::vector<RidgeCycle> ridge_cycles(const DomainWithPairing& d, const Tolerances& tol) {
  std::vector<RidgeCycle> out;
  if (d.poset.dim < 2) return out;
  const auto ridges = d.poset.of_dim(d.poset.dim - 2);
  std::set<std::size_t> visited;
  const auto& gs = d.generators;
  for (std::size_t r0 : ridges) {
    if (visited.count(r0)) continue;
    const auto f0 = d.facets_of_face(r0);
    if (f0.size() != 2) {
      throw Error(ErrorCode::Degenerate, "ridge " + std::to_string(r0) + " lies in " + std::to_string(f0.size()) + " facets");
    }
    RidgeCycle cyc;
    std::size_t cur = r0;
    std::size_t entry = f0[0];
    const std::size_t limit = 2 * ridges.size() + 2;
    for (std::size_t step = 0;; ++step) {
      if (step > limit) throw Error(ErrorCode::Degenerate, "ridge orbit does not close");
      const auto fs = d.facets_of_face(cur);
      if (fs.size() != 2 || (fs[0] != entry && fs[1] != entry)) {
        throw Error(ErrorCode::Degenerate, "transported ridge is not on the expected facet");
      }
      const std::size_t exit = fs[0] == entry ? fs[1] : fs[0];
      const int partner = d.partner[exit];
      if (partner < 0) throw Error(ErrorCode::Degenerate, "facet " + std::to_string(exit) + " has no partner");
      const std::size_t h = gs.inverse_of(d.facet_element[exit]);
      const int img = face_image(d, cur, gs.elements()[h]);
      if (img < 0) throw Error(ErrorCode::Degenerate, "ridge image is not a face of the domain");
      cyc.ridges.push_back(cur);
      cyc.entry_facets.push_back(entry);
      cyc.exit_facets.push_back(exit);
      cyc.elements.push_back(h);
      visited.insert(cur);
      cur = static_cast<std::size_t>(img);
      entry = static_cast<std::size_t>(partner);
      if (cur == r0 && entry == f0[0]) break;
    }
    std::vector<Isometry> letters;
    std::vector<std::string> labels;
    for (auto e : cyc.elements) {
      letters.push_back(gs.elements()[e]);
      labels.push_back(gs.labels()[e]);
    }
    cyc.word = IsometryWord(letters, labels);
    Isometry power = cyc.word.product();
    for (int m = 1; m <= 64; ++m) {
      if (maps_generators_to_self(d, r0, power)) {
        cyc.restricted_order = m;
        break;
      }
      power = power * cyc.word.product();
    }
    try {
      const AngleSumReport a = angle_sum(cyc, d, 3, tol);
      if (a.passed()) cyc.order_k = a.k;
    } catch (const Error&) {
      // Angles are undefined off the symmetric space; k stays unset.
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

nlohmann::json AngleSumReport::to_json() const {
  nlohmann::json j = {{"sums", sums}, {"failures", failures}, {"passed", passed()}};
  j["k"] = k ? nlohmann::json(*k) : nlohmann::json(nullptr);
  return j;
}

Rational halton(std::uint64_t i, unsigned base) {
  Rational r = 0;
  Rational f(1, base);
  while (i > 0) {
    r += f * Rational(static_cast<long long>(i % base));
    i /= base;
    f /= base;
  }
  return r;
}

AngleSumReport angle_sum(const RidgeCycle& cycle, const DomainWithPairing& d, std::size_t samples,
                         const Tolerances& tol) {
  AngleSumReport rep;
  require(!cycle.ridges.empty(), ErrorCode::InvalidArgument, "empty cycle");
  const ProjPolytope& p = d.polytope;
  const auto& gens = d.poset.faces[cycle.ridges[0]].generators;
  require(gens.size() <= std::size(kPrimes), ErrorCode::Budget, "ridge has too many generators for the sample sequence");
  const std::size_t m = cycle.ridges.size();

  for (std::size_t i = 0; i < samples; ++i) {
    SymMatrix y(p.n());
    for (std::size_t j = 0; j < gens.size(); ++j) {
      const Rational w = Rational(1, 2) + halton(i + 1, kPrimes[j]);
      const std::size_t g = gens[j];
      y += (g < p.vertices().size() ? p.vertices()[g] : p.recession_rays()[g - p.vertices().size()]) * Scalar(w);
    }
    if (!is_positive_definite(y)) {
      rep.failures.push_back("sample " + std::to_string(i) + " is not positive definite");
      continue;
    }
    double sum = 0;
    bool ok = true;
    for (std::size_t t = 0; t <= m && ok; ++t) {
      const std::size_t idx = t % m;
      const SymMatrix ne = d.facet_normal(cycle.entry_facets[idx]);
      const SymMatrix nx = d.facet_normal(cycle.exit_facets[idx]);
      if (!trace_product(ne, y).is_zero() || !trace_product(nx, y).is_zero() || !in_domain(p, y)) {
        rep.failures.push_back("sample " + std::to_string(i) + " left the ridge at step " + std::to_string(t));
        ok = false;
        break;
      }
      if (t == m) break;
      sum += dihedral_angle(SpacePoint::normalize(y), {}, ne, nx);
      y = act(d.generators.elements()[cycle.elements[idx]], y);
    }
    if (ok) rep.sums.push_back(sum);
  }
  if (rep.sums.empty()) {
    rep.failures.push_back("no valid samples");
    return rep;
  }
  std::vector<int> ks;
  for (int k = 1; k <= 12; ++k) {
    const double target = 2 * std::numbers::pi / k;
    if (std::all_of(rep.sums.begin(), rep.sums.end(), [&](double s) { return std::abs(s - target) <= tol.angle; })) {
      ks.push_back(k);
    }
  }
  if (ks.size() == 1) rep.k = ks[0];
  else if (ks.empty()) rep.failures.push_back("angle sums do not match 2*pi/k for any k in 1..12");
  else rep.failures.push_back("angle sums match several k");
  return rep;
}

bool same_cycle(const CycleSignature& a, const CycleSignature& b) {
  const std::size_t m = a.ridges.size();
  if (m != b.ridges.size() || a.letters.size() != m || b.letters.size() != m) return false;
  auto rotated_equal = [m](const CycleSignature& x, const CycleSignature& y) {
    for (std::size_t s = 0; s < m; ++s) {
      bool eq = true;
      for (std::size_t i = 0; i < m && eq; ++i) {
        eq = x.ridges[i] == y.ridges[(i + s) % m] && x.letters[i] == y.letters[(i + s) % m];
      }
      if (eq) return true;
    }
    return false;
  };
  if (rotated_equal(a, b)) return true;
  CycleSignature rev;
  for (std::size_t i = 0; i < m; ++i) {
    rev.ridges.push_back(b.ridges[(m - i) % m]);
    rev.letters.push_back(inverse_label(b.letters[m - 1 - i]));
  }
  return rotated_equal(a, rev);
}

namespace {

struct SatakeMove {
  std::size_t target;
  std::size_t element;
};

std::vector<SatakeMove> satake_moves(const DomainWithPairing& d, const SatakeFace& face,
                                     const std::vector<SatakeFace>& all) {
  std::vector<SatakeMove> out;
  const auto& gs = d.generators;
  for (auto slot : d.facets_of_face(face.face)) {
    const std::size_t h = gs.inverse_of(d.facet_element[slot]);
    const int img = face_image(d, face.face, gs.elements()[h]);
    if (img < 0) continue;
    for (std::size_t k = 0; k < all.size(); ++k)
      if (all[k].face == static_cast<std::size_t>(img)) out.push_back({k, h});
  }
  return out;
}

std::size_t index_in(const std::vector<SatakeFace>& all, const SatakeFace& f) {
  for (std::size_t k = 0; k < all.size(); ++k)
    if (all[k].face == f.face) return k;
  throw Error(ErrorCode::InvalidArgument, "Satake face is not in the list");
}

IsometryWord word_of(const DomainWithPairing& d, const std::vector<std::size_t>& elements) {
  std::vector<Isometry> l;
  std::vector<std::string> s;
  for (auto e : elements) {
    l.push_back(d.generators.elements()[e]);
    s.push_back(d.generators.labels()[e]);
  }
  return IsometryWord(std::move(l), std::move(s));
}

}  // namespace

std::vector<IsometryWord> satake_cycle_words(const DomainWithPairing& d, const SatakeFace& face,
                                             const std::vector<SatakeFace>& all, std::size_t max_length,
                                             std::size_t max_words) {
  const std::size_t start = index_in(all, face);
  std::vector<std::vector<SatakeMove>> moves(all.size());
  for (std::size_t k = 0; k < all.size(); ++k) moves[k] = satake_moves(d, all[k], all);

  struct Walk {
    std::size_t node;
    std::vector<std::size_t> elements;
  };
  std::vector<IsometryWord> found;
  std::vector<Walk> layer{{start, {}}};
  const auto& gs = d.generators;
  for (std::size_t len = 1; len <= max_length && found.size() < max_words; ++len) {
    std::vector<Walk> next;
    for (const auto& w : layer) {
      for (const auto& mv : moves[w.node]) {
        if (!w.elements.empty() && gs.inverse_of(w.elements.back()) == mv.element) continue;
        Walk x{mv.target, w.elements};
        x.elements.push_back(mv.element);
        if (x.node == start) {
          IsometryWord word = word_of(d, x.elements);
          if (!word.product().is_identity() && found.size() < max_words) found.push_back(std::move(word));
        }
        next.push_back(std::move(x));
      }
    }
    layer = std::move(next);
  }
  return found;
}

std::optional<IsometryWord> satake_face_word(const DomainWithPairing& d, const SatakeFace& from,
                                             const SatakeFace& to, const std::vector<SatakeFace>& all,
                                             std::size_t max_length) {
  const std::size_t s = index_in(all, from);
  const std::size_t t = index_in(all, to);
  std::vector<std::optional<std::vector<std::size_t>>> path(all.size());
  path[s] = std::vector<std::size_t>{};
  std::deque<std::size_t> queue{s};
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    if (u == t) break;
    if (path[u]->size() >= max_length) continue;
    for (const auto& mv : satake_moves(d, all[u], all)) {
      if (path[mv.target]) continue;
      auto p = *path[u];
      p.push_back(mv.element);
      path[mv.target] = std::move(p);
      queue.push_back(mv.target);
    }
  }
  if (!path[t]) return std::nullopt;
  if (path[t]->empty()) return IsometryWord();
  return word_of(d, *path[t]);
}

FixedPoint cycle_fixed_point(const SatakeFace& face, const IsometryWord& w, const DomainWithPairing& d) {
  const std::size_t n = d.polytope.n();
  const bool trivial = w.length() == 0;
  const Isometry g = trivial ? Isometry::identity(n) : w.product();
  require(face_image(d, face.face, g) == static_cast<int>(face.face), ErrorCode::PreconditionViolated,
          "word does not map the Satake face to itself");
  const SpacePoint& x = d.generators.center();
  const Matrix& u = face.component.basis();
  const SymMatrix inner = congruence(u, x.inverse());
  const SymMatrix minimizer = trace_normalized(congruence(u.transpose(), inverse(inner)));

  if (act(g, minimizer) == minimizer) return {SatakePoint::from(minimizer), "minimizer", 1};

  const Face& f = d.poset.faces[face.face];
  SymMatrix start = minimizer;
  if (!in_relative_interior(d.polytope, f, minimizer)) {
    SymMatrix bary(n);
    for (auto idx : f.generators) bary += d.polytope.vertices()[idx];
    start = trace_normalized(bary);
  }
  SymMatrix sum = start;
  SymMatrix cur = act(g, start);
  for (int m = 1; m <= 64; ++m) {
    if (cur == start) return {SatakePoint::from(trace_normalized(sum)), "orbit-barycenter", m};
    if (auto s = exact_scale(cur, start); s && *s != 1) {
      throw Error(ErrorCode::Budget, "orbit returns with scaling factor " + to_string(*s));
    }
    sum += cur;
    cur = act(g, cur);
  }
  throw Error(ErrorCode::Budget, "restricted action shows no finite order within 64 powers");
}

bool InvarianceReport::passed() const {
  if (mode == "invariance") return exact_failures == 0 && max_relative_deviation <= 1e-10;
  return scaling_constant.has_value() && scaling_spread <= 1e-10;
}

nlohmann::json InvarianceReport::to_json() const {
  nlohmann::json j = {{"mode", mode},
                      {"trials", trials},
                      {"exact_checks", exact_checks},
                      {"exact_failures", exact_failures},
                      {"max_relative_deviation", max_relative_deviation},
                      {"scaling_spread", scaling_spread},
                      {"notes", notes},
                      {"passed", passed()}};
  j["scaling_constant"] = scaling_constant ? nlohmann::json(*scaling_constant) : nlohmann::json(nullptr);
  return j;
}

InvarianceReport invariance_check(const IsometryWord& w, const SatakePoint& alpha,
                                  const std::optional<BoundaryComponent>& pi, int trials, std::uint64_t seed) {
  const std::size_t n = alpha.dim();
  const Isometry g = w.length() == 0 ? Isometry::identity(n) : w.product();
  InvarianceReport rep;
  rep.trials = trials;
  Rng rng(seed);
  const SymMatrix moved = act(g, alpha.matrix());
  bool fixed;
  if (moved.is_exact()) {
    fixed = moved == alpha.matrix();
  } else {
    fixed = (moved.to_eigen() - alpha.matrix().to_eigen()).norm() <= 1e-10 * alpha.matrix().to_eigen().norm();
  }

  if (fixed) {
    rep.mode = "invariance";
    if (pi) {
      const BoundaryComponent img = transform(g, *pi);
      if (!(component_leq(img, *pi) && component_leq(*pi, img))) {
        rep.notes.push_back("word does not preserve the component; type-k equality skipped");
      }
    }
    for (int t = 0; t < trials; ++t) {
      const SpacePoint y = random_rational_point(n, rng);
      const SpacePoint z = random_rational_point(n, rng);
      const SpacePoint wy = act(g, y);
      const BusemannSpec s0 = BusemannSpec::type0(alpha, z);
      const Scalar b1 = busemann0(s0, y);
      const Scalar b2 = busemann0(s0, wy);
      ++rep.exact_checks;
      if (b1.is_exact() && b2.is_exact()) {
        if (b1 != b2) ++rep.exact_failures;
      } else {
        rep.max_relative_deviation =
            std::max(rep.max_relative_deviation, std::abs(b1.to_double() - b2.to_double()) / std::abs(b1.to_double()));
      }
      if (pi && rep.notes.empty()) {
        const BusemannSpec sk = BusemannSpec::type_k(alpha, *pi, z);
        const double v1 = busemann_k(sk, y);
        const double v2 = busemann_k(sk, wy);
        rep.max_relative_deviation = std::max(rep.max_relative_deviation, std::abs(v1 - v2) / std::abs(v1));
      }
    }
    if (rep.exact_failures > 0) rep.notes.push_back(std::to_string(rep.exact_failures) + " exact equalities failed");
    return rep;
  }

  rep.mode = "scaling";
  const SatakePoint target = SatakePoint::from(moved);
  const SpacePoint x = SpacePoint::identity(n);
  std::optional<BusemannSpec> from;
  std::optional<BusemannSpec> to;
  if (pi) {
    from = BusemannSpec::type_k(alpha, *pi, x);
    to = BusemannSpec::type_k(target, transform(g, *pi), x);
  } else {
    from = BusemannSpec::type0(alpha, x);
    to = BusemannSpec::type0(target, x);
  }
  double lo = 0;
  double hi = 0;
  double mean = 0;
  for (int t = 0; t < trials; ++t) {
    const SpacePoint y = random_rational_point(n, rng);
    const double c = busemann(*to, act(g, y)) / busemann(*from, y);
    if (t == 0) lo = hi = c;
    lo = std::min(lo, c);
    hi = std::max(hi, c);
    mean += c;
  }
  if (trials > 0) {
    mean /= trials;
    rep.scaling_constant = mean;
    rep.scaling_spread = (hi - lo) / std::abs(mean);
  }
  return rep;
}

}  // namespace selberg
