#include "selberg/harness/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <numbers>
#include <set>

#include "selberg/error.hpp"
#include "selberg/harness/words.hpp"
#include "selberg/matcore/json_io.hpp"

namespace selberg {

bool VerifyReport::passed() const {
  return !items.empty() && std::all_of(items.begin(), items.end(), [](const VerifyItem& i) { return i.passed; });
}

const VerifyItem* VerifyReport::find(const std::string& name) const {
  for (const auto& i : items)
    if (i.name == name) return &i;
  return nullptr;
}

nlohmann::json VerifyReport::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& i : items) {
    arr.push_back({{"name", i.name}, {"passed", i.passed}, {"summary", i.summary}, {"detail", i.detail},
                   {"seconds", i.seconds}});
  }
  return {{"passed", passed()}, {"items", arr}};
}

std::vector<int> facet_labels(const DomainWithPairing& d, const std::vector<SymMatrix>& printed) {
  // Map printed vertices to polytope vertex indices.
  std::vector<int> index;
  for (const auto& p : printed) {
    int v = -1;
    try {
      v = d.polytope.find_vertex(p);
    } catch (const Error&) {
    }
    index.push_back(v);
  }
  std::vector<int> out;
  for (std::size_t s = 0; s < d.facet_count(); ++s) {
    const auto& gens = d.poset.faces[d.face_of_facet(s)].generators;
    int missing = 0;
    int count = 0;
    for (std::size_t i = 0; i < index.size(); ++i) {
      if (index[i] < 0 || !std::binary_search(gens.begin(), gens.end(), static_cast<std::size_t>(index[i]))) {
        missing = static_cast<int>(i) + 1;
        ++count;
      }
    }
    out.push_back(count == 1 && gens.size() + 1 == printed.size() ? missing : 0);
  }
  return out;
}

std::string ridge_label(const DomainWithPairing& d, std::size_t ridge, const std::vector<int>& labels) {
  std::vector<int> ls;
  for (auto s : d.facets_of_face(ridge)) ls.push_back(labels[s]);
  std::sort(ls.begin(), ls.end());
  std::string out = "r";
  for (int l : ls) out += std::to_string(l);
  return out;
}

namespace {

using Clock = std::chrono::steady_clock;

class Runner {
 public:
  explicit Runner(VerifyReport& r) : report_(r) {}

  // Runs one item; exceptions become failures carrying the message.
  void item(const std::string& name, const std::function<bool(VerifyItem&)>& body) {
    VerifyItem it;
    it.name = name;
    const auto start = Clock::now();
    try {
      it.passed = body(it);
    } catch (const std::exception& e) {
      it.passed = false;
      it.summary = std::string("error: ") + e.what();
    }
    it.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    report_.items.push_back(std::move(it));
  }

  void skip(const std::string& name, const std::string& why) {
    report_.items.push_back({name, false, "not run: " + why, nullptr, 0});
  }

 private:
  VerifyReport& report_;
};

}  // namespace

VerifyReport verify_example(const Corpus61& corpus, const VerifyOptions& options) {
  VerifyReport report;
  Runner run(report);

  run.item("provenance", [&](VerifyItem& it) {
    const std::uint64_t h = corpus.provenance_hash();
    char buf[32];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    it.detail = {{"hash", buf}};
    it.summary = h == kCorpusHash ? "corpus hash matches" : "corpus differs from the pinned data";
    return h == kCorpusHash;
  });

  run.item("determinants", [&](VerifyItem& it) {
    bool ok = true;
    for (const auto& [name, g] : corpus.alphabet()) {
      const Scalar d = determinant(g.matrix());
      it.detail[name] = d.to_string();
      ok = ok && d.is_exact() && d.exact() == 1;
    }
    it.summary = ok ? "all determinants are exactly 1" : "a determinant differs from 1";
    return ok;
  });

  run.item("relators", [&](VerifyItem& it) {
    bool ok = true;
    const auto alpha = corpus.alphabet();
    std::vector<std::string> all = corpus.presentation_relators;
    all.insert(all.end(), corpus.parabolic_relators.begin(), corpus.parabolic_relators.end());
    for (const auto& r : all) {
      const bool id = relator_check(parse_word(r, alpha));
      it.detail[r] = id;
      ok = ok && id;
    }
    it.summary = ok ? "all relators are the identity" : "a relator is not the identity";
    return ok;
  });

  run.item("unipotent", [&](VerifyItem& it) {
    bool ok = true;
    for (const auto& [name, g] : std::vector<std::pair<std::string, Isometry>>{{"u", corpus.u}, {"v", corpus.v}, {"w", corpus.w}}) {
      const bool u = is_unipotent(g);
      it.detail[name] = u;
      ok = ok && u;
    }
    it.summary = ok ? "(g - I)^3 = 0 for u, v, w" : "a parabolic generator is not unipotent";
    return ok;
  });

  std::optional<DomainWithPairing> domain;
  run.item("domain", [&](VerifyItem& it) {
    domain = build_domain(corpus.generator_set());
    const auto& p = domain->polytope;
    std::set<std::string> built;
    std::set<std::string> printed;
    for (const auto& v : p.vertices()) built.insert(sym_to_json(v).dump());
    bool trace_ok = true;
    for (const auto& v : corpus.vertices) {
      if (trace(v).is_zero()) {
        trace_ok = false;
        continue;
      }
      printed.insert(sym_to_json(trace_normalized(v)).dump());
    }
    const bool same = trace_ok && p.bounded() && built == printed;
    // Incidence: tr(A alpha) = 0 exactly on the facet, > 0 off it.
    bool incidence = true;
    for (std::size_t s = 0; s < domain->facet_count(); ++s) {
      const SymMatrix n = domain->facet_normal(s);
      const auto& gens = domain->poset.faces[domain->face_of_facet(s)].generators;
      for (std::size_t v = 0; v < p.vertices().size(); ++v) {
        const int sign = trace_product(n, p.vertices()[v]).sign();
        const bool on = std::binary_search(gens.begin(), gens.end(), v);
        if (on ? sign != 0 : sign <= 0) incidence = false;
      }
    }
    it.detail = {{"vertices", p.vertices().size()}, {"facets", domain->facet_count()}, {"bounded", p.bounded()},
                 {"vertex_set_matches", same}, {"incidence_exact", incidence}};
    it.summary = same && incidence ? "vertex set equals the printed vertices; incidences exact"
                                   : "built domain differs from the printed simplex";
    return same && incidence;
  });
  if (!domain) {
    for (const char* n : {"f_vector", "pairings", "exactness", "cycles", "angle_sums", "finite_volume",
                          "satake_census", "expressibility", "edge_invariance", "edge_scaling"}) {
      run.skip(n, "domain construction failed");
    }
    return report;
  }
  const DomainWithPairing& d = *domain;
  const std::vector<int> labels = facet_labels(d, corpus.vertices);

  run.item("f_vector", [&](VerifyItem& it) {
    const auto f = d.poset.f_vector();
    it.detail = {{"f_vector", f}};
    const bool ok = f == std::vector<std::size_t>{6, 15, 20, 15, 6};
    it.summary = ok ? "f-vector (6, 15, 20, 15, 6)" : "unexpected f-vector";
    return ok;
  });

  run.item("pairings", [&](VerifyItem& it) {
    bool ok = true;
    it.detail = nlohmann::json::array();
    auto slot_of = [&](int label) -> int {
      for (std::size_t s = 0; s < labels.size(); ++s)
        if (labels[s] == label) return static_cast<int>(s);
      return -1;
    };
    for (const auto& ps : corpus.pairings) {
      const int from = slot_of(ps.from);
      const int to = slot_of(ps.to);
      bool maps = false;
      bool bisector = false;
      if (from >= 0 && to >= 0) {
        maps = face_image(d, d.face_of_facet(static_cast<std::size_t>(from)), ps.element) ==
               static_cast<int>(d.face_of_facet(static_cast<std::size_t>(to)));
        // F_to lies in Bis(X, g.X) for the slot's element.
        bisector = d.generators.elements()[d.facet_element[static_cast<std::size_t>(to)]] == ps.element;
      }
      it.detail.push_back({{"element", ps.label}, {"from", ps.from}, {"to", ps.to}, {"maps", maps}, {"bisector", bisector}});
      ok = ok && maps && bisector;
    }
    it.summary = ok ? "each slot element maps its facet onto the stated facet" : "a pairing slot does not map as stated";
    return ok;
  });

  run.item("exactness", [&](VerifyItem& it) {
    const ExactnessReport r = check_exact(d);
    it.detail = r.to_json();
    // The pairing slots must also agree with the domain's own pairing.
    bool slots = true;
    for (const auto& ps : corpus.pairings) {
      bool found = false;
      for (std::size_t s = 0; s < d.facet_count(); ++s) {
        if (labels[s] != ps.to || d.partner[s] < 0) continue;
        const int p = d.partner[s];
        found = labels[static_cast<std::size_t>(p)] == ps.from &&
                d.generators.elements()[d.facet_element[s]] == ps.element;
      }
      slots = slots && found;
    }
    it.detail["slots_consistent"] = slots;
    const bool ok = r.passed() && slots;
    it.summary = ok ? "all pairings verified exactly" : "exactness failed";
    return ok;
  });

  auto signature = [&](const RidgeCycle& c) {
    CycleSignature sig;
    for (std::size_t i = 0; i < c.ridges.size(); ++i) {
      sig.ridges.push_back(ridge_label(d, c.ridges[i], labels));
      sig.letters.push_back(d.generators.labels()[c.elements[i]]);
    }
    return sig;
  };

  std::vector<RidgeCycle> cycles;
  run.item("cycles", [&](VerifyItem& it) {
    cycles = ridge_cycles(d, options.tol);
    std::vector<bool> used(corpus.cycles.size(), false);
    bool ok = cycles.size() == corpus.cycles.size();
    it.detail["found"] = nlohmann::json::array();
    for (const auto& c : cycles) {
      const CycleSignature sig = signature(c);
      it.detail["found"].push_back({{"ridges", sig.ridges}, {"letters", sig.letters}});
      bool matched = false;
      for (std::size_t e = 0; e < corpus.cycles.size() && !matched; ++e) {
        if (!used[e] && same_cycle(sig, corpus.cycles[e])) used[e] = matched = true;
      }
      ok = ok && matched;
    }
    it.summary = ok ? std::to_string(cycles.size()) + " cycles match the expected list"
                    : "cycles differ from the expected list";
    return ok;
  });

  run.item("angle_sums", [&](VerifyItem& it) {
    if (cycles.empty() || corpus.cycles.empty()) throw Error(ErrorCode::PreconditionViolated, "no cycles");
    bool ok = true;
    it.detail = nlohmann::json::array();
    for (const auto& c : cycles) {
      const AngleSumReport a = angle_sum(c, d, options.angle_samples, options.tol);
      const std::string first = ridge_label(d, c.ridges[0], labels);
      // The first listed cycle closes up with total angle 2 pi, the others with pi.
      const bool is_first = same_cycle(signature(c), corpus.cycles.front());
      const double target = is_first ? 2 * std::numbers::pi : std::numbers::pi;
      bool within = a.sums.size() == options.angle_samples;
      for (double s : a.sums) within = within && std::abs(s - target) <= options.tol.angle;
      nlohmann::json e = a.to_json();
      e["start"] = first;
      e["target"] = target;
      if (is_first && !within) {
        e["note"] =
            "Riemannian sum differs from 2 pi on the cycle whose condition is stated for the invariant angle "
            "function; the invariant angle is not implemented";
      }
      it.detail.push_back(e);
      ok = ok && within && a.passed();
    }
    it.summary = ok ? "sums 2 pi (one cycle) and pi (four cycles) at every sample" : "angle sums off target";
    return ok;
  });

  run.item("finite_volume", [&](VerifyItem& it) {
    std::string why_printed;
    std::string why_built;
    const bool printed = finite_volume(ProjPolytope::from_vertices(3, corpus.vertices), &why_printed);
    const bool built = finite_volume(d.polytope, &why_built);
    it.detail = {{"printed_simplex", printed}, {"built_domain", built}};
    if (!printed) it.detail["printed_reason"] = why_printed;
    if (!built) it.detail["built_reason"] = why_built;
    it.summary = printed && built ? "all vertices positive semidefinite" : "a vertex is not positive semidefinite";
    return printed && built;
  });

  std::vector<SatakeFace> satake;
  run.item("satake_census", [&](VerifyItem& it) {
    satake = satake_faces(d.polytope, d.poset);
    std::map<std::string, std::size_t> census;
    for (const auto& s : satake)
      ++census["dim" + std::to_string(d.poset.faces[s.face].dim) + "_type" + std::to_string(s.type)];
    it.detail = census;
    const std::map<std::string, std::size_t> want = {{"dim0_type1", 6}, {"dim1_type2", 15}, {"dim2_type2", 4}};
    const bool ok = census == want;
    it.summary = ok ? "6 vertices, 15 edges and 4 triangles on the boundary" : "unexpected Satake faces";
    return ok;
  });

  run.item("expressibility", [&](VerifyItem& it) {
    std::vector<Isometry> pairings;
    std::vector<std::string> plabels;
    for (std::size_t s = 0; s < d.facet_count(); ++s) {
      pairings.push_back(d.generators.elements()[d.facet_element[s]]);
      plabels.push_back(d.generators.labels()[d.facet_element[s]]);
    }
    const ExpressibilityReport r = expressibility({corpus.a, corpus.b, corpus.c}, {"a", "b", "c"}, pairings, plabels, 1);
    it.detail = r.to_json();
    it.summary = r.passed() ? "a, b, c are facet pairings" : "a generator is not a pairing word";
    return r.passed();
  });

  std::vector<SatakeFace> edges;
  for (const auto& s : satake)
    if (d.poset.faces[s.face].dim == 1) edges.push_back(s);

  run.item("edge_invariance", [&](VerifyItem& it) {
    if (edges.empty()) throw Error(ErrorCode::PreconditionViolated, "no Satake edges");
    bool ok = true;
    it.detail = nlohmann::json::array();
    for (std::size_t e = 0; e < edges.size(); ++e) {
      const auto words = satake_cycle_words(d, edges[e], satake, 6, 1);
      nlohmann::json entry = {{"edge", d.poset.faces[edges[e].face].generators}};
      if (words.empty()) {
        entry["error"] = "no cycle word";
        ok = false;
      } else {
        const FixedPoint fp = cycle_fixed_point(edges[e], words[0], d);
        const InvarianceReport r =
            invariance_check(words[0], fp.alpha, std::nullopt, options.invariance_trials, options.seed + e);
        entry["word"] = words[0].to_string();
        entry["fixed_point"] = sym_to_json(fp.alpha.matrix());
        entry["method"] = fp.method;
        entry["report"] = r.to_json();
        ok = ok && r.mode == "invariance" && r.passed() && r.exact_checks == options.invariance_trials;
      }
      it.detail.push_back(entry);
    }
    it.summary = ok ? "type-0 invariance exact on every Satake edge" : "invariance failed on an edge";
    return ok;
  });

  run.item("edge_scaling", [&](VerifyItem& it) {
    if (edges.empty()) throw Error(ErrorCode::PreconditionViolated, "no Satake edges");
    bool ok = true;
    double worst = 0;
    it.detail["pairs"] = nlohmann::json::array();
    for (std::size_t e = 0; e < edges.size(); ++e) {
      // First other edge reachable from this one.
      std::optional<IsometryWord> w;
      std::size_t target = e;
      for (std::size_t f = 0; f < edges.size() && !w; ++f) {
        if (f == e) continue;
        if (auto found = satake_face_word(d, edges[e], edges[f], satake, 6); found && found->length() > 0) {
          w = found;
          target = f;
        }
      }
      if (!w) continue;
      const Isometry g = w->product();
      std::optional<SatakePoint> alpha;
      for (auto v : d.poset.faces[edges[e].face].generators) {
        const SymMatrix& vm = d.polytope.vertices()[v];
        if (!(act(g, vm) == vm)) alpha = SatakePoint::from(vm);
      }
      if (!alpha) continue;
      const BoundaryComponent& pi = edges[e].component;
      const InvarianceReport fwd = invariance_check(*w, *alpha, pi, 20, options.seed + 100 + e);
      const InvarianceReport rev = invariance_check(w->inverse(), SatakePoint::from(act(g, alpha->matrix())),
                                                    transform(g, pi), 20, options.seed + 200 + e);
      const double c = fwd.scaling_constant.value_or(NAN);
      const double cr = rev.scaling_constant.value_or(NAN);
      const double dev = std::abs(c * cr - 1);
      worst = std::isnan(dev) ? INFINITY : std::max(worst, dev);
      const bool pair_ok = fwd.passed() && rev.passed() && dev <= 1e-12;
      ok = ok && pair_ok;
      it.detail["pairs"].push_back({{"from", d.poset.faces[edges[e].face].generators},
                                    {"to", d.poset.faces[edges[target].face].generators},
                                    {"word", w->to_string()},
                                    {"C", c},
                                    {"C_reverse", cr},
                                    {"spread", std::max(fwd.scaling_spread, rev.scaling_spread)},
                                    {"product_deviation", dev}});
    }
    ok = ok && !it.detail["pairs"].empty();
    it.detail["worst_product_deviation"] = worst;
    it.summary = ok ? "edge-to-edge constants are reciprocal for reversed words" : "edge scaling check failed";
    return ok;
  });

  return report;
}

}  // namespace selberg
