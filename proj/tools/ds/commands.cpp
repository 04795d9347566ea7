#include "commands.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>

#include <nlohmann/json.hpp>

#include "selberg/error.hpp"
#include "selberg/harness/corpus.hpp"
#include "selberg/harness/proptest.hpp"
#include "selberg/harness/slice.hpp"
#include "selberg/harness/verify.hpp"
#include "selberg/matcore/json_io.hpp"

namespace ds {

using nlohmann::json;
using namespace selberg;

selberg::Tolerances Common::tolerances() const {
  Tolerances t = config.empty() ? Tolerances{} : Tolerances::from_file(config);
  if (angle_tol) t.angle = *angle_tol;
  if (metric_tol) t.metric = *metric_tol;
  if (spectral_tol) t.spectral = *spectral_tol;
  return t;
}

namespace {

json read_json(const std::string& path) {
  try {
    if (path == "-") return json::parse(std::cin);
    std::ifstream in(path);
    require(in.good(), ErrorCode::Parse, "cannot open " + path);
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Parse, path + ": " + e.what());
  }
}

GeneratorSet load_generators(const Common& c) {
  if (c.input.empty()) return Corpus61::standard().generator_set();
  return GeneratorSet::from_json(read_json(c.input));
}

DomainWithPairing load_domain(const Common& c) { return build_domain(load_generators(c)); }

void print(const json& j) { std::cout << j.dump(2) << "\n"; }

json cycle_json(const DomainWithPairing& d, const RidgeCycle& cyc) {
  json j = cyc.to_json(d);
  j["word"] = cyc.word.to_string();
  return j;
}

std::vector<SatakeFace> faces_of_dim(const DomainWithPairing& d, const std::vector<SatakeFace>& all, int dim) {
  std::vector<SatakeFace> out;
  for (const auto& s : all)
    if (d.poset.faces[s.face].dim == dim) out.push_back(s);
  return out;
}

}  // namespace

int build(const Common& c) {
  const DomainWithPairing d = load_domain(c);
  print(d.to_json());
  return 0;
}

int check_exact(const Common& c) {
  const ExactnessReport r = selberg::check_exact(load_domain(c));
  print(r.to_json());
  return r.passed() ? 0 : 1;
}

int cycles(const Common& c) {
  const DomainWithPairing d = load_domain(c);
  json out = json::array();
  for (const auto& cyc : ridge_cycles(d, c.tolerances())) out.push_back(cycle_json(d, cyc));
  print(out);
  return 0;
}

int angle_sum(const Common& c, std::size_t samples) {
  const Tolerances tol = c.tolerances();
  const DomainWithPairing d = load_domain(c);
  json out = json::array();
  bool ok = true;
  for (const auto& cyc : ridge_cycles(d, tol)) {
    const AngleSumReport r = selberg::angle_sum(cyc, d, samples, tol);
    json j = cycle_json(d, cyc);
    j["angle_sum"] = r.to_json();
    out.push_back(j);
    ok = ok && r.passed();
  }
  print(out);
  return ok ? 0 : 1;
}

int fixed_point(const Common& c, int dim, std::size_t max_length) {
  const DomainWithPairing d = load_domain(c);
  const auto all = satake_faces(d.polytope, d.poset);
  json out = json::array();
  bool ok = true;
  for (const auto& f : faces_of_dim(d, all, dim)) {
    json j = {{"face", d.poset.faces[f.face].generators}, {"type", f.type}};
    const auto words = satake_cycle_words(d, f, all, max_length, 1);
    try {
      const IsometryWord w = words.empty() ? IsometryWord() : words[0];
      const FixedPoint fp = cycle_fixed_point(f, w, d);
      j["word"] = w.to_string();
      j["alpha"] = sym_to_json(fp.alpha.matrix());
      j["method"] = fp.method;
      j["order"] = fp.order;
    } catch (const Error& e) {
      j["error"] = e.what();
      ok = false;
    }
    out.push_back(j);
  }
  print(out);
  return ok ? 0 : 1;
}

int invariance(const Common& c, int trials, std::uint64_t seed) {
  const DomainWithPairing d = load_domain(c);
  const auto all = satake_faces(d.polytope, d.poset);
  json out = json::array();
  bool ok = true;
  std::uint64_t k = 0;
  for (const auto& f : faces_of_dim(d, all, 1)) {
    json j = {{"face", d.poset.faces[f.face].generators}};
    const auto words = satake_cycle_words(d, f, all, 6, 1);
    if (words.empty()) {
      j["error"] = "no cycle word";
      ok = false;
    } else {
      const FixedPoint fp = cycle_fixed_point(f, words[0], d);
      const InvarianceReport r = invariance_check(words[0], fp.alpha, std::nullopt, trials, seed + k);
      j["word"] = words[0].to_string();
      j["alpha"] = sym_to_json(fp.alpha.matrix());
      j["report"] = r.to_json();
      ok = ok && r.passed();
    }
    ++k;
    out.push_back(j);
  }
  print(out);
  return ok ? 0 : 1;
}

int express(const Common& c, int depth, const std::string& targets) {
  const DomainWithPairing d = load_domain(c);
  std::vector<Isometry> gens;
  std::vector<std::string> labels;
  if (targets.empty()) {
    // Generators as listed, without the inverses added by closure.
    for (std::size_t i = 0; i < d.generators.size(); ++i) {
      const std::string& l = d.generators.labels()[i];
      if (l.size() > 3 && l.compare(l.size() - 3, 3, "^-1") == 0) continue;
      gens.push_back(d.generators.elements()[i]);
      labels.push_back(l);
    }
  } else {
    const json t = read_json(targets);
    require(t.is_object(), ErrorCode::Parse, "targets must be an object {label: matrix}");
    for (auto it = t.begin(); it != t.end(); ++it) {
      labels.push_back(it.key());
      gens.push_back(Isometry::from(matrix_from_json(it.value())));
    }
  }
  std::vector<Isometry> pairings;
  std::vector<std::string> plabels;
  for (std::size_t s = 0; s < d.facet_count(); ++s) {
    pairings.push_back(d.generators.elements()[d.facet_element[s]]);
    plabels.push_back(d.generators.labels()[d.facet_element[s]]);
  }
  const ExpressibilityReport r = expressibility(gens, labels, pairings, plabels, depth);
  print(r.to_json());
  return r.passed() ? 0 : 1;
}

int poset(const Common& c) {
  const DomainWithPairing d = load_domain(c);
  json j = d.poset.to_json();
  j["f_vector"] = d.poset.f_vector();
  json sat = json::array();
  for (const auto& s : satake_faces(d.polytope, d.poset)) {
    sat.push_back({{"face", d.poset.faces[s.face].generators},
                   {"dim", d.poset.faces[s.face].dim},
                   {"type", s.type},
                   {"component", s.component.to_json()}});
  }
  j["satake_faces"] = sat;
  print(j);
  return 0;
}

int busemann_eval(const Common& c) {
  const json in = read_json(c.input);
  const BusemannSpec spec = BusemannSpec::from_json(in);
  require(in.contains("point"), ErrorCode::Parse, "input needs \"point\"");
  const SpacePoint y = point_from_json(in.at("point"));
  json out = {{"value", busemann(spec, y)}};
  if (spec.kind() == BusemannKind::Type0) {
    const Scalar exact = busemann0(spec, y);
    if (exact.is_exact()) out["exact"] = exact.to_string();
  }
  print(out);
  return 0;
}

int asymptotic(const Common& c) {
  const json in = read_json(c.input);
  require(in.contains("spec") && in.contains("beta") && in.contains("Y"), ErrorCode::Parse,
          "input needs \"spec\", \"beta\" and \"Y\"");
  const BusemannSpec spec = BusemannSpec::from_json(in.at("spec"));
  const SatakePoint beta = SatakePoint::from(sym_from_json(in.at("beta")));
  const SpacePoint y = point_from_json(in.at("Y"));
  std::vector<double> schedule = {1e-2, 1e-4, 1e-6};
  if (in.contains("eps")) schedule = in.at("eps").get<std::vector<double>>();
  const AsymptoticResult r = asymptotic_limit(spec, beta, y, schedule);
  print(r.to_json());
  return r.numeric_consistent ? 0 : 1;
}

int verify_example(const Common& c, bool as_json) {
  VerifyOptions opt;
  opt.tol = c.tolerances();
  const VerifyReport r = selberg::verify_example(Corpus61::standard(), opt);
  if (as_json) {
    print(r.to_json());
  } else {
    for (const auto& it : r.items) {
      std::printf("%-4s %-16s %s\n", it.passed ? "PASS" : "FAIL", it.name.c_str(), it.summary.c_str());
    }
  }
  return r.passed() ? 0 : 1;
}

int proptest(const std::string& suite, std::size_t trials, std::uint64_t seed) {
  std::vector<std::string> names = suite == "all" ? suite_names() : std::vector<std::string>{suite};
  json out = json::array();
  bool ok = true;
  for (const auto& n : names) {
    const SuiteReport r = run_suite(n, trials, seed);
    out.push_back(r.to_json());
    ok = ok && r.passed();
  }
  print(names.size() == 1 ? out[0] : out);
  return ok ? 0 : 1;
}

int slice(const Common& c, const std::vector<double>& levels, double lo, double hi, std::size_t steps,
          const std::string& output) {
  const BusemannSpec spec = c.input.empty()
                                ? BusemannSpec::type0(SatakePoint::from(SymMatrix::diagonal({1, 0, 0})),
                                                      SpacePoint::identity(3))
                                : BusemannSpec::from_json(read_json(c.input));
  SliceGrid grid{lo, hi, lo, hi, steps, steps};
  const std::string csv = emit_slice(spec, levels, grid);
  if (output.empty()) {
    std::cout << csv;
  } else {
    std::ofstream out(output);
    require(out.good(), ErrorCode::InvalidArgument, "cannot write " + output);
    out << csv;
  }
  return 0;
}

}  // namespace ds
