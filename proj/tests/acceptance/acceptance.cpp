// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>

#include "selberg/error.hpp"
#include "selberg/harness/corpus.hpp"
#include "selberg/harness/proptest.hpp"
#include "selberg/harness/verify.hpp"
#include "selberg/matcore/json_io.hpp"
#include "selberg/poincare/angles.hpp"

using namespace selberg;

namespace {

struct Outcome {
  bool passed;
  std::string detail;
};

int failures = 0;

void report(int id, const char* what, const std::function<Outcome()>& run) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o{false, ""};
  try {
    o = run();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!o.passed) ++failures;
  std::printf("%s %2d %s [%s; %.2fs]\n", o.passed ? "PASS" : "FAIL", id, what, o.detail.c_str(), secs);
  std::fflush(stdout);
}

double since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

Outcome items(const VerifyReport& r, std::initializer_list<const char*> names) {
  Outcome o{true, ""};
  for (const char* n : names) {
    const VerifyItem* it = r.find(n);
    const bool ok = it && it->passed;
    o.passed = o.passed && ok;
    if (!o.detail.empty()) o.detail += "; ";
    o.detail += std::string(n) + ": " + (it ? it->summary : "missing");
  }
  return o;
}

Outcome sweep(const std::string& suite, std::size_t trials, std::uint64_t seed, double max_seconds = 0) {
  const SuiteReport r = run_suite(suite, trials, seed);
  std::ostringstream s;
  s << r.trials << " trials, " << r.violations << " violations, " << r.statistic << " = " << r.worst;
  bool ok = r.passed() && r.trials == trials;
  if (max_seconds > 0) {
    ok = ok && r.seconds < max_seconds;
    s << ", " << fmt("%.2f", r.seconds) << "s of " << max_seconds << "s";
  }
  return {ok, s.str()};
}

}  // namespace

int main() {
  const Corpus61 corpus = Corpus61::standard();
  VerifyOptions opts;
  opts.angle_samples = 10;
  opts.invariance_trials = 50;
  const VerifyReport vr = verify_example(corpus, opts);

  report(1, "domain reconstruction: exact vertex set and incidences, under 5 s", [&] {
    const auto t0 = std::chrono::steady_clock::now();
    const DomainWithPairing d = build_domain(corpus.generator_set());
    const double secs = since(t0);
    Outcome o = items(vr, {"domain", "f_vector"});
    o.passed = o.passed && d.polytope.vertices().size() == 6 && secs < 5;
    o.detail += "; build " + fmt("%.3f", secs) + "s";
    return o;
  });

  report(2, "exactness: a (F6->F1), b (F2->F3), c (F4->F5) verify exactly",
         [&] { return items(vr, {"pairings", "exactness"}); });

  report(3, "ridge cycles: 5 cycles matching the printed lists", [&] { return items(vr, {"cycles"}); });

  report(4, "angle sums: 2 pi for the first cycle, pi for the others, 10 samples, 1e-6, under 30 s", [&] {
    const VerifyItem* it = vr.find("angle_sums");
    if (!it) return Outcome{false, "missing"};
    return Outcome{it->passed && it->seconds < 30, it->summary + ", " + fmt("%.3f", it->seconds) + "s"};
  });

  report(5, "relators, determinants and unipotence exact",
         [&] { return items(vr, {"relators", "determinants", "unipotent"}); });

  report(6, "finite volume true; indefinite-vertex control false", [&] {
    Outcome o = items(vr, {"finite_volume"});
    auto bad = corpus.vertices;
    bad[0] = sym_from_json(nlohmann::json::parse("[[1,2,0],[2,1,0],[0,0,0]]"));
    std::string why;
    const bool control = finite_volume(ProjPolytope::from_vertices(3, bad), &why);
    o.passed = o.passed && !control;
    o.detail += "; control: " + why;
    return o;
  });

  report(7, "Lipschitz sweep: 10^4 trials, margin >= -1e-9, under 60 s",
         [] { return sweep("lipschitz", 10000, 7, 60); });
  report(8, "projection contraction sweep: 10^4 trials", [] { return sweep("contraction", 10000, 8); });
  report(9, "decomposition identities: 100 rational inputs within 1e-10",
         [] { return sweep("decomposition", 100, 9); });

  report(10, "asymptotic table: 20 instances per column, finite limits within 1e-3 at eps = 1e-6", [] {
    const SuiteReport r = run_suite("asymptotic", 80, 10);
    bool ok = r.passed();
    std::ostringstream s;
    for (const char* col : {"zero", "finite-contained", "finite-transverse", "infinity"}) {
      const auto it = r.counts.find(col);
      const std::size_t n = it == r.counts.end() ? 0 : it->second;
      ok = ok && n == 20;
      s << col << " " << n << ", ";
    }
    s << r.violations << " violations, worst " << r.worst;
    return Outcome{ok, s.str()};
  });

  report(11, "dihedral-angle limit 2 pi / 3, |angle(eps = 1e-4) - 2 pi / 3| <= 1e-3", [] {
    const auto j = [](const char* s) { return sym_from_json(nlohmann::json::parse(s)); };
    const SymMatrix a = j("[[0,-1,0],[-1,1,0],[0,0,0]]");
    const SymMatrix b = j("[[1,-1,0],[-1,0,0],[0,0,0]]");
    const SymMatrix alpha = j(R"([[1,"1/2",0],["1/2",1,0],[0,0,0]])");
    const SymMatrix y = j(R"([[1,"1/2","1/4"],["1/2",1,0],["1/4",0,1]])");
    const auto pi = BoundaryComponent::from_span(matrix_from_json(nlohmann::json::parse("[[1,0],[0,1],[0,0]]")));
    const double target = 2 * std::numbers::pi / 3;
    const double lim = angle_limit(SatakePoint::from(alpha), pi, {}, a, b);
    const double at = dihedral_angle(SpacePoint::normalize(alpha + y * Scalar(Rational(1, 10000))), {}, a, b);
    const bool ok = std::abs(lim - target) <= 1e-10 && std::abs(at - target) <= 1e-3;
    return Outcome{ok, "limit " + fmt("%.12f", lim) + ", eps 1e-4 deviation " + fmt("%.3e", std::abs(at - target))};
  });

  report(12, "interlacing: 10^5 instances (n <= 8, k <= 2), deletion oracle for n <= 6, k = 1",
         [] { return sweep("interlacing", 100000, 12); });

  report(13, "cycle invariance exact on 50 samples; reversed-word constants reciprocal within 1e-12",
         [&] { return items(vr, {"edge_invariance", "edge_scaling"}); });

  std::printf("%s: %d failing criteria\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
