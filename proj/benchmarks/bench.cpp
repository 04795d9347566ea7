#include <benchmark/benchmark.h>

#include "selberg/busemann.hpp"
#include "selberg/harness/corpus.hpp"
#include "selberg/matcore/random.hpp"
#include "selberg/poincare/cycles.hpp"

using namespace selberg;

namespace {

const Corpus61& corpus() {
  static const Corpus61 c = Corpus61::standard();
  return c;
}

const DomainWithPairing& domain() {
  static const DomainWithPairing d = build_domain(corpus().generator_set());
  return d;
}

void BM_VerticesToPoset(benchmark::State& state) {
  for (auto _ : state) {
    const ProjPolytope p = ProjPolytope::from_vertices(3, corpus().vertices);
    benchmark::DoNotOptimize(face_poset(p));
  }
}
BENCHMARK(BM_VerticesToPoset)->Unit(benchmark::kMicrosecond);

void BM_BuildDomain(benchmark::State& state) {
  const GeneratorSet g = corpus().generator_set();
  for (auto _ : state) benchmark::DoNotOptimize(build_domain(g));
}
BENCHMARK(BM_BuildDomain)->Unit(benchmark::kMicrosecond);

void BM_CheckExact(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(check_exact(domain()));
}
BENCHMARK(BM_CheckExact)->Unit(benchmark::kMicrosecond);

void BM_AngleSum(benchmark::State& state) {
  const auto cycles = ridge_cycles(domain());
  const auto samples = static_cast<std::size_t>(state.range(0));
  for (auto _ : state)
    for (const auto& c : cycles) benchmark::DoNotOptimize(angle_sum(c, domain(), samples));
}
BENCHMARK(BM_AngleSum)->Arg(1)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_Busemann(benchmark::State& state) {
  Rng rng(1);
  std::vector<SpacePoint> pts;
  for (int i = 0; i < 64; ++i) pts.push_back(random_float_point(3, rng));
  const auto alpha = SatakePoint::from(SymMatrix::diagonal({1, 0, 0}));
  const BusemannSpec spec =
      state.range(0) == 0
          ? BusemannSpec::type0(alpha, SpacePoint::identity(3))
          : BusemannSpec::type_k(alpha, BoundaryComponent::from_span(Matrix::from_columns({{1, 0, 0}, {0, 1, 0}})),
                                 SpacePoint::identity(3));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(busemann(spec, pts[i++ % pts.size()]));
}
BENCHMARK(BM_Busemann)->Arg(0)->Arg(1);

}  // namespace
BENCHMARK_MAIN();
