#include <benchmark/benchmark.h>

#include "bihom/constructions.hpp"
#include "bihom/discovery.hpp"

namespace {

using namespace bihom;

void BM_BiHomAssociativityM2(benchmark::State& state) {
  const BiHomAlgebra twisted = std::get<BiHomAlgebra>(
      twist_factory(catalogue_entry("m2"), catalogue_entry("conj_d").map(),
                    catalogue_entry("id4").map()));
  for (auto _ : state) benchmark::DoNotOptimize(check_bihom_associative(twisted));
}
BENCHMARK(BM_BiHomAssociativityM2);

void BM_InfBialgebraM2(benchmark::State& state) {
  const InfHomBialgebra& b = catalogue_entry("m2-qt").bialgebra();
  for (auto _ : state) benchmark::DoNotOptimize(validate_inf_hom_bialgebra(b));
}
BENCHMARK(BM_InfBialgebraM2);

void BM_AybeSearchDx2(benchmark::State& state) {
  SearchSpec spec;
  spec.threads = static_cast<unsigned>(state.range(0));
  const BiHomAlgebra& dx2 = catalogue_entry("dx2").algebra();
  for (auto _ : state) benchmark::DoNotOptimize(find_aybe_solutions(dx2, spec));
}
BENCHMARK(BM_AybeSearchDx2)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_AybeSearchM2Support(benchmark::State& state) {
  SearchSpec spec;
  spec.support = std::vector<std::pair<std::size_t, std::size_t>>{{1, 1}, {1, 3}, {0, 1}, {0, 3}};
  const BiHomAlgebra& m2 = catalogue_entry("m2").algebra();
  for (auto _ : state) benchmark::DoNotOptimize(find_aybe_solutions(m2, spec));
}
BENCHMARK(BM_AybeSearchM2Support)->Unit(benchmark::kMillisecond);

void BM_BraceRotaBaxterSearchN2(benchmark::State& state) {
  SearchSpec spec;
  spec.threads = static_cast<unsigned>(state.range(0));
  const BilinearOp& mu = catalogue_entry("n2").algebra().mu;
  const RotaBaxterKind kind = BraceRotaBaxter{catalogue_entry("sgn").map(), LinearMap::identity(2)};
  for (auto _ : state) benchmark::DoNotOptimize(find_rota_baxter(mu, kind, spec));
}
BENCHMARK(BM_BraceRotaBaxterSearchN2)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_AlgebraMapsDx2Wide(benchmark::State& state) {
  // Five coefficients: 625 candidates.
  SearchSpec spec;
  spec.coefficients = {Scalar(-2), Scalar(-1), Scalar(0), Scalar(1), Scalar(2)};
  const BilinearOp& mu = catalogue_entry("dx2").algebra().mu;
  for (auto _ : state) benchmark::DoNotOptimize(find_algebra_maps(mu, spec));
}
BENCHMARK(BM_AlgebraMapsDx2Wide)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
