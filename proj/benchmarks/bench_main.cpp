#include "mqtlab/fsu2.hpp"
#include "mqtlab/report.hpp"
#include "mqtlab/series.hpp"
#include "mqtlab/weyl_group.hpp"

#include <benchmark/benchmark.h>

using namespace mqtlab;

static void BM_WeylEnumerate(benchmark::State& state) {
  const auto rs = liecore::build_root_system(static_cast<liecore::RootSystemName>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(liecore::weyl_group(rs).order());
  state.SetLabel(liecore::to_string(rs.name()));
}
BENCHMARK(BM_WeylEnumerate)
    ->Arg(static_cast<int>(liecore::RootSystemName::F4))
    ->Arg(static_cast<int>(liecore::RootSystemName::E6))
    ->Unit(benchmark::kMillisecond);

static void BM_WeylOrderOrbit(benchmark::State& state) {
  const auto rs = liecore::build_root_system(liecore::RootSystemName::E6);
  for (auto _ : state) benchmark::DoNotOptimize(liecore::weyl_group_order(rs));
}
BENCHMARK(BM_WeylOrderOrbit)->Unit(benchmark::kMillisecond);

static void BM_RootClosure(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(liecore::build_root_system(liecore::RootSystemName::E6));
}
BENCHMARK(BM_RootClosure)->Unit(benchmark::kMicrosecond);

static void BM_SeriesKernel(benchmark::State& state) {
  PrecisionScope scope(60);
  const auto kernel = static_cast<mqt::SummationKernel>(state.range(0));
  const auto n = static_cast<std::uint64_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(mqt::sigma_series(n, mqt::SeriesVariant::plain, kernel));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}
BENCHMARK(BM_SeriesKernel)
    ->Args({static_cast<int>(mqt::SummationKernel::working_precision), 100'000})
    ->Args({static_cast<int>(mqt::SummationKernel::double_double), 100'000})
    ->Args({static_cast<int>(mqt::SummationKernel::double_double), 10'000'000})
    ->Unit(benchmark::kMillisecond);

static void BM_FullChain(benchmark::State& state) {
  const auto precision = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(mqt::run_full_chain(mqt::paper_profile(), {precision}));
}
BENCHMARK(BM_FullChain)->Arg(50)->Arg(60)->Arg(200)->Unit(benchmark::kMillisecond);

static void BM_Fsu2Relations(benchmark::State& state) {
  PrecisionScope scope(60);
  const auto rep = qsymbols::fsu2_generators(BigReal(2), BigReal(0), static_cast<std::size_t>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(qsymbols::check_relations(rep, qsymbols::QConvention::q_is_inverse_def_step));
}
BENCHMARK(BM_Fsu2Relations)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
