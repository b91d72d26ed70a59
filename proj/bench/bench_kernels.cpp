// Serial vs OpenMP orbit-evaluation kernels.
#include <benchmark/benchmark.h>

#include "eqvar/equations.hpp"
#include "eqvar/orbit.hpp"

using namespace eqvar;

namespace {

// h of the (4,4,4) tableau at a point of type (inf,inf,2,1): the orbit vanishes,
// so the whole pruned tree is explored.
const FactoredPoly& h444() {
    static const FactoredPoly h = h_tableau_factored(canonical_tableau(GenPartition{4, 4, 4}));
    return h;
}
const FinitaryPoint& narrow_point() {
    static const FinitaryPoint x = parse_point("0^inf,1^inf,2^2,3^1");
    return x;
}

const FactoredPoly& delta5() {
    static const FactoredPoly d(discriminant(5));
    return d;
}
const FinitaryPoint& wide_point() {
    static const FinitaryPoint x = parse_point("0^inf,1^inf,2^2,3^1,5^1,7^inf,-1^3");
    return x;
}

void BM_vanish_serial(benchmark::State& s) {
    for (auto _ : s) benchmark::DoNotOptimize(orbit_vanishes(h444(), narrow_point()));
}
void BM_vanish_omp(benchmark::State& s) {
    for (auto _ : s) benchmark::DoNotOptimize(orbit_vanishes_par(h444(), narrow_point()));
}
void BM_values_serial(benchmark::State& s) {
    for (auto _ : s) benchmark::DoNotOptimize(orbit_evaluations(delta5(), wide_point()));
}
void BM_values_omp(benchmark::State& s) {
    for (auto _ : s) benchmark::DoNotOptimize(orbit_evaluations_par(delta5(), wide_point()));
}

} // namespace

BENCHMARK(BM_vanish_serial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_vanish_omp)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_values_serial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_values_omp)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
