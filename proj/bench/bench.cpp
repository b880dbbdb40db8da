// Serial vs OpenMP comparison for the rank-heavy kernels. Each benchmark
// takes the parallel flag as its argument: 0 = serial reference, 1 = OpenMP.

#include <benchmark/benchmark.h>

#include "latres/monomial.hpp"
#include "latres/rees.hpp"
#include "latres/resolution.hpp"
#include "latres/simplicial.hpp"

using namespace latres;

namespace {

Poset antichain(int n) {
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i + 1));
    return make_poset(labels, {});
}

Poset running_example() {
    return make_poset({"a", "b", "c", "d"}, {{"a", "c"}, {"b", "c"}, {"b", "d"}});
}

void bm_taylor_oracle(benchmark::State& state) {
    Poset p = antichain(4);
    MonomialIdeal hp = build_hp(p, enumerate_ideals(p));
    for (auto _ : state)
        benchmark::DoNotOptimize(
            taylor_tor_oracle(hp, FieldSpec::rationals(), 16, state.range(0) != 0));
}

void bm_strand_exactness(benchmark::State& state) {
    Poset p = antichain(4);
    DistributiveLattice lat = enumerate_ideals(p);
    FreeComplex f = build_resolution(p, lat);
    for (auto _ : state)
        benchmark::DoNotOptimize(
            strand_exactness(p, lat, f, -1, FieldSpec::rationals(), state.range(0) != 0));
}

void bm_reisner(benchmark::State& state) {
    Poset p = running_example();
    MonomialIdeal hp = build_hp(p, enumerate_ideals(p));
    SimplicialComplex dual = alexander_dual(complex_from_ideal(hp));
    for (auto _ : state)
        benchmark::DoNotOptimize(reisner_cm_check(dual, FieldSpec::rationals(), 16,
                                                  state.range(0) != 0));
}

void bm_groebner(benchmark::State& state) {
    Poset p = antichain(4);
    DistributiveLattice lat = enumerate_ideals(p);
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_groebner(p, lat, 25, 7, 16, state.range(0) != 0));
}

} // namespace

BENCHMARK(bm_taylor_oracle)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_strand_exactness)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_reisner)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_groebner)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
