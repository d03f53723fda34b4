#include "stringy/invariants.hpp"
#include "stringy/polyhedra.hpp"

#include <benchmark/benchmark.h>

using namespace stringy;

namespace {

IntVec iv2(long long x, long long y) { return {Int(x), Int(y)}; }

Fan a_series_fan(long long n) {
    return Fan::from_max_cones({Cone({iv2(1, 0), iv2(1, n)}, 2)});
}

Fan cube_face_fan() {
    std::vector<IntVec> vs;
    for (int x : {-1, 1})
        for (int y : {-1, 1})
            for (int z : {-1, 1}) vs.push_back({Int(x), Int(y), Int(z)});
    return face_fan(LatticePolytope(std::move(vs), 3));
}

void BM_ParallelepipedPoints(benchmark::State& state) {
    std::vector<IntVec> gens{iv2(1, 0), iv2(1, state.range(0))};
    for (auto _ : state)
        benchmark::DoNotOptimize(parallelepiped_points(gens, HalfOpen::Low));
}
BENCHMARK(BM_ParallelepipedPoints)->Arg(4)->Arg(16)->Arg(64);

void BM_StringyE_ASeries(benchmark::State& state) {
    Fan f = a_series_fan(state.range(0));
    SupportFn sf = support_function(f);
    for (auto _ : state)
        benchmark::DoNotOptimize(stringy_e(f, sf));
}
BENCHMARK(BM_StringyE_ASeries)->Arg(2)->Arg(8)->Arg(32);

void BM_Resolve_ASeries(benchmark::State& state) {
    Fan f = a_series_fan(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(resolve(f));
}
BENCHMARK(BM_Resolve_ASeries)->Arg(4)->Arg(8)->Arg(16);

void BM_FaceFan_Cube(benchmark::State& state) {
    std::vector<IntVec> vs;
    for (int x : {-1, 1})
        for (int y : {-1, 1})
            for (int z : {-1, 1}) vs.push_back({Int(x), Int(y), Int(z)});
    LatticePolytope cube(vs, 3);
    for (auto _ : state)
        benchmark::DoNotOptimize(face_fan(cube));
}
BENCHMARK(BM_FaceFan_Cube);

void BM_StringyE_CubeFan(benchmark::State& state) {
    Fan f = cube_face_fan();
    SupportFn sf = support_function(f);
    for (auto _ : state)
        benchmark::DoNotOptimize(stringy_e(f, sf));
}
BENCHMARK(BM_StringyE_CubeFan);

void BM_BothPhiRoutes_Square(benchmark::State& state) {
    LatticePolytope square({iv2(1, 1), iv2(1, -1), iv2(-1, 1), iv2(-1, -1)}, 2);
    Fan f = face_fan(square);
    for (auto _ : state) {
        SupportFn sf = support_function(f);
        Refinement r = resolve(f);
        benchmark::DoNotOptimize(gf_equal(stringy_e(f, sf), stringy_e_via_resolution(r, sf)));
    }
}
BENCHMARK(BM_BothPhiRoutes_Square);

} // namespace

BENCHMARK_MAIN();
