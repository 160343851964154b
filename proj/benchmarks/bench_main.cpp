#include <benchmark/benchmark.h>

#include <algorithm>
#include <random>

#include "latpoly/chord.hpp"
#include "latpoly/geometry.hpp"
#include "latpoly/oracle.hpp"
#include "latpoly/polytope.hpp"
#include "latpoly/reduced_graph.hpp"
#include "latpoly/transform.hpp"

using namespace latpoly;

namespace {

LatticePolytope random_instance(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto s = identity_perm(n), t = identity_perm(n);
    std::shuffle(s.begin(), s.end(), rng);
    std::shuffle(t.begin(), t.end(), rng);
    return polytope_from_sigmas(s, t);
}

void bm_area(benchmark::State& state) {
    auto p = random_instance(int(state.range(0)), 7);
    for (auto _ : state) benchmark::DoNotOptimize(area_abs(p));
}
BENCHMARK(bm_area)->Arg(4)->Arg(16)->Arg(64);

void bm_oracle(benchmark::State& state) {
    auto p = random_instance(int(state.range(0)), 11);
    for (auto _ : state) benchmark::DoNotOptimize(min_area_polytope(p).cost);
}
BENCHMARK(bm_oracle)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void bm_chord_oracle(benchmark::State& state) {
    std::vector<coord> vals;
    for (int v = 1; v <= 2 * int(state.range(0)); ++v) vals.push_back(v);
    auto ms = enumerate_matchings(vals);
    for (auto _ : state) benchmark::DoNotOptimize(min_area_chord(ms.front(), ms.back()).cost);
}
BENCHMARK(bm_chord_oracle)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void bm_reduce(benchmark::State& state) {
    auto g = from_polytope(random_instance(int(state.range(0)), 3));
    for (auto _ : state) benchmark::DoNotOptimize(reduce(g).graph.curves.size());
}
BENCHMARK(bm_reduce)->Arg(3)->Arg(4)->Arg(5)->Arg(6);

void bm_divisions(benchmark::State& state) {
    int n = int(state.range(0));
    std::vector<LatticePolytope> simple;
    for (std::uint64_t seed = 0; simple.size() < 8 && seed < 5000; ++seed) {
        auto p = random_instance(n, seed);
        if (is_simple(p) && p.isolated().empty()) simple.push_back(p);
    }
    for (auto _ : state)
        for (const auto& p : simple) benchmark::DoNotOptimize(count_divisions(p));
    state.SetItemsProcessed(std::int64_t(state.iterations() * simple.size()));
}
BENCHMARK(bm_divisions)->Arg(3)->Arg(4)->Arg(5)->Arg(6);

void bm_minimal_transformation(benchmark::State& state) {
    int n = int(state.range(0));
    std::vector<LatticePolytope> ok;
    for (std::uint64_t seed = 0; ok.size() < 8 && seed < 5000; ++seed) {
        auto p = random_instance(n, seed);
        if (satisfies_condition1(p)) ok.push_back(p);
    }
    for (auto _ : state)
        for (const auto& p : ok) benchmark::DoNotOptimize(minimal_transformation(p).moves.size());
    state.SetItemsProcessed(std::int64_t(state.iterations() * ok.size()));
}
BENCHMARK(bm_minimal_transformation)->Arg(3)->Arg(4)->Arg(5)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
