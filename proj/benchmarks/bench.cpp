#include <benchmark/benchmark.h>

#include "adjmin/classify.hpp"
#include "adjmin/fiber.hpp"
#include "adjmin/fixtures.hpp"
#include "adjmin/groebner.hpp"
#include "adjmin/primes.hpp"

using namespace adjmin;

namespace {

std::vector<BinomialElement> generators(const Configuration& c) {
    std::vector<BinomialElement> out;
    for (const Cell& a : c.anchors()) out.push_back(binomial_of(UnitMinor{a}));
    return out;
}

void BM_MinimalPrimesFilledRing(benchmark::State& state) {
    Configuration c = find_fixture("CFG-PLUS")->config;
    for (auto _ : state) benchmark::DoNotOptimize(minimal_primes(c));
}
BENCHMARK(BM_MinimalPrimesFilledRing);

void BM_ReducedBasisCycle(benchmark::State& state) {
    Configuration c = find_fixture("CFG-CYC8")->config;
    VariableRanking r = row_major_ranking(c.vertex_set());
    auto gens = generators(c);
    for (auto _ : state) benchmark::DoNotOptimize(reduced_basis(gens, r, 40));
}
BENCHMARK(BM_ReducedBasisCycle);

void BM_SaturateFullGrid(benchmark::State& state) {
    std::vector<Cell> anchors;
    for (int r = 1; r <= 3; ++r)
        for (int c = 1; c <= 3; ++c) anchors.push_back(Cell{r, c});
    Configuration c = Configuration::from_anchors(anchors);
    auto gens = generators(c);
    auto vars = c.vertex_set();
    for (auto _ : state) benchmark::DoNotOptimize(saturate(gens, vars, 64));
}
BENCHMARK(BM_SaturateFullGrid);

void BM_FiberStaircase(benchmark::State& state) {
    Configuration c = find_fixture("CFG-L")->config;
    std::map<Cell, long long> entries;
    for (const Cell& v : c.vertex_set()) entries[v] = 1;
    Table t(entries);
    for (auto _ : state) benchmark::DoNotOptimize(bfs_fiber(c, t));
}
BENCHMARK(BM_FiberStaircase);

void BM_QuadraticCertificateSearch(benchmark::State& state) {
    Configuration c = find_fixture("CFG-RING4")->config;
    for (auto _ : state) benchmark::DoNotOptimize(has_quadratic_gb(c));
}
BENCHMARK(BM_QuadraticCertificateSearch);

} // namespace

BENCHMARK_MAIN();
