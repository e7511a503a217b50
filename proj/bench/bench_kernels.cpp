// Serial reference vs OpenMP kernels. Arg 0 = serial, 1 = parallel.

#include <random>

#include <benchmark/benchmark.h>

#include "satlen/homology.hpp"
#include "satlen/linalg.hpp"
#include "satlen/oracle.hpp"
#include "satlen/satfn.hpp"
#include "satlen/sop.hpp"

using namespace satlen;

namespace {

Execution mode(const benchmark::State& state) {
    return state.range(0) ? Execution::Parallel : Execution::Serial;
}

RingPtr<PrimeField> buchsbaum6() {
    std::vector<std::string> rels;
    for (int i = 1; i <= 3; ++i)
        for (int j = 4; j <= 6; ++j) rels.push_back("x" + std::to_string(i) + "*x" + std::to_string(j));
    return RingPresentation<PrimeField>::make(PrimeField(32003), {"x1", "x2", "x3", "x4", "x5", "x6"}, rels);
}

void BM_rank(benchmark::State& state) {
    PrimeField k(32003);
    const auto n = static_cast<std::size_t>(state.range(1));
    std::mt19937 rng(7);
    std::uniform_int_distribution<std::uint32_t> dist(0, 32002);
    Matrix<PrimeField> m(n, std::vector<std::uint32_t>(n));
    for (auto& row : m)
        for (auto& x : row) x = dist(rng);
    for (auto _ : state) benchmark::DoNotOptimize(matrix_rank(k, m, mode(state)));
}
BENCHMARK(BM_rank)->ArgsProduct({{0, 1}, {64, 256}})->Unit(benchmark::kMillisecond);

void BM_h0_sequence(benchmark::State& state) {
    auto r = buchsbaum6();
    for (auto _ : state) {
        IdealHandle<PrimeField> a(r, std::vector<std::string>{"x1 - x4", "x2 - x5"});
        benchmark::DoNotOptimize(h0_sequence(a, 4, H0Options{{}, mode(state)}));
    }
}
BENCHMARK(BM_h0_sequence)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_h0_oracle(benchmark::State& state) {
    auto r = buchsbaum6();
    IdealHandle<PrimeField> a(r, std::vector<std::string>{"x1 - x4", "x2 - x5"});
    for (auto _ : state) benchmark::DoNotOptimize(oracle::h0_bruteforce(a, 3, 0, mode(state)));
}
BENCHMARK(BM_h0_oracle)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_grid_fit(benchmark::State& state) {
    auto r = buchsbaum6();
    auto sop = make_sop(r, {"x1 - x4", "x2 - x5", "x3 - x6"});
    for (auto _ : state) benchmark::DoNotOptimize(fit_apsop(sop, 2, 3, mode(state)));
}
BENCHMARK(BM_grid_fit)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_homology(benchmark::State& state) {
    // boundary of the 7-simplex
    std::vector<std::string> names;
    for (int v = 0; v < 8; ++v) names.push_back("v" + std::to_string(v));
    std::vector<SimplicialComplex::Face> facets;
    for (int v = 0; v < 8; ++v) facets.push_back(0xFFu & ~(1u << v));
    SimplicialComplex c(names, facets);
    for (auto _ : state) benchmark::DoNotOptimize(reduced_homology_dims(c, PrimeField(32003), mode(state)));
}
BENCHMARK(BM_homology)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
