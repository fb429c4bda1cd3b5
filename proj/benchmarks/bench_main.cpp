#include <benchmark/benchmark.h>

#include "hcob/cocycles.hpp"
#include "hcob/cyclic_category.hpp"
#include "hcob/harness/generators.hpp"

using namespace hcob;
using harness::Rng;

namespace {

std::vector<Chain> chains(std::size_t count, std::size_t length, std::size_t points, bool empty_ends) {
    std::vector<Chain> out;
    for (std::size_t i = 0; i < count; ++i) {
        Rng rng = Rng::for_trial(1, "bench", i);
        harness::ChainShape shape;
        shape.length = length;
        shape.max_points = points;
        shape.endpoints_empty = empty_ends;
        out.push_back(harness::gen_chain(shape, rng));
    }
    return out;
}

void compose_pairs(benchmark::State& state) {
    auto xs = chains(64, 2, static_cast<std::size_t>(state.range(0)), false);
    std::size_t i = 0;
    for (auto _ : state) {
        const auto& x = xs[i++ % xs.size()];
        benchmark::DoNotOptimize(compose(x.morphism(1), x.morphism(2)));
    }
}
BENCHMARK(compose_pairs)->Arg(8)->Arg(64)->Arg(512);

void trace(benchmark::State& state) {
    auto xs = chains(64, 6, static_cast<std::size_t>(state.range(0)), true);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(trace_chain(xs[i++ % xs.size()]));
    }
}
BENCHMARK(trace)->Arg(8)->Arg(64);

void reduced_sign_config(benchmark::State& state) {
    std::vector<CyclicConfiguration> cs;
    for (std::size_t i = 0; i < 64; ++i) {
        Rng rng = Rng::for_trial(2, "bench", i);
        cs.push_back(harness::gen_config(static_cast<std::size_t>(state.range(0)), 12, rng));
    }
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(reduced_sign(cs[i++ % cs.size()]));
    }
}
BENCHMARK(reduced_sign_config)->Arg(3)->Arg(5);

void gamma2(benchmark::State& state) {
    auto xs = chains(64, 6, 4, true);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(gamma(2, xs[i++ % xs.size()]));
    }
}
BENCHMARK(gamma2);

void gamma2_coboundary(benchmark::State& state) {
    auto xs = chains(64, 7, 4, true);
    const Cochain g = gamma_cochain(2);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(coboundary(g, xs[i++ % xs.size()], FaceMode::reduced));
    }
}
BENCHMARK(gamma2_coboundary);

void igusa(benchmark::State& state) {
    const auto k = static_cast<std::size_t>(state.range(0));
    std::vector<std::vector<CyclicMap>> ms;
    for (std::size_t i = 0; i < 64; ++i) {
        Rng rng = Rng::for_trial(3, "bench", i);
        ms.push_back(harness::gen_injective_chain(k, k == 1 ? 5 : 3, rng));
    }
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(igusa_cocycle(k, ms[i++ % ms.size()]));
    }
}
BENCHMARK(igusa)->Arg(1)->Arg(2);

} // namespace
BENCHMARK_MAIN();
