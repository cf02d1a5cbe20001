#include <benchmark/benchmark.h>

#include "lvmb/builtin.hpp"
#include "lvmb/lp.hpp"
#include "lvmb/moment.hpp"

namespace {

void BM_ClassifyProjectiveSpace(benchmark::State& state) {
    lvmb::LVMBData data =
        lvmb::builtin_example("projective-space-" + std::to_string(state.range(0)));
    for (auto _ : state) {
        auto rep = lvmb::classify(data);
        benchmark::DoNotOptimize(rep);
    }
}
BENCHMARK(BM_ClassifyProjectiveSpace)->DenseRange(2, 5);

void BM_ClassifyCalabiEckmann(benchmark::State& state) {
    lvmb::LVMBData data = lvmb::builtin_example("calabi-eckmann");
    for (auto _ : state) {
        auto rep = lvmb::classify(data);
        benchmark::DoNotOptimize(rep);
    }
}
BENCHMARK(BM_ClassifyCalabiEckmann);

void BM_SupportLpNonpolytopal(benchmark::State& state) {
    lvmb::LVMBData data = lvmb::builtin_example("nonpolytopal-fan");
    lvmb::LPProblem lp = lvmb::support_function_lp(*data.ambient_fan);
    for (auto _ : state) {
        auto cert = lvmb::solve(lp);
        benchmark::DoNotOptimize(cert);
    }
}
BENCHMARK(BM_SupportLpNonpolytopal);

void BM_RankRandomMatrix(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    std::uint64_t s = 42;
    auto next = [&s]() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return static_cast<long>(s % 19) - 9;
    };
    lvmb::RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.at(i, j) = lvmb::make_rational(next(), 1 + i % 3);
    for (auto _ : state) {
        auto r = lvmb::rank(m);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_RankRandomMatrix)->Arg(8)->Arg(16)->Arg(32);

void BM_ConvexityHarness(benchmark::State& state) {
    lvmb::ClassificationReport rep = lvmb::classify(lvmb::builtin_example("calabi-eckmann"));
    for (auto _ : state) {
        auto conv = lvmb::verify_convexity(rep, static_cast<std::size_t>(state.range(0)), 0,
                                           1e-9);
        benchmark::DoNotOptimize(conv);
    }
}
BENCHMARK(BM_ConvexityHarness)->Arg(100)->Arg(1000);

}  // namespace

BENCHMARK_MAIN();
