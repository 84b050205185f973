#include <benchmark/benchmark.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "shallowperm/enumeration.hpp"
#include "shallowperm/shallow.hpp"

using namespace shallowperm;

namespace {

std::vector<int> random_word(std::size_t n, unsigned seed) {
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    std::mt19937 rng(seed);
    std::shuffle(w.begin(), w.end(), rng);
    return w;
}

void BM_Inversions(benchmark::State& state) {
    const auto w = random_word(static_cast<std::size_t>(state.range(0)), 1);
    for (auto _ : state) benchmark::DoNotOptimize(inversions(std::span<const int>(w)));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Inversions)->RangeMultiplier(4)->Range(8, 1 << 14)->Complexity();

void BM_IsShallow(benchmark::State& state) {
    const auto w = random_word(static_cast<std::size_t>(state.range(0)), 2);
    for (auto _ : state) benchmark::DoNotOptimize(is_shallow(std::span<const int>(w)));
}
BENCHMARK(BM_IsShallow)->Arg(10)->Arg(100)->Arg(1000);

void BM_CountShallow(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(count_shallow(static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_CountShallow)->DenseRange(8, 11)->Unit(benchmark::kMillisecond);

void BM_Avoids(benchmark::State& state) {
    const std::vector<PatternSpec> specs{parse_pattern_spec(state.range(0) == 0 ? "231" : "3n12")};
    std::vector<std::vector<int>> hosts;
    for (unsigned s = 0; s < 64; ++s) hosts.push_back(random_word(12, s));
    for (auto _ : state)
        for (const auto& h : hosts) benchmark::DoNotOptimize(avoids(Permutation::from_valid_word(h), specs));
}
BENCHMARK(BM_Avoids)->Arg(0)->Arg(1);

void BM_TallyConstructive(benchmark::State& state) {
    const std::vector<MemberFilter> filters{{{parse_pattern_spec("132")}, std::nullopt, {}},
                                            {{parse_pattern_spec("321")}, std::nullopt, {}}};
    for (auto _ : state)
        benchmark::DoNotOptimize(tally(static_cast<std::size_t>(state.range(0)), Method::Constructive, filters,
                                       Statistic::Descents));
}
BENCHMARK(BM_TallyConstructive)->DenseRange(9, 11)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
