// Microbenchmarks for the exact-arithmetic hot paths: kernel towers, leveled
// coordinate operations, hereditary codecs, fraction arithmetic, and the
// floating-point embedding.
#include <benchmark/benchmark.h>

#include <cmath>
#include <cstdint>
#include <string>

#include "hyperops/hereditary.hpp"
#include "hyperops/kernel.hpp"
#include "hyperops/laws.hpp"
#include "hyperops/leveled_nat.hpp"
#include "hyperops/leveled_rat.hpp"
#include "hyperops/path.hpp"
#include "hyperops/real_embedding.hpp"

using hyperops::HereditaryTerm;
using hyperops::LeveledNat;
using hyperops::LeveledRat;
using hyperops::Natural;
using hyperops::PathIndex;
using hyperops::PathNat;

namespace {

// Deterministic dense decimal of the requested length, for bignum inputs.
Natural dense_natural(std::size_t digit_count) {
    std::uint64_t s = 0x9E3779B97F4A7C15ull;
    std::string text = "1";
    while (text.size() < digit_count) {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        text.push_back(static_cast<char>('0' + s % 10));
    }
    return Natural(text);
}

void kernel_power(benchmark::State& state) {
    const Natural a(3);
    const Natural b(static_cast<unsigned long long>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(hyperops::hyper(3, a, b));
}
BENCHMARK(kernel_power)->Arg(64)->Arg(512)->Arg(4096);

void kernel_tower(benchmark::State& state) {
    const Natural two(2);
    const Natural five(5);
    for (auto _ : state) benchmark::DoNotOptimize(hyperops::hyper(4, two, five));
}
BENCHMARK(kernel_tower);

void leveled_sum(benchmark::State& state) {
    const LeveledNat a = hyperops::make(3, dense_natural(80), 2);
    const LeveledNat b = hyperops::make(3, dense_natural(75), 2);
    for (auto _ : state) benchmark::DoNotOptimize(hyperops::f_add(a, b));
}
BENCHMARK(leveled_sum);

void leveled_product(benchmark::State& state) {
    const LeveledNat a = hyperops::make(3, dense_natural(80), 2);
    const LeveledNat b = hyperops::make(3, dense_natural(75), 2);
    for (auto _ : state) benchmark::DoNotOptimize(hyperops::f_mul(a, b));
}
BENCHMARK(leveled_product);

void coordinate_unwind(benchmark::State& state) {
    const LeveledNat a =
        hyperops::make(1, static_cast<unsigned long long>(state.range(0)), 2);
    for (auto _ : state) benchmark::DoNotOptimize(hyperops::lower(a));
}
BENCHMARK(coordinate_unwind)->Arg(1 << 10)->Arg(1 << 16)->Arg(1 << 19);

void hereditary_encode(benchmark::State& state) {
    const LeveledNat a = hyperops::make(
        0, dense_natural(static_cast<std::size_t>(state.range(0))), 2);
    for (auto _ : state) benchmark::DoNotOptimize(hyperops::encode(a));
}
BENCHMARK(hereditary_encode)->Arg(40)->Arg(160);

void hereditary_decode(benchmark::State& state) {
    const HereditaryTerm t = hyperops::encode(hyperops::make(
        0, dense_natural(static_cast<std::size_t>(state.range(0))), 2));
    const Natural w(2);
    for (auto _ : state) benchmark::DoNotOptimize(hyperops::decode(t, w));
}
BENCHMARK(hereditary_decode)->Arg(40)->Arg(160);

void fraction_sum(benchmark::State& state) {
    const LeveledRat a =
        hyperops::make_rat(2, 987654321987654321LL, 123456789123456789LL, Natural(2));
    const LeveledRat b =
        hyperops::make_rat(2, -555555555555555557LL, 777777777777777781LL, Natural(2));
    for (auto _ : state) benchmark::DoNotOptimize(hyperops::q_add(a, b));
}
BENCHMARK(fraction_sum);

void fraction_product(benchmark::State& state) {
    const LeveledRat a =
        hyperops::make_rat(2, 987654321987654321LL, 123456789123456789LL, Natural(2));
    const LeveledRat b =
        hyperops::make_rat(2, -555555555555555557LL, 777777777777777781LL, Natural(2));
    for (auto _ : state) benchmark::DoNotOptimize(hyperops::q_mul(a, b));
}
BENCHMARK(fraction_product);

void path_operation(benchmark::State& state) {
    const PathIndex p =
        hyperops::extend_path(hyperops::extend_path(PathIndex(Natural(2)), 1), 2);
    const PathNat a(p, Natural(123456789));
    const PathNat b(p, Natural(987654321));
    for (auto _ : state) benchmark::DoNotOptimize(hyperops::hyper_path(2, a, b));
}
BENCHMARK(path_operation);

void real_embedding(benchmark::State& state) {
    const LeveledRat a = hyperops::make_rat(2, -1, 2, Natural(4));
    for (auto _ : state) benchmark::DoNotOptimize(hyperops::embed_rat(a));
}
BENCHMARK(real_embedding);

void log_semiring_sum(benchmark::State& state) {
    const double e = std::exp(1.0);
    for (auto _ : state) benchmark::DoNotOptimize(hyperops::bullet(-1, 0.25, 1.0, e));
}
BENCHMARK(log_semiring_sum);

void tower_iteration(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(hyperops::power_tower(1.4446));
}
BENCHMARK(tower_iteration);

void law_suite_semiring(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(hyperops::laws::run_suite(
            "semiring", 1, 42, static_cast<std::uint64_t>(state.range(0))));
}
BENCHMARK(law_suite_semiring)->Arg(10)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
