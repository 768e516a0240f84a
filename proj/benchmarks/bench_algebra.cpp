#include <benchmark/benchmark.h>

#include "hsym/hopf.hpp"
#include "hsym/morphisms.hpp"
#include "hsym/ppartitions.hpp"

using namespace hsym;

namespace {

SignedPermutation longest_with_signs(long n) {
    // n- (n-1) (n-2)- ... alternating signs, descending.
    std::vector<Letter> v;
    for (long i = n; i >= 1; --i) {
        v.push_back(static_cast<Letter>((n - i) % 2 == 0 ? -i : i));
    }
    return SignedPermutation(v);
}

RegularizedComposition staircase(long parts) {
    std::vector<NTilde> v;
    for (long i = 1; i <= parts; ++i) {
        v.push_back(NTilde::of(i));
        v.push_back(E);
    }
    return RegularizedComposition(v);
}

void BM_HSymProduct(benchmark::State& state) {
    const auto s = longest_with_signs(state.range(0));
    const Rational q(-1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(shifted_quasi_shuffle(s, s, q));
    }
}
BENCHMARK(BM_HSymProduct)->DenseRange(1, 4);

void BM_HSymCoproduct(benchmark::State& state) {
    const auto s = longest_with_signs(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(hsym_coproduct(s));
    }
}
BENCHMARK(BM_HSymCoproduct)->RangeMultiplier(2)->Range(2, 16);

void BM_HSymAntipode(benchmark::State& state) {
    const auto s = longest_with_signs(state.range(0));
    const auto ctx = hsym_context(Rational(-1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(antipode_graded(ctx, s));
    }
}
BENCHMARK(BM_HSymAntipode)->DenseRange(1, 4);

void BM_RQSymProductF(benchmark::State& state) {
    const auto a = staircase(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(rqsym_product_F(a, a));
    }
}
BENCHMARK(BM_RQSymProductF)->DenseRange(1, 2);

void BM_FToM(benchmark::State& state) {
    const auto a = staircase(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(f_to_m(a));
    }
}
BENCHMARK(BM_FToM)->DenseRange(1, 4);

void BM_Gamma(benchmark::State& state) {
    const SignedLabeledPoset P({-1, 2, -3, -4}, {{-4, 2}, {2, -1}, {2, -3}});
    const int k = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(gamma(P, k));
    }
}
BENCHMARK(BM_Gamma)->DenseRange(4, 8, 2);

void BM_VerifySquare(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_square(state.range(0)));
    }
}
BENCHMARK(BM_VerifySquare)->DenseRange(2, 4);

} // namespace
BENCHMARK_MAIN();
