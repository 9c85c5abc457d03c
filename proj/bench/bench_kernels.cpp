// Serial reference vs OpenMP kernels, plus the two beta routes.

#include "dsym/combinat.hpp"
#include "dsym/divsym.hpp"
#include "dsym/kernels.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace dsym;
using namespace dsym::kernels;

namespace {

Polynomial dense(int n, int degree) {
    std::mt19937_64 rng(1);
    std::vector<Term> terms;
    for (const auto& c : weak_compositions(degree, n))
        terms.push_back({Monomial(std::span<const int>(c.parts)), Rational(static_cast<long>(rng() % 9) - 4)});
    return Polynomial::from_terms(n, std::move(terms));
}

void BM_AntiSerial(benchmark::State& st) {
    const auto f = dense(static_cast<int>(st.range(0)), 3);
    for (auto _ : st) benchmark::DoNotOptimize(antisymmetrize_serial(f));
}

void BM_AntiParallel(benchmark::State& st) {
    const auto f = dense(static_cast<int>(st.range(0)), 3);
    for (auto _ : st) benchmark::DoNotOptimize(antisymmetrize_parallel(f));
}

void BM_DsSerial(benchmark::State& st) {
    const int n = static_cast<int>(st.range(0));
    const auto f = dense(n, n - 1);
    for (auto _ : st) benchmark::DoNotOptimize(ds_bruteforce_serial(f));
}

void BM_DsParallel(benchmark::State& st) {
    const int n = static_cast<int>(st.range(0));
    const auto f = dense(n, n - 1);
    for (auto _ : st) benchmark::DoNotOptimize(ds_bruteforce(f));
}

DescentSet alternating(int n) {
    std::vector<int> s;
    for (int i = 1; i < n; i += 2) s.push_back(i);
    return DescentSet(n, s);
}

void BM_BetaInclusionExclusion(benchmark::State& st) {
    const int n = static_cast<int>(st.range(0));
    const auto s = alternating(n);
    for (auto _ : st) benchmark::DoNotOptimize(beta(n, s));
}

void BM_BetaEnumeration(benchmark::State& st) {
    const int n = static_cast<int>(st.range(0));
    const auto s = alternating(n);
    for (auto _ : st) benchmark::DoNotOptimize(beta_by_enumeration(n, s));
}

} // namespace

BENCHMARK(BM_AntiSerial)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AntiParallel)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DsSerial)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DsParallel)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BetaInclusionExclusion)->DenseRange(4, 8, 2);
BENCHMARK(BM_BetaEnumeration)->DenseRange(4, 8, 2)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
