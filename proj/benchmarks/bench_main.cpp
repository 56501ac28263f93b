#include <benchmark/benchmark.h>

#include "pzeta/green.hpp"

using namespace pzeta;

namespace {

void BM_count_brute(benchmark::State& state) {
    Form f = Form::parse("x1^3 + x2^3", 2, Int(7));
    long m = state.range(0);
    for (auto _ : state) {
        Int n = count_zeros(f, m);
        benchmark::DoNotOptimize(n);
    }
}
BENCHMARK(BM_count_brute)->Arg(2)->Arg(3);

void BM_count_fast(benchmark::State& state) {
    Form f = Form::parse("x1^3 + x2^3", 2, Int(7));
    long m = state.range(0);
    for (auto _ : state) {
        Int n = count_zeros_fast(f, m);
        benchmark::DoNotOptimize(n);
    }
}
BENCHMARK(BM_count_fast)->Arg(2)->Arg(3)->Arg(6);

void BM_zeta_series(benchmark::State& state) {
    auto z = zeta_spf(Form::parse("x1*x2", 2, Int(3)));
    for (auto _ : state) {
        auto s = z.series_rat(state.range(0));
        benchmark::DoNotOptimize(s);
    }
}
BENCHMARK(BM_zeta_series)->Arg(8)->Arg(64);

void BM_apply_operator(benchmark::State& state) {
    Form h = Form::parse("x1^2 + x2^2", 2, Int(3));
    auto spec = OperatorSpec::make(h, Rat(1), zeta_elliptic(2, QMode{Int(3)}));
    auto w0 = DeltaFunction::indicator(Int(3), 2, 0);
    auto x = PAdicVector::from_rationals({Rat(1, 3), Rat(1)}, Int(3));
    for (auto _ : state) {
        auto v = apply_operator(spec, w0, x, state.range(0));
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_apply_operator)->Arg(3)->Arg(5);

void BM_green_pairing(benchmark::State& state) {
    Form h = Form::parse("x1^2 + x2^2", 2, Int(3));
    auto spec = OperatorSpec::make(h, Rat(1), zeta_elliptic(2, QMode{Int(3)}));
    auto g = GreenSpec::make(spec, Rat(1));
    Rat eps = rat_pow(Rat(10), -state.range(0));
    for (auto _ : state) {
        auto v = green_pair_exact(g, 1, eps);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_green_pairing)->Arg(6)->Arg(20);

void BM_symbolic_fe_residual(benchmark::State& state) {
    auto z = zeta_elliptic(2, QMode{});
    for (auto _ : state) {
        auto r = functional_equation_residual_sym(z, 1);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_symbolic_fe_residual);

}  // namespace

BENCHMARK_MAIN();
