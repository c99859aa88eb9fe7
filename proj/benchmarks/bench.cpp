#include "conway/notation.hpp"
#include "conway/registry.hpp"
#include "conway/tangle2.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace conway;

namespace {

Polynomial dense_poly(int vars, int terms, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> var(1, vars), nfac(1, 3), coef(-4, 4);
    Polynomial p;
    for (int t = 0; t < terms; ++t) {
        int c = coef(rng);
        Polynomial term(c == 0 ? 1 : c);
        int f = nfac(rng);
        for (int k = 0; k < f; ++k) term *= Polynomial::var(static_cast<VarId>(var(rng)));
        p += term;
    }
    return p;
}

void BM_PolyMul(benchmark::State& state) {
    Polynomial p = dense_poly(6, static_cast<int>(state.range(0)), 1);
    Polynomial q = dense_poly(6, static_cast<int>(state.range(0)), 2);
    for (auto _ : state) {
        Polynomial r = p * q;
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_PolyMul)->Arg(8)->Arg(32)->Arg(128);

void BM_ChainEval(benchmark::State& state) {
    Chain2 c{row2(Polynomial::var(1), 1), {}, col2(Polynomial::var(6), 1)};
    for (int k = 0; k < 4; ++k)
        c.interior.push_back(elem(ElemKind::Bottom, Polynomial::var(static_cast<VarId>(k + 2))));
    for (auto _ : state) {
        Polynomial r = chain_eval(c);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_ChainEval);

void BM_ExpandLongest(benchmark::State& state) {
    ExprNode e = parse(
        "row5(a1+a3+a5, a3a5, a5a1, a1a3, a1a3a5) P5 "
        "col5(1, a2, a4, a6, a2a4+a4a6+a6a2)");
    for (auto _ : state) {
        Polynomial r = expand(e);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_ExpandLongest);

void BM_VerifyAll(benchmark::State& state) {
    auto records = load_default();
    for (auto _ : state) {
        auto reports = verify_all(records);
        benchmark::DoNotOptimize(reports);
    }
}
BENCHMARK(BM_VerifyAll)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
