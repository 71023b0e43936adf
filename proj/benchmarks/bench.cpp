#include <benchmark/benchmark.h>

#include <random>

#include "charvar/matrix.hpp"
#include "charvar/qinv.hpp"
#include "charvar/sl2trace.hpp"
#include "charvar/words.hpp"
#include "charvar/zerosum.hpp"

using namespace charvar;

namespace {

FreeWord random_word(std::mt19937_64& rng, int length) {
    std::vector<FreeWord::Letter> letters;
    std::uniform_int_distribution<int> gen(1, 2);
    std::uniform_int_distribution<int> exp(-2, 2);
    for (int k = 0; k < length; ++k) {
        int e = exp(rng);
        if (e == 0) e = 1;
        letters.push_back({gen(rng), e});
    }
    return FreeWord(std::move(letters), 2);
}

PolyMatrix generic_skew(int n) {
    PolyMatrix s(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = r + 1; c < n; ++c) {
            std::string name = "x" + std::to_string(r + 1) + "_" + std::to_string(c + 1);
            s.at(r, c) = Polynomial::variable(name);
            s.at(c, r) = -Polynomial::variable(name);
        }
    return s;
}

void BM_pfaffian_symbolic(benchmark::State& state) {
    PolyMatrix s = generic_skew(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(pfaffian(s));
}
BENCHMARK(BM_pfaffian_symbolic)->Arg(4)->Arg(6)->Arg(8);

void BM_reduce_trace(benchmark::State& state) {
    std::mt19937_64 rng(1);
    std::vector<FreeWord> words;
    for (int k = 0; k < 50; ++k) words.push_back(random_word(rng, static_cast<int>(state.range(0))));
    for (auto _ : state) {
        TraceReducer reducer;
        for (const FreeWord& w : words) benchmark::DoNotOptimize(reducer.reduce(w));
    }
}
BENCHMARK(BM_reduce_trace)->Arg(8)->Arg(12)->Arg(16);

void BM_polynomial_multiply(benchmark::State& state) {
    std::mt19937_64 rng(2);
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::uniform_int_distribution<int> exp(0, 4);
    Polynomial a, b;
    for (int t = 0; t < static_cast<int>(state.range(0)); ++t) {
        std::map<std::string, int> ea, eb;
        for (const char* v : {"t1", "t2", "t12"}) {
            if (int e = exp(rng)) ea[v] = e;
            if (int e = exp(rng)) eb[v] = e;
        }
        a += Polynomial(Monomial(ea), GaussianRational(coeff(rng)));
        b += Polynomial(Monomial(eb), GaussianRational(coeff(rng)));
    }
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_polynomial_multiply)->Arg(16)->Arg(64);

void BM_zerosum_enumeration(benchmark::State& state) {
    int m = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(minimal_zero_sum_multisets(m, 2, 1L << 40));
}
BENCHMARK(BM_zerosum_enumeration)->Arg(2)->Arg(3)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
