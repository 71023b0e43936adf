#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "charvar/sl2trace.hpp"
#include "charvar/words.hpp"

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

}  // namespace

TEST_CASE("fricke reductions of short words") {
    Polynomial t1 = Polynomial::variable("t1");
    Polynomial t2 = Polynomial::variable("t2");
    Polynomial t12 = Polynomial::variable("t12");

    CHECK(reduce_trace(FreeWord::parse("e", 2)) == Polynomial(2));
    CHECK(reduce_trace(FreeWord::parse("g1", 2)) == t1);
    CHECK(reduce_trace(FreeWord::parse("g1^-1", 2)) == t1);
    CHECK(reduce_trace(FreeWord::parse("g1 g2", 2)) == t12);
    CHECK(reduce_trace(FreeWord::parse("g1^2", 2)) == t1 * t1 - 2);
    CHECK(reduce_trace(FreeWord::parse("g1^2 g2", 2)) == t1 * t12 - t2);
    CHECK(reduce_trace(FreeWord::parse("g2 g1", 2)) == t12);
    CHECK(reduce_trace(FreeWord::parse("g1 g2^-1", 2)) == t1 * t2 - t12);
}

TEST_CASE("elementary matrix product fixture") {
    // E12(3) E21(2) = [[7, 3], [2, 1]]
    ScalarMatrix e12 = ScalarMatrix::identity(2);
    e12.at(0, 1) = 3;
    ScalarMatrix e21 = ScalarMatrix::identity(2);
    e21.at(1, 0) = 2;
    ScalarMatrix p = e12 * e21;
    CHECK(p.at(0, 0) == GaussianRational(7));
    CHECK(p.at(0, 1) == GaussianRational(3));
    CHECK(p.at(1, 0) == GaussianRational(2));
    CHECK(p.at(1, 1) == GaussianRational(1));
}

TEST_CASE("sampled sl2 matrices have determinant one") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        ScalarMatrix m = sample_sl2(seed);
        CHECK(m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0) == GaussianRational(1));
        CHECK(sample_sl2(seed) == m);  // deterministic
    }
}

TEST_CASE("reduction against direct evaluation") {
    std::mt19937_64 rng(2024);
    TraceReducer reducer;
    for (int trial = 0; trial < 200; ++trial) {
        FreeWord w = random_word(rng, 1 + static_cast<int>(rng() % 8));
        std::uint64_t seed = rng();
        std::vector<ScalarMatrix> pair = {sample_sl2(seed), sample_sl2(seed + 1)};
        std::map<std::string, GaussianRational> values = {
            {"t1", trace(pair[0])},
            {"t2", trace(pair[1])},
            {"t12", trace(pair[0] * pair[1])},
        };
        CHECK(reducer.reduce(w).evaluate(values) == trace(evaluate_word(w, pair)));
    }
}

TEST_CASE("trace is conjugation and inversion invariant") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        FreeWord w = random_word(rng, 1 + static_cast<int>(rng() % 6));
        FreeWord c = random_word(rng, 2);
        CHECK(reduce_trace(w.inverse()) == reduce_trace(w));
        CHECK(reduce_trace(c.concat(w).concat(c.inverse())) == reduce_trace(w));
    }
}

TEST_CASE("copy-indexed reduction renames coordinates") {
    FreeWord w = FreeWord::parse("g1^2 g2", 2);
    Polynomial p = reduce_trace_copy(w, 2);
    CHECK(p == Polynomial::parse("t1_2*t12_2 - t2_2"));
    CHECK(with_copy_index(reduce_trace(w), 1) == reduce_trace_copy(w, 1));
}

TEST_CASE("exterior traces from power sums") {
    // diag(2, 3, 5): e1 = 10, e2 = 31, e3 = 30
    std::vector<GaussianRational> powers;
    for (int d = 1; d <= 3; ++d)
        powers.push_back(GaussianRational(1 << d) + GaussianRational(static_cast<long long>(std::pow(3, d))) +
                         GaussianRational(static_cast<long long>(std::pow(5, d))));
    CHECK(exterior_trace(powers, 1) == GaussianRational(10));
    CHECK(exterior_trace(powers, 2) == GaussianRational(31));
    CHECK(exterior_trace(powers, 3) == GaussianRational(30));
    CHECK(exterior_trace(powers, 0) == GaussianRational(1));
}
