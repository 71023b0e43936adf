#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "charvar/matrix.hpp"
#include "charvar/qinv.hpp"
#include "charvar/sl2trace.hpp"
#include "charvar/spin4.hpp"

using namespace charvar;

namespace {

PolyMatrix generic_skew(int n, const std::string& prefix) {
    PolyMatrix s(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = r + 1; c < n; ++c) {
            std::string name = prefix + std::to_string(r + 1) + std::to_string(c + 1);
            s.at(r, c) = Polynomial::variable(name);
            s.at(c, r) = -Polynomial::variable(name);
        }
    return s;
}

ScalarMatrix random_matrix(std::mt19937_64& rng, int n) {
    std::uniform_int_distribution<int> entry(-3, 3);
    ScalarMatrix m(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) m.at(r, c) = GaussianRational(entry(rng), entry(rng));
    return m;
}

ScalarMatrix random_skew(std::mt19937_64& rng, int n) {
    ScalarMatrix m = random_matrix(rng, n);
    return m - m.transpose();
}

}  // namespace

TEST_CASE("pfaffian closed forms") {
    PolyMatrix s2 = generic_skew(2, "x");
    CHECK(pfaffian(s2) == Polynomial::variable("x12"));

    PolyMatrix s4 = generic_skew(4, "x");
    Polynomial expected = Polynomial::parse("x12*x34 - x13*x24 + x14*x23");
    CHECK(pfaffian(s4) == expected);
}

TEST_CASE("pfaffian input validation") {
    PolyMatrix odd = generic_skew(3, "x");
    CHECK_THROWS(pfaffian(odd));
    PolyMatrix not_skew(2, 2);
    not_skew.at(0, 0) = Polynomial(1);
    CHECK_THROWS(pfaffian(not_skew));
}

TEST_CASE("pfaffian squared equals determinant") {
    CHECK(pfaffian(generic_skew(6, "y")).pow(2) == det_expansion(generic_skew(6, "y")));
    std::mt19937_64 rng(31);
    for (int n : {2, 4, 6, 8}) {
        for (int trial = 0; trial < 5; ++trial) {
            ScalarMatrix s = random_skew(rng, n);
            GaussianRational pf = pfaffian(s);
            CHECK(pf * pf == det_expansion(s));
        }
    }
}

TEST_CASE("pfaffian transforms by the determinant") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 10; ++trial) {
        ScalarMatrix s = random_skew(rng, 4);
        ScalarMatrix m = random_matrix(rng, 4);
        CHECK(pfaffian(m * s * m.transpose()) == pfaffian(s) * det_expansion(m));
    }
}

TEST_CASE("polarized pfaffian diagonal and symmetry") {
    std::mt19937_64 rng(23);
    ScalarMatrix x = random_matrix(rng, 4);
    ScalarMatrix y = random_matrix(rng, 4);
    CHECK(polarized_pfaffian<GaussianRational>({x, x}) ==
          pfaffian(x - x.transpose()) * GaussianRational(2));
    CHECK(polarized_pfaffian<GaussianRational>({x, y}) == polarized_pfaffian<GaussianRational>({y, x}));
}

TEST_CASE("polarized pfaffian is multilinear") {
    std::mt19937_64 rng(29);
    ScalarMatrix x = random_matrix(rng, 4);
    ScalarMatrix xp = random_matrix(rng, 4);
    ScalarMatrix y = random_matrix(rng, 4);
    GaussianRational a(2, 1), b(Rational(-1, 3), Rational(0));
    ScalarMatrix combo = x.scaled(a) + xp.scaled(b);
    CHECK(q_form<GaussianRational>({combo, y}) ==
          q_form<GaussianRational>({x, y}) * a + q_form<GaussianRational>({xp, y}) * b);
}

TEST_CASE("vanishing on the identity argument") {
    std::mt19937_64 rng(37);
    ScalarMatrix x = random_matrix(rng, 4);
    CHECK(q_form<GaussianRational>({ScalarMatrix::identity(4), x}).is_zero());
    FreeWord w = FreeWord::parse("g1 g2^-1 g1", 2);
    CHECK(q4_tau(FreeWord::parse("e", 2), w).is_zero());
}

TEST_CASE("q4 in tau coordinates matches the spin side") {
    std::mt19937_64 rng(41);
    FreeWord g1 = FreeWord::parse("g1", 2);
    FreeWord g2 = FreeWord::parse("g2", 2);
    for (int trial = 0; trial < 10; ++trial) {
        std::uint64_t seed = rng();
        std::vector<ScalarMatrix> first = {sample_sl2(seed), sample_sl2(seed + 1)};
        std::vector<ScalarMatrix> second = {sample_sl2(seed + 2), sample_sl2(seed + 3)};
        std::map<std::string, GaussianRational> values = {
            {"t1_1", trace(first[0])},   {"t2_1", trace(first[1])},
            {"t12_1", trace(first[0] * first[1])},
            {"t1_2", trace(second[0])},  {"t2_2", trace(second[1])},
            {"t12_2", trace(second[0] * second[1])},
        };
        ScalarMatrix x1 = phi(first[0], second[0]);
        ScalarMatrix x2 = phi(first[1], second[1]);
        CHECK(q4_tau(g1, g2).evaluate(values) == q_form<GaussianRational>({x1, x2}));
    }
}

TEST_CASE("kappa calibration is reproducible") {
    CHECK(calibrate_kappa_q4(12345, 4) == GaussianRational(4));
    CHECK(QNormalization::standard(2).kappa == GaussianRational(4));
    CHECK(QNormalization::standard(3).kappa == GaussianRational(8));
}

TEST_CASE("torus values") {
    register_laurent_variable("x1");
    Polynomial x1 = Polynomial::variable("x1");
    Polynomial x1inv = Polynomial::variable("x1", -1);
    CHECK(q_torus(1, 1) == (x1 - x1inv) * GaussianRational(Rational(0), Rational(2)));
    CHECK(q_torus(2, 0).is_zero());
    for (int k = 1; k <= 3; ++k) CHECK_FALSE(q_torus(2, k).is_zero());

    PolyMatrix d = torus_element(2, 1);
    PolyMatrix gram = d * d.transpose();
    CHECK(gram == PolyMatrix::identity(4));
}

TEST_CASE("antisymmetrized torus sum vanishes for equal exponents") {
    CHECK(q_torus_antisymmetrized({1, 1}).is_zero());
    CHECK_FALSE(q_torus_antisymmetrized({1, 2}).is_zero());
    CHECK_FALSE(q_torus_antisymmetrized({1}).is_zero());
}
