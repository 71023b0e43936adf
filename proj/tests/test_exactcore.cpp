#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "charvar/matrix.hpp"
#include "charvar/polynomial.hpp"
#include "charvar/rational.hpp"

using namespace charvar;

namespace {

Polynomial random_poly(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::uniform_int_distribution<int> exp(0, 3);
    Polynomial p;
    for (int t = 0; t < 4; ++t) {
        std::map<std::string, int> exps;
        for (const char* v : {"t1", "t2", "t12"}) {
            int e = exp(rng);
            if (e) exps[v] = e;
        }
        p += Polynomial(Monomial(exps), GaussianRational(coeff(rng), coeff(rng)));
    }
    return p;
}

}  // namespace

TEST_CASE("gaussian rational arithmetic") {
    GaussianRational i = GaussianRational::i();
    CHECK(i * i == GaussianRational(-1));
    GaussianRational z(Rational(1, 2), Rational(-3, 4));
    CHECK(z * z.conj() == GaussianRational(Rational(1, 4) + Rational(9, 16)));
    CHECK((z / z) == GaussianRational(1));
    CHECK(z + (-z) == GaussianRational(0));
    CHECK(GaussianRational(0).is_zero());
    CHECK(GaussianRational(3).is_real());
    CHECK_FALSE(i.is_real());
}

TEST_CASE("polynomial ring axioms on random elements") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 25; ++trial) {
        Polynomial a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == Polynomial());
        CHECK(a * Polynomial(1) == a);
        CHECK(a * Polynomial(0) == Polynomial());
    }
}

TEST_CASE("fricke square expansion") {
    Polynomial t1 = Polynomial::variable("t1");
    Polynomial t2 = Polynomial::variable("t2");
    Polynomial t12 = Polynomial::variable("t12");
    Polynomial p = t1 * t12 - t2;
    Polynomial sq = p.pow(2);
    CHECK(sq == t1 * t1 * t12 * t12 - t1 * t12 * t2 * GaussianRational(2) + t2 * t2);
    CHECK(sq.total_degree() == 4);
    CHECK(sq.term_count() == 3);
}

TEST_CASE("parse and print round-trip") {
    const char* samples[] = {
        "2*t12_2*t1_1^2 - (1/2 + 1 i)*t2_1",
        "t1*t12 - t2",
        "0",
        "1",
        "-1/3",
        "(0 + 1 i)",
        "x1 - x1^-1",
        "t1^3 - 3*t1",
    };
    register_laurent_variable("x1");
    for (const char* s : samples) {
        Polynomial p = Polynomial::parse(s);
        CHECK(p.to_string() == s);
        CHECK(Polynomial::parse(p.to_string()) == p);
    }
    // variable order inside a term is not significant on input
    CHECK(Polynomial::parse("2*t1_1^2*t12_2 - (1/2 + 1 i)*t2_1") ==
          Polynomial::parse("2*t12_2*t1_1^2 - (1/2 + 1 i)*t2_1"));
}

TEST_CASE("parse rejects malformed input") {
    CHECK_THROWS(Polynomial::parse("t1 +"));
    CHECK_THROWS(Polynomial::parse("t1^"));
    CHECK_THROWS(Polynomial::parse("(1/0)*t1"));
}

TEST_CASE("laurent exponents require registration") {
    register_laurent_variable("x9");
    CHECK_NOTHROW(Polynomial::variable("x9", -2));
    CHECK_THROWS(Polynomial::variable("t_nonlaurent", -1));
}

TEST_CASE("substitution and evaluation agree") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> val(-3, 3);
    for (int trial = 0; trial < 20; ++trial) {
        Polynomial p = random_poly(rng);
        std::map<std::string, GaussianRational> values;
        std::map<std::string, Polynomial> bindings;
        for (const char* v : {"t1", "t2", "t12"}) {
            GaussianRational g(val(rng), val(rng));
            values[v] = g;
            bindings[v] = Polynomial(g);
        }
        Polynomial image = p.substitute(bindings);
        CHECK(image.is_constant());
        CHECK(image.constant_value() == p.evaluate(values));
    }
}

TEST_CASE("grading splits and reassembles") {
    Polynomial p = Polynomial::parse("t1^2 + t1*t2 + t2^2 + t12");
    std::map<std::string, WeightKey> weights = {
        {"t1", {1, 0}}, {"t2", {0, 1}}, {"t12", {1, 1}}};
    auto parts = grade_components(p, weights, 2);
    Polynomial sum;
    for (const auto& [key, q] : parts) sum += q;
    CHECK(sum == p);
    CHECK(parts.at({0, 0}) == Polynomial::parse("t1^2 + t2^2"));
    CHECK(parts.at({1, 1}) == Polynomial::parse("t1*t2 + t12"));
}

TEST_CASE("kernel of the all-ones 2x2 matrix") {
    ScalarMatrix m(2, 2);
    m.at(0, 0) = 1;
    m.at(0, 1) = 1;
    m.at(1, 0) = 1;
    m.at(1, 1) = 1;
    auto basis = kernel_basis(m);
    REQUIRE(basis.size() == 1);
    // spanned by (1, -1)
    CHECK(basis[0][0] == -basis[0][1]);
    CHECK_FALSE(basis[0][0].is_zero());
    for (const auto& g : charvar::apply(m, basis[0])) CHECK(g.is_zero());
    CHECK(rank(m) == 1);
}

TEST_CASE("kernel of a hermitian-style complex matrix") {
    GaussianRational i = GaussianRational::i();
    ScalarMatrix m(2, 2);
    m.at(0, 0) = 1;
    m.at(0, 1) = i;
    m.at(1, 0) = -i;
    m.at(1, 1) = 1;
    auto basis = kernel_basis(m);
    REQUIRE(basis.size() == 1);
    // spanned by (-i, 1)
    CHECK(basis[0][0] == basis[0][1] * (-i));
    for (const auto& g : charvar::apply(m, basis[0])) CHECK(g.is_zero());
}

TEST_CASE("rank plus nullity equals columns on random matrices") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> entry(-3, 3);
    for (int trial = 0; trial < 30; ++trial) {
        int rows = 2 + static_cast<int>(rng() % 4);
        int cols = 2 + static_cast<int>(rng() % 4);
        ScalarMatrix m(rows, cols);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) m.at(r, c) = GaussianRational(entry(rng), entry(rng));
        auto basis = kernel_basis(m);
        CHECK(rank(m) + static_cast<int>(basis.size()) == cols);
        for (const auto& v : basis)
            for (const auto& g : charvar::apply(m, v)) CHECK(g.is_zero());
    }
}

TEST_CASE("inverse and determinant") {
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<int> entry(-3, 3);
    for (int trial = 0; trial < 20; ++trial) {
        ScalarMatrix m(3, 3);
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) m.at(r, c) = GaussianRational(entry(rng), entry(rng));
        GaussianRational d = determinant(m);
        CHECK(d == det_expansion(m));
        if (d.is_zero()) continue;
        CHECK(inverse(m) * m == ScalarMatrix::identity(3));
    }
}
