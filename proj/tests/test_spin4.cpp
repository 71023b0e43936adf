#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "charvar/matrix.hpp"
#include "charvar/sl2trace.hpp"
#include "charvar/spin4.hpp"

using namespace charvar;

namespace {

// entries doubled, as (real, imaginary) integer pairs
ScalarMatrix half_matrix(const int (&twice)[16][2]) {
    ScalarMatrix m(4, 4);
    for (int k = 0; k < 16; ++k)
        m.at(k / 4, k % 4) = GaussianRational(Rational(twice[k][0], 2), Rational(twice[k][1], 2));
    return m;
}

}  // namespace

TEST_CASE("identity maps to identity") {
    CHECK(phi(ScalarMatrix::identity(2), ScalarMatrix::identity(2)) == ScalarMatrix::identity(4));
}

TEST_CASE("explicit images of the SL(2,Z) generators") {
    ScalarMatrix c1 = sl2z_c1();
    ScalarMatrix c2 = sl2z_c2();

    const int f11[16][2] = {{3, 0}, {0, -1}, {0, 2}, {0, 0}, {0, -1}, {1, 0}, {2, 0}, {0, 0},
                            {0, -2}, {-2, 0}, {2, 0}, {0, 0}, {0, 0}, {0, 0}, {0, 0}, {2, 0}};
    const int f12[16][2] = {{-1, 0}, {0, 1}, {0, 0}, {-2, 0}, {0, 1}, {1, 0}, {-2, 0}, {0, 0},
                            {0, 0}, {2, 0}, {1, 0}, {0, 1}, {2, 0}, {0, 0}, {0, 1}, {-1, 0}};
    const int f21[16][2] = {{-1, 0}, {0, 1}, {0, 0}, {2, 0}, {0, 1}, {1, 0}, {-2, 0}, {0, 0},
                            {0, 0}, {2, 0}, {1, 0}, {0, -1}, {-2, 0}, {0, 0}, {0, -1}, {-1, 0}};
    const int f22[16][2] = {{2, 0}, {0, 0}, {0, 0}, {0, 0}, {0, 0}, {-2, 0}, {0, 0}, {0, 0},
                            {0, 0}, {0, 0}, {-2, 0}, {0, 0}, {0, 0}, {0, 0}, {0, 0}, {2, 0}};

    CHECK(phi(c1, c1) == half_matrix(f11));
    CHECK(phi(c1, c2) == half_matrix(f12));
    CHECK(phi(c2, c1) == half_matrix(f21));
    CHECK(phi(c2, c2) == half_matrix(f22));
}

TEST_CASE("kernel of the double cover") {
    ScalarMatrix minus_id = ScalarMatrix::identity(2).scaled(GaussianRational(-1));
    ScalarMatrix a = sl2z_c1();
    ScalarMatrix b = sl2z_c2();
    CHECK(phi(a.scaled(GaussianRational(-1)), b.scaled(GaussianRational(-1))) == phi(a, b));
    CHECK(phi(minus_id, minus_id) == ScalarMatrix::identity(4));
}

TEST_CASE("homomorphism on sampled pairs") {
    for (std::uint64_t seed = 100; seed < 120; ++seed) {
        ScalarMatrix a1 = sample_sl2(seed), a2 = sample_sl2(seed + 1000);
        ScalarMatrix b1 = sample_sl2(seed + 2000), b2 = sample_sl2(seed + 3000);
        CHECK(phi(a1 * a2, b1 * b2) == phi(a1, b1) * phi(a2, b2));
    }
}

TEST_CASE("images are special orthogonal") {
    for (std::uint64_t seed = 200; seed < 215; ++seed) {
        ScalarMatrix x = phi(sample_sl2(seed), sample_sl2(seed + 5000));
        CHECK(x * x.transpose() == ScalarMatrix::identity(4));
        CHECK(determinant(x) == GaussianRational(1));
    }
}

TEST_CASE("sigma conjugation is an involution and a real conjugation") {
    PolyMatrix sym = symbolic_phi();
    CHECK(sigma_conjugate(sigma_conjugate(sym)) == sym);

    // sigma_conjugate(x) = d x d^-1 with d = diag(1,1,1,-1)
    ScalarMatrix d = ScalarMatrix::identity(4);
    d.at(3, 3) = GaussianRational(-1);
    ScalarMatrix x = phi(sample_sl2(314), sample_sl2(315));
    CHECK(sigma_conjugate(x) == d * x * d);
}

TEST_CASE("sigma equivariance swaps the factors") {
    PolyMatrix sym = symbolic_phi();
    auto swap_names = [](const std::string& name) {
        if (name.empty()) return name;
        if (name[0] == 'a') return "b" + name.substr(1);
        if (name[0] == 'b') return "a" + name.substr(1);
        return name;
    };
    PolyMatrix swapped(4, 4);
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) swapped.at(r, c) = sym.at(r, c).rename(swap_names);
    CHECK(sigma_conjugate(sym) == swapped);
}

TEST_CASE("symbolic entries are bilinear") {
    PolyMatrix sym = symbolic_phi();
    std::map<std::string, WeightKey> weights;
    for (const char* v : {"a11", "a12", "a21", "a22"}) weights[v] = {1, 0};
    for (const char* v : {"b11", "b12", "b21", "b22"}) weights[v] = {0, 1};
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) {
            auto parts = grade_components(sym.at(r, c), weights, 0);
            REQUIRE(parts.size() == 1);
            CHECK(parts.begin()->first == WeightKey{1, 1});
        }
}

TEST_CASE("trace and orthogonality as polynomial identities") {
    PolyMatrix sym = symbolic_phi();
    Polynomial tr_a = Polynomial::parse("a11 + a22");
    Polynomial tr_b = Polynomial::parse("b11 + b22");
    Polynomial det_a = Polynomial::parse("a11*a22 - a12*a21");
    Polynomial det_b = Polynomial::parse("b11*b22 - b12*b21");

    Polynomial tr_phi;
    for (int k = 0; k < 4; ++k) tr_phi += sym.at(k, k);
    CHECK(tr_phi == tr_a * tr_b);

    PolyMatrix gram = sym * sym.transpose();
    Polynomial scale = det_a * det_b;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) CHECK(gram.at(r, c) == (r == c ? scale : Polynomial()));
}
