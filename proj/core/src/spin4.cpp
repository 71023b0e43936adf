#include "charvar/spin4.hpp"

namespace charvar {

namespace detail {

GaussianRational unit_value(int unit) {
    switch (unit & 3) {
        case 0: return GaussianRational(1);
        case 1: return GaussianRational::i();
        case 2: return GaussianRational(-1);
        default: return -GaussianRational::i();
    }
}

namespace {

constexpr PhiTerm t(int unit, int ar, int ac, int br, int bc) {
    // Indices in the table are 1-based to match the matrix-entry names
    // a_{rc}, b_{rc}; stored 0-based.
    return PhiTerm{unit, ar - 1, ac - 1, br - 1, bc - 1};
}

}  // namespace

// Entry (r,c) of 2*phi as four unit-weighted products a_{..} b_{..}.
const std::array<std::array<std::array<PhiTerm, 4>, 4>, 4> kPhiTable = {{
    {{
        {{t(0, 1, 1, 1, 1), t(0, 1, 2, 1, 2), t(0, 2, 1, 2, 1), t(0, 2, 2, 2, 2)}},
        {{t(1, 1, 1, 1, 1), t(3, 1, 2, 1, 2), t(1, 2, 1, 2, 1), t(3, 2, 2, 2, 2)}},
        {{t(1, 1, 2, 1, 1), t(1, 1, 1, 1, 2), t(1, 2, 2, 2, 1), t(1, 2, 1, 2, 2)}},
        {{t(2, 1, 2, 1, 1), t(0, 1, 1, 1, 2), t(2, 2, 2, 2, 1), t(0, 2, 1, 2, 2)}},
    }},
    {{
        {{t(3, 1, 1, 1, 1), t(3, 1, 2, 1, 2), t(1, 2, 1, 2, 1), t(1, 2, 2, 2, 2)}},
        {{t(0, 1, 1, 1, 1), t(2, 1, 2, 1, 2), t(2, 2, 1, 2, 1), t(0, 2, 2, 2, 2)}},
        {{t(0, 1, 2, 1, 1), t(0, 1, 1, 1, 2), t(2, 2, 2, 2, 1), t(2, 2, 1, 2, 2)}},
        {{t(1, 1, 2, 1, 1), t(3, 1, 1, 1, 2), t(3, 2, 2, 2, 1), t(1, 2, 1, 2, 2)}},
    }},
    {{
        {{t(3, 2, 1, 1, 1), t(3, 2, 2, 1, 2), t(3, 1, 1, 2, 1), t(3, 1, 2, 2, 2)}},
        {{t(0, 2, 1, 1, 1), t(2, 2, 2, 1, 2), t(0, 1, 1, 2, 1), t(2, 1, 2, 2, 2)}},
        {{t(0, 2, 2, 1, 1), t(0, 2, 1, 1, 2), t(0, 1, 2, 2, 1), t(0, 1, 1, 2, 2)}},
        {{t(1, 2, 2, 1, 1), t(3, 2, 1, 1, 2), t(1, 1, 2, 2, 1), t(3, 1, 1, 2, 2)}},
    }},
    {{
        {{t(2, 2, 1, 1, 1), t(2, 2, 2, 1, 2), t(0, 1, 1, 2, 1), t(0, 1, 2, 2, 2)}},
        {{t(3, 2, 1, 1, 1), t(1, 2, 2, 1, 2), t(1, 1, 1, 2, 1), t(3, 1, 2, 2, 2)}},
        {{t(3, 2, 2, 1, 1), t(3, 2, 1, 1, 2), t(1, 1, 2, 2, 1), t(1, 1, 1, 2, 2)}},
        {{t(0, 2, 2, 1, 1), t(2, 2, 1, 1, 2), t(2, 1, 2, 2, 1), t(0, 1, 1, 2, 2)}},
    }},
}};

}  // namespace detail

PolyMatrix symbolic_phi() {
    PolyMatrix a(2, 2), b(2, 2);
    for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) {
            std::string suffix = std::to_string(r + 1) + std::to_string(c + 1);
            a.at(r, c) = Polynomial::variable("a" + suffix);
            b.at(r, c) = Polynomial::variable("b" + suffix);
        }
    }
    return phi(a, b);
}

ScalarMatrix sl2z_c1() {
    ScalarMatrix c1(2, 2);
    c1.at(0, 0) = 1;
    c1.at(0, 1) = 1;
    c1.at(1, 1) = 1;
    return c1;
}

ScalarMatrix sl2z_c2() {
    ScalarMatrix c2(2, 2);
    c2.at(0, 1) = -1;
    c2.at(1, 0) = 1;
    return c2;
}

}  // namespace charvar
