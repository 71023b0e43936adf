#pragma once

#include <array>

#include "charvar/matrix.hpp"

namespace charvar {

namespace detail {

// One bilinear term of a phi entry: unit * a(ar,ac) * b(br,bc), where
// unit encodes i^unit (0: 1, 1: i, 2: -1, 3: -i). Each of the 16 entries
// of phi is half the sum of four such terms. The table is transcribed
// once from the explicit 4x4 matrix of the double cover and validated by
// the phi(C_i, C_j) fixtures.
struct PhiTerm {
    int unit;
    int ar, ac, br, bc;
};

extern const std::array<std::array<std::array<PhiTerm, 4>, 4>, 4> kPhiTable;

GaussianRational unit_value(int unit);

}  // namespace detail

/// The epimorphism SL(2) x SL(2) -> SO(4) on 2x2 inputs with scalar or
/// polynomial entries. Scalar inputs must have determinant 1.
template <class T>
Matrix<T> phi(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.rows() != 2 || a.cols() != 2 || b.rows() != 2 || b.cols() != 2)
        throw std::invalid_argument("phi: inputs must be 2x2");
    if constexpr (std::is_same_v<T, GaussianRational>) {
        if (a.at(0, 0) * a.at(1, 1) - a.at(0, 1) * a.at(1, 0) != GaussianRational(1) ||
            b.at(0, 0) * b.at(1, 1) - b.at(0, 1) * b.at(1, 0) != GaussianRational(1))
            throw std::invalid_argument("phi: scalar inputs must lie in SL(2)");
    }
    Matrix<T> out(4, 4);
    GaussianRational half(Rational(1, 2));
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
            T sum = T(0);
            for (const detail::PhiTerm& t : detail::kPhiTable[r][c])
                sum = sum + a.at(t.ar, t.ac) * b.at(t.br, t.bc) * detail::unit_value(t.unit);
            out.at(r, c) = sum * half;
        }
    }
    return out;
}

/// Conjugation by diag(1,1,1,-1), applied as index sign flips on the last
/// row and column.
template <class T>
Matrix<T> sigma_conjugate(const Matrix<T>& x) {
    if (x.rows() != 4 || x.cols() != 4) throw std::invalid_argument("sigma_conjugate: input must be 4x4");
    Matrix<T> out = x;
    for (int k = 0; k < 3; ++k) {
        out.at(k, 3) = T(0) - out.at(k, 3);
        out.at(3, k) = T(0) - out.at(3, k);
    }
    return out;
}

/// phi over the 8 indeterminates a11..a22, b11..b22; every entry is
/// bilinear (degree 1 in the a's and in the b's).
PolyMatrix symbolic_phi();

/// The two 2x2 generators of SL(2,Z) used for the fixture matrices.
ScalarMatrix sl2z_c1();
ScalarMatrix sl2z_c2();

}  // namespace charvar
