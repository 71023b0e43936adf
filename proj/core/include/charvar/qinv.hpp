#pragma once

#include <cstdint>
#include <vector>

#include "charvar/matrix.hpp"
#include "charvar/polynomial.hpp"
#include "charvar/words.hpp"

namespace charvar {

/// Multilinear part of Pf: the coefficient of t1...tn in
/// Pf(sum_i t_i (X_i - X_i^T)), extracted by inclusion-exclusion over
/// subsets. Symmetric and multilinear; the diagonal satisfies
/// polarized_pfaffian(X,...,X) = n! * Pf(X - X^T).
template <class T>
T polarized_pfaffian(const std::vector<Matrix<T>>& xs) {
    if (xs.empty()) throw std::invalid_argument("polarized_pfaffian: empty argument list");
    int n = static_cast<int>(xs.size());
    int dim = 2 * n;
    for (const auto& x : xs)
        if (x.rows() != dim || x.cols() != dim)
            throw std::invalid_argument("polarized_pfaffian: each argument must be 2n x 2n");

    std::vector<Matrix<T>> skews;
    skews.reserve(xs.size());
    for (const auto& x : xs) skews.push_back(x - x.transpose());

    T total = T(0);
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        Matrix<T> sum(dim, dim);
        int bits = 0;
        for (int k = 0; k < n; ++k)
            if (mask & (1u << k)) {
                sum = sum + skews[static_cast<std::size_t>(k)];
                ++bits;
            }
        T pf = pfaffian(sum);
        if ((n - bits) % 2 == 0)
            total = total + pf;
        else
            total = total - pf;
    }
    return total;
}

/// Normalization of Q_2n relative to the polarized Pfaffian:
/// kappa(n) = 2^n. For n = 2 this is the unique constant matching the
/// tau-formula of q4_tau on rotation images of SL(2) pairs (see
/// derivation() and calibrate_kappa_q4).
struct QNormalization {
    int n;
    GaussianRational kappa;

    static QNormalization standard(int n);
    static const char* derivation();
};

/// Q_2n(X_1,...,X_n) = kappa * (coefficient of t1..tn in
/// Pf(sum t_i (X_i - X_i^T))).
template <class T>
T q_form(const std::vector<Matrix<T>>& xs) {
    QNormalization norm = QNormalization::standard(static_cast<int>(xs.size()));
    return polarized_pfaffian(xs) * norm.kappa;
}

/// Q_4 on a pair of F_2 words, expanded to the copy-indexed tau-ring:
/// 4(tau_{w1,2} tau_{w2,2} tau_{w1w2,1} - tau_{w1,1} tau_{w2,1} tau_{w1w2,2}).
Polynomial q4_tau(const FreeWord& w1, const FreeWord& w2);

/// Q_2n on the torus element with 2x2 blocks of eigenvalues x_j^{+-k}:
/// equals n! * 2^n * i^n * prod_j (x_j^k - x_j^-k). Laurent in x1..xn;
/// zero iff k = 0.
Polynomial q_torus(int n, int k);

/// The 2x2 torus block with eigenvalues x^{+-k}; complex-orthogonal.
PolyMatrix torus_block(const std::string& var, int k);

/// Block-diagonal torus element used by q_torus.
PolyMatrix torus_element(int n, int k);

/// Diagnostic only: the antisymmetrized sum
/// i^n sum_mu sign(mu) prod_i (x_{mu(i)}^{k_i} - x_{mu(i)}^{-k_i})
/// for mixed exponents. With all k_i equal and n >= 2 it vanishes
/// identically, which is why q_torus uses the torus Pfaffian instead.
Polynomial q_torus_antisymmetrized(const std::vector<int>& exponents);

/// Re-derives kappa(2) from seeded samples: the ratio of q4_tau evaluated
/// on trace data to the raw polarized Pfaffian of the spin images.
/// Throws if the ratio is not constant across samples.
GaussianRational calibrate_kappa_q4(std::uint64_t seed, int samples);

}  // namespace charvar
