#include "charvar/qinv.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "charvar/sl2trace.hpp"
#include "charvar/spin4.hpp"

namespace charvar {

QNormalization QNormalization::standard(int n) {
    if (n < 1) throw std::invalid_argument("QNormalization: n must be >= 1");
    GaussianRational kappa = 1;
    for (int j = 0; j < n; ++j) kappa *= GaussianRational(2);
    return {n, kappa};
}

const char* QNormalization::derivation() {
    return "kappa(n) = 2^n. For n = 2 this is forced: on seeded SL(2) pairs, "
           "q4_tau(w1,w2) evaluated at (tr A, tr B, tr AB) data equals exactly "
           "4 times the coefficient of t1*t2 in Pf(t1(X1-X1^T) + t2(X2-X2^T)) "
           "with X_i the rotation images of the word pair, and the ratio is "
           "constant across samples and word pairs (calibrate_kappa_q4). The "
           "same 2^n scaling is used for every n; on the standard torus it "
           "gives Q_2n = n! 2^n i^n prod_j (x_j^k - x_j^-k), a nonzero multiple "
           "of the half-spin character difference.";
}

Polynomial q4_tau(const FreeWord& w1, const FreeWord& w2) {
    FreeWord w12 = w1.concat(w2);
    Polynomial term1 = reduce_trace_copy(w1, 2) * reduce_trace_copy(w2, 2) * reduce_trace_copy(w12, 1);
    Polynomial term2 = reduce_trace_copy(w1, 1) * reduce_trace_copy(w2, 1) * reduce_trace_copy(w12, 2);
    return (term1 - term2) * GaussianRational(4);
}

PolyMatrix torus_block(const std::string& var, int k) {
    register_laurent_variable(var);
    GaussianRational half(Rational(1, 2));
    GaussianRational half_i(Rational(0), Rational(1, 2));
    Polynomial plus = Polynomial::variable(var, k) + Polynomial::variable(var, -k);
    Polynomial minus = Polynomial::variable(var, k) - Polynomial::variable(var, -k);
    PolyMatrix block(2, 2);
    block.at(0, 0) = plus * half;
    block.at(0, 1) = minus * half_i;
    block.at(1, 0) = minus * (-half_i);
    block.at(1, 1) = plus * half;
    return block;
}

PolyMatrix torus_element(int n, int k) {
    if (n < 1) throw std::invalid_argument("torus_element: n must be >= 1");
    PolyMatrix d(2 * n, 2 * n);
    for (int j = 0; j < n; ++j) {
        PolyMatrix block = torus_block("x" + std::to_string(j + 1), k);
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c) d.at(2 * j + r, 2 * j + c) = block.at(r, c);
    }
    return d;
}

Polynomial q_torus(int n, int k) {
    PolyMatrix d = torus_element(n, k);
    Polynomial pf = pfaffian(d - d.transpose());
    GaussianRational factor = QNormalization::standard(n).kappa;
    for (int j = 2; j <= n; ++j) factor *= GaussianRational(j);
    return pf * factor;
}

Polynomial q_torus_antisymmetrized(const std::vector<int>& exponents) {
    int n = static_cast<int>(exponents.size());
    if (n < 1) throw std::invalid_argument("q_torus_antisymmetrized: empty exponent list");
    std::vector<Polynomial> diffs;  // per variable, per exponent slot
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);

    GaussianRational i_n = 1;
    for (int j = 0; j < n; ++j) i_n *= GaussianRational::i();

    Polynomial total;
    do {
        // sign of perm by inversion count
        int inversions = 0;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (perm[a] > perm[b]) ++inversions;
        Polynomial prod(1);
        for (int slot = 0; slot < n; ++slot) {
            std::string var = "x" + std::to_string(perm[slot] + 1);
            register_laurent_variable(var);
            int k = exponents[slot];
            prod = prod * (Polynomial::variable(var, k) - Polynomial::variable(var, -k));
        }
        if (inversions % 2 == 0)
            total += prod;
        else
            total -= prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total * i_n;
}

GaussianRational calibrate_kappa_q4(std::uint64_t seed, int samples) {
    FreeWord g1 = FreeWord::parse("g1", 2);
    FreeWord g2 = FreeWord::parse("g2", 2);
    std::vector<std::pair<FreeWord, FreeWord>> word_pairs = {
        {g1, g2}, {g1, g1}, {g2, g2}, {g1.concat(g2), g1.concat(g2)}, {g1.concat(g2.inverse()), g2}};

    bool have_kappa = false;
    GaussianRational kappa = 0;
    for (int s = 0; s < samples; ++s) {
        std::uint64_t base = seed + 4 * static_cast<std::uint64_t>(s);
        std::vector<ScalarMatrix> first_copy = {sample_sl2(base), sample_sl2(base + 1)};
        std::vector<ScalarMatrix> second_copy = {sample_sl2(base + 2), sample_sl2(base + 3)};

        std::map<std::string, GaussianRational> values = {
            {"t1_1", trace(first_copy[0])},
            {"t2_1", trace(first_copy[1])},
            {"t12_1", trace(first_copy[0] * first_copy[1])},
            {"t1_2", trace(second_copy[0])},
            {"t2_2", trace(second_copy[1])},
            {"t12_2", trace(second_copy[0] * second_copy[1])},
        };

        for (const auto& [w1, w2] : word_pairs) {
            ScalarMatrix x1 = phi(evaluate_word(w1, first_copy), evaluate_word(w1, second_copy));
            ScalarMatrix x2 = phi(evaluate_word(w2, first_copy), evaluate_word(w2, second_copy));
            GaussianRational raw = polarized_pfaffian<GaussianRational>({x1, x2});
            GaussianRational expected = q4_tau(w1, w2).evaluate(values);
            if (raw.is_zero()) {
                if (!expected.is_zero()) throw std::logic_error("calibration: zero Pfaffian, nonzero tau value");
                continue;
            }
            GaussianRational ratio = expected / raw;
            if (!have_kappa) {
                kappa = ratio;
                have_kappa = true;
            } else if (ratio != kappa) {
                throw std::logic_error("calibration: kappa is not constant across samples");
            }
        }
    }
    if (!have_kappa) throw std::logic_error("calibration: all samples degenerate");
    return kappa;
}

}  // namespace charvar
