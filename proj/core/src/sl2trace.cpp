#include "charvar/sl2trace.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace charvar {

namespace {

// Letters are expanded to +-1, +-2 (sign = exponent sign).

std::vector<int> free_reduce(const std::vector<int>& in) {
    std::vector<int> out;
    for (int g : in) {
        if (!out.empty() && out.back() == -g)
            out.pop_back();
        else
            out.push_back(g);
    }
    return out;
}

std::vector<int> cyclic_reduce(std::vector<int> w) {
    w = free_reduce(w);
    while (w.size() >= 2 && w.front() == -w.back()) {
        w.erase(w.begin());
        w.pop_back();
    }
    return w;
}

std::vector<int> rotated(const std::vector<int>& w, std::size_t k) {
    std::vector<int> out(w.begin() + static_cast<long>(k), w.end());
    out.insert(out.end(), w.begin(), w.begin() + static_cast<long>(k));
    return out;
}

std::vector<int> inverted(const std::vector<int>& w) {
    std::vector<int> out(w.rbegin(), w.rend());
    for (int& g : out) g = -g;
    return out;
}

// Minimum over all rotations of w and of w^-1: a conjugation- and
// inversion-invariant key, matching the invariance of the trace.
std::vector<int> canonical_key(const std::vector<int>& w) {
    if (w.empty()) return w;
    std::vector<int> best = w;
    std::vector<int> inv = inverted(w);
    for (std::size_t k = 0; k < w.size(); ++k) {
        best = std::min(best, rotated(w, k));
        best = std::min(best, rotated(inv, k));
    }
    return best;
}

Polynomial fricke(int gen) {
    return Polynomial::variable(gen == 1 ? kTau1 : kTau2);
}

}  // namespace

Polynomial TraceReducer::reduce(const FreeWord& w) {
    for (const auto& [gen, exp] : w.letters())
        if (gen > 2) throw std::invalid_argument("trace reduction is limited to F_2");
    return reduce_cyclic(w.expanded());
}

Polynomial TraceReducer::reduce_cyclic(std::vector<int> letters) {
    letters = cyclic_reduce(letters);
    std::vector<int> key = canonical_key(letters);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    Polynomial result;
    if (letters.empty()) {
        result = Polynomial(2);
    } else if (letters.size() == 1) {
        result = fricke(std::abs(letters[0]));
    } else {
        std::size_t n = letters.size();
        std::size_t neg = n;
        for (std::size_t k = 0; k < n; ++k)
            if (letters[k] < 0) {
                neg = k;
                break;
            }
        if (neg < n) {
            // w ~ r g^-1 (rotate the inverse letter to the end), then
            // tr(r g^-1) = tr(r) tr(g) - tr(r g).
            std::vector<int> rot = rotated(letters, (neg + 1) % n);
            int g = -rot.back();
            rot.pop_back();
            std::vector<int> rg = rot;
            rg.push_back(g);
            result = reduce_cyclic(rot) * fricke(g) - reduce_cyclic(rg);
        } else if (n == 2 && letters[0] != letters[1]) {
            result = Polynomial::variable(kTau12);
        } else {
            // Positive word with a repeated generator: split at the two
            // occurrences, w ~ g A g B, and use
            // tr(gA gB) = tr(gA) tr(gB) - tr(A B^-1).
            std::size_t first = 0, second = n;
            for (std::size_t k = 0; k < n && second == n; ++k)
                for (std::size_t j = k + 1; j < n; ++j)
                    if (letters[j] == letters[k]) {
                        first = k;
                        second = j;
                        break;
                    }
            if (second == n) throw std::logic_error("unreachable: no repeat in positive F_2 word");
            std::vector<int> rot = rotated(letters, first);
            std::size_t split = second - first;
            std::vector<int> ga(rot.begin(), rot.begin() + static_cast<long>(split));
            std::vector<int> gb(rot.begin() + static_cast<long>(split), rot.end());
            std::vector<int> a(ga.begin() + 1, ga.end());
            std::vector<int> b(gb.begin() + 1, gb.end());
            std::vector<int> ab_inv = a;
            std::vector<int> b_inv = inverted(b);
            ab_inv.insert(ab_inv.end(), b_inv.begin(), b_inv.end());
            result = reduce_cyclic(ga) * reduce_cyclic(gb) - reduce_cyclic(ab_inv);
        }
    }
    memo_.emplace(std::move(key), result);
    return result;
}

Polynomial reduce_trace(const FreeWord& w) {
    TraceReducer reducer;
    return reducer.reduce(w);
}

Polynomial with_copy_index(const Polynomial& p, int copy) {
    return p.rename([copy](const std::string& name) { return name + "_" + std::to_string(copy); });
}

Polynomial reduce_trace_copy(const FreeWord& w, int copy) {
    return with_copy_index(reduce_trace(w), copy);
}

ScalarMatrix sample_sl2(std::uint64_t seed, int size_bound, int factors) {
    if (size_bound < 1) throw std::invalid_argument("size_bound must be >= 1");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coeff(1, size_bound);
    std::uniform_int_distribution<int> flip(0, 1);
    ScalarMatrix m = ScalarMatrix::identity(2);
    for (int f = 0; f < factors; ++f) {
        int k = coeff(rng) * (flip(rng) ? 1 : -1);
        ScalarMatrix e = ScalarMatrix::identity(2);
        if (f % 2 == 0)
            e.at(0, 1) = k;
        else
            e.at(1, 0) = k;
        m = m * e;
    }
    return m;
}

namespace {

ScalarMatrix inverse2(const ScalarMatrix& m) {
    GaussianRational det = m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0);
    if (det.is_zero()) throw std::domain_error("evaluate_word: singular matrix");
    ScalarMatrix inv(2, 2);
    GaussianRational d = GaussianRational(1) / det;
    inv.at(0, 0) = m.at(1, 1) * d;
    inv.at(0, 1) = -m.at(0, 1) * d;
    inv.at(1, 0) = -m.at(1, 0) * d;
    inv.at(1, 1) = m.at(0, 0) * d;
    return inv;
}

}  // namespace

ScalarMatrix evaluate_word(const FreeWord& w, const std::vector<ScalarMatrix>& assignment) {
    if (static_cast<int>(assignment.size()) < w.rank())
        throw std::invalid_argument("evaluate_word: assignment shorter than rank");
    ScalarMatrix result = ScalarMatrix::identity(2);
    for (const auto& [gen, exp] : w.letters()) {
        ScalarMatrix base = exp > 0 ? assignment[gen - 1] : inverse2(assignment[gen - 1]);
        for (int k = 0; k < std::abs(exp); ++k) result = result * base;
    }
    return result;
}

GaussianRational trace(const ScalarMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("trace: matrix not square");
    GaussianRational t = 0;
    for (int r = 0; r < m.rows(); ++r) t += m.at(r, r);
    return t;
}

GaussianRational exterior_trace(const std::vector<GaussianRational>& power_traces, int k) {
    if (k < 0) throw std::invalid_argument("exterior_trace: k must be >= 0");
    if (static_cast<int>(power_traces.size()) < k)
        throw std::invalid_argument("exterior_trace: need power traces up to k");
    std::vector<GaussianRational> e(static_cast<std::size_t>(k) + 1);
    e[0] = 1;
    for (int j = 1; j <= k; ++j) {
        GaussianRational sum = 0;
        for (int d = 1; d <= j; ++d) {
            GaussianRational term = e[j - d] * power_traces[d - 1];
            if (d % 2 == 0) term = -term;
            sum += term;
        }
        e[j] = sum / GaussianRational(j);
    }
    return e[k];
}

}  // namespace charvar
