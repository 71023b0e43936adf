#include "charvar/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include "charvar/qinv.hpp"
#include "charvar/sl2trace.hpp"
#include "charvar/spin4.hpp"

namespace charvar {

namespace {

Verdict pass_fail(std::string name, bool ok, std::string detail = "") {
    return {std::move(name), ok, std::move(detail)};
}

ScalarMatrix scalar2(int a, int b, int c, int d) {
    ScalarMatrix m(2, 2);
    m.at(0, 0) = a;
    m.at(0, 1) = b;
    m.at(1, 0) = c;
    m.at(1, 1) = d;
    return m;
}

/// 4x4 matrix from 16 entries given as (2*re, 2*im) integer pairs, i.e.
/// the displayed matrices with their global 1/2 factor.
ScalarMatrix half_matrix(const int (&twice)[16][2]) {
    ScalarMatrix m(4, 4);
    GaussianRational half(Rational(1, 2));
    for (int k = 0; k < 16; ++k)
        m.at(k / 4, k % 4) = GaussianRational(Rational(twice[k][0]), Rational(twice[k][1])) * half;
    return m;
}

FreeWord random_word(std::mt19937_64& rng, int max_length) {
    std::uniform_int_distribution<int> len(0, max_length);
    std::uniform_int_distribution<int> letter(0, 3);
    std::vector<FreeWord::Letter> letters;
    int n = len(rng);
    for (int k = 0; k < n; ++k) {
        int pick = letter(rng);
        letters.emplace_back(pick / 2 + 1, pick % 2 == 0 ? 1 : -1);
    }
    return FreeWord(std::move(letters), 2);
}

GaussianRational eval_traces(const Polynomial& p, const ScalarMatrix& a, const ScalarMatrix& b) {
    return p.evaluate({{"t1", trace(a)}, {"t2", trace(b)}, {"t12", trace(a * b)}});
}

std::string count_detail(int failures, int total) {
    return std::to_string(failures) + " failures out of " + std::to_string(total);
}

}  // namespace

std::vector<Verdict> check_spin_fixtures() {
    std::vector<Verdict> out;
    ScalarMatrix c1 = sl2z_c1(), c2 = sl2z_c2();

    out.push_back(pass_fail("phi(I, I) = I", phi(ScalarMatrix::identity(2), ScalarMatrix::identity(2)) ==
                                                 ScalarMatrix::identity(4)));

    const int f11[16][2] = {{3, 0},  {0, -1}, {0, 2}, {0, 0}, {0, -1}, {1, 0}, {2, 0}, {0, 0},
                            {0, -2}, {-2, 0}, {2, 0}, {0, 0}, {0, 0},  {0, 0}, {0, 0}, {2, 0}};
    const int f12[16][2] = {{-1, 0}, {0, 1}, {0, 0},  {-2, 0}, {0, 1}, {1, 0}, {-2, 0}, {0, 0},
                            {0, 0},  {2, 0}, {1, 0},  {0, 1},  {2, 0}, {0, 0}, {0, 1},  {-1, 0}};
    const int f21[16][2] = {{-1, 0}, {0, 1}, {0, 0},  {2, 0},  {0, 1},  {1, 0}, {-2, 0}, {0, 0},
                            {0, 0},  {2, 0}, {1, 0},  {0, -1}, {-2, 0}, {0, 0}, {0, -1}, {-1, 0}};
    const int f22[16][2] = {{2, 0}, {0, 0},  {0, 0},  {0, 0}, {0, 0}, {-2, 0}, {0, 0}, {0, 0},
                            {0, 0}, {0, 0},  {-2, 0}, {0, 0}, {0, 0}, {0, 0},  {0, 0}, {2, 0}};
    out.push_back(pass_fail("phi(C1, C1) fixture", phi(c1, c1) == half_matrix(f11)));
    out.push_back(pass_fail("phi(C1, C2) fixture", phi(c1, c2) == half_matrix(f12)));
    out.push_back(pass_fail("phi(C2, C1) fixture", phi(c2, c1) == half_matrix(f21)));
    out.push_back(pass_fail("phi(C2, C2) fixture", phi(c2, c2) == half_matrix(f22)));

    ScalarMatrix minus_c1 = c1.scaled(GaussianRational(-1)), minus_c2 = c2.scaled(GaussianRational(-1));
    out.push_back(pass_fail("phi(-A, -B) = phi(A, B)", phi(minus_c1, minus_c2) == phi(c1, c2)));
    return out;
}

std::vector<Verdict> check_sigma_equivariance(std::uint64_t seed, int pairs) {
    std::vector<Verdict> out;

    PolyMatrix symbolic = symbolic_phi();
    PolyMatrix swapped(4, 4);
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
            swapped.at(r, c) = symbolic.at(r, c).rename([](const std::string& name) {
                return (name[0] == 'a' ? "b" : "a") + name.substr(1);
            });
    out.push_back(pass_fail("sigma(phi(a,b)) = phi(b,a) symbolically",
                            sigma_conjugate(symbolic) == swapped));

    int failures = 0;
    for (int s = 0; s < pairs; ++s) {
        ScalarMatrix a = sample_sl2(seed + 2 * static_cast<std::uint64_t>(s));
        ScalarMatrix b = sample_sl2(seed + 2 * static_cast<std::uint64_t>(s) + 1);
        if (sigma_conjugate(phi(a, b)) != phi(b, a)) ++failures;
    }
    out.push_back(
        pass_fail("sigma equivariance on seeded pairs", failures == 0, count_detail(failures, pairs)));
    return out;
}

std::vector<Verdict> check_symbolic_orthogonality(std::uint64_t seed, int pairs) {
    std::vector<Verdict> out;
    PolyMatrix p = symbolic_phi();

    Polynomial det_a = Polynomial::variable("a11") * Polynomial::variable("a22") -
                       Polynomial::variable("a12") * Polynomial::variable("a21");
    Polynomial det_b = Polynomial::variable("b11") * Polynomial::variable("b22") -
                       Polynomial::variable("b12") * Polynomial::variable("b21");
    PolyMatrix expected(4, 4);
    for (int k = 0; k < 4; ++k) expected.at(k, k) = det_a * det_b;
    out.push_back(pass_fail("phi phi^T = det(A) det(B) I symbolically", p * p.transpose() == expected));

    Polynomial tr;
    for (int k = 0; k < 4; ++k) tr += p.at(k, k);
    Polynomial tr_expected = (Polynomial::variable("a11") + Polynomial::variable("a22")) *
                             (Polynomial::variable("b11") + Polynomial::variable("b22"));
    out.push_back(pass_fail("tr phi = tr A tr B symbolically", tr == tr_expected));

    int hom_failures = 0, det_failures = 0;
    for (int s = 0; s < pairs; ++s) {
        std::uint64_t base = seed + 4 * static_cast<std::uint64_t>(s);
        ScalarMatrix a1 = sample_sl2(base), a2 = sample_sl2(base + 1);
        ScalarMatrix b1 = sample_sl2(base + 2), b2 = sample_sl2(base + 3);
        if (phi(a1 * a2, b1 * b2) != phi(a1, b1) * phi(a2, b2)) ++hom_failures;
        if (determinant(phi(a1, b1)) != GaussianRational(1)) ++det_failures;
    }
    out.push_back(pass_fail("phi is a homomorphism on seeded pairs", hom_failures == 0,
                            count_detail(hom_failures, pairs)));
    out.push_back(pass_fail("det phi = 1 on seeded pairs", det_failures == 0,
                            count_detail(det_failures, pairs)));
    return out;
}

std::vector<Verdict> check_trace_oracle(std::uint64_t seed, int words, int max_length) {
    std::mt19937_64 rng(seed);
    TraceReducer reducer;
    int mismatches = 0, inv_failures = 0, conj_failures = 0;
    for (int s = 0; s < words; ++s) {
        FreeWord w = random_word(rng, max_length);
        ScalarMatrix a = sample_sl2(seed + 100 + static_cast<std::uint64_t>(s));
        ScalarMatrix b = sample_sl2(seed + 200 + static_cast<std::uint64_t>(s));
        Polynomial p = reducer.reduce(w);
        if (eval_traces(p, a, b) != trace(evaluate_word(w, {a, b}))) ++mismatches;
        if (reducer.reduce(w.inverse()) != p) ++inv_failures;
        if (s % 10 == 0) {
            FreeWord u = random_word(rng, 4);
            FreeWord conj = u.concat(w).concat(u.inverse());
            if (eval_traces(reducer.reduce(conj), a, b) != eval_traces(p, a, b)) ++conj_failures;
        }
    }
    return {
        pass_fail("reduce_trace matches direct evaluation", mismatches == 0,
                  count_detail(mismatches, words)),
        pass_fail("trace of inverse word", inv_failures == 0, count_detail(inv_failures, words)),
        pass_fail("conjugation invariance", conj_failures == 0, ""),
    };
}

std::vector<Verdict> check_q4_calibration(std::uint64_t seed, int samples) {
    std::vector<Verdict> out;
    GaussianRational expected = QNormalization::standard(2).kappa;
    try {
        GaussianRational kappa = calibrate_kappa_q4(seed, samples);
        out.push_back(pass_fail("kappa constant across samples and word pairs", kappa == expected,
                                "kappa = " + kappa.to_string()));
    } catch (const std::logic_error& e) {
        out.push_back(pass_fail("kappa constant across samples and word pairs", false, e.what()));
    }

    std::vector<std::string> words = {"g1", "g2", "g1g2", "g1g2^-1"};
    bool diagonal_ok = true;
    std::string detail;
    for (const std::string& text : words) {
        FreeWord w = FreeWord::parse(text, 2);
        Polynomial lhs = q4_tau(w, w);
        Polynomial rhs = (reduce_trace_copy(w, 1).pow(2) - reduce_trace_copy(w, 2).pow(2)) *
                         GaussianRational(8);
        if (lhs != rhs) {
            diagonal_ok = false;
            detail += text + " ";
        }
    }
    out.push_back(
        pass_fail("Q4(w,w) = 8(tau_{w,1}^2 - tau_{w,2}^2) symbolically", diagonal_ok, detail));
    return out;
}

std::vector<Verdict> check_sign_law(std::uint64_t seed, int samples) {
    ScalarMatrix j = ScalarMatrix::identity(4);
    j.at(3, 3) = GaussianRational(-1);

    int sign_failures = 0, product_failures = 0;
    for (int s = 0; s < samples; ++s) {
        std::uint64_t base = seed + 8 * static_cast<std::uint64_t>(s);
        auto image = [&](std::uint64_t off) {
            return phi(sample_sl2(base + off), sample_sl2(base + off + 1));
        };
        ScalarMatrix x1 = image(0), x2 = image(2), y1 = image(4), y2 = image(6);
        ScalarMatrix m = image(100 + base % 7) * j;  // orthogonal with det -1
        auto conj = [&](const ScalarMatrix& x) { return m * x * m.transpose(); };

        GaussianRational qx = q_form<GaussianRational>({x1, x2});
        GaussianRational qy = q_form<GaussianRational>({y1, y2});
        GaussianRational qx_c = q_form<GaussianRational>({conj(x1), conj(x2)});
        GaussianRational qy_c = q_form<GaussianRational>({conj(y1), conj(y2)});
        if (qx_c != -qx) ++sign_failures;
        if (qx_c * qy_c != qx * qy) ++product_failures;
    }
    return {
        pass_fail("Q negates under det(-1) conjugation", sign_failures == 0,
                  count_detail(sign_failures, samples)),
        pass_fail("products of two Q values are invariant", product_failures == 0,
                  count_detail(product_failures, samples)),
    };
}

std::vector<Verdict> check_torus() {
    std::vector<Verdict> out;
    out.push_back(pass_fail("q_torus(2, 0) = 0", q_torus(2, 0).is_zero()));
    for (int k = 1; k <= 3; ++k)
        out.push_back(pass_fail("q_torus(2, " + std::to_string(k) + ") != 0", !q_torus(2, k).is_zero(),
                                q_torus(2, k).to_string()));

    register_laurent_variable("x1");
    Polynomial n1 = (Polynomial::variable("x1") - Polynomial::variable("x1", -1)) *
                    GaussianRational(Rational(0), Rational(2));
    out.push_back(pass_fail("q_torus(1, 1) = 2i(x - x^-1)", q_torus(1, 1) == n1));

    // odd Weyl reflection x1 -> x1^-1 flips the sign
    Polynomial q = q_torus(2, 1);
    Polynomial reflected;
    for (const auto& [mono, coeff] : q.terms()) {
        std::map<std::string, int> exps = mono.exponents();
        if (auto it = exps.find("x1"); it != exps.end()) it->second = -it->second;
        reflected += Polynomial(Monomial(exps), coeff);
    }
    out.push_back(pass_fail("odd sign change negates q_torus", reflected == -q));
    return out;
}

std::vector<Verdict> check_zerosum(long budget) {
    std::vector<Verdict> out;

    auto v = [](std::vector<int> entries) { return ZVector{std::move(entries)}; };
    std::vector<ZeroSumMultiset> expected = {
        {{v({0, 0})}},
        {{v({0, 1}), v({0, 1})}},
        {{v({0, 1}), v({1, 0}), v({1, 1})}},
        {{v({1, 0}), v({1, 0})}},
        {{v({1, 1}), v({1, 1})}},
    };
    out.push_back(pass_fail("V(2,2) matches the five multisets", minimal_zero_sum_multisets(2, 2) == expected));

    bool dav_n2 = true, dav_prime = true;
    std::string detail;
    for (int m = 1; m <= 6; ++m) {
        int d = davenport(m, 2, std::max(budget, 64L));
        if (d != 2 * m - 1) {
            dav_n2 = false;
            detail += "d(" + std::to_string(m) + ",2)=" + std::to_string(d) + " ";
        }
    }
    out.push_back(pass_fail("davenport(m, 2) = 2m - 1 for m <= 6", dav_n2, detail));
    detail.clear();
    for (int p : {2, 3})
        for (int n = 1; n <= 3; ++n) {
            int d = davenport(p, n, std::max(budget, 32L));
            if (d != n * (p - 1) + 1) {
                dav_prime = false;
                detail += "d(" + std::to_string(p) + "," + std::to_string(n) + ")=" + std::to_string(d) + " ";
            }
        }
    out.push_back(pass_fail("davenport(p, N) = N(p-1) + 1 for p in {2,3}, N <= 3", dav_prime, detail));

    bool bound_ok = true, brute_ok = true;
    long checked = 0;
    for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 3}, {2, 1}, {2, 2}, {2, 3}, {3, 2},
                                                        {3, 3}, {4, 2}, {5, 2}, {6, 2}}) {
        // outward-rounded upper bound: d <= (m-1)(1 + (N-1) m ln m) + 1
        double upper = (m - 1) * (1.0 + (n - 1) * m * std::log(static_cast<double>(m))) + 1.0;
        long upper_int = static_cast<long>(std::ceil(upper + 1e-9));
        for (const ZeroSumMultiset& ms : minimal_zero_sum_multisets(m, n, std::max(budget, 64L))) {
            ++checked;
            if (static_cast<long>(ms.vectors.size()) > upper_int) bound_ok = false;
            if (!is_minimal_zero_sum(ms.vectors, m)) brute_ok = false;
        }
    }
    out.push_back(pass_fail("Davenport upper bound never violated", bound_ok));
    out.push_back(pass_fail("brute-force minimality audit", brute_ok,
                            std::to_string(checked) + " multisets checked"));
    return out;
}

std::vector<Verdict> check_synthesis(long budget) {
    std::vector<Verdict> out;

    std::vector<WeightedGenerator> fricke = {
        {"t1", {{1, 0}}, "trace"}, {"t2", {{0, 1}}, "trace"}, {"t12", {{1, 1}}, "trace"}};
    std::vector<std::vector<std::string>> expected = {
        {"t1", "t1"}, {"t1", "t12", "t2"}, {"t12", "t12"}, {"t2", "t2"}};
    out.push_back(pass_fail("PSL(2) synthesis: t1^2, t2^2, t12^2, t1 t2 t12",
                            synthesize_generators(fricke, 2, 2, budget) == expected));

    std::vector<WeightedGenerator> mixed = {{"t1", {{1}}, "trace"}, {"Q", {{1}}, "q-invariant"}};
    std::vector<std::vector<std::string>> expected_mixed = {{"Q", "Q"}, {"Q", "t1"}, {"t1", "t1"}};
    out.push_back(pass_fail("mixed-kind synthesis over Z/2",
                            synthesize_generators(mixed, 2, 1, budget) == expected_mixed));
    return out;
}

std::vector<Verdict> check_relations() {
    std::vector<Verdict> out;
    MonomialMap so4 = so4_generator_map();
    for (const RelationVerdict& v : verify_relations(so4, so4_relations()))
        out.push_back(pass_fail("so4 " + v.name, v.zero,
                                v.zero ? "" : "residual " + v.residual.to_string()));
    for (const RelationVerdict& v : verify_relations(psl2_generator_map(), psl2_relations()))
        out.push_back(pass_fail("psl2 " + v.name, v.zero,
                                v.zero ? "" : "residual " + v.residual.to_string()));
    return out;
}

std::vector<Verdict> check_completeness(int psl2_degree, int so4_degree) {
    std::vector<Verdict> out;
    auto emit = [&](const std::string& label, const CompletenessCertificate& cert) {
        for (const DegreeCertificate& d : cert.per_degree)
            out.push_back(pass_fail(label + " degree " + std::to_string(d.degree), d.complete,
                                    "kernel=" + std::to_string(d.kernel_dim) +
                                        " span=" + std::to_string(d.span_rank)));
        out.push_back(pass_fail(label + " complete through degree " + std::to_string(cert.degree_bound),
                                cert.complete));
    };
    emit("psl2", completeness_certificate(psl2_generator_map(), psl2_relations(), psl2_degree));
    MonomialMap so4 = so4_generator_map();
    emit("so4", completeness_certificate(so4, so4_relations(), so4_degree));

    CompletenessCertificate mutated = completeness_certificate(so4, so4_relations({1, 2, 4, 5, 6}), 6);
    bool fails_at_6 = !mutated.per_degree.empty() && !mutated.per_degree.back().complete;
    for (const DegreeCertificate& d : mutated.per_degree)
        if (d.degree < 6 && !d.complete) fails_at_6 = false;
    out.push_back(pass_fail("mutation (cc-family removed) fails exactly at degree 6", fails_at_6));
    return out;
}

std::vector<Verdict> check_t_identities() {
    std::vector<Verdict> out = verify_t_identities();

    PQSplit split = pq_split_so4();
    std::vector<std::string> expected = {"1",
                                         "c_112 - c_221",
                                         "c_121 - c_212",
                                         "c_122 - c_211",
                                         "a1_11 - a1_22",
                                         "a2_11 - a2_22",
                                         "b_11 - b_22",
                                         "c_111 - c_222"};
    bool order_ok = split.t.size() == expected.size();
    std::string got;
    for (std::size_t k = 0; k < split.t.size(); ++k) {
        got += split.t_names[k] + " = " + split.t[k].to_string() + "; ";
        if (!order_ok || split.t[k].to_string() != expected[k]) order_ok = false;
    }
    out.push_back(pass_fail("t-list verbatim order", order_ok, got));
    return out;
}

std::vector<Verdict> check_ft_generators() {
    std::vector<Verdict> out = verify_ft_generators();
    for (Verdict& v : verify_module_decompositions(6)) out.push_back(std::move(v));
    return out;
}

std::vector<Verdict> check_independence() {
    std::vector<Verdict> out;
    IndependenceReport report = independence_certificate();
    out.push_back(pass_fail("degree-3 trace-algebra span has rank 5", report.rank_ft == 5,
                            "rank " + std::to_string(report.rank_ft)));
    for (std::size_t k = 0; k < report.rank_with.size(); ++k)
        out.push_back(pass_fail("rank with t" + std::to_string(k + 1) + " appended is 6",
                                report.rank_with[k] == 6, "rank " + std::to_string(report.rank_with[k])));
    out.push_back(pass_fail("rank with t1, t2, t3 appended is 8", report.rank_all == 8,
                            "rank " + std::to_string(report.rank_all)));
    out.push_back(pass_fail("c112 + c221 lies in the span", report.contains_c112_plus_c221));

    PQSplit split = pq_split_so4();
    bool products_fixed = true;
    for (std::size_t i = 1; i < split.t.size(); ++i)
        for (std::size_t j = i; j < split.t.size(); ++j) {
            Polynomial prod = split.t[i] * split.t[j];
            if (sigma_action(prod) != prod) products_fixed = false;
        }
    out.push_back(pass_fail("all products t_i t_j are sigma-fixed", products_fixed));

    for (Verdict& v : verify_module_generation(6))
        out.push_back(pass_fail("module generation " + v.name, v.ok, v.detail));
    return out;
}

std::vector<Verdict> check_newton(std::uint64_t seed, int samples) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> size_dist(2, 8);
    std::uniform_int_distribution<int> eig(-6, 6);

    int failures = 0;
    for (int s = 0; s < samples; ++s) {
        int n = size_dist(rng);
        std::vector<GaussianRational> eigenvalues;
        for (int k = 0; k < n; ++k) {
            int x = eig(rng);
            eigenvalues.push_back(x == 0 ? 1 : x);
        }
        std::vector<GaussianRational> power_traces;
        for (int d = 1; d <= n; ++d) {
            GaussianRational p = 0;
            for (const GaussianRational& lambda : eigenvalues) {
                GaussianRational t = 1;
                for (int e = 0; e < d; ++e) t *= lambda;
                p += t;
            }
            power_traces.push_back(p);
        }
        for (int k = 1; k <= n; ++k) {
            // brute-force e_k: sum over k-subsets of eigenvalue products
            GaussianRational want = 0;
            for (unsigned mask = 0; mask < (1u << n); ++mask) {
                if (__builtin_popcount(mask) != k) continue;
                GaussianRational prod = 1;
                for (int j = 0; j < n; ++j)
                    if (mask & (1u << j)) prod *= eigenvalues[static_cast<std::size_t>(j)];
                want += prod;
            }
            if (exterior_trace(power_traces, k) != want) ++failures;
        }
    }
    std::vector<Verdict> out;
    out.push_back(pass_fail("exterior_trace matches the eigenproduct oracle", failures == 0,
                            count_detail(failures, samples)));
    out.push_back(pass_fail("tr of the second exterior power of I_4 is 6",
                            exterior_trace({GaussianRational(4), GaussianRational(4)}, 2) ==
                                GaussianRational(6)));
    return out;
}

bool SuiteResult::all_ok() const {
    return std::all_of(items.begin(), items.end(), [](const Verdict& v) { return v.ok; });
}

std::vector<SuiteResult> run_verify_suite(const std::string& suite, std::uint64_t seed, int degree,
                                          long budget) {
    int psl2_degree = degree > 0 ? degree : 12;
    int so4_degree = degree > 0 ? degree : 8;

    std::vector<SuiteResult> results;
    auto want = [&](const std::string& name) { return suite == name || suite == "all"; };

    if (want("spin")) {
        SuiteResult r{"spin", check_spin_fixtures()};
        for (Verdict& v : check_sigma_equivariance(seed, 100)) r.items.push_back(std::move(v));
        for (Verdict& v : check_symbolic_orthogonality(seed, 100)) r.items.push_back(std::move(v));
        results.push_back(std::move(r));
    }
    if (want("traces")) {
        SuiteResult r{"traces", check_trace_oracle(seed, 1000, 20)};
        for (Verdict& v : check_newton(seed, 50)) r.items.push_back(std::move(v));
        results.push_back(std::move(r));
    }
    if (want("qinv")) {
        SuiteResult r{"qinv", check_q4_calibration(seed, 25)};
        for (Verdict& v : check_sign_law(seed, 100)) r.items.push_back(std::move(v));
        for (Verdict& v : check_torus()) r.items.push_back(std::move(v));
        results.push_back(std::move(r));
    }
    if (want("zerosum")) {
        SuiteResult r{"zerosum", check_zerosum(budget)};
        for (Verdict& v : check_synthesis(budget)) r.items.push_back(std::move(v));
        results.push_back(std::move(r));
    }
    if (want("relations")) results.push_back({"relations", check_relations()});
    if (want("completeness"))
        results.push_back({"completeness", check_completeness(psl2_degree, so4_degree)});
    if (want("t-identities")) results.push_back({"t-identities", check_t_identities()});
    if (want("ft-generators")) results.push_back({"ft-generators", check_ft_generators()});
    if (want("independence")) results.push_back({"independence", check_independence()});

    if (results.empty()) throw std::invalid_argument("unknown verify suite: " + suite);
    return results;
}

}  // namespace charvar
