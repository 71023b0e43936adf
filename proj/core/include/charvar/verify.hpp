#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "charvar/presentation.hpp"
#include "charvar/zerosum.hpp"

namespace charvar {

/// Named verdict suites backing `charvar verify` and the acceptance
/// runner. Every check is deterministic for a fixed seed; each Verdict
/// carries a human-readable detail (residuals, dimensions, counts).

inline constexpr std::uint64_t kDefaultSeed = 1729;

/// phi fixtures: identity, the four C_i/C_j matrices, kernel symmetry.
std::vector<Verdict> check_spin_fixtures();

/// sigma o phi = phi o swap, symbolically in 8 indeterminates and on
/// seeded SL(2) pairs.
std::vector<Verdict> check_sigma_equivariance(std::uint64_t seed, int pairs);

/// phi phi^T = (det A)(det B) I and tr phi = tr A tr B as polynomial
/// identities; homomorphism and det = 1 on seeded pairs.
std::vector<Verdict> check_symbolic_orthogonality(std::uint64_t seed, int pairs);

/// reduce_trace against direct exact evaluation on seeded random words,
/// plus conjugation and inversion invariance.
std::vector<Verdict> check_trace_oracle(std::uint64_t seed, int words, int max_length);

/// kappa re-derivation (uniqueness across samples and word pairs) and the
/// symbolic diagonal law Q4(w,w) = 8(tau_{w,1}^2 - tau_{w,2}^2).
std::vector<Verdict> check_q4_calibration(std::uint64_t seed, int samples);

/// Q negates under conjugation by a seeded det(-1) orthogonal matrix;
/// products of two Q values are invariant.
std::vector<Verdict> check_sign_law(std::uint64_t seed, int samples);

/// q_torus(2,k) nonzero for k = 1,2,3 and zero for k = 0; closed form at
/// n = 1; sign flip under an odd Weyl reflection.
std::vector<Verdict> check_torus();

/// V(2,2) verbatim, Davenport equalities and upper bounds, brute-force
/// minimality audit of every enumerated multiset.
std::vector<Verdict> check_zerosum(long budget);

/// Generator synthesis fixtures (PSL(2) list and a mixed-kind basis).
std::vector<Verdict> check_synthesis(long budget);

/// All relation instantiations map to zero under both monomial maps.
std::vector<Verdict> check_relations();

/// Degree-by-degree completeness certificates, plus the mutation check
/// (dropping the cc-family must fail at degree 6).
std::vector<Verdict> check_completeness(int psl2_degree, int so4_degree);

/// The seven t-identities and the verbatim t-list order.
std::vector<Verdict> check_t_identities();

/// Full-trace-algebra membership identities and the single-copy module
/// decompositions through degree 6.
std::vector<Verdict> check_ft_generators();

/// Degree-3 rank certificate, sigma-fixedness of the products t_i t_j,
/// and the module generation statement through degree 6.
std::vector<Verdict> check_independence();

/// exterior_trace against the brute-force eigenvalue-product oracle on
/// seeded diagonal matrices up to size 8.
std::vector<Verdict> check_newton(std::uint64_t seed, int samples);

struct SuiteResult {
    std::string suite;
    std::vector<Verdict> items;

    bool all_ok() const;
};

/// Runs the named suite: one of relations, completeness, t-identities,
/// ft-generators, independence, spin, traces, qinv, zerosum, or all.
/// degree = 0 means the default bounds (PSL(2) 12, SO(4) 8).
std::vector<SuiteResult> run_verify_suite(const std::string& suite, std::uint64_t seed, int degree,
                                          long budget);

}  // namespace charvar
