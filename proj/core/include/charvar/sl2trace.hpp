#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "charvar/matrix.hpp"
#include "charvar/polynomial.hpp"
#include "charvar/words.hpp"

namespace charvar {

/// Fricke coordinate names: reduce_trace emits polynomials in t1, t2, t12.
inline const char* kTau1 = "t1";
inline const char* kTau2 = "t2";
inline const char* kTau12 = "t12";

/// Rewrites tr(rho(w)) for w in F_2 as a polynomial in the Fricke
/// coordinates (tr A, tr B, tr AB). Cyclic reduction first, then length
/// descent on tr(u)tr(v) = tr(uv) + tr(uv^-1); results are memoized on
/// the cyclically-reduced canonical form, so a long-lived reducer is much
/// faster on batches of related words.
class TraceReducer {
  public:
    Polynomial reduce(const FreeWord& w);

  private:
    Polynomial reduce_cyclic(std::vector<int> letters);
    std::map<std::vector<int>, Polynomial> memo_;
};

/// One-shot convenience wrapper around TraceReducer.
Polynomial reduce_trace(const FreeWord& w);

/// reduce_trace with t1 -> t1_<copy> etc., for the two SL(2) tensor
/// factors of SO(4).
Polynomial reduce_trace_copy(const FreeWord& w, int copy);

/// Renames t1, t2, t12 to their copy-indexed versions.
Polynomial with_copy_index(const Polynomial& p, int copy);

/// Seeded exact SL(2,Z) sample: a random product of elementary matrices
/// E12(k), E21(k) with |k| <= size_bound, so det = 1 by construction.
ScalarMatrix sample_sl2(std::uint64_t seed, int size_bound = 3, int factors = 6);

/// Exact product of the assigned matrices along the word. Matrices must
/// be invertible; the assignment provides one matrix per generator.
ScalarMatrix evaluate_word(const FreeWord& w, const std::vector<ScalarMatrix>& assignment);

GaussianRational trace(const ScalarMatrix& m);

/// e_k of the eigenvalues from the power traces p_d = tr(M^d), via
/// Newton's identities; equals tr of the k-th exterior power.
GaussianRational exterior_trace(const std::vector<GaussianRational>& power_traces, int k);

}  // namespace charvar
