// Acceptance runner: one line per criterion, nonzero exit on any failure.

#include <iostream>
#include <string>
#include <vector>

#include "charvar/verify.hpp"

using namespace charvar;

namespace {

int failures = 0;

void report(int number, const std::string& title, const std::vector<Verdict>& items) {
    bool ok = true;
    std::string first_failure;
    for (const Verdict& v : items)
        if (!v.ok) {
            ok = false;
            if (first_failure.empty()) first_failure = v.name;
        }
    std::cout << (ok ? "pass" : "FAIL") << "  " << number << ". " << title;
    if (!ok) {
        std::cout << "  (first failing check: " << first_failure << ")";
        ++failures;
    }
    std::cout << "\n" << std::flush;
}

std::vector<Verdict> concat(std::vector<Verdict> a, const std::vector<Verdict>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

}  // namespace

int main() {
    const std::uint64_t seed = kDefaultSeed;

    report(1, "spin-map fixtures", check_spin_fixtures());
    report(2, "sigma-equivariance, symbolic and on 100 seeded pairs",
           check_sigma_equivariance(seed, 100));
    report(3, "symbolic orthogonality and trace identity", check_symbolic_orthogonality(seed, 100));
    report(4, "trace-calculus oracle on 1000 seeded words", check_trace_oracle(seed, 1000, 20));
    report(5, "Q calibration and the Q4 diagonal formula", check_q4_calibration(seed, 25));
    report(6, "sign law and product invariance", check_sign_law(seed, 100));
    report(7, "torus nonvanishing", check_torus());
    report(8, "zero-sum enumeration and Davenport constants", check_zerosum(kDefaultZeroSumBudget));
    report(9, "generator synthesis", check_synthesis(kDefaultZeroSumBudget));
    report(10, "relations and completeness certificates",
           concat(check_relations(), check_completeness(12, 8)));
    report(11, "t-identities and the t-list", check_t_identities());
    report(12, "FT-generator identities and module decompositions", check_ft_generators());
    report(13, "independence certificate", check_independence());
    report(14, "Newton identities", check_newton(seed, 50));

    if (failures) {
        std::cout << failures << " criteria failed\n";
        return 1;
    }
    std::cout << "all 14 criteria passed\n";
    return 0;
}
