#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "charvar/words.hpp"

namespace charvar {

/// Element of (Z/m)^N, entries reduced mod m.
struct ZVector {
    std::vector<int> entries;

    bool operator==(const ZVector& o) const = default;
    bool operator<(const ZVector& o) const { return entries < o.entries; }
};

/// Sorted multiset of vectors summing to zero with no proper nonempty
/// zero-sum submultiset.
struct ZeroSumMultiset {
    std::vector<ZVector> vectors;  // nondecreasing

    bool operator==(const ZeroSumMultiset& o) const = default;
    bool operator<(const ZeroSumMultiset& o) const { return vectors < o.vectors; }
};

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr long kDefaultZeroSumBudget = 4096;

/// Complete, duplicate-free enumeration of the minimal zero-sum multisets
/// over (Z/m)^N, in canonical sorted order. Depth-first search over
/// nondecreasing multisets, pruning any branch with a proper zero-sum
/// submultiset (tracked via the achievable subset sums). Throws
/// BudgetExceeded when m^N exceeds the budget.
std::vector<ZeroSumMultiset> minimal_zero_sum_multisets(int m, int n,
                                                        long budget = kDefaultZeroSumBudget);

/// Davenport constant of (Z/m)^N: the maximal length over the minimal
/// zero-sum multisets.
int davenport(int m, int n, long budget = kDefaultZeroSumBudget);

/// Independent brute-force check over all submultisets; used by tests and
/// re-exported so callers can audit enumeration output.
bool is_minimal_zero_sum(const std::vector<ZVector>& vectors, int m);

struct WeightedGenerator {
    std::string name;
    ZVector weight;
    std::string kind;  // "trace" or "q-invariant"
};

/// All products (as sorted name multisets) over the generator list whose
/// weight multiset is a minimal zero-sum multiset. Complete and
/// duplicate-free, canonically sorted.
std::vector<std::vector<std::string>> synthesize_generators(const std::vector<WeightedGenerator>& basis,
                                                            int m, int n,
                                                            long budget = kDefaultZeroSumBudget);

}  // namespace charvar
