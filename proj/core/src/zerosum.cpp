#include "charvar/zerosum.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace charvar {

namespace {

// Vectors are encoded as mixed-radix indices 0 .. m^N - 1.

long power_check(int m, int n, long budget) {
    if (m < 1 || n < 1) throw std::invalid_argument("zerosum: m and N must be >= 1");
    long total = 1;
    for (int k = 0; k < n; ++k) {
        total *= m;
        if (total > budget)
            throw BudgetExceeded("m^N = " + std::to_string(total) + "+ exceeds budget " +
                                 std::to_string(budget));
    }
    return total;
}

ZVector decode(long index, int m, int n) {
    ZVector v{std::vector<int>(n)};
    for (int k = n - 1; k >= 0; --k) {
        v.entries[k] = static_cast<int>(index % m);
        index /= m;
    }
    return v;
}

long encode(const ZVector& v, int m) {
    long index = 0;
    for (int e : v.entries) index = index * m + e;
    return index;
}

// index of a+b componentwise mod m
long add_mod(long a, long b, int m, int n) {
    long result = 0;
    long pa = a, pb = b;
    std::vector<int> digits(n);
    for (int k = n - 1; k >= 0; --k) {
        digits[k] = static_cast<int>((pa % m + pb % m) % m);
        pa /= m;
        pb /= m;
    }
    for (int k = 0; k < n; ++k) result = result * m + digits[k];
    return result;
}

struct Search {
    int m, n;
    long space;  // m^N
    long work_cap;
    long work = 0;
    std::vector<ZeroSumMultiset> out;
    std::vector<long> current;

    long negate(long index) const {
        long result = 0;
        std::vector<int> digits(n);
        for (int k = n - 1; k >= 0; --k) {
            digits[k] = (m - static_cast<int>(index % m)) % m;
            index /= m;
        }
        for (int k = 0; k < n; ++k) result = result * m + digits[k];
        return result;
    }

    void charge(long amount) {
        work += amount;
        if (work > work_cap)
            throw BudgetExceeded("search work exceeds budget (raise CHARVAR_BUDGET or --budget)");
    }

    void emit() {
        ZeroSumMultiset ms;
        for (long idx : current) ms.vectors.push_back(decode(idx, m, n));
        out.push_back(std::move(ms));
    }

    // all: sums of nonempty submultisets of the current prefix;
    // proper: sums of nonempty proper submultisets of the prefix.
    // Invariant on entry: 0 is in neither (else the branch was cut or
    // emitted). Appending v updates them as
    //   all'    = all | (all + v) | {v}
    //   proper' = all | (proper + v) | ({v} if the prefix is nonempty)
    // since a proper submultiset of prefix+{v} either omits v (any
    // submultiset of the prefix) or is v plus a proper-or-empty part of
    // the prefix other than the whole of it.
    void extend(long min_index, const std::vector<bool>& all, const std::vector<bool>& proper,
                long total) {
        for (long v = min_index; v < space; ++v) {
            charge(1);
            // next_proper would contain 0 iff proper holds -v, or v = 0 is
            // appended to a nonempty prefix (all never contains 0 here).
            if (proper[negate(v)] || (v == 0 && !current.empty())) continue;

            long new_total = add_mod(total, v, m, n);
            current.push_back(v);
            if (new_total == 0) {
                emit();  // minimal; any extension would contain it properly
            } else if (static_cast<long>(current.size()) < space) {
                charge(space);
                std::vector<bool> next_all(space, false);
                std::vector<bool> next_proper(space, false);
                for (long s = 0; s < space; ++s) {
                    if (all[s]) {
                        next_all[s] = true;
                        next_proper[s] = true;
                        next_all[add_mod(s, v, m, n)] = true;
                    }
                    if (proper[s]) next_proper[add_mod(s, v, m, n)] = true;
                }
                next_all[v] = true;
                if (current.size() > 1) next_proper[v] = true;
                extend(v, next_all, next_proper, new_total);
            }
            current.pop_back();
        }
    }
};

}  // namespace

std::vector<ZeroSumMultiset> minimal_zero_sum_multisets(int m, int n, long budget) {
    long space = power_check(m, n, budget);
    // The m^N gate alone does not bound the search tree, so the budget
    // also caps total DFS work (node visits plus bitset updates).
    constexpr long kWorkFactor = 1 << 18;
    Search search{m, n, space, budget * kWorkFactor};
    std::vector<bool> empty(space, false);
    search.extend(0, empty, empty, 0);
    std::sort(search.out.begin(), search.out.end());
    return search.out;
}

int davenport(int m, int n, long budget) {
    int best = 0;
    for (const ZeroSumMultiset& ms : minimal_zero_sum_multisets(m, n, budget))
        best = std::max(best, static_cast<int>(ms.vectors.size()));
    return best;
}

bool is_minimal_zero_sum(const std::vector<ZVector>& vectors, int m) {
    if (vectors.empty()) return false;
    int n = static_cast<int>(vectors[0].entries.size());
    std::size_t count = vectors.size();
    if (count > 24) throw std::invalid_argument("is_minimal_zero_sum: too large for brute force");
    auto subset_sum_is_zero = [&](unsigned mask) {
        std::vector<int> sum(n, 0);
        for (std::size_t k = 0; k < count; ++k)
            if (mask & (1u << k))
                for (int j = 0; j < n; ++j) sum[j] = (sum[j] + vectors[k].entries[j]) % m;
        return std::all_of(sum.begin(), sum.end(), [](int x) { return x == 0; });
    };
    unsigned full = (1u << count) - 1;
    if (!subset_sum_is_zero(full)) return false;
    for (unsigned mask = 1; mask < full; ++mask)
        if (subset_sum_is_zero(mask)) return false;
    return true;
}

std::vector<std::vector<std::string>> synthesize_generators(const std::vector<WeightedGenerator>& basis,
                                                            int m, int n, long budget) {
    // Group generator names by reduced weight.
    std::map<ZVector, std::vector<std::string>> by_weight;
    for (const WeightedGenerator& g : basis) {
        if (static_cast<int>(g.weight.entries.size()) != n)
            throw std::invalid_argument("synthesize_generators: weight length mismatch");
        ZVector reduced = g.weight;
        for (int& e : reduced.entries) e = ((e % m) + m) % m;
        by_weight[reduced].push_back(g.name);
    }

    std::set<std::vector<std::string>> products;
    for (const ZeroSumMultiset& ms : minimal_zero_sum_multisets(m, n, budget)) {
        // Multiplicity of each weight in the multiset.
        std::map<ZVector, int> multiplicity;
        for (const ZVector& v : ms.vectors) ++multiplicity[v];

        // For each weight class, all multisets of that class's generators
        // of the required size; combine classes by cartesian product.
        std::vector<std::vector<std::vector<std::string>>> per_class;
        bool feasible = true;
        for (const auto& [weight, count] : multiplicity) {
            auto it = by_weight.find(weight);
            if (it == by_weight.end()) {
                feasible = false;
                break;
            }
            const std::vector<std::string>& names = it->second;
            std::vector<std::vector<std::string>> choices;
            std::vector<std::string> pick;
            // multisets of `count` names, nondecreasing index
            std::function<void(std::size_t)> choose = [&](std::size_t min_idx) {
                if (static_cast<int>(pick.size()) == count) {
                    choices.push_back(pick);
                    return;
                }
                for (std::size_t k = min_idx; k < names.size(); ++k) {
                    pick.push_back(names[k]);
                    choose(k);
                    pick.pop_back();
                }
            };
            choose(0);
            per_class.push_back(std::move(choices));
        }
        if (!feasible) continue;

        std::vector<std::string> assembled;
        std::function<void(std::size_t)> combine = [&](std::size_t cls) {
            if (cls == per_class.size()) {
                std::vector<std::string> sorted = assembled;
                std::sort(sorted.begin(), sorted.end());
                products.insert(std::move(sorted));
                return;
            }
            for (const auto& choice : per_class[cls]) {
                assembled.insert(assembled.end(), choice.begin(), choice.end());
                combine(cls + 1);
                assembled.resize(assembled.size() - choice.size());
            }
        };
        combine(0);
    }
    return {products.begin(), products.end()};
}

}  // namespace charvar
