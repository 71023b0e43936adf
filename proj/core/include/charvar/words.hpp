#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace charvar {

/// Componentwise vector over Z/m of length N.
struct WeightVector {
    int modulus;
    std::vector<int> entries;

    bool operator==(const WeightVector& o) const = default;
};

/// Fully reduced word in the free group F_N. Letters are (generator index
/// 1..N, nonzero exponent) with adjacent letters on distinct generators.
/// The empty sequence is the identity.
class FreeWord {
  public:
    using Letter = std::pair<int, int>;

    FreeWord() = default;
    /// Reduces the given letter sequence.
    FreeWord(std::vector<Letter> letters, int rank);

    /// Grammar: word := term* ; term := "g" digits ("^" ("-")? digits)?.
    /// The identity is the empty string or "e". Zero exponents and
    /// generator indices above N are rejected.
    static FreeWord parse(const std::string& text, int rank);

    int rank() const { return rank_; }
    bool is_identity() const { return letters_.empty(); }
    const std::vector<Letter>& letters() const { return letters_; }

    FreeWord concat(const FreeWord& o) const;
    FreeWord inverse() const;

    WeightVector weight_vector(int modulus) const;

    /// (total length, number of inverse letters): length is the sum of
    /// |exponents|, inverse count the sum over negative exponents.
    std::pair<int, int> stats() const;

    /// Letters expanded to exponent +-1, e.g. g1^2 g2^-1 -> [1, 1, -2].
    std::vector<int> expanded() const;

    std::string to_string() const;

    bool operator==(const FreeWord& o) const { return letters_ == o.letters_; }
    bool operator!=(const FreeWord& o) const { return !(*this == o); }

  private:
    std::vector<Letter> letters_;
    int rank_ = 0;
};

}  // namespace charvar
