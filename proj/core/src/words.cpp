#include "charvar/words.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace charvar {

FreeWord::FreeWord(std::vector<Letter> letters, int rank) : rank_(rank) {
    for (const auto& [gen, exp] : letters) {
        if (gen < 1 || gen > rank)
            throw std::invalid_argument("generator index " + std::to_string(gen) + " exceeds rank " +
                                        std::to_string(rank));
        if (exp == 0) throw std::invalid_argument("zero exponent in word");
        if (!letters_.empty() && letters_.back().first == gen) {
            letters_.back().second += exp;
            if (letters_.back().second == 0) letters_.pop_back();
        } else {
            letters_.emplace_back(gen, exp);
        }
    }
}

FreeWord FreeWord::parse(const std::string& text, int rank) {
    std::vector<Letter> letters;
    std::size_t pos = 0;
    auto fail = [&](const std::string& what) -> void {
        throw std::invalid_argument("word syntax error at position " + std::to_string(pos) + ": " + what);
    };
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto parse_int = [&]() -> long {
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("expected digits");
        return std::stol(text.substr(start, pos - start));
    };

    skip_ws();
    if (pos < text.size() && text[pos] == 'e') {
        ++pos;
        skip_ws();
        if (pos != text.size()) fail("trailing input after identity");
        return FreeWord({}, rank);
    }
    while (pos < text.size()) {
        if (text[pos] != 'g') fail("expected 'g'");
        ++pos;
        long gen = parse_int();
        long exp = 1;
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            bool neg = pos < text.size() && text[pos] == '-';
            if (neg) ++pos;
            exp = parse_int();
            if (neg) exp = -exp;
            if (exp == 0) fail("zero exponent");
        }
        if (gen < 1 || gen > rank) fail("generator index exceeds rank");
        letters.emplace_back(static_cast<int>(gen), static_cast<int>(exp));
        skip_ws();
    }
    return FreeWord(std::move(letters), rank);
}

FreeWord FreeWord::concat(const FreeWord& o) const {
    if (rank_ != o.rank_ && !letters_.empty() && !o.letters_.empty())
        throw std::invalid_argument("concat: words over different free groups");
    std::vector<Letter> joined = letters_;
    joined.insert(joined.end(), o.letters_.begin(), o.letters_.end());
    return FreeWord(std::move(joined), std::max(rank_, o.rank_));
}

FreeWord FreeWord::inverse() const {
    std::vector<Letter> rev;
    rev.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) rev.emplace_back(it->first, -it->second);
    return FreeWord(std::move(rev), rank_);
}

WeightVector FreeWord::weight_vector(int modulus) const {
    if (modulus < 1) throw std::invalid_argument("modulus must be >= 1");
    WeightVector w{modulus, std::vector<int>(rank_, 0)};
    for (const auto& [gen, exp] : letters_) {
        int& v = w.entries[gen - 1];
        v = ((v + exp) % modulus + modulus) % modulus;
    }
    return w;
}

std::pair<int, int> FreeWord::stats() const {
    int length = 0, inverses = 0;
    for (const auto& [gen, exp] : letters_) {
        length += std::abs(exp);
        if (exp < 0) inverses += -exp;
    }
    return {length, inverses};
}

std::vector<int> FreeWord::expanded() const {
    std::vector<int> out;
    for (const auto& [gen, exp] : letters_) {
        int step = exp > 0 ? gen : -gen;
        for (int k = 0; k < std::abs(exp); ++k) out.push_back(step);
    }
    return out;
}

std::string FreeWord::to_string() const {
    if (letters_.empty()) return "e";
    std::ostringstream os;
    bool first = true;
    for (const auto& [gen, exp] : letters_) {
        if (!first) os << " ";
        first = false;
        os << "g" << gen;
        if (exp != 1) os << "^" << exp;
    }
    return os.str();
}

}  // namespace charvar
