#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "charvar/words.hpp"

using namespace charvar;

namespace {

FreeWord random_word(std::mt19937_64& rng, int rank, int length) {
    std::vector<FreeWord::Letter> letters;
    std::uniform_int_distribution<int> gen(1, rank);
    std::uniform_int_distribution<int> exp(-3, 3);
    for (int k = 0; k < length; ++k) {
        int e = exp(rng);
        if (e == 0) e = 1;
        letters.push_back({gen(rng), e});
    }
    return FreeWord(std::move(letters), rank);
}

}  // namespace

TEST_CASE("parse grammar") {
    CHECK(FreeWord::parse("", 2).is_identity());
    CHECK(FreeWord::parse("e", 2).is_identity());
    CHECK(FreeWord::parse("g1", 2).letters() == std::vector<FreeWord::Letter>{{1, 1}});
    CHECK(FreeWord::parse("g1^2 g2", 2).letters() == std::vector<FreeWord::Letter>{{1, 2}, {2, 1}});
    CHECK(FreeWord::parse("g1^-1", 2).letters() == std::vector<FreeWord::Letter>{{1, -1}});
    CHECK(FreeWord::parse("g2^3g1", 2).letters() == std::vector<FreeWord::Letter>{{2, 3}, {1, 1}});
    CHECK(FreeWord::parse(" g1  g2 ", 2) == FreeWord::parse("g1 g2", 2));
}

TEST_CASE("parse rejections") {
    CHECK_THROWS(FreeWord::parse("g0", 2));
    CHECK_THROWS(FreeWord::parse("g3", 2));
    CHECK_THROWS(FreeWord::parse("g1^0", 2));
    CHECK_THROWS(FreeWord::parse("h1", 2));
    CHECK_THROWS(FreeWord::parse("g1^", 2));
}

TEST_CASE("reduction cancels adjacent letters") {
    CHECK(FreeWord::parse("g1 g1^-1", 2).is_identity());
    CHECK(FreeWord::parse("g1 g2 g2^-1 g1", 2) == FreeWord::parse("g1^2", 2));
    CHECK(FreeWord::parse("g1^2 g1^-2 g2", 2) == FreeWord::parse("g2", 2));
    CHECK(FreeWord::parse("g1^3 g1^-1", 2) == FreeWord::parse("g1^2", 2));
}

TEST_CASE("group laws on random words") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        FreeWord u = random_word(rng, 2, 5);
        FreeWord v = random_word(rng, 2, 5);
        FreeWord w = random_word(rng, 2, 5);
        CHECK(u.concat(u.inverse()).is_identity());
        CHECK(u.inverse().inverse() == u);
        CHECK(u.concat(v).inverse() == v.inverse().concat(u.inverse()));
        CHECK(u.concat(v.concat(w)) == u.concat(v).concat(w));
        CHECK(FreeWord::parse(u.to_string(), 2) == u);
    }
}

TEST_CASE("weight vector is a homomorphism to (Z/m)^N") {
    std::mt19937_64 rng(7);
    for (int m : {2, 3, 5}) {
        for (int trial = 0; trial < 30; ++trial) {
            FreeWord u = random_word(rng, 2, 4);
            FreeWord v = random_word(rng, 2, 4);
            WeightVector wu = u.weight_vector(m);
            WeightVector wv = v.weight_vector(m);
            WeightVector wuv = u.concat(v).weight_vector(m);
            REQUIRE(wu.entries.size() == wuv.entries.size());
            for (std::size_t k = 0; k < wu.entries.size(); ++k)
                CHECK((wu.entries[k] + wv.entries[k]) % m == wuv.entries[k]);
            WeightVector winv = u.inverse().weight_vector(m);
            for (std::size_t k = 0; k < wu.entries.size(); ++k)
                CHECK((wu.entries[k] + winv.entries[k]) % m == 0);
        }
    }
}

TEST_CASE("stats and expansion") {
    FreeWord w = FreeWord::parse("g1^2 g2^-1", 2);
    CHECK(w.stats() == std::pair<int, int>{3, 1});
    CHECK(w.expanded() == std::vector<int>{1, 1, -2});
    CHECK(FreeWord().stats() == std::pair<int, int>{0, 0});
}

TEST_CASE("to_string round-trips") {
    for (const char* s : {"g1", "g1^2 g2", "g1^-1 g2^3", "e"}) {
        FreeWord w = FreeWord::parse(s, 2);
        CHECK(FreeWord::parse(w.to_string(), 2) == w);
    }
}
