#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "lascoux/hecke.hpp"

using namespace lascoux;

TEST_CASE("hecke_eval fixtures") {
    // [421433]_H = [2143]_H, the inverse of 31524
    Permutation w = Permutation::from_one_line({3, 1, 5, 2, 4}).inverse();
    CHECK(w == Permutation::from_one_line({2, 4, 1, 5, 3}));
    CHECK(hecke_eval(Word{4, 2, 1, 4, 3, 3}) == w);
    CHECK(hecke_eval(Word{2, 1, 4, 3}) == w);
    CHECK(hecke_eval(Word{}) == Permutation::identity());
    CHECK(hecke_eval(Word{1, 1}) == Permutation::simple(1));
}

TEST_CASE("hecke_eval respects the 0-Hecke relations") {
    std::mt19937_64 rng(3);
    for (int it = 0; it < 2000; ++it) {
        int len = static_cast<int>(rng() % 7);
        std::vector<int> a;
        for (int j = 0; j < len; ++j) a.push_back(1 + static_cast<int>(rng() % 4));
        Permutation base = hecke_eval(Word(a));
        if (len > 0) {
            // ii == i
            size_t pos = rng() % a.size();
            std::vector<int> doubled = a;
            doubled.insert(doubled.begin() + static_cast<long>(pos), a[pos]);
            CHECK(hecke_eval(Word(doubled)) == base);
        }
        if (len >= 2) {
            // commutation ij = ji for |i - j| >= 2
            size_t pos = rng() % (a.size() - 1);
            if (std::abs(a[pos] - a[pos + 1]) >= 2) {
                std::vector<int> swapped = a;
                std::swap(swapped[pos], swapped[pos + 1]);
                CHECK(hecke_eval(Word(swapped)) == base);
            }
        }
        if (len >= 3) {
            // braid i(i+1)i = (i+1)i(i+1)
            size_t pos = rng() % (a.size() - 2);
            if (a[pos + 1] == a[pos] + 1 && a[pos + 2] == a[pos]) {
                std::vector<int> braided = a;
                braided[pos] = a[pos] + 1;
                braided[pos + 1] = a[pos];
                braided[pos + 2] = a[pos] + 1;
                CHECK(hecke_eval(Word(braided)) == base);
            }
        }
    }
}

TEST_CASE("coxeter_length and is_reduced") {
    CHECK(Permutation::identity().coxeter_length() == 0);
    CHECK(Permutation::from_one_line({2, 1, 4, 3}).coxeter_length() == 2);
    CHECK(Permutation::from_one_line({1, 2, 3, 4, 5, 8, 7, 6}).coxeter_length() == 3);
    CHECK(is_reduced(Word{2, 1, 4, 3}));
    CHECK_FALSE(is_reduced(Word{1, 1}));
    CHECK(is_reduced(Word{1, 2, 1}));
    CHECK(is_hecke_word(Word{4, 2, 1, 4, 3, 3}, Permutation::from_one_line({2, 4, 1, 5, 3})));
    CHECK_FALSE(is_hecke_word(Word{1, 1}, Permutation::simple(2)));
}

TEST_CASE("shift_perm") {
    Permutation w = Permutation::from_one_line({3, 2, 1});
    CHECK(shift_perm(w, 5) == Permutation::from_one_line({1, 2, 3, 4, 5, 8, 7, 6}));
    CHECK(shift_perm(w, 0) == w);
    std::mt19937_64 rng(5);
    for (int it = 0; it < 200; ++it) {
        std::vector<int> oneline{1, 2, 3, 4};
        std::shuffle(oneline.begin(), oneline.end(), rng);
        Permutation u = Permutation::from_one_line(oneline);
        int big_n = static_cast<int>(rng() % 5);
        CHECK(shift_perm(u, big_n).coxeter_length() == u.coxeter_length());
    }
}

TEST_CASE("compatible pairs") {
    CHECK_NOTHROW(CompatiblePair(Word{4, 2, 1, 4, 3, 3}, Word{1, 1, 1, 2, 2, 4}));
    CHECK_FALSE(CompatiblePair(Word{4, 2, 1, 4, 3, 3}, Word{1, 1, 1, 2, 2, 4}).bounded());
    CHECK(CompatiblePair(Word{4, 2, 1, 4, 3, 3}, Word{1, 1, 1, 2, 2, 3}).bounded());
    CHECK_THROWS_AS(CompatiblePair(Word{1, 1}, Word{1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(CompatiblePair(Word{1}, Word{2, 1}), std::invalid_argument);
}

TEST_CASE("enumerate_compatible_pairs") {
    SUBCASE("bounded pairs of the worked example's inverse") {
        Permutation winv = Permutation::from_one_line({2, 4, 1, 5, 3});
        bool seen = false;
        enumerate_compatible_pairs(winv, PairMode::Bounded, 0, [&](const CompatiblePair& p) {
            if (p.a == Word{4, 2, 1, 4, 3, 3} && p.i == Word{1, 1, 1, 2, 2, 3}) seen = true;
            CHECK(hecke_eval(p.a) == winv);
            CHECK(p.bounded());
        });
        CHECK(seen);
    }
    SUBCASE("identity yields exactly the empty pair") {
        int count = 0;
        enumerate_compatible_pairs(Permutation::identity(), PairMode::Bounded, 0,
                                   [&](const CompatiblePair& p) {
                                       ++count;
                                       CHECK(p.a.empty());
                                   });
        CHECK(count == 1);
    }
    SUBCASE("cap mode for s1 with n = 1") {
        std::vector<CompatiblePair> pairs;
        enumerate_compatible_pairs(Permutation::simple(1), PairMode::CapI, 1,
                                   [&](const CompatiblePair& p) { pairs.push_back(p); });
        REQUIRE(pairs.size() == 1);
        CHECK(pairs[0].a == Word{1});
        CHECK(pairs[0].i == Word{1});
    }
    SUBCASE("no duplicates") {
        std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
        enumerate_compatible_pairs(Permutation::from_one_line({3, 2, 1}), PairMode::CapI, 3,
                                   [&](const CompatiblePair& p) {
                                       CHECK(seen.emplace(p.a.letters(), p.i.letters()).second);
                                   });
        CHECK(seen.size() > 10);
    }
}

TEST_CASE("shifted permutations have large-letter Hecke words") {
    Permutation w = shift_perm(Permutation::from_one_line({3, 2, 1}), 5);
    enumerate_compatible_pairs(w, PairMode::CapI, 2, [&](const CompatiblePair& p) {
        for (int l : p.a.letters()) CHECK(l > 5);
    });
}
