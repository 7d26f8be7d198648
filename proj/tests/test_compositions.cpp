#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lascoux/compositions.hpp"

using namespace lascoux;

TEST_CASE("key_of matches the column description") {
    // alpha = (2,1,4,0,2)
    Key k = key_of(WeakComposition({2, 1, 4, 0, 2}));
    REQUIRE(k.num_cols() == 4);
    CHECK(k.col(1) == FinSet{1, 2, 3, 5});
    CHECK(k.col(2) == FinSet{1, 3, 5});
    CHECK(k.col(3) == FinSet{3});
    CHECK(k.col(4) == FinSet{3});
    // row view of the same key
    CHECK(k.row(1) == std::vector<int>{1, 1, 3, 3});
    CHECK(k.row(2) == std::vector<int>{2, 3});
    CHECK(k.row(3) == std::vector<int>{3, 5});
    CHECK(k.row(4) == std::vector<int>{5});

    CHECK(key_of(WeakComposition({0, 0, 0})) == Key{});
    Key small = key_of(WeakComposition({1, 0, 2}));
    CHECK(small.col(1) == FinSet{1, 3});
    CHECK(small.col(2) == FinSet{3});
}

TEST_CASE("wt_key inverts key_of") {
    Key k(std::vector<FinSet>{{1, 2, 3}, {3}, {3}, {3}});
    CHECK(wt_key(k, 3) == WeakComposition({1, 1, 4}));
    CHECK(wt_key(Key{}, 4) == WeakComposition({0, 0, 0, 0}));
    WeakComposition alpha({2, 1, 4, 0, 2});
    CHECK(wt_key(key_of(alpha), 5) == alpha);
    CHECK_THROWS_AS(wt_key(Key(std::vector<FinSet>{{7}}), 3), std::invalid_argument);
}

TEST_CASE("key_of / wt_key round trip on random compositions") {
    std::mt19937_64 rng(7);
    for (int it = 0; it < 500; ++it) {
        int n = 1 + static_cast<int>(rng() % 6);
        std::vector<int> e;
        for (int i = 0; i < n; ++i) e.push_back(static_cast<int>(rng() % 5));
        WeakComposition alpha(e);
        CHECK(wt_key(key_of(alpha), n) == alpha);
    }
}

TEST_CASE("cap_n replaces large entries by missing values") {
    SUBCASE("single column from the worked example") {
        Key k(std::vector<FinSet>{{1, 4, 6, 8, 9}});
        CHECK(cap_n(k, 6).col(1) == FinSet{1, 3, 4, 5, 6});
    }
    SUBCASE("identity when entries already fit") {
        Key k(std::vector<FinSet>{{1, 2}, {2}});
        CHECK(cap_n(k, 4) == k);
    }
    SUBCASE("worked four-column key") {
        Key k(std::vector<FinSet>{{1, 3, 7}, {1, 3}, {3}, {3}});
        Key capped = cap_n(k, 3);
        CHECK(capped.col(1) == FinSet{1, 2, 3});
        CHECK(capped.col(2) == FinSet{1, 3});
        CHECK(wt_key(capped, 3) == WeakComposition({2, 1, 4}));
    }
    SUBCASE("overfull column is a domain error") {
        Key k(std::vector<FinSet>{{1, 2, 3, 4}});
        CHECK_THROWS_AS(cap_n(k, 3), std::invalid_argument);
    }
}

TEST_CASE("cap_n output is a key and respects the comparison law") {
    // cap_n(T) >= T' iff T >= T' and max(T') <= n
    std::mt19937_64 rng(11);
    auto random_key = [&](int maxval, int max_rows) {
        std::vector<int> first;
        for (int v = 1; v <= maxval && static_cast<int>(first.size()) < max_rows; ++v)
            if (rng() & 1) first.push_back(v);
        std::vector<FinSet> cols;
        if (first.empty()) return Key{};
        cols.emplace_back(first);
        for (int c = 1; c < 4; ++c) {
            std::vector<int> next;
            for (int v : cols.back())
                if (rng() % 3 != 0) next.push_back(v);
            if (next.empty()) break;
            cols.emplace_back(next);
        }
        return Key(cols);
    };
    int nontrivial = 0;
    for (int it = 0; it < 2000; ++it) {
        int n = 3;
        Key t = random_key(6, n);
        Key capped = cap_n(t, n);  // constructor validates keyness
        CHECK(capped.shape() == t.shape());
        Key tp = random_key(6, n);
        if (tp.shape() != t.shape()) continue;
        ++nontrivial;
        bool lhs = key_leq(tp, capped);
        bool rhs = key_leq(tp, t) && (tp.empty() || tp.max_entry() <= n);
        CHECK(lhs == rhs);
    }
    CHECK(nontrivial > 50);
}

TEST_CASE("key_leq is an entrywise partial order") {
    Key a(std::vector<FinSet>{{3}, {3}});
    Key b(std::vector<FinSet>{{1}, {1}});
    CHECK(key_leq(a, a));
    CHECK(key_leq(b, a));
    CHECK_FALSE(key_leq(a, b));
    // differing shapes compare false
    CHECK_FALSE(key_leq(Key(std::vector<FinSet>{{1}}), a));

    // reflexive, antisymmetric, transitive over small keys of one shape
    std::vector<Key> keys;
    for (int x = 1; x <= 3; ++x)
        for (int y = x + 1; y <= 4; ++y)
            for (int z = 1; z <= 4; ++z)
                if (z == x || z == y) keys.push_back(Key(std::vector<FinSet>{{x, y}, {z}}));
    for (const auto& p : keys) {
        CHECK(key_leq(p, p));
        for (const auto& q : keys) {
            if (key_leq(p, q) && key_leq(q, p)) CHECK(p == q);
            for (const auto& r : keys)
                if (key_leq(p, q) && key_leq(q, r)) CHECK(key_leq(p, r));
        }
    }
}

TEST_CASE("sorted_partition") {
    CHECK(sorted_partition(WeakComposition({0, 2, 1})) == Partition({2, 1}));
    CHECK(sorted_partition(WeakComposition({0, 0, 0})) == Partition{});
    CHECK(sorted_partition(WeakComposition({1, 0, 2})) == Partition({2, 1}));
}

TEST_CASE("key validation rejects non-nested columns") {
    CHECK_THROWS_AS(Key(std::vector<FinSet>{{1}, {2}}), std::invalid_argument);
    CHECK_THROWS_AS(Key(std::vector<FinSet>{{}, {1}}), std::invalid_argument);
    CHECK(Key(std::vector<FinSet>{{1, 2}, {}}).num_cols() == 1);  // trailing column trimmed
}
