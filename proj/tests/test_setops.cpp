#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lascoux/fin_set.hpp"
#include "lascoux/verify.hpp"

using namespace lascoux;

TEST_CASE("FinSet order statistics and slices") {
    FinSet s{4, 1, 9, 6};
    CHECK(s.size() == 4);
    CHECK(s.kth(1) == 1);
    CHECK(s.kth(4) == 9);
    CHECK(s.below(6) == FinSet{1, 4});
    CHECK(s.at_most(6) == FinSet{1, 4, 6});
    CHECK(s.above(6) == FinSet{9});
    CHECK(s.at_least(6) == FinSet{6, 9});
    CHECK(s.with(2) == FinSet{1, 2, 4, 6, 9});
    CHECK(s.without(4) == FinSet{1, 6, 9});
    CHECK_THROWS_AS(s.with(4), std::invalid_argument);
    CHECK_THROWS_AS(s.without(2), std::invalid_argument);
}

TEST_CASE("triangle_left fixtures") {
    CHECK(triangle_left(FinSet{1, 3, 4, 6, 7, 9}, FinSet{2, 3, 7, 8}) == FinSet{1, 6, 7});
    CHECK(triangle_left(FinSet{1, 3, 4, 6, 7, 9}, FinSet{2, 4, 7, 8}) == FinSet{1, 3, 6, 7});
    CHECK(triangle_left(FinSet{1, 2}, FinSet{}) == FinSet{});
    CHECK(triangle_left(FinSet{}, FinSet{2, 3}) == FinSet{});

    // non-associativity witness
    CHECK(triangle_left(triangle_left(FinSet{1, 2}, FinSet{2, 3}), FinSet{3}) == FinSet{2});
    CHECK(triangle_left(FinSet{1, 2}, triangle_left(FinSet{2, 3}, FinSet{3})) == FinSet{1});
}

TEST_CASE("triangle_chain folds right to left") {
    std::vector<FinSet> cols{{1, 2}, {2, 3}, {3}};
    CHECK(triangle_chain(cols) == FinSet{1});
    std::vector<FinSet> single{{4, 7}};
    CHECK(triangle_chain(single) == FinSet{4, 7});
    std::vector<FinSet> middle{{1, 3, 7}, {4, 7}, {6}, {7}};
    CHECK(triangle_chain(middle) == FinSet{3});
    std::vector<FinSet> empty;
    CHECK_THROWS_AS(triangle_chain(empty), std::invalid_argument);
}

TEST_CASE("triangle_right_geq fixtures") {
    CHECK(triangle_right_geq(FinSet{1, 4, 5, 6, 7}, FinSet{2, 3, 7}) == FinSet{4, 5, 7});
    CHECK(triangle_right_geq(FinSet{1, 2}, FinSet{}) == FinSet{});
    CHECK(triangle_right_geq(FinSet{3, 4, 6}, FinSet{2, 5}) == FinSet{3, 6});
}

TEST_CASE("dominance") {
    CHECK(dominates(FinSet{}, FinSet{}));
    CHECK(dominates(FinSet{1, 2}, FinSet{2, 3}));
    CHECK_FALSE(dominates(FinSet{1}, FinSet{1}));  // strict comparison
    CHECK_FALSE(dominates(FinSet{1}, FinSet{2, 3}));
}

TEST_CASE("set-operator property suite") {
    auto report = verify::verify_setops(1, 300);
    for (const auto& r : report) {
        INFO(r.name, ": ", r.note);
        CHECK(r.pass);
        CHECK(r.checks > 0);
    }
}
