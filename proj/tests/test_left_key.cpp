#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lascoux/left_key.hpp"
#include "lascoux/verify.hpp"

using namespace lascoux;

TEST_CASE("left keys of the three worked tableaux") {
    IncreasingTableau first({{1, 4, 6, 7}, {3}, {7}});
    IncreasingTableau second({{1, 4, 6, 7}, {3, 7}, {7}});
    IncreasingTableau third({{1, 4, 6, 7}, {3, 6}, {6, 7}});

    CHECK(left_key_increasing(first) == Key(std::vector<FinSet>{{1, 3, 7}, {3}, {3}, {3}}));
    CHECK(left_key_increasing(second) == Key(std::vector<FinSet>{{1, 3, 7}, {1, 3}, {3}, {3}}));
    CHECK(left_key_increasing(third) == Key(std::vector<FinSet>{{1, 3, 6}, {1, 3, 6}, {3}, {3}}));

    // single column: the chain has length one
    CHECK(left_key_increasing(IncreasingTableau({{2}, {5}})) ==
          Key(std::vector<FinSet>{{2, 5}}));
}

TEST_CASE("left key of an RSSYT via right-geq chains") {
    RSSYT t({{6, 5, 3, 3}, {4, 2, 1}, {3}});
    Key k = left_key_rssyt(t);
    CHECK(k.col(1) == FinSet{3, 4, 6});
    CHECK(k.col(2) == FinSet{3, 6});
    CHECK(k.col(3) == FinSet{3, 6});
    CHECK(k.col(4) == FinSet{6});

    RSSYT single({{5}, {2}});
    CHECK(left_key_rssyt(single) == Key(std::vector<FinSet>{{2, 5}}));
}

TEST_CASE("revkjdt_step") {
    SUBCASE("no m and no bullet: unchanged, order parameter drops") {
        DottedSkewTableau t(Shape(Partition({2}), Partition{}), {{1, 2}}, 3);
        DottedSkewTableau stepped = revkjdt_step(t);
        CHECK(stepped.order_param() == 2);
        CHECK(stepped.at(1, 1) == 1);
        CHECK(stepped.at(1, 2) == 2);
    }
    SUBCASE("vertical domino switches type") {
        DottedSkewTableau t(Shape(Partition({1, 1}), Partition{}),
                            {{2}, {DottedSkewTableau::kBullet}}, 2);
        DottedSkewTableau stepped = revkjdt_step(t);
        CHECK(stepped.at(1, 1) == DottedSkewTableau::kBullet);
        CHECK(stepped.at(2, 1) == 2);
        CHECK(stepped.order_param() == 1);
    }
    SUBCASE("order parameter zero is a domain error") {
        DottedSkewTableau t(Shape(Partition({1}), Partition{}), {{1}}, 0);
        CHECK_THROWS_AS(revkjdt_step(t), std::invalid_argument);
    }
}

TEST_CASE("anti_rectify_leftmost") {
    SUBCASE("already anti-normal input is unchanged") {
        IncreasingTableau p({{1, 3}, {2, 4}});
        SkewIncreasingTableau out = anti_rectify_leftmost(p, 2, 2);
        CHECK(out.cells() == 4);
        CHECK(out.at(1, 1) == 1);
        CHECK(out.is_anti_normal_in(2, 2));
    }
    SUBCASE("single column slides to the right edge") {
        IncreasingTableau p({{1}, {3}});
        SkewIncreasingTableau out = anti_rectify_leftmost(p, 2, 2);
        CHECK(out.is_anti_normal_in(2, 2));
        CHECK(out.leftmost_column() == 2);
        CHECK(out.column_set(2) == FinSet{1, 3});
    }
    SUBCASE("tableau exceeding the rectangle is a domain error") {
        IncreasingTableau p({{1, 2, 3}});
        CHECK_THROWS_AS(anti_rectify_leftmost(p, 1, 2), std::invalid_argument);
    }
}

TEST_CASE("left_key_via_jdt agrees with the chain computation on fixtures") {
    IncreasingTableau first({{1, 4, 6, 7}, {3}, {7}});
    CHECK(left_key_via_jdt(first) == left_key_increasing(first));
    IncreasingTableau cell({{4}});
    CHECK(left_key_via_jdt(cell) == Key(std::vector<FinSet>{{4}}));
    IncreasingTableau third({{1, 4, 6, 7}, {3, 6}, {6, 7}});
    CHECK(left_key_via_jdt(third) == left_key_increasing(third));
}

TEST_CASE("leftkey property suite") {
    auto report = verify::verify_leftkey(1, 40);
    for (const auto& r : report) {
        INFO(r.name, ": ", r.note);
        CHECK(r.pass);
    }
}
