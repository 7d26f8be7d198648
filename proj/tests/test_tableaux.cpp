#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lascoux/left_key.hpp"
#include "lascoux/tableaux.hpp"

using namespace lascoux;

namespace {

const IncreasingTableau kFirst({{1, 4, 6, 7}, {3}, {7}});
const IncreasingTableau kThird({{1, 4, 6, 7}, {3, 6}, {6, 7}});

} // namespace

TEST_CASE("tableau validation") {
    CHECK_THROWS_AS(IncreasingTableau({{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(IncreasingTableau({{1}, {1}}), std::invalid_argument);
    CHECK_THROWS_AS(IncreasingTableau({{1}, {2, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(RSSYT({{1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(RSVT({{FinSet{}, FinSet{1}}}), std::invalid_argument);
    CHECK_THROWS_AS(RSVT({{FinSet{1}, FinSet{2}}}), std::invalid_argument);  // min(left) < max(right)
    CHECK_NOTHROW(RSVT({{FinSet{3, 2}, FinSet{2, 1}}, {FinSet{1}}}));
}

TEST_CASE("reading words") {
    CHECK(reading_word(kFirst) == Word{7, 3, 1, 4, 6, 7});
    CHECK(reading_word(IncreasingTableau{}) == Word{});
    CHECK(reading_word(kThird) == Word{6, 3, 1, 7, 6, 4, 6, 7});
    CHECK(reading_word(IncreasingTableau({{1, 4, 6, 7}, {3, 7}, {7}})) == Word{7, 3, 1, 7, 4, 6, 7});
    CHECK(reading_word(kFirst).length() == kFirst.size());
}

TEST_CASE("flatten_L keeps cell maxima") {
    RSVT t({{FinSet{6}, FinSet{5, 3}, FinSet{3}, FinSet{3, 2, 1}},
            {FinSet{4}, FinSet{2, 1}, FinSet{1}},
            {FinSet{3, 2}}});
    RSSYT l = flatten_L(t);
    CHECK(l == RSSYT({{6, 5, 3, 3}, {4, 2, 1}, {3}}));
    RSVT singletons({{FinSet{2}, FinSet{1}}});
    CHECK(flatten_L(singletons) == RSSYT({{2, 1}}));
    CHECK(flatten_L(t).shape() == t.shape());
    for (int i = 1; i <= 6; ++i) CHECK(wt(l, 6)[i] <= wt(t, 6)[i]);

    // every enumerated RSVT flattens to a valid RSSYT (the constructor is
    // the invariant oracle)
    enumerate_rsvt(Partition({2, 2}), 3, [&](const RSVT& q) {
        RSSYT f = flatten_L(q);
        CHECK(f.shape() == q.shape());
    });
}

TEST_CASE("restrict_below keeps the small top-left region") {
    IncreasingTableau second({{1, 4, 6, 7}, {3, 7}, {7}});
    CHECK(restrict_below(second, 5) == IncreasingTableau({{1, 4}, {3}}));
    CHECK(restrict_below(second, 100) == second);
    CHECK(restrict_below(second, 1) == IncreasingTableau{});
    // iterated restriction
    CHECK(restrict_below(restrict_below(second, 7), 4) == restrict_below(second, 4));
}

TEST_CASE("weights") {
    RSVT q({{FinSet{3}, FinSet{2}}, {FinSet{2}}});
    CHECK(wt(q, 3) == WeakComposition({0, 2, 1}));
    RSVT last({{FinSet{3}, FinSet{2, 1}}, {FinSet{2, 1}}});
    CHECK(wt(last, 3) == WeakComposition({2, 2, 1}));
    CHECK(wt(RSVT{}, 3) == WeakComposition({0, 0, 0}));
    CHECK_THROWS_AS(wt(q, 2), std::invalid_argument);
}

TEST_CASE("enumerate_increasing counts") {
    int count = 0;
    enumerate_increasing(3, FinSet{1}, [&](const IncreasingTableau&) { ++count; });
    CHECK(count == 2);

    std::vector<IncreasingTableau> found;
    enumerate_increasing(2, FinSet{1, 2}, [&](const IncreasingTableau& t) { found.push_back(t); });
    REQUIRE(found.size() == 6);
    using Rows = std::vector<std::vector<int>>;
    std::vector<IncreasingTableau> expected{
        IncreasingTableau{},
        IncreasingTableau(Rows{{1}}),
        IncreasingTableau(Rows{{1, 2}}),
        IncreasingTableau(Rows{{1, 2}, {2}}),
        IncreasingTableau(Rows{{1}, {2}}),
        IncreasingTableau(Rows{{2}}),
    };
    for (const auto& e : expected) CHECK(std::count(found.begin(), found.end(), e) == 1);
}

TEST_CASE("enumerate_rsvt counts") {
    int count = 0;
    enumerate_rsvt(Partition({1}), 2, [&](const RSVT&) { ++count; });
    CHECK(count == 3);  // {1}, {2}, {2,1}

    count = 0;
    enumerate_rsvt(Partition{}, 3, [&](const RSVT& t) {
        ++count;
        CHECK(t.empty());
    });
    CHECK(count == 1);

    // no duplicates on a bigger shape
    std::vector<RSVT> all;
    enumerate_rsvt(Partition({2, 1}), 3, [&](const RSVT& t) { all.push_back(t); });
    std::sort(all.begin(), all.end());
    CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
}

TEST_CASE("constrained enumeration selects the eleven contributing RSVTs") {
    Key bound = key_of(WeakComposition({0, 2, 1}));
    int count = 0;
    enumerate_rsvt(
        Partition({2, 1}), 3,
        [&](const RSVT& t) { return key_leq(left_key_rssyt(flatten_L(t)), bound); },
        [&](const RSVT&) { ++count; });
    CHECK(count == 11);

    // constrained increasing enumeration: single-row tableaux over {1,2}
    int rows1 = 0;
    enumerate_increasing(
        2, FinSet{1, 2}, [](const IncreasingTableau& t) { return t.num_rows() <= 1; },
        [&](const IncreasingTableau&) { ++rows1; });
    CHECK(rows1 == 4);  // empty, [1], [2], [1 2]
}
