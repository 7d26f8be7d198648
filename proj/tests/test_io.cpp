#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lascoux/io.hpp"

using namespace lascoux;

TEST_CASE("composition round trip") {
    WeakComposition a({1, 0, 2});
    CHECK(format_composition(a) == "1,0,2");
    CHECK(parse_composition("1,0,2") == a);
    CHECK(parse_composition(format_composition(a)) == a);
    CHECK_THROWS_AS(parse_composition("1,x"), std::invalid_argument);
}

TEST_CASE("permutation parsing accepts both forms") {
    Permutation w = Permutation::from_one_line({3, 2, 1});
    CHECK(parse_permutation("3,2,1") == w);
    CHECK(parse_permutation("321") == w);
    CHECK(parse_permutation(format_permutation(w)) == w);
    CHECK(parse_permutation("1") == Permutation::identity());
    CHECK_THROWS_AS(parse_permutation("1,1"), std::invalid_argument);
}

TEST_CASE("word round trip") {
    Word w{2, 1, 3, 1, 3};
    CHECK(format_word(w) == "21313");
    CHECK(parse_word("21313") == w);
    CHECK(parse_word("2,1,3,1,3") == w);
    Word big{10, 2};
    CHECK(parse_word(format_word(big)) == big);
}

TEST_CASE("tableau round trips") {
    IncreasingTableau p({{1, 2, 3, 5}, {2, 5, 6}, {3, 6}, {6, 7}, {8}});
    CHECK(parse_increasing_tableau(format_increasing_tableau(p)) == p);

    RSVT q({{FinSet{3}, FinSet{2, 1}}, {FinSet{2, 1}}});
    CHECK(format_rsvt(q) == "3 2,1\n2,1");
    CHECK(parse_rsvt(format_rsvt(q)) == q);

    TableauPair pair(IncreasingTableau({{1, 2}, {3}}), q);
    CHECK(parse_pair_file(format_pair_file(pair)) == pair);
}

TEST_CASE("polynomial format round trip") {
    LPolynomial p = lascoux_polynomial(WeakComposition({0, 2, 1}), 3);
    CHECK(format_polynomial(p) ==
          "x2^2 x3 + x1 x2 x3 + x1 x2^2 + x1^2 x3 + x1^2 x2 + 2 b x1 x2^2 x3 + 2 b x1^2 x2 x3 + "
          "b x1^2 x2^2 + b^2 x1^2 x2^2 x3");
    CHECK(parse_polynomial(format_polynomial(p), 3) == p);
    CHECK(format_polynomial(LPolynomial(2)) == "0");
    CHECK(parse_polynomial("0", 2) == LPolynomial(2));
    CHECK(format_polynomial(LPolynomial::constant(1, 1)) == "1");
    CHECK(parse_polynomial("1", 1) == LPolynomial::constant(1, 1));
}

TEST_CASE("expansion text and json") {
    ExpansionResult r(3);
    r.add(WeakComposition({1, 1, 4}), 0, 1);
    r.add(WeakComposition({2, 1, 4}), 1, 2);
    std::string text = format_expansion(r);
    CHECK(text == "L_(1,1,4) : 1\nb L_(2,1,4) : 2\n");
    CHECK(parse_expansion_json(format_expansion_json(r), 3) == r);
}
