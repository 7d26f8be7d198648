#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lascoux/expansion.hpp"
#include "lascoux/verify.hpp"

using namespace lascoux;

TEST_CASE("build_p1") {
    IncreasingTableau p1 = build_p1(WeakComposition({1, 0, 2}));
    CHECK(p1 == IncreasingTableau({{1, 4}, {3}}));
    CHECK(build_p1(WeakComposition({0, 0})) == IncreasingTableau{});
    IncreasingTableau p2 = build_p1(WeakComposition({2, 1}));
    CHECK(p2 == IncreasingTableau({{1, 2}, {2}}));
    CHECK(wt_key(left_key_increasing(p2), 2) == WeakComposition({2, 1}));
}

TEST_CASE("expand_product for the identity permutation") {
    WeakComposition alpha({0, 2, 1});
    ExpansionResult r = expand_product(alpha, Permutation::identity(), 3);
    ExpansionResult expected(3);
    expected.add(alpha, 0, 1);
    CHECK(r == expected);
}

TEST_CASE("expand_product matches the worked contributions") {
    // the three worked tableaux appear among the qualifying set
    ExpansionResult r = expand_product(WeakComposition({1, 0, 2}),
                                       Permutation::from_one_line({3, 2, 1}), 3);
    CHECK(r.coefficient(WeakComposition({1, 1, 4}), 0) == 1);
    CHECK(r.coefficient(WeakComposition({2, 1, 4}), 1) == 2);
    CHECK(r.coefficient(WeakComposition({2, 2, 4}), 2) == 1);
    CHECK(r.coefficient(WeakComposition({3, 2, 4}), 3) == 1);

    // the qualifying set has 19 tableaux: the certified expansion carries
    // one unit per tableau
    Int total = 0;
    for (const auto& [gamma, coeffs] : r.terms())
        for (const auto& c : coeffs) total += c;
    CHECK(total == 19);
}

TEST_CASE("expand_grothendieck small cases") {
    ExpansionResult s1 = expand_grothendieck(Permutation::simple(1));
    ExpansionResult expected(1);
    expected.add(WeakComposition({1}), 0, 1);
    CHECK(s1 == expected);

    ExpansionResult id = expand_grothendieck(Permutation::identity());
    ExpansionResult expected_id(0);
    expected_id.add(WeakComposition::zero(0), 0, 1);
    CHECK(id == expected_id);
}

TEST_CASE("expand_in_lascoux_basis") {
    SUBCASE("a Lascoux polynomial expands to a delta") {
        WeakComposition gamma({1, 0, 2});
        ExpansionResult r = expand_in_lascoux_basis(lascoux_polynomial(gamma, 3), 3);
        ExpansionResult expected(3);
        expected.add(gamma, 0, 1);
        CHECK(r == expected);
    }
    SUBCASE("the worked Lascoux fixture") {
        ExpansionResult r = expand_in_lascoux_basis(lascoux_polynomial(WeakComposition({0, 2, 1}), 3), 3);
        ExpansionResult expected(3);
        expected.add(WeakComposition({0, 2, 1}), 0, 1);
        CHECK(r == expected);
    }
    SUBCASE("negative expansions are reported") {
        LPolynomial p = LPolynomial::monomial(2, 0, {0, 1});  // x2 alone is not key-positive
        CHECK_THROWS_AS(expand_in_lascoux_basis(p, 2), BasisError);
    }
    SUBCASE("beta-only polynomials") {
        LPolynomial p = LPolynomial::monomial(2, 1, {0, 0});  // beta * 1 = beta * L_(0,0)
        ExpansionResult r = expand_in_lascoux_basis(p, 2);
        ExpansionResult expected(2);
        expected.add(WeakComposition({0, 0}), 1, 1);
        CHECK(r == expected);
    }
}

TEST_CASE("oracle agreement on a product") {
    WeakComposition alpha({0, 1});
    Permutation w = Permutation::from_one_line({2, 1});
    ExpansionResult direct = expand_product(alpha, w, 2);
    ExpansionResult via_basis =
        expand_in_lascoux_basis(lascoux_polynomial(alpha, 2) * grothendieck_stable_truncated(w, 2), 2);
    CHECK(direct == via_basis);
}

TEST_CASE("identity failure is detected") {
    // an override P1 whose left key has the wrong weight must be rejected
    IncreasingTableau bad({{2, 3}});
    CHECK_THROWS_AS(
        expand_product(WeakComposition({1, 0, 2}), Permutation::simple(1), 3, &bad, true),
        std::logic_error);
}

TEST_CASE("expansion property suite") {
    auto report = verify::verify_expansion(1, 8);
    for (const auto& r : report) {
        INFO(r.name, ": ", r.note);
        CHECK(r.pass);
    }
}
