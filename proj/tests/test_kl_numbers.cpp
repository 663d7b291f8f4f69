#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "uniform_kl/kl_numbers.hpp"

using namespace uniform_kl;

TEST_CASE("c_closed examples") {
    CHECK(c_closed(4, 1) == 2);
    CHECK(c_closed(9, 0) == 1);
    CHECK(c_closed(7, 2) == 21);
    CHECK(c_closed(5, 2) == 0);
    CHECK(c_closed(9, 1) == 27);
    CHECK(c_closed(9, 2) == 120);
    CHECK(c_closed(9, 3) == 84);
    CHECK(c_closed(6, -1) == 0);
    CHECK_THROWS_AS(c_closed(1, 0), std::domain_error);
}

TEST_CASE("c_closed vanishes exactly at 2i >= n-1") {
    for (long n = 2; n <= 40; ++n)
        for (long i = 0; i <= n + 2; ++i) REQUIRE((c_closed(n, i) == 0) == kl_vanishes(n, i));
}

TEST_CASE("coefficients outgrow 64 bits") {
    CHECK(c_closed(25, 11) == 4457400);
    CHECK(c_closed(48, 15) > BigInt("18446744073709551615"));
    CHECK(c_recursion(48, 15) == c_closed(48, 15));
}

TEST_CASE("recursion examples") {
    KLTable table(8);
    CHECK(c_recursion(2, 0, table) == 1);
    CHECK(c_recursion(4, 1, table) == 2);
    CHECK(c_recursion(6, 2, table) == 5);
    // (4,1) by hand: the only term is j=0, k=2 with sign (-1)^4 and C(4; 2,0,2) c_{2,0}.
    CHECK(-binomial(4, 1) + multinomial(4, {2, 0, 2}) == 2);
    CHECK(c_recursion(7, 2) == 21);
}

TEST_CASE("raw recursion sum does not vanish past the bound") {
    KLTable table(4);
    CHECK(c_recursion_formula(2, 1, table) == -1);
    CHECK(c_recursion(2, 1, table) == 0);
    // below the bound the raw sum and the guarded version agree
    for (long n = 2; n <= 4; ++n)
        for (long i = 0; 2 * i < n - 1; ++i) CHECK(c_recursion_formula(n, i, table) == c_recursion(n, i, table));
}

TEST_CASE("KLTable invariants") {
    KLTable table(25);
    for (long n = 2; n <= 25; ++n) {
        CHECK(table.at(n, 0) == 1);
        for (long i = 0; i <= n; ++i) {
            BigInt c = table.at(n, i);
            CHECK(c >= 0);
            if (kl_vanishes(n, i)) CHECK(c == 0);
            CHECK(c == c_closed(n, i));
        }
    }
    CHECK_THROWS_AS(table.at(26, 1), std::out_of_range);
    CHECK(table.at(26, 20) == 0);  // vanishing needs no storage
    CHECK_THROWS_AS(KLTable(1), std::domain_error);
}

TEST_CASE("kl_poly") {
    CHECK(kl_poly(2) == UniPoly(1));
    CHECK(kl_poly(6) == UniPoly(std::vector<Rational>{1, 9, 5}));
    CHECK(kl_poly(7) == UniPoly(std::vector<Rational>{1, 14, 21}));
    for (long n = 2; n <= 30; ++n) CHECK(2 * kl_poly(n).degree() < n - 1);
}

TEST_CASE("epw2 small cases") {
    auto r2 = check_epw2(2);
    CHECK(r2.holds);
    CHECK(r2.lhs == UniPoly::t());
    CHECK(r2.rhs == UniPoly::t());
    auto r3 = check_epw2(3);
    CHECK(r3.holds);
    CHECK(r3.lhs == UniPoly::monomial(1, 2));
    CHECK(check_epw2(8).residual.is_zero());
}

TEST_CASE("epw2 detects a wrong polynomial") {
    auto bad = [](long k) { return k == 6 ? kl_poly(6) + UniPoly::t() : kl_poly(k); };
    CHECK_FALSE(check_epw2(6, bad).holds);
}

TEST_CASE("logconcave examples") {
    auto r9 = check_logconcave(9);
    REQUIRE(r9.triples.size() == 2);
    CHECK(r9.triples[0].i == 1);
    CHECK(r9.triples[0].square == 729);
    CHECK(r9.triples[0].product == 120);
    CHECK(r9.triples[1].square == 14400);
    CHECK(r9.triples[1].product == 2268);
    CHECK(r9.holds);
    auto r5 = check_logconcave(5);
    CHECK(r5.triples.empty());
    CHECK(r5.holds);
}

TEST_CASE("log-concavity ratio factors through five terms") {
    // c_{n,i-1} c_{n,i+1} / c_{n,i}^2 equals the product of five rational
    // factors, and the last two multiply to something below 1.
    for (long n = 4; n <= 80; ++n)
        for (long i = 1; i < n / 2 - 1; ++i) {
            Rational ratio(c_closed(n, i - 1) * c_closed(n, i + 1), c_closed(n, i) * c_closed(n, i));
            ratio.canonicalize();
            Rational f1(i, i + 2), f2(n - i - 1, n - i + 1), f3(n - 2 * i - 2, n - 2 * i), f4(n - 2 * i - 3, n - 2 * i - 1),
                f5(n - i, n - i - 2);
            for (auto* f : {&f1, &f2, &f3, &f4, &f5}) f->canonicalize();
            REQUIRE(ratio == f1 * f2 * f3 * f4 * f5);
            REQUIRE(f4 * f5 < 1);
            REQUIRE(ratio < 1);
        }
}
