#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "symtuple/rational.hpp"
#include "test_util.hpp"

using namespace symtuple;

TEST_CASE("arithmetic and normalization") {
    CHECK(Rat(1, 2) + Rat(1, 3) == Rat(5, 6));
    CHECK(Rat(6, -4) == Rat(-3, 2));
    CHECK(Rat(0, 7) == Rat(0));
    CHECK(Rat(0).str() == "0");
    CHECK(Rat(-3, 2).str() == "-3/2");
    CHECK(Rat(4, 2).str() == "2");
    CHECK(Rat(2, 3) * Rat(9, 4) == Rat(3, 2));
    CHECK(Rat(1) / Rat(-5, 7) == Rat(-7, 5));
}

TEST_CASE("division by zero and reciprocal errors") {
    CHECK_THROWS_AS(Rat(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rat(1) / Rat(0), std::domain_error);
    CHECK_THROWS_AS(Rat(0).reciprocal(), std::domain_error);
}

TEST_CASE("pow with negative exponents") {
    CHECK(Rat(2, 3).pow(3) == Rat(8, 27));
    CHECK(Rat(2, 3).pow(-2) == Rat(9, 4));
    CHECK(Rat(5).pow(0) == Rat(1));
    CHECK_THROWS_AS(Rat(0).pow(-1), std::domain_error);
}

TEST_CASE("ordering") {
    CHECK(Rat(1, 3) < Rat(1, 2));
    CHECK(Rat(-1, 2) < Rat(1, 3));
    CHECK(Rat(7, 2) > Rat(3));
}

TEST_CASE("ring axioms on random values") {
    auto g = testutil::rng(17);
    for (int it = 0; it < 300; ++it) {
        Rat a = testutil::random_rat(g), b = testutil::random_rat(g), c = testutil::random_rat(g);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + (-a) == Rat(0));
        if (!a.is_zero()) CHECK(a * a.reciprocal() == Rat(1));
    }
}
