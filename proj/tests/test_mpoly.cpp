#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "symtuple/mpoly.hpp"
#include "test_util.hpp"

using namespace symtuple;

TEST_CASE("arithmetic and alignment by name") {
    MPoly x = MPoly::variable("x"), y = MPoly::variable("y");
    CHECK(((x + y).pow(2) - (x * x + Rat(2) * x * y + y * y)).is_zero());
    MPoly p = x + MPoly::constant(1);
    MPoly q = y - MPoly::constant(1);
    CHECK(p * q == x * y - x + y - MPoly::constant(1));
    CHECK((p - p).is_zero());
    CHECK(MPoly::constant(0).is_zero());
}

TEST_CASE("ring axioms on random sparse polynomials") {
    auto g = testutil::rng(29);
    std::uniform_int_distribution<int> nterms(0, 4);
    std::uniform_int_distribution<int> expo(0, 3);
    const char* names[3] = {"x", "y", "z"};
    auto random_mpoly = [&] {
        MPoly p;
        int k = nterms(g);
        for (int t = 0; t < k; ++t) {
            MPoly term = MPoly::constant(testutil::random_rat(g, 9));
            for (int v = 0; v < 3; ++v) {
                int e = expo(g);
                if (e) term *= MPoly::variable(names[v]).pow(e);
            }
            p += term;
        }
        return p;
    };
    for (int it = 0; it < 80; ++it) {
        MPoly a = random_mpoly(), b = random_mpoly(), c = random_mpoly();
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a + (-a)).is_zero());
        CHECK(a * b == b * a);
    }
}

TEST_CASE("evaluation and substitution") {
    MPoly x = MPoly::variable("x"), y = MPoly::variable("y");
    MPoly f = x * x * y + Rat(3) * y - MPoly::constant(7);
    std::map<std::string, Rat> pt{{"x", Rat(2)}, {"y", Rat(1, 2)}};
    CHECK(f.eval(pt) == Rat(2) + Rat(3, 2) - Rat(7));
    CHECK(f.subst("x", Rat(2)) == Rat(4) * y + Rat(3) * y - MPoly::constant(7));
    // polynomial substitution
    MPoly g = (x + y).pow(2);
    CHECK(g.subst("x", y) == Rat(4) * y * y);
    // evaluation into Q(q)
    RatFun qv = RatFun::var();
    std::map<std::string, RatFun> ptq{{"x", qv}, {"y", RatFun(1) / qv}};
    CHECK((x * y).eval(ptq) == RatFun(1));
}

TEST_CASE("derivative and degrees") {
    MPoly x = MPoly::variable("x"), y = MPoly::variable("y");
    MPoly f = x.pow(3) * y + Rat(2) * x;
    CHECK(f.derivative("x") == Rat(3) * x * x * y + MPoly::constant(2));
    CHECK(f.derivative("z").is_zero());
    CHECK(f.degree_in("x") == 3);
    CHECK(f.degree_in("y") == 1);
    CHECK(f.total_degree() == 4);
    CHECK(!f.is_homogeneous());
    CHECK((x * x + x * y).is_homogeneous());
}

TEST_CASE("exact division") {
    MPoly x = MPoly::variable("x"), y = MPoly::variable("y");
    MPoly f = (x + y).pow(3) * (x - Rat(2) * y);
    auto q = try_divide(f, (x + y).pow(2));
    REQUIRE(q.has_value());
    CHECK(*q == (x + y) * (x - Rat(2) * y));
    CHECK(!try_divide(f + MPoly::constant(1), x + y).has_value());
}

TEST_CASE("resultant on univariate matches the field route") {
    MPoly x = MPoly::variable("x");
    CHECK(resultant(x * x - MPoly::constant(1), x - MPoly::constant(2), "x").constant_value() ==
          Rat(3));
    auto g = testutil::rng(73);
    for (int it = 0; it < 60; ++it) {
        UPoly a = testutil::random_upoly(g, 4, 5);
        UPoly b = testutil::random_upoly(g, 3, 5);
        if (a.degree() < 1 || b.degree() < 1) continue;
        MPoly am, bm;
        for (int k = 0; k <= a.degree(); ++k) am += MPoly::constant(a.coeff(k)) * x.pow(k);
        for (int k = 0; k <= b.degree(); ++k) bm += MPoly::constant(b.coeff(k)) * x.pow(k);
        CHECK(resultant(am, bm, "x").constant_value() == resultant(a, b));
    }
}

TEST_CASE("resultant vanishes exactly on planted common factors") {
    MPoly x = MPoly::variable("x"), y = MPoly::variable("y");
    MPoly common = x - Rat(3) * y;
    MPoly f = common * (x + y);
    MPoly g = common * (x * x + y);
    CHECK(resultant(f, g, "x").is_zero());
    MPoly f2 = (x + y) * (x - y);
    MPoly g2 = x * x + y * y + MPoly::constant(1);
    CHECK(!resultant(f2, g2, "x").is_zero());
    CHECK_THROWS_AS(resultant(y + MPoly::constant(1), x, "x"), std::domain_error);
}

TEST_CASE("eliminating one variable from the fourth-power pair") {
    // After x4 = a and x3 = -x1 - x2, the resultant in x2 of
    // (s2 - b, s4 - c) collapses to 4(3a^4 - 2a^2 b + b^2 - 2c)^2.
    MPoly x1 = MPoly::variable("x1"), x2 = MPoly::variable("x2");
    MPoly a = MPoly::variable("a"), b = MPoly::variable("b"), c = MPoly::variable("c");
    MPoly x3 = -x1 - x2;
    MPoly s2 = x1 * x1 + x2 * x2 + x3 * x3 + a * a - b;
    MPoly s4 = x1.pow(4) + x2.pow(4) + x3.pow(4) + a.pow(4) - c;
    MPoly res = resultant(s2, s4, "x2");
    MPoly inner = Rat(3) * a.pow(4) - Rat(2) * a * a * b + b * b - Rat(2) * c;
    CHECK(res == Rat(4) * inner * inner);
}

TEST_CASE("linear solve and cofactor search") {
    // 2x + y = 5, x - y = 1  =>  x = 2, y = 1
    auto sol = solve_linear({{Rat(2), Rat(1)}, {Rat(1), Rat(-1)}}, {Rat(5), Rat(1)});
    REQUIRE(sol.has_value());
    CHECK((*sol)[0] == Rat(2));
    CHECK((*sol)[1] == Rat(1));
    CHECK(!solve_linear({{Rat(1), Rat(1)}, {Rat(2), Rat(2)}}, {Rat(1), Rat(3)}).has_value());

    MPoly x = MPoly::variable("x"), y = MPoly::variable("y"), z = MPoly::variable("z");
    MPoly F = x * x + y * y - z * z;
    MPoly cof = Rat(2) * x - y + Rat(5) * z;
    auto found = find_cofactor(cof * F, F);
    REQUIRE(found.has_value());
    CHECK(*found == cof);
    CHECK(!find_cofactor(cof * F + x.pow(3), F).has_value());
}
