#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "symtuple/symfun.hpp"
#include "symtuple/ratfun.hpp"
#include "test_util.hpp"

using namespace symtuple;

TEST_CASE("sigma conventions and examples") {
    std::vector<Rat> x{Rat(1), Rat(2), Rat(3)};
    CHECK(sigma(2, x) == Rat(11));
    CHECK(sigma(0, x) == Rat(1));
    CHECK(sigma(-1, x) == Rat(0));
    CHECK(sigma(4, x) == Rat(0));
    CHECK(sigma(0, std::vector<Rat>{}) == Rat(1));
    CHECK(sigma(1, std::vector<Rat>{}) == Rat(0));
}

TEST_CASE("sigma equals the subset-sum oracle") {
    auto g = testutil::rng(101);
    for (int n = 0; n <= 8; ++n) {
        for (int rep = 0; rep < 20; ++rep) {
            auto x = testutil::random_tuple(g, n, false, 9);
            for (int i = 0; i <= n; ++i) CHECK(sigma(i, x) == testutil::sigma_bruteforce(i, x));
        }
    }
}

TEST_CASE("power sums") {
    std::vector<Rat> x{Rat(1), Rat(2), Rat(3)};
    CHECK(power_sum(2, x) == Rat(14));
    CHECK(power_sum(-1, std::vector<Rat>{Rat(2), Rat(4)}) == Rat(3, 4));
    CHECK(power_sum(3, std::vector<Rat>{Rat(-2)}) == Rat(-8));
    CHECK_THROWS_AS(power_sum(0, x), std::domain_error);
    CHECK_THROWS_AS(power_sum(-1, std::vector<Rat>{Rat(0)}), std::domain_error);
}

TEST_CASE("reciprocal extension") {
    std::vector<Rat> x{Rat(2), Rat(3)};
    auto e = reciprocal_extend(x);
    CHECK(e == std::vector<Rat>{Rat(2), Rat(3), Rat(1, 2), Rat(1, 3)});
    CHECK_THROWS_AS(reciprocal_extend(std::vector<Rat>{Rat(0)}), std::domain_error);
    RatFun q = RatFun::var();
    auto eq = reciprocal_extend(std::vector<RatFun>{q});
    CHECK(eq[1] == RatFun(1) / q);
    auto e4 = reciprocal_extend(std::vector<Rat>{Rat(1), Rat(1), Rat(2), Rat(7)});
    CHECK(e4.size() == 8);
    CHECK(e4[6] == Rat(1, 2));
}

TEST_CASE("reciprocal identity over random and symbolic tuples") {
    auto rep = check_reciprocal_identity(1, std::vector<Rat>{Rat(2), Rat(3)});
    CHECK(rep.equal);
    CHECK(rep.lhs == Rat(35, 6));
    auto rep0 = check_reciprocal_identity(0, std::vector<Rat>{Rat(5), Rat(-7), Rat(1, 3)});
    CHECK(rep0.equal);
    CHECK(rep0.lhs == Rat(1));

    auto g = testutil::rng(131);
    for (int n = 1; n <= 6; ++n)
        for (int i = 0; i <= n; ++i)
            for (int it = 0; it < 30; ++it)
                CHECK(check_reciprocal_identity(i, testutil::random_tuple(g, n, true)).equal);

    RatFun q = RatFun::var();
    std::vector<RatFun> sym{RatFun(1), RatFun(1), q};
    for (int i = 0; i <= 3; ++i) CHECK(check_reciprocal_identity(i, sym).equal);
    CHECK_THROWS_AS(check_reciprocal_identity(4, sym), std::domain_error);
}

TEST_CASE("expansion identity") {
    CHECK(expansion_coeffs(2, std::vector<Rat>{Rat(1), Rat(2)}, std::vector<Rat>{Rat(3)}) ==
          Rat(11));
    CHECK(expansion_coeffs(0, std::vector<Rat>{Rat(5)}, std::vector<Rat>{Rat(7)}) == Rat(1));
    auto g = testutil::rng(151);
    for (int it = 0; it < 150; ++it) {
        std::uniform_int_distribution<int> len(0, 5);
        auto base = testutil::random_tuple(g, len(g), false);
        auto extras = testutil::random_tuple(g, len(g), false);
        std::uniform_int_distribution<int> ii(0, static_cast<int>(base.size() + extras.size()));
        int i = ii(g);
        auto joined = base;
        joined.insert(joined.end(), extras.begin(), extras.end());
        CHECK(expansion_coeffs(i, base, extras) == sigma(i, joined));
    }
}

TEST_CASE("u coefficients") {
    auto u = u_coeffs(1, std::vector<Rat>{Rat(1)});
    CHECK(u[0] == Rat(2));
    CHECK(u[1] == Rat(1));
    CHECK(u[2] == Rat(0));
    CHECK(u[3] == Rat(0));
    CHECK(u[4] == Rat(0));

    auto u0 = u_coeffs(0, std::vector<Rat>{Rat(3), Rat(5)});
    CHECK(u0[0] == Rat(1));
    for (size_t k = 1; k < 5; ++k) CHECK(u0[k] == Rat(0));

    // i = 4 with four generic positive entries: every u_k is nonzero.
    auto u4 = u_coeffs(4, std::vector<Rat>{Rat(2), Rat(3), Rat(5, 2), Rat(7, 3)});
    for (size_t k = 0; k < 5; ++k) CHECK(!u4[k].is_zero());

    // empty parameter vector: only sigma_0 survives
    auto ue = u_coeffs(1, std::vector<Rat>{});
    CHECK(ue[0] == Rat(0));
    CHECK(ue[1] == Rat(1));
    CHECK(ue[2] == Rat(0));
}

TEST_CASE("symbolic target value") {
    // sigma_1(1,1,2,q,1/2,1/q) equals (2q^2+9q+2)/(2q) identically.
    RatFun q = RatFun::var();
    std::vector<RatFun> x{RatFun(1), RatFun(1), RatFun(2), q, RatFun(Rat(1, 2)), RatFun(1) / q};
    RatFun a = (RatFun(2) * q * q + RatFun(9) * q + RatFun(2)) / (RatFun(2) * q);
    CHECK(sigma(1, x) == a);
    CHECK((a - sigma(1, x)).is_zero());
    // and the reciprocal identity pairs it with sigma_5
    CHECK(sigma(5, x) == a);
}

TEST_CASE("scaling laws") {
    auto g = testutil::rng(163);
    for (int it = 0; it < 100; ++it) {
        auto x = testutil::random_tuple(g, 5, true);
        Rat lam = testutil::random_nonzero_rat(g);
        std::vector<Rat> xl;
        for (const auto& v : x) xl.push_back(v * lam);
        for (int i = 0; i <= 5; ++i) CHECK(sigma(i, xl) == lam.pow(i) * sigma(i, x));
        for (long e : {-2L, -1L, 1L, 2L, 3L}) CHECK(power_sum(e, xl) == lam.pow(e) * power_sum(e, x));
    }
}
