#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "symtuple/families.hpp"
#include "symtuple/identities.hpp"
#include "symtuple/pipeline.hpp"
#include "test_util.hpp"

using namespace symtuple;

TEST_CASE("family 123") {
    auto s = family_123(Rat(2), Rat(1), Rat(1));
    CHECK(s.values == std::vector<Rat>{Rat(14, 17), Rat(3, 17), Rat(65, 68), Rat(3, 68)});
    CHECK(s.spec.targets == std::vector<Rat>{Rat(2), Rat(13, 8), Rat(23, 16)});
    CHECK(verify_solution(s).all_pass);
    // d = a is degenerate but valid
    CHECK(verify_solution(family_123(Rat(3), Rat(3), Rat(2))).all_pass);
    CHECK_THROWS_AS(family_123(Rat(0), Rat(1), Rat(1)), std::domain_error);
}

TEST_CASE("family 124") {
    auto s = family_124(Rat(1), Rat(1), Rat(1));
    CHECK(s.values == std::vector<Rat>{Rat(-1, 2), Rat(0), Rat(1, 2), Rat(1)});
    CHECK(power_sum(4, s.values) == Rat(9, 8));
    CHECK(s.spec.targets[2] == Rat(9, 8));
    CHECK(verify_solution(s).all_pass);
}

TEST_CASE("family m112") {
    auto s = family_m112(Rat(1), Rat(3), Rat(2));
    CHECK(s.values == std::vector<Rat>{Rat(6, 7), Rat(12, 7), Rat(-4, 7), Rat(1)});
    CHECK(power_sum(-1, s.values) == Rat(1));
    CHECK(power_sum(1, s.values) == Rat(3));
    CHECK(power_sum(2, s.values) == Rat(5));
    CHECK_THROWS_WITH_AS(family_m112(Rat(2), Rat(1, 2), Rat(3)),
                         "family_m112: ab = 1 makes x1, x2, x3 zero", std::domain_error);
    CHECK_THROWS_AS(family_m112(Rat(1), Rat(3), Rat(0)), std::domain_error);
    CHECK_THROWS_AS(family_m112(Rat(1), Rat(3), Rat(-1)), std::domain_error);
}

TEST_CASE("family 24") {
    auto s = family_24(Rat(1), Rat(0));
    CHECK(s.values == std::vector<Rat>{Rat(-2), Rat(1), Rat(-1)});
    CHECK(power_sum(2, s.values) == Rat(6));
    CHECK(power_sum(4, s.values) == Rat(18));
    auto z = family_24(Rat(0), Rat(5));
    CHECK(z.spec.targets == std::vector<Rat>{Rat(2), Rat(2)});
    CHECK(verify_solution(z).all_pass);
}

TEST_CASE("symbolic certificates hold identically") {
    for (const auto& r : power_family_certificates()) {
        INFO(r.name, ": ", r.detail);
        CHECK(r.pass);
    }
}

TEST_CASE("positivity windows") {
    auto w = positivity_window(Rat(2), Rat(1));
    REQUIRE(w.size() == 2);
    CHECK(w[0].lo == Rat(0));
    CHECK(w[0].hi == Rat(4, 3));
    CHECK(w[1].lo == Rat(4));
    CHECK(w[1].hi == Rat(8));
    // sample check across both windows
    for (const auto& iv : w) {
        for (int k = 1; k <= 7; ++k) {
            Rat t = iv.lo + (iv.hi - iv.lo) * Rat(k, 8);
            for (const auto& x : family_123(Rat(2), Rat(1), t).values) CHECK(Rat(0) < x);
        }
    }
    CHECK_THROWS_AS(positivity_window(Rat(1), Rat(2)), std::domain_error);
    CHECK_THROWS_AS(positivity_window(Rat(2), Rat(0)), std::domain_error);
}

TEST_CASE("lift to longer tuples") {
    auto s = family_123(Rat(2), Rat(1), Rat(1));
    auto lifted = lift_to_n(s, {Rat(1)});
    CHECK(lifted.spec.n == 5);
    CHECK(lifted.spec.targets == std::vector<Rat>{Rat(3), Rat(21, 8), Rat(39, 16)});
    CHECK(verify_solution(lifted).all_pass);

    auto same = lift_to_n(s, {});
    CHECK(same.values == s.values);
    CHECK(same.spec.targets == s.spec.targets);

    auto m = family_m112(Rat(1), Rat(3), Rat(2));
    auto ml = lift_to_n(m, {Rat(2)});
    CHECK(ml.spec.targets[0] == Rat(3, 2)); // s_{-1} gains 1/2
    CHECK(verify_solution(ml).all_pass);
    CHECK_THROWS_AS(lift_to_n(m, {Rat(0)}), std::domain_error);

    auto g = testutil::rng(301);
    for (int extra = 1; extra <= 4; ++extra) {
        auto padding = testutil::random_tuple(g, extra, true, 9);
        auto l2 = lift_to_n(family_124(Rat(2), Rat(3), Rat(1, 2)), padding);
        CHECK(l2.spec.n == 4 + extra);
        CHECK(verify_solution(l2).all_pass);
    }
}

TEST_CASE("integer families") {
    std::vector<RatSolution> sols{family_123(Rat(2), Rat(1), Rat(1)),
                                  family_123(Rat(2), Rat(1), Rat(2))};
    auto fam = make_integer_family(sols);
    CHECK(fam.tuples.size() == 2);
    CHECK(fam.collective_gcd == 1);
    for (const auto& t : fam.tuples) {
        for (const auto& v : t.values) CHECK(v.is_integer());
        CHECK(verify_solution(t).all_pass);
    }
    CHECK(fam.tuples[0].spec == fam.tuples[1].spec);

    // already-integer primitive tuple is unchanged
    auto s24 = family_24(Rat(1), Rat(0)); // (-2, 1, -1)
    auto fam1 = make_integer_family({s24});
    CHECK(fam1.tuples[0].values == s24.values);

    // forced divisibility of the sum
    auto fam7 = make_integer_family(sols, mpz_class(7));
    Rat sum = fam7.tuples[0].spec.targets[0];
    CHECK(sum.is_integer());
    CHECK(sum.num() % 7 == 0);
    for (const auto& t : fam7.tuples) CHECK(verify_solution(t).all_pass);

    CHECK_THROWS_AS(make_integer_family({}), std::domain_error);
    CHECK_THROWS_AS(make_integer_family({s24}, mpz_class(5)), std::domain_error);
    std::vector<RatSolution> mixed{family_123(Rat(2), Rat(1), Rat(1)),
                                   family_123(Rat(2), Rat(3), Rat(1))};
    CHECK_THROWS_AS(make_integer_family(mixed), std::domain_error);
}

TEST_CASE("integer scaling of symmetric-triple chain solutions") {
    auto st = build_pipeline(1, 3, {Rat(1)}, Rat(2), Rat(3));
    auto chain = gen_symmetric_chain(st, 2);
    REQUIRE(chain.solutions.size() == 2);
    auto fam = make_integer_family(chain.solutions);
    CHECK(fam.tuples.size() == 2);
    for (const auto& t : fam.tuples) {
        for (const auto& v : t.values) CHECK(v.is_integer());
        CHECK(verify_solution(t).all_pass);
    }
    // shared sigma targets after scaling
    CHECK(fam.tuples[0].spec.targets == fam.tuples[1].spec.targets);
}

TEST_CASE("chain cap guards against runaway heights") {
    auto st = build_pipeline(1, 3, {Rat(1)}, Rat(2), Rat(3));
    CHECK_THROWS_AS(gen_symmetric_chain(st, 13), std::domain_error);
    CHECK(gen_symmetric_chain(st, 13, 20).solutions.size() == 13);
}

TEST_CASE("homogeneous scaling underpins the integer construction") {
    auto g = testutil::rng(317);
    for (int it = 0; it < 50; ++it) {
        auto s = family_123(testutil::random_nonzero_rat(g, 9), testutil::random_rat(g, 9),
                            testutil::random_rat(g, 9));
        Rat lam = testutil::random_nonzero_rat(g, 9);
        std::vector<Rat> scaled;
        for (const auto& v : s.values) scaled.push_back(v * lam);
        for (size_t k = 0; k < s.spec.exponents.size(); ++k)
            CHECK(power_sum(s.spec.exponents[k], scaled) ==
                  lam.pow(s.spec.exponents[k]) * s.spec.targets[k]);
    }
}

TEST_CASE("verification reports failures with values") {
    auto s = family_123(Rat(2), Rat(1), Rat(1));
    s.values[0] += Rat(1);
    auto rep = verify_solution(s);
    CHECK(!rep.all_pass);
    CHECK(!rep.constraints[0].pass);
    CHECK(rep.constraints[0].computed == Rat(3));
    CHECK(rep.constraints[0].expected == Rat(2));
}

TEST_CASE("unevaluable constraints count as failures") {
    auto s = family_m112(Rat(1), Rat(3), Rat(2));
    s.values[0] = Rat(0); // zero entry under the exponent -1 constraint
    auto rep = verify_solution(s);
    CHECK(!rep.all_pass);
    CHECK(!rep.constraints[0].pass);
    CHECK(!rep.constraints[0].note.empty());
}
