#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "symtuple/pipeline.hpp"
#include "symtuple/reference_checks.hpp"
#include "test_util.hpp"

#include <algorithm>

using namespace symtuple;

namespace {

template <class K>
std::vector<K> sorted_rat(std::vector<K> v) {
    std::sort(v.begin(), v.end(), [](const K& a, const K& b) { return a < b; });
    return v;
}

} // namespace

TEST_CASE("pipeline construction and validation") {
    CHECK_THROWS_AS(build_pipeline(1, 3, {Rat(1)}, Rat(1), Rat(3)), std::domain_error);
    CHECK_THROWS_AS(build_pipeline(1, 3, {Rat(0)}, Rat(2), Rat(3)), std::domain_error);
    CHECK_THROWS_AS(build_pipeline(0, 3, {Rat(1)}, Rat(2), Rat(3)), std::domain_error);
    CHECK_THROWS_AS(build_pipeline(1, 3, {}, Rat(2), Rat(3)), std::domain_error);
    CHECK_THROWS_AS(build_pipeline(1, 3, {Rat(1)}, Rat(2), Rat(0)), std::domain_error);

    auto st = build_pipeline(1, 3, {Rat(1)}, Rat(2), Rat(3));
    CHECK(st.target_a == Rat(47, 6));
    CHECK(st.u[1] == Rat(1));
    CHECK(st.u[2] == Rat(0));
    // a0 = 2qP at q=3 -> 6P; a1 = 6(P^2+1) - 35P
    CHECK(st.a0 == Poly<Rat>{Rat(0), Rat(6)});
    CHECK(st.a1 == Poly<Rat>{Rat(6), Rat(-35), Rat(6)});
    CHECK(st.base.P == Rat(0));
    CHECK(st.base.S == Rat(6));
    CHECK(st.work.P == Rat(2));
    CHECK(st.work.S == Rat(32));
    CHECK(st.C->contains(st.work));
}

TEST_CASE("solve_Q") {
    auto st = build_pipeline(1, 3, {Rat(1)}, Rat(2), Rat(3));
    // base solution: S(p) = 2 a0(p) q + a1(p) recovers q
    CHECK(solve_Q(st, Rat(2), st.work.S) == Rat(3));
    // the other sign of S gives the reciprocal root
    CHECK(solve_Q(st, Rat(2), -st.work.S) * solve_Q(st, Rat(2), st.work.S) == Rat(1));
    CHECK_THROWS_AS(solve_Q(st, Rat(0), Rat(6)), std::domain_error);
}

TEST_CASE("numeric chain at q0 = 3 reproduces the worked tuples") {
    auto st = build_pipeline(1, 3, {Rat(1)}, Rat(2), Rat(3));
    auto chain = gen_symmetric_chain(st, 2);
    REQUIRE(chain.solutions.size() == 2);
    CHECK(chain.skipped.empty());

    std::vector<Rat> expect{Rat(1), Rat(1), Rat(9, 80), Rat(-45, 16), Rat(80, 9), Rat(-16, 45)};
    CHECK(sorted_rat(chain.solutions[0].values) == sorted_rat(expect));
    for (const auto& s : chain.solutions) {
        CHECK(sigma(1, s.values) == Rat(47, 6));
        CHECK(sigma(5, s.values) == Rat(47, 6));
        CHECK(sigma(6, s.values) == Rat(1));
        CHECK(verify_solution(s).all_pass);
    }
    CHECK(chain.solutions[0].values != chain.solutions[1].values);

    CHECK(gen_symmetric_chain(st, 0).solutions.empty());
}

TEST_CASE("chains verify across many specializations") {
    int built = 0;
    for (long num : {3, 5, -3, 7, 4}) {
        auto st = build_pipeline(1, 3, {Rat(1)}, Rat(2), Rat(num));
        auto chain = gen_symmetric_chain(st, 3);
        CHECK(chain.solutions.size() + chain.skipped.size() == 3);
        for (const auto& s : chain.solutions) CHECK(verify_solution(s).all_pass);
        ++built;
    }
    CHECK(built == 5);
}

TEST_CASE("n = 2 pipeline with an empty parameter vector") {
    auto st = build_pipeline(1, 2, {}, Rat(2), Rat(3));
    CHECK(st.u[1] == Rat(1));
    CHECK(st.u[0] == Rat(0));
    CHECK(st.target_a == Rat(2) + Rat(3) + Rat(1, 2) + Rat(1, 3));
    auto chain = gen_symmetric_chain(st, 2);
    for (const auto& s : chain.solutions) {
        CHECK(s.values.size() == 4);
        CHECK(verify_solution(s).all_pass);
    }
}

TEST_CASE("pipelines with i = 2 anchor at the known solution") {
    auto st = build_pipeline(2, 3, {Rat(2)}, Rat(3), Rat(5));
    CHECK(!st.u[2].is_zero());
    CHECK(!st.C->reciprocal_anchor());
    CHECK(st.base.P == Rat(3));
    CHECK(st.work.P == Rat(1, 3));
    auto chain = gen_symmetric_chain(st, 2);
    CHECK(chain.solutions.size() + chain.skipped.size() == 2);
    for (const auto& s : chain.solutions) CHECK(verify_solution(s).all_pass);
}

TEST_CASE("chains generate across indices and lengths") {
    struct Cfg {
        int i, n;
        std::vector<long> t;
        long p, q;
    };
    std::vector<Cfg> cfgs{
        {1, 2, {}, 2, 3},     {3, 3, {2}, 3, 5},    {2, 4, {2, 3}, 5, 7},
        {4, 4, {2, 3}, 5, 7}, {1, 4, {2, 3}, 2, 3}, {5, 5, {2, 3, 4}, 3, 2},
    };
    for (const auto& c : cfgs) {
        CAPTURE(c.i);
        CAPTURE(c.n);
        std::vector<Rat> t;
        for (long v : c.t) t.push_back(Rat(v));
        auto st = build_pipeline(c.i, c.n, t, Rat(c.p), Rat(c.q));
        auto chain = gen_symmetric_chain(st, 3);
        CHECK(chain.solutions.size() == 3);
        for (const auto& s : chain.solutions) {
            CHECK(s.values.size() == static_cast<size_t>(2 * c.n));
            CHECK(verify_solution(s).all_pass);
            // the two mirrored constraints come for free from the tuple shape
            CHECK(sigma(c.i, s.values) == sigma(2 * c.n - c.i, s.values));
            CHECK(sigma(2 * c.n, s.values) == Rat(1));
        }
    }
}

// The fully degenerate configuration (u2 = 0 and u1 + u3 = 0 simultaneously)
// needs identities like sigma_1 = 0 and sigma_2 = -1 on a reciprocal tuple,
// which force t^2 + 1/t^2 = 1 in every small case; no rational instance is
// known, so the vacuous-equation branch is kept but not constructible here.

TEST_CASE("symbolic reference pipeline regression") {
    for (const auto& r : reference_pipeline_checks()) {
        INFO(r.name, ": ", r.detail);
        CHECK(r.pass);
    }
}
