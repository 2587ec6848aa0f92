#pragma once

// Symbolic regression battery for the bundled reference pipeline
// (i = 1, n = 3, t = (1), p = 2, symbolic q). Everything here is an exact
// identity in Q(q): the quartic's coefficients, the target value, the
// j-invariant against the reference Weierstrass model, the discriminant
// factorization, the torsion certificates for the reference points, the
// first two chain solutions, and the Euler-vs-group-law cross-check.

#include "symtuple/identities.hpp"
#include "symtuple/pipeline.hpp"
#include "symtuple/torsion.hpp"

#include <vector>

namespace symtuple {

namespace detail {

inline RatFun rfpoly(std::initializer_list<long> lowest_first) {
    std::vector<Rat> c;
    for (long v : lowest_first) c.push_back(Rat(v));
    return RatFun(UPoly(std::move(c)));
}

} // namespace detail

struct ReferenceModel {
    EllipticCurve<RatFun> E;
    ECPoint<RatFun> T; // two-torsion
    ECPoint<RatFun> W; // infinite order
    RatFun delta_factored;
};

// The reference curve Y^2 = X^3 - 27(m^2 - 768 q^4) X + 54 m (m^2 - 1152 q^4)
// with m = 4q^4 + 20q^3 + q^2 + 20q + 4, its two-torsion point (3m, 0), the
// infinite-order point (3(m - 24q), -216(q-2)q(2q+1)), and the factored form
// of -(4A^3 + 27B^2).
inline ReferenceModel reference_model() {
    RatFun q = RatFun::var();
    RatFun m = detail::rfpoly({4, 20, 1, 20, 4});
    RatFun A = RatFun(-27) * (m * m - detail::rfpoly({0, 0, 0, 0, 768}));
    RatFun B = RatFun(54) * m * (m * m - detail::rfpoly({0, 0, 0, 0, 1152}));
    RatFun mw = detail::rfpoly({4, -4, 1, 20, 4});
    RatFun delta = RatFun(Rat(65536) * Rat(531441)) * detail::rfpoly({0, 0, 0, 0, 0, 0, 0, 0, 1}) *
                   (q + RatFun(2)).pow(2) * (RatFun(2) * q + RatFun(1)).pow(2) *
                   detail::rfpoly({2, -3, 2}) * detail::rfpoly({2, 13, 2});
    return {EllipticCurve<RatFun>(A, B), ECPoint<RatFun>::affine(RatFun(3) * m, RatFun(0)),
            ECPoint<RatFun>::affine(RatFun(3) * mw,
                                    RatFun(-216) * (q - RatFun(2)) * q * (RatFun(2) * q + RatFun(1))),
            delta};
}

// The displayed chain solutions of the reference pipeline.
struct ReferenceChainPairs {
    RatFun P2, Q2, P3, Q3;
};

inline ReferenceChainPairs reference_chain_pairs() {
    RatFun q = RatFun::var();
    RatFun P2 = RatFun(3) * (q - RatFun(2)) * q /
                (RatFun(2) * (q - RatFun(1)) * (q + RatFun(1)) * (RatFun(2) * q - RatFun(1)));
    RatFun Q2 = RatFun(-3) * q * (RatFun(2) * q - RatFun(1)) /
                (RatFun(2) * (q - RatFun(2)) * (q - RatFun(1)) * (q + RatFun(1)));
    RatFun f1 = detail::rfpoly({8, -7, -2, 4});  // 4q^3 - 2q^2 - 7q + 8
    RatFun f2 = detail::rfpoly({4, -2, -7, 8});  // 8q^3 - 7q^2 - 2q + 4
    RatFun g1 = detail::rfpoly({2, -4, 4, 1});   // q^3 + 4q^2 - 4q + 2
    RatFun g2 = detail::rfpoly({1, 4, -4, 2});   // 2q^3 - 4q^2 + 4q + 1
    RatFun P3 = f1 * f2 / (RatFun(2) * g1 * g2);
    RatFun Q3 = g1 * f2 / (q * g2 * f1);
    return {P2, Q2, P3, Q3};
}

inline std::vector<IdentityResult> reference_pipeline_checks() {
    std::vector<IdentityResult> out;
    auto push = [&](const char* name, bool ok, const char* detail = "") {
        out.push_back({name, ok, ok ? "" : detail});
    };

    auto st = build_pipeline_symbolic(1, 3, {Rat(1)}, Rat(2));
    RatFun q = RatFun::var();
    const auto& C = *st.C;

    RatFun h4 = detail::rfpoly({0, 0, 4});
    RatFun h3 = RatFun(-4) * q * (q + RatFun(2)) * (RatFun(2) * q + RatFun(1));
    RatFun h2 = detail::rfpoly({4, 20, 25, 20, 4});
    push("quartic_coefficients",
         C.H().coeff(4) == h4 && C.H().coeff(3) == h3 && C.H().coeff(2) == h2 &&
             C.H().coeff(1) == h3 && C.H().coeff(0) == h4,
         "H(P) differs from the reference expansion");
    push("target_value",
         st.target_a == (RatFun(2) * q * q + RatFun(9) * q + RatFun(2)) / (RatFun(2) * q),
         "target differs from sigma_1(1,1,2,q,1/2,1/q)");

    BirationalPair<RatFun> maps(C);
    ReferenceModel ref = reference_model();
    push("points_on_reference_model", ref.E.contains(ref.T) && ref.E.contains(ref.W),
         "reference points left the reference curve");
    push("j_invariant_match", maps.curve().j_invariant() == ref.E.j_invariant(),
         "transform and reference model are not isomorphic");
    push("discriminant_factorization",
         -(RatFun(4) * ref.E.A().pow(3) + RatFun(27) * ref.E.B().pow(2)) == ref.delta_factored,
         "factored discriminant differs");

    auto certT = torsion_certificate(ref.E, ref.T);
    push("two_torsion_certificate", certT.kind == TorsionKind::TwoTorsion,
         "expected a two-torsion certificate");
    auto certW = torsion_certificate(ref.E, ref.W);
    push("infinite_order_certificate",
         certW.kind == TorsionKind::InfiniteOrder && certW.reason == "Y^2 does not divide Delta",
         "expected the divisibility obstruction");

    auto chain = gen_symmetric_chain(st, 2);
    bool chain_ok = chain.solutions.size() == 2 && chain.skipped.empty();
    push("chain_produced", chain_ok, "chain did not produce two symbolic solutions");
    if (chain_ok) {
        auto pairs = reference_chain_pairs();
        const auto& v2 = chain.solutions[0].values; // (1, P, Q, 1, 1/P, 1/Q)
        push("chain_pair_two", v2[1] == pairs.P2 && v2[2] == pairs.Q2,
             "second multiple differs from the displayed pair");
        const auto& v3 = chain.solutions[1].values;
        push("chain_pair_three",
             v3[1] * pairs.Q3 == RatFun(1) && v3[2] * pairs.P3 == RatFun(1),
             "third multiple is outside the displayed solution cluster");
        bool sig = true;
        for (const auto& s : chain.solutions) {
            sig &= sigma(1, s.values) == st.target_a;
            sig &= sigma(5, s.values) == st.target_a;
            sig &= sigma(6, s.values) == RatFun(1);
        }
        push("chain_sigma_identities", sig, "sigma identities failed on a chain solution");

        auto eu = euler_double(C, st.work);
        push("euler_matches_group_double", eu.P == pairs.P2 && eu.S == quartic_mul(C, 2, st.work).S,
             "tangent-parabola double differs from the group double");
    }
    return out;
}

} // namespace symtuple
