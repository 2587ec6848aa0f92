#pragma once

// The curve-based generator for the symmetric system
//   sigma_i(X_2n) = sigma_{2n-i}(X_2n) = a,  sigma_2n(X_2n) = 1
// on reciprocal 2n-tuples (t, P, Q, 1/t, 1/P, 1/Q): fixing all but two slots
// turns the single remaining equation into a quadratic F_P(Q) with square
// discriminant condition S^2 = H(P) = a1^2 - 4 a0^2, a hyperelliptic quartic
// carrying the known solution (P,Q) = (p,q). Point chains on it generate
// infinitely many further solutions.

#include "symtuple/quartic.hpp"
#include "symtuple/ratfun.hpp"
#include "symtuple/solution.hpp"
#include "symtuple/specialize.hpp"
#include "symtuple/symfun.hpp"
#include "symtuple/torsion.hpp"

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace symtuple {

template <class K>
struct PipelineState {
    int i = 0;
    int n = 0;
    std::vector<Rat> t;
    Rat p;
    K q;
    std::array<K, 5> u{K(0), K(0), K(0), K(0), K(0)};
    Poly<K> a0, a1; // a2 = a0
    K target_a{0};
    std::optional<QuarticModel<K>> C;
    QuarticPoint<K> base, work;
    bool degenerate_free = false; // a0 = a1 = 0: every nonzero (P,Q) solves
};

namespace detail {

template <class K>
PipelineState<K> build_pipeline_impl(int i, int n, std::vector<Rat> t, const Rat& p, K q) {
    if (n < 2 || i < 1 || i > n) throw std::domain_error("build_pipeline: need n >= 2, 1 <= i <= n");
    if (static_cast<int>(t.size()) != n - 2)
        throw std::domain_error("build_pipeline: need n-2 parameter values");
    for (const auto& ti : t)
        if (ti.is_zero()) throw std::domain_error("build_pipeline: parameters must be nonzero");
    if (p.is_zero() || p == Rat(1) || p == Rat(-1))
        throw std::domain_error("build_pipeline: p must avoid {0, 1, -1}");
    if (q.is_zero()) throw std::domain_error("build_pipeline: q must be nonzero");

    PipelineState<K> st;
    st.i = i;
    st.n = n;
    st.t = std::move(t);
    st.p = p;
    st.q = q;

    auto ur = u_coeffs(i, st.t);
    for (size_t k = 0; k < 5; ++k) st.u[k] = K(ur[k]);
    K u2 = st.u[2];
    K u13 = st.u[1] + st.u[3];

    K pk(p);
    K pq = pk * q;
    // a0 = p q (u2 P^2 + (u1+u3) P + u2)
    st.a0 = Poly<K>{pq * u2, pq * u13, pq * u2};
    // a1 = p q (u1+u3)(P^2+1) - P((p^2 q^2 + p^2 + q^2 + 1) u2 + (u1+u3)(p+q)(pq+1))
    K mid = (pq * pq + pk * pk + q * q + K(1)) * u2 + u13 * (pk + q) * (pq + K(1));
    st.a1 = Poly<K>{pq * u13, -mid, pq * u13};

    // Target value: a = sigma_i(t, p, q, 1/t, 1/p, 1/q).
    std::vector<K> full;
    for (const auto& ti : st.t) full.push_back(K(ti));
    full.push_back(pk);
    full.push_back(q);
    st.target_a = sigma(i, reciprocal_extend(full));

    if (st.a0.is_zero() && st.a1.is_zero()) {
        st.degenerate_free = true;
        return st;
    }
    if (st.a0.is_zero())
        throw std::logic_error("build_pipeline: a0 vanished without a1 vanishing");

    Poly<K> H = st.a1 * st.a1 - K(4) * (st.a0 * st.a0);
    K Sp = K(2) * st.a0.eval(pk) * q + st.a1.eval(pk); // canonical branch S = 2 a0 Q + a1
    st.work = {pk, Sp};

    try {
        if (u2.is_zero()) {
            // H(0) = (pq(u1+u3))^2 is a square; anchor the group at the
            // reciprocal image of (0, pq(u1+u3)), which reproduces the
            // worked example's chain exactly.
            K s0 = pq * u13;
            st.C.emplace(H, K(0), s0, true);
            st.base = {K(0), s0};
        } else {
            if (Sp.is_zero())
                throw std::domain_error(
                    "build_pipeline: the known solution sits on a branch point; "
                    "choose different parameters");
            st.C.emplace(H, pk, Sp, false);
            st.base = st.work;
            K ip = K(1) / pk;
            K Sv = K(2) * st.a0.eval(ip) / q + st.a1.eval(ip);
            st.work = {ip, Sv};
        }
    } catch (const std::domain_error&) {
        throw std::domain_error("build_pipeline: degenerate curve, choose different parameters");
    }
    if (!st.C->contains(st.work))
        throw std::logic_error("build_pipeline: working point not on the curve");
    return st;
}

} // namespace detail

inline PipelineState<Rat> build_pipeline(int i, int n, std::vector<Rat> t, const Rat& p,
                                         const Rat& q0) {
    return detail::build_pipeline_impl<Rat>(i, n, std::move(t), p, q0);
}

inline PipelineState<RatFun> build_pipeline_symbolic(int i, int n, std::vector<Rat> t,
                                                     const Rat& p) {
    return detail::build_pipeline_impl<RatFun>(i, n, std::move(t), p, RatFun::var());
}

// Q solving a0(P) Q^2 + a1(P) Q + a0(P) = 0 from a square root S of H(P).
template <class K>
K solve_Q(const PipelineState<K>& st, const K& P, const K& S) {
    K a0P = st.a0.eval(P);
    if (a0P.is_zero()) throw std::domain_error("solve_Q: a0(P) = 0");
    K Q = (S - st.a1.eval(P)) / (K(2) * a0P);
    if (!(a0P * Q * Q + st.a1.eval(P) * Q + a0P).is_zero())
        throw std::logic_error("solve_Q: root check failed");
    return Q;
}

template <class K>
struct ChainResult {
    std::vector<SolutionTuple<K>> solutions;
    std::vector<std::pair<long, std::string>> skipped; // (index j, reason)
};

namespace detail {

template <class K>
SolutionTuple<K> assemble_chain_solution(const PipelineState<K>& st, const K& P, const K& Q,
                                         long j) {
    std::vector<K> vals;
    for (const auto& ti : st.t) vals.push_back(K(ti));
    vals.push_back(P);
    vals.push_back(Q);
    for (const auto& ti : st.t) vals.push_back(K(ti).reciprocal());
    vals.push_back(K(1) / P);
    vals.push_back(K(1) / Q);
    SolutionTuple<K> sol;
    sol.spec = SystemSpec<K>::symmetric(st.n, st.i, st.target_a, st.target_a, K(1));
    sol.values = std::move(vals);
    sol.method = "chain";
    sol.params = {{"i", std::to_string(st.i)},
                  {"n", std::to_string(st.n)},
                  {"p", st.p.str()},
                  {"j", std::to_string(j)}};
    return certify(std::move(sol));
}

inline bool certified_infinite_order(const EllipticCurve<RatFun>& E, const ECPoint<RatFun>& W) {
    return torsion_certificate(E, W).kind == TorsionKind::InfiniteOrder;
}

inline bool certified_infinite_order(const EllipticCurve<Rat>& E, const ECPoint<Rat>& W) {
    return !W.infinity && mazur_check(E, W).infinite;
}

} // namespace detail

// Solutions from the multiples [j] of the working point, j = 2 .. count+1.
// Indices whose pullback lands in the exceptional set (or produces a zero
// entry) are skipped and logged. Coefficient sizes grow quadratically with
// the chain length (point heights), so counts beyond the default cap must be
// requested explicitly.
template <class K>
ChainResult<K> gen_symmetric_chain(const PipelineState<K>& st, int count, int cap = 12) {
    ChainResult<K> out;
    if (count <= 0) return out;
    if (count > cap)
        throw std::domain_error(
            "gen_symmetric_chain: count exceeds the chain-length cap; raise the cap explicitly");

    if (st.degenerate_free) {
        // The constraint is vacuous: any nonzero (P, Q) works. Emit a simple
        // deterministic family.
        for (long j = 2; j <= count + 1; ++j) {
            K P = K(st.p) + K(j);
            if (P.is_zero()) P = P + K(1);
            out.solutions.push_back(detail::assemble_chain_solution(st, P, st.q, j));
        }
        return out;
    }

    const QuarticModel<K>& C = *st.C;
    BirationalPair<K> maps(C);

    // The working point and its involution/reciprocal images are all known
    // rational solutions of the same equation; under rational specialization
    // the first candidate can land on torsion (the (p,q)- and
    // (1/p,1/q)-solutions differ by a two-torsion class when the base is the
    // (p,q)-point), so take the first candidate that certifies.
    std::vector<QuarticPoint<K>> candidates{st.work, QuarticPoint<K>{st.work.P, -st.work.S}};
    if (!st.work.P.is_zero()) {
        candidates.push_back(C.nu(st.work));
        candidates.push_back(C.nu(QuarticPoint<K>{st.work.P, -st.work.S}));
    }
    ECPoint<K> W = ECPoint<K>::at_infinity();
    bool certified = false;
    for (const auto& cand : candidates) {
        if (!C.contains(cand)) continue;
        try {
            ECPoint<K> img = detail::to_curve(C, maps, cand);
            if (detail::certified_infinite_order(maps.curve(), img)) {
                W = img;
                certified = true;
                break;
            }
        } catch (const exceptional_point_error&) {
        }
    }
    if (!certified)
        throw std::domain_error(
            "gen_symmetric_chain: cannot certify infinite order; supply different parameters");

    for (long j = 2; j <= count + 1; ++j) {
        try {
            ECPoint<K> Zj = maps.curve().mul(j, W);
            QuarticPoint<K> ptj = detail::from_curve(C, maps, Zj);
            if (ptj.P.is_zero()) {
                out.skipped.push_back({j, "P = 0"});
                continue;
            }
            if (st.a0.eval(ptj.P).is_zero()) {
                out.skipped.push_back({j, "a0(P) = 0"});
                continue;
            }
            K Qj = solve_Q(st, ptj.P, ptj.S);
            if (Qj.is_zero()) {
                out.skipped.push_back({j, "Q = 0"});
                continue;
            }
            out.solutions.push_back(detail::assemble_chain_solution(st, ptj.P, Qj, j));
        } catch (const exceptional_point_error& e) {
            out.skipped.push_back({j, e.member()});
        }
    }

    // Distinct multiples of a point of infinite order give distinct P values.
    for (size_t a = 0; a < out.solutions.size(); ++a)
        for (size_t b = a + 1; b < out.solutions.size(); ++b)
            if (out.solutions[a].values == out.solutions[b].values)
                throw std::logic_error("gen_symmetric_chain: duplicate chain solutions");
    return out;
}

} // namespace symtuple
