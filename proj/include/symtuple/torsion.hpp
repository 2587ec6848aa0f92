#pragma once

// Order certificates for points on curves over Q(q) and over Q.
//
// Over Q(q): after scaling (X,Y) -> (u^2 X, u^3 Y) to an integral model
// (A, B in Z[q]), a torsion point must have coordinates in Z[q], and with
// Y != 0 must satisfy Y^2 | Delta in Z[q]. Violations certify infinite
// order; the scaling only ever weakens the test, never falsifies it.
//
// Over Q: a rational torsion point has order at most 12, so [k]P = O must
// occur for some k <= 12.

#include "symtuple/poly.hpp"
#include "symtuple/ratfun.hpp"
#include "symtuple/weierstrass.hpp"

#include <string>

namespace symtuple {

enum class TorsionKind { InfiniteOrder, TorsionCandidate, TwoTorsion };

struct TorsionCertificate {
    TorsionKind kind;
    std::string reason;
};

namespace detail {

inline bool integer_coeffs(const UPoly& f) {
    for (const auto& c : f.coeffs())
        if (!c.is_integer()) return false;
    return true;
}

inline mpz_class int_content(const UPoly& f) {
    mpz_class g(0);
    for (const auto& c : f.coeffs()) g = gcd(g, c.num());
    return g;
}

// Divisibility in Z[q]: primitive parts divide in Q[q] (Gauss), contents in Z.
inline bool divides_zq(const UPoly& a, const UPoly& b) {
    if (a.is_zero()) return b.is_zero();
    if (b.is_zero()) return true;
    Rat ca, cb;
    std::vector<mpz_class> pa = detail::zclear(a, &ca);
    std::vector<mpz_class> pb = detail::zclear(b, &cb);
    mpz_class na = ca.num(), nb = cb.num();
    if (!mpz_divisible_p(nb.get_mpz_t(), na.get_mpz_t())) return false;
    std::vector<Rat> ra(pa.size()), rb(pb.size());
    for (size_t i = 0; i < pa.size(); ++i) ra[i] = Rat(pa[i]);
    for (size_t i = 0; i < pb.size(); ++i) rb[i] = Rat(pb[i]);
    auto [q, r] = Poly<Rat>::divrem(UPoly(rb), UPoly(ra));
    (void)q;
    return r.is_zero();
}

} // namespace detail

inline TorsionCertificate torsion_certificate(const EllipticCurve<RatFun>& E,
                                              const ECPoint<RatFun>& P) {
    if (!E.contains(P)) throw std::domain_error("torsion_certificate: point not on curve");
    if (P.infinity) return {TorsionKind::TorsionCandidate, "identity"};

    // Scale to an integral model: u = c * D with D the lcm of coefficient
    // denominators and c an integer clearing the remaining contents.
    UPoly D = E.A().den();
    {
        UPoly g = gcd(D, E.B().den());
        D = Poly<Rat>::divrem(D * E.B().den(), g).first.monic();
    }
    RatFun Df(D);
    RatFun A1 = E.A() * Df.pow(4);
    RatFun B1 = E.B() * Df.pow(6);
    if (!A1.is_polynomial() || !B1.is_polynomial())
        throw std::logic_error("torsion_certificate: model could not be scaled");
    mpz_class c(1);
    for (const auto& x : A1.num().coeffs()) c = lcm(c, x.den());
    for (const auto& x : B1.num().coeffs()) c = lcm(c, x.den());
    RatFun u = Df * RatFun(Rat(c));
    UPoly A = (E.A() * u.pow(4)).num();
    UPoly B = (E.B() * u.pow(6)).num();
    if (!detail::integer_coeffs(A) || !detail::integer_coeffs(B))
        throw std::logic_error("torsion_certificate: scaling failed to clear contents");

    RatFun Xs = P.X * u.pow(2);
    RatFun Ys = P.Y * u.pow(3);
    if (!Xs.is_polynomial() || !detail::integer_coeffs(Xs.num()) || !Ys.is_polynomial() ||
        !detail::integer_coeffs(Ys.num()))
        return {TorsionKind::InfiniteOrder, "non-polynomial coordinate"};
    if (Ys.is_zero()) return {TorsionKind::TwoTorsion, "Y = 0"};

    UPoly delta = (UPoly{Rat(4)} * A * A * A + UPoly{Rat(27)} * B * B) * Rat(-16);
    UPoly y2 = Ys.num() * Ys.num();
    if (!detail::divides_zq(y2, delta))
        return {TorsionKind::InfiniteOrder, "Y^2 does not divide Delta"};
    return {TorsionKind::TorsionCandidate, "passes the polynomial and divisibility tests"};
}

struct MazurResult {
    bool infinite;
    int order; // valid when !infinite
};

inline MazurResult mazur_check(const EllipticCurve<Rat>& E, const ECPoint<Rat>& P) {
    if (P.infinity) throw std::domain_error("mazur_check: point at infinity");
    if (!E.contains(P)) throw std::domain_error("mazur_check: point not on curve");
    ECPoint<Rat> acc = P;
    for (int k = 2; k <= 12; ++k) {
        acc = E.add(acc, P);
        if (acc.infinity) return {false, k};
    }
    return {true, 0};
}

} // namespace symtuple
