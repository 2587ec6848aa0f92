#pragma once

// Substitution q := q0, taking objects over Q(q) to objects over Q. Errors
// when a denominator vanishes at q0 or the specialized curve is singular.

#include "symtuple/poly.hpp"
#include "symtuple/quartic.hpp"
#include "symtuple/ratfun.hpp"
#include "symtuple/weierstrass.hpp"

namespace symtuple {

inline Rat specialize(const RatFun& f, const Rat& q0) { return f.eval(q0); }

inline Poly<Rat> specialize(const Poly<RatFun>& f, const Rat& q0) {
    std::vector<Rat> c;
    c.reserve(f.coeffs().size());
    for (const auto& x : f.coeffs()) c.push_back(x.eval(q0));
    return Poly<Rat>(std::move(c));
}

inline EllipticCurve<Rat> specialize(const EllipticCurve<RatFun>& E, const Rat& q0) {
    Rat A = E.A().eval(q0);
    Rat B = E.B().eval(q0);
    if ((Rat(4) * A * A * A + Rat(27) * B * B).is_zero())
        throw std::domain_error("specialize: singular specialization");
    return EllipticCurve<Rat>(A, B);
}

inline ECPoint<Rat> specialize(const ECPoint<RatFun>& P, const Rat& q0) {
    if (P.infinity) return ECPoint<Rat>::at_infinity();
    return ECPoint<Rat>::affine(P.X.eval(q0), P.Y.eval(q0));
}

inline QuarticPoint<Rat> specialize(const QuarticPoint<RatFun>& pt, const Rat& q0) {
    return {pt.P.eval(q0), pt.S.eval(q0)};
}

inline QuarticModel<Rat> specialize(const QuarticModel<RatFun>& C, const Rat& q0) {
    return QuarticModel<Rat>(specialize(C.H(), q0), C.base_P().eval(q0), C.base_S().eval(q0),
                             C.reciprocal_anchor());
}

} // namespace symtuple
