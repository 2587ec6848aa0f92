#pragma once

// Hyperelliptic quartic model S^2 = H(P) (deg H in {3,4}, squarefree) with a
// marked rational base point, the birational transform to a short Weierstrass
// model anchored at the base, Euler's tangent-parabola doubling, and the
// group operation obtained by transporting through the Weierstrass side.
//
// The transform sends the base point to infinity first (T = 1/(P - p0)), so
// the quartic in T has square leading coefficient s0^2, then applies the
// classical osculating-parabola reduction to a cubic. Models built by the
// pipeline with a base at P = 0 on a palindromic H carry a "reciprocal
// anchor": the group there is conjugated by the curve automorphism
// nu(P,S) = (1/P, S/P^2), which is what using that base point as the point
// at infinity amounts to.

#include "symtuple/poly.hpp"
#include "symtuple/weierstrass.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace symtuple {

class exceptional_point_error : public std::domain_error {
  public:
    explicit exceptional_point_error(const std::string& member)
        : std::domain_error("exceptional point: " + member), member_(member) {}
    const std::string& member() const { return member_; }

  private:
    std::string member_;
};

template <class K>
struct QuarticPoint {
    K P{0};
    K S{0};
    friend bool operator==(const QuarticPoint& a, const QuarticPoint& b) {
        return a.P == b.P && a.S == b.S;
    }
    friend bool operator!=(const QuarticPoint& a, const QuarticPoint& b) { return !(a == b); }
};

template <class K>
class QuarticModel {
  public:
    QuarticModel(Poly<K> H, K p0, K s0, bool reciprocal_anchor = false)
        : H_(std::move(H)), p0_(std::move(p0)), s0_(std::move(s0)), recip_(reciprocal_anchor) {
        if (H_.degree() < 3)
            throw std::domain_error("QuarticModel: degenerate curve, choose different parameters");
        if (H_.degree() > 4) throw std::domain_error("QuarticModel: degree exceeds 4");
        if (discriminant(H_).is_zero())
            throw std::domain_error("QuarticModel: singular quartic (disc_P(H) = 0)");
        if (s0_ * s0_ != H_.eval(p0_))
            throw std::domain_error("QuarticModel: base point not on the curve");
        if (recip_) {
            if (!p0_.is_zero())
                throw std::domain_error("QuarticModel: reciprocal anchor needs base at P = 0");
            if (H_.coeff(4) != s0_ * s0_ || !palindromic())
                throw std::domain_error("QuarticModel: reciprocal anchor needs a palindromic quartic");
        }
    }

    const Poly<K>& H() const { return H_; }
    const K& base_P() const { return p0_; }
    const K& base_S() const { return s0_; }
    QuarticPoint<K> base() const { return {p0_, s0_}; }
    bool reciprocal_anchor() const { return recip_; }

    bool contains(const QuarticPoint<K>& pt) const { return (pt.S * pt.S - H_.eval(pt.P)).is_zero(); }

    // nu(P,S) = (1/P, S/P^2); an automorphism exactly when H is palindromic.
    QuarticPoint<K> nu(const QuarticPoint<K>& pt) const {
        if (pt.P.is_zero())
            throw exceptional_point_error("P = 0 has no affine reciprocal image");
        K ip = K(1) / pt.P;
        return {ip, pt.S * ip * ip};
    }

  private:
    bool palindromic() const {
        for (int i = 0; i <= 4; ++i)
            if (H_.coeff(i) != H_.coeff(4 - i)) return false;
        return true;
    }

    Poly<K> H_;
    K p0_, s0_;
    bool recip_;
};

// Forward/backward rational maps between the quartic model and its
// Weierstrass image, anchored at the base point: forward(base) = infinity,
// and backward(forward(pt)) = pt away from the exceptional set.
template <class K>
class BirationalPair {
  public:
    explicit BirationalPair(const QuarticModel<K>& C)
        : p0_(C.base_P()), e_(C.base_S()), H_(C.H()), deg3_branch_(false), E_(K(0), K(1)) {
        if (e_.is_zero()) {
            if (H_.degree() != 3)
                throw std::domain_error("quartic_to_weierstrass: base point is a branch point");
            build_deg3_branch_point();
            return;
        }
        Poly<K> Htil = H_.taylor_shift(p0_).reverse(4);
        K b = Htil.coeff(3), c = Htil.coeff(2), d = Htil.coeff(1), f = Htil.coeff(0);
        K two_e = K(2) * e_;
        alpha_ = b / two_e;
        beta_ = (c - alpha_ * alpha_) / two_e;
        g0_ = d - K(2) * alpha_ * beta_;
        g1_ = f - beta_ * beta_;
        K e2 = e_ * e_;
        c2_ = K(4) * alpha_ * alpha_ - K(16) * e_ * beta_;
        K c1 = K(32) * e_ * alpha_ * g0_ - K(64) * e2 * g1_;
        K c0 = K(64) * e2 * g0_ * g0_;
        K A = c1 - c2_ * c2_ / K(3);
        K B = K(2) * c2_ * c2_ * c2_ / K(27) - c1 * c2_ / K(3) + c0;
        E_ = EllipticCurve<K>(A, B);
    }

    const EllipticCurve<K>& curve() const { return E_; }

    ECPoint<K> forward(const QuarticPoint<K>& pt) const {
        if ((pt.S * pt.S - H_.eval(pt.P)).is_zero() == false)
            throw std::domain_error("forward: point not on the quartic");
        if (deg3_branch_) return forward_deg3(pt);
        if (pt.P == p0_) {
            if (pt.S == e_) return ECPoint<K>::at_infinity();
            // Conjugate (p0, -s0) lands at rho = 0, sigma = -g0.
            return ECPoint<K>::affine(c2_ / K(3), K(-8) * e_ * g0_);
        }
        K T = K(1) / (pt.P - p0_);
        K S1 = pt.S * T * T;
        K rho = S1 + pi(T);
        K sigma = K(4) * e_ * rho * T + K(2) * alpha_ * rho + g0_;
        ECPoint<K> img = ECPoint<K>::affine(K(8) * e_ * rho + c2_ / K(3), K(8) * e_ * sigma);
        if (!E_.contains(img)) throw std::logic_error("forward: image left the Weierstrass curve");
        return img;
    }

    QuarticPoint<K> backward(const ECPoint<K>& z) const {
        if (deg3_branch_) return backward_deg3(z);
        if (z.infinity) return {p0_, e_};
        if (!E_.contains(z)) throw std::domain_error("backward: point not on the Weierstrass curve");
        K rho = (z.X - c2_ / K(3)) / (K(8) * e_);
        K sigma = z.Y / (K(8) * e_);
        K T;
        if (rho.is_zero()) {
            if (sigma == -g0_) return {p0_, -e_};
            if (g0_.is_zero())
                throw exceptional_point_error("rho = 0 with g0 = 0");
            T = -(g1_ / g0_);
        } else {
            T = (sigma - K(2) * alpha_ * rho - g0_) / (K(4) * e_ * rho);
        }
        if (T.is_zero()) throw exceptional_point_error("point above P = infinity");
        K S1 = rho - pi(T);
        K P = p0_ + K(1) / T;
        K S = S1 / (T * T);
        if (!(S * S - H_.eval(P)).is_zero())
            throw std::logic_error("backward: image left the quartic");
        return {P, S};
    }

    std::vector<std::string> exceptional_set() const {
        if (deg3_branch_)
            return {"infinity on E -> base branch point (via two-torsion translation)",
                    "points above P = infinity"};
        return {"infinity on E -> base point", "(c2/3, -8*e*g0) -> base conjugate (p0, -s0)",
                "points above P = infinity (T = 0)"};
    }

  private:
    K pi(const K& T) const { return e_ * T * T + alpha_ * T + beta_; }

    // deg H = 3 with s0 = 0: v^2 = h3 u^3 + h2 u^2 + h1 u after translating
    // the base to u = 0; (X, Y) = (h3 u, h3 v) gives Y^2 = X^3 + h2 X^2 +
    // h1 h3 X, depressed by X -> X - h2/3. The base maps to the two-torsion
    // point tau; composing with translation by tau anchors it at infinity.
    void build_deg3_branch_point() {
        deg3_branch_ = true;
        Poly<K> H0 = H_.taylor_shift(p0_);
        K h3 = H0.coeff(3), h2 = H0.coeff(2), h1 = H0.coeff(1);
        if (!H0.coeff(0).is_zero()) throw std::logic_error("deg3 branch: base not a root");
        d3_h3_ = h3;
        d3_shift_ = h2 / K(3);
        K A = h1 * h3 - h2 * h2 / K(3);
        K B = K(2) * h2 * h2 * h2 / K(27) - h1 * h3 * h2 / K(3);
        E_ = EllipticCurve<K>(A, B);
        tau_ = ECPoint<K>::affine(d3_shift_, K(0));
        if (!E_.contains(tau_)) throw std::logic_error("deg3 branch: tau not on curve");
    }

    ECPoint<K> forward_deg3(const QuarticPoint<K>& pt) const {
        ECPoint<K> raw;
        if (pt.P == p0_ && pt.S.is_zero()) {
            raw = tau_;
        } else {
            K u = pt.P - p0_;
            if (u.is_zero()) throw exceptional_point_error("base conjugate coincides with base");
            raw = ECPoint<K>::affine(d3_h3_ * u + d3_shift_, d3_h3_ * pt.S);
        }
        return E_.add(raw, tau_);
    }

    QuarticPoint<K> backward_deg3(const ECPoint<K>& z) const {
        ECPoint<K> raw = E_.add(z, tau_);
        if (raw.infinity) throw exceptional_point_error("point above P = infinity");
        if (raw == tau_) return {p0_, K(0)};
        K u = (raw.X - d3_shift_) / d3_h3_;
        if (u.is_zero()) throw exceptional_point_error("point above P = infinity");
        K P = p0_ + u;
        K S = raw.Y / d3_h3_;
        if (!(S * S - H_.eval(P)).is_zero())
            throw std::logic_error("backward: image left the quartic");
        return {P, S};
    }

    K p0_, e_;
    Poly<K> H_;
    K alpha_{0}, beta_{0}, g0_{0}, g1_{0}, c2_{0};
    bool deg3_branch_;
    K d3_h3_{0}, d3_shift_{0};
    ECPoint<K> tau_;
    EllipticCurve<K> E_;
};

template <class K>
std::pair<EllipticCurve<K>, BirationalPair<K>> quartic_to_weierstrass(const QuarticModel<K>& C) {
    BirationalPair<K> maps(C);
    return {maps.curve(), maps};
}

namespace detail {

// Transport a quartic point to E, honoring the model's anchor convention.
template <class K>
ECPoint<K> to_curve(const QuarticModel<K>& C, const BirationalPair<K>& maps,
                    const QuarticPoint<K>& pt) {
    if (!C.contains(pt)) throw std::domain_error("quartic point not on the curve");
    return maps.forward(C.reciprocal_anchor() ? C.nu(pt) : pt);
}

template <class K>
QuarticPoint<K> from_curve(const QuarticModel<K>& C, const BirationalPair<K>& maps,
                           const ECPoint<K>& z) {
    if (C.reciprocal_anchor()) {
        if (z.infinity)
            throw exceptional_point_error("group identity corresponds to the anchor at infinity");
        QuarticPoint<K> w = maps.backward(z);
        return C.nu(w);
    }
    return maps.backward(z);
}

} // namespace detail

// k * pt in the group of the model (identity at the model's anchor).
template <class K>
QuarticPoint<K> quartic_mul(const QuarticModel<K>& C, long k, const QuarticPoint<K>& pt) {
    if (k == 1) {
        if (!C.contains(pt)) throw std::domain_error("quartic point not on the curve");
        return pt;
    }
    BirationalPair<K> maps(C);
    ECPoint<K> img = detail::to_curve(C, maps, pt);
    return detail::from_curve(C, maps, maps.curve().mul(k, img));
}

template <class K>
QuarticPoint<K> quartic_add(const QuarticModel<K>& C, const QuarticPoint<K>& a,
                            const QuarticPoint<K>& b) {
    BirationalPair<K> maps(C);
    ECPoint<K> ia = detail::to_curve(C, maps, a);
    ECPoint<K> ib = detail::to_curve(C, maps, b);
    return detail::from_curve(C, maps, maps.curve().add(ia, ib));
}

// Euler's tangent-parabola doubling: a parabola with two-point contact at pt
// and one contact condition at the involution image of the group anchor.
// The product (parabola)^2 - H then has a double root at pt.P; the remaining
// root is the double's P-coordinate and the S-coordinate is the negated
// parabola value there. Matches quartic_mul(C, 2, pt) exactly.
template <class K>
QuarticPoint<K> euler_double(const QuarticModel<K>& C, const QuarticPoint<K>& pt) {
    if (!C.contains(pt)) throw std::domain_error("euler_double: point not on the curve");
    if (pt.S.is_zero()) throw std::domain_error("euler_double: branch point (S = 0)");
    const Poly<K>& H = C.H();
    K p1 = pt.P, s1 = pt.S;
    K slope = H.derivative().eval(p1) / (K(2) * s1);

    K a, b, c;
    if (C.reciprocal_anchor()) {
        // Anchor's involution image is the opposite branch at infinity:
        // match its leading behavior, alpha = -s0.
        if (pt.P == C.base_P())
            throw std::domain_error("euler_double: point coincides with the base");
        a = -C.base_S();
        b = slope - K(2) * a * p1;
        c = s1 - a * p1 * p1 - b * p1;
    } else {
        // Parabola through (p0, -s0) with two-point contact at pt; works for
        // deg H = 3 and 4 alike (the product below is then a quartic with
        // roots {p1, p1, p0, p'}).
        K p0 = C.base_P(), s0 = C.base_S();
        if (p1 == p0)
            throw std::domain_error("euler_double: point coincides with the base fiber");
        K d = p1 - p0;
        a = (slope - (s1 + s0) / d) / d;
        b = slope - K(2) * a * p1;
        c = s1 - a * p1 * p1 - b * p1;
    }

    Poly<K> par{c, b, a};
    Poly<K> G = par * par - H;
    K pprime;
    if (C.reciprocal_anchor()) {
        if (G.degree() < 3 || G.coeff(3).is_zero())
            throw std::domain_error("euler_double: remaining intersection is at infinity");
        pprime = -(G.coeff(2) / G.coeff(3)) - K(2) * p1;
    } else {
        if (G.degree() < 4 || G.coeff(4).is_zero())
            throw std::domain_error("euler_double: remaining intersection is at infinity");
        pprime = -(G.coeff(3) / G.coeff(4)) - K(2) * p1 - C.base_P();
    }
    QuarticPoint<K> out{pprime, -par.eval(pprime)};
    if (!C.contains(out)) throw std::logic_error("euler_double: result left the curve");
    return out;
}

} // namespace symtuple
