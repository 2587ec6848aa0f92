#pragma once

// Exact polynomial identity battery around the quartic-surface analysis of
// the (1,4) and (1,2,3) power-sum systems: the resultant square, the
// factorization on the singular locus, the substituted conics, the singular
// point of the quartic curve, the birational map to its genus-2 sextic model
// (roundtrip and image membership, via exact cofactor solves), the
// restriction factorization, and the doubled-square quartic identity.
// Every check is an exact polynomial statement; failures carry the residual.

#include "symtuple/mpoly.hpp"

#include <string>
#include <vector>

namespace symtuple {

struct IdentityResult {
    std::string name;
    bool pass;
    std::string detail;
};

namespace detail {

inline IdentityResult check_zero(const std::string& name, const MPoly& residual) {
    if (residual.is_zero()) return {name, true, ""};
    return {name, false, "nonzero residual: " + residual.str()};
}

inline IdentityResult check_cofactor(const std::string& name, const MPoly& G, const MPoly& F) {
    auto c = find_cofactor(G, F);
    if (c) return {name, true, "cofactor: " + c->str()};
    return {name, false, "no polynomial cofactor exists"};
}

} // namespace detail

// The elimination polynomial for the (1,2,3) system on 4-tuples, written in
// x1, x2 and the symbolic targets a, b, c.
inline MPoly elimination_F_123() {
    MPoly x1 = MPoly::variable("x1"), x2 = MPoly::variable("x2");
    MPoly a = MPoly::variable("a"), b = MPoly::variable("b"), c = MPoly::variable("c");
    MPoly s1 = x1 + x2, s2 = x1 * x2;
    return a.pow(3) + s1 * (Rat(3) * b - Rat(3) * a * a) - Rat(3) * a * b +
           Rat(6) * a * s1 * s1 - Rat(6) * a * s2 + Rat(2) * c - Rat(6) * s1.pow(3) +
           Rat(12) * s1 * s2;
}

// The projective quartic x^4 + y^4 + z^4 = (1/27)(x+y+z)^4.
inline MPoly quartic_surface_F() {
    MPoly x = MPoly::variable("x"), y = MPoly::variable("y"), z = MPoly::variable("z");
    return x.pow(4) + y.pow(4) + z.pow(4) - Rat(1, 27) * (x + y + z).pow(4);
}

// Symbolic certificates for the closed-form power-sum families: with the
// parameters (and t) as polynomial variables, each family's coordinates are
// fractions over one common denominator, so every certified power sum is an
// exact polynomial identity after clearing it.
inline std::vector<IdentityResult> power_family_certificates() {
    std::vector<IdentityResult> out;
    MPoly a = MPoly::variable("a"), b = MPoly::variable("b"), d = MPoly::variable("d"),
          t = MPoly::variable("t");

    auto powersum = [](const std::vector<MPoly>& nums, int e) {
        MPoly s;
        for (const auto& n : nums) s += n.pow(e);
        return s;
    };

    { // exponents (1,2,3): common denominator 4(t^2+16)
        MPoly D = Rat(4) * (t * t + MPoly::constant(16));
        std::vector<MPoly> N{Rat(8) * (Rat(4) * a - d * t), Rat(2) * t * (a * t + Rat(4) * d),
                             (t + MPoly::constant(4)) * ((a - d) * t + Rat(4) * (a + d)),
                             (t - MPoly::constant(4)) * ((a + d) * t + Rat(4) * (d - a))};
        out.push_back(detail::check_zero("family_123_sum", powersum(N, 1) - a * D));
        out.push_back(detail::check_zero(
            "family_123_squares",
            powersum(N, 2) - Rat(1, 8) * (Rat(3) * a * a + d * d) * D.pow(2)));
        out.push_back(detail::check_zero(
            "family_123_cubes",
            powersum(N, 3) - Rat(1, 32) * a * (Rat(5) * a * a + Rat(3) * d * d) * D.pow(3)));
    }
    { // exponents (1,2,4): common denominator 2(t^2+3)
        MPoly D = Rat(2) * (t * t + MPoly::constant(3));
        MPoly N1 = Rat(-4) * d * t;
        MPoly N2 = d * (t - MPoly::constant(1)) * (t + MPoly::constant(3));
        std::vector<MPoly> N{N1, N2, -N1 - N2, a * D};
        out.push_back(detail::check_zero("family_124_sum", powersum(N, 1) - a * D));
        out.push_back(detail::check_zero(
            "family_124_squares",
            powersum(N, 2) - Rat(1, 2) * (Rat(2) * a * a + d * d) * D.pow(2)));
        out.push_back(detail::check_zero(
            "family_124_fourth_powers",
            powersum(N, 4) - Rat(1, 8) * (Rat(8) * a.pow(4) + d.pow(4)) * D.pow(4)));
    }
    { // exponents (-1,1,2): common denominator a(t^2+t+1)
        MPoly D = a * (t * t + t + MPoly::constant(1));
        MPoly N1 = (t + MPoly::constant(1)) * (a * b - MPoly::constant(1));
        std::vector<MPoly> N{N1, t * N1, (MPoly::constant(1) - a * b) * t,
                             t * t + t + MPoly::constant(1)};
        out.push_back(detail::check_zero("family_m112_sum", powersum(N, 1) - b * D));
        // s_{-1} = a: D * sum over i of prod_{j != i} N_j = a * prod N_j.
        MPoly prod = MPoly::constant(1);
        for (const auto& n : N) prod *= n;
        MPoly cofactors;
        for (size_t i = 0; i < N.size(); ++i) {
            MPoly p = MPoly::constant(1);
            for (size_t j = 0; j < N.size(); ++j)
                if (j != i) p *= N[j];
            cofactors += p;
        }
        out.push_back(
            detail::check_zero("family_m112_reciprocal_sum", D * cofactors - a * prod));
        MPoly cnum = MPoly::constant(2) - Rat(2) * a * b + a * a * b * b; // c = cnum / a^2
        out.push_back(detail::check_zero(
            "family_m112_squares",
            a * a * powersum(N, 2) - cnum * D.pow(2)));
    }
    { // exponents (2,4): common denominator t^2 - t + 1
        MPoly D = t * t - t + MPoly::constant(1);
        MPoly m = d * d + d + MPoly::constant(1);
        std::vector<MPoly> N{t * t + Rat(2) * d * t - d - MPoly::constant(1),
                             d * t * t - Rat(2) * (d + MPoly::constant(1)) * t + MPoly::constant(1),
                             (d + MPoly::constant(1)) * t * t - Rat(2) * t - d};
        out.push_back(
            detail::check_zero("family_24_squares", powersum(N, 2) - Rat(2) * m * D.pow(2)));
        out.push_back(detail::check_zero("family_24_fourth_powers",
                                         powersum(N, 4) - Rat(2) * m * m * D.pow(4)));
    }
    return out;
}

inline std::vector<IdentityResult> identity_battery() {
    std::vector<IdentityResult> out;

    MPoly x1 = MPoly::variable("x1"), x2 = MPoly::variable("x2"), x3 = MPoly::variable("x3");
    MPoly a = MPoly::variable("a"), b = MPoly::variable("b"), c = MPoly::variable("c");
    MPoly x4 = a - x1 - x2 - x3;
    MPoly F1 = x1 * x1 + x2 * x2 + x3 * x3 + x4 * x4 - b;
    MPoly F2 = x1.pow(3) + x2.pow(3) + x3.pow(3) + x4.pow(3) - c;
    MPoly F = elimination_F_123();

    // (1) Res_x3(F1, F2) = F^2, symbolically in a, b, c.
    out.push_back(detail::check_zero("resultant_square", resultant(F1, F2, "x3") - F * F));

    // (2) With c = a(6b - a^2)/8 the elimination polynomial factors.
    MPoly cval = (Rat(6) * a * b - a.pow(3)) * Rat(1, 8);
    MPoly s1 = x1 + x2;
    MPoly conic12 = a * a - Rat(2) * b - Rat(2) * a * s1 + Rat(4) * (x1 * x1 + x2 * x2);
    out.push_back(detail::check_zero(
        "factorization_on_c_locus",
        F.subst("c", cval) - Rat(3, 4) * (a - Rat(2) * s1) * conic12));

    // (3) The substituted forms after x2 = a/2 - x1 (same c).
    MPoly half_a = Rat(1, 2) * a;
    MPoly conic13 = a * a - Rat(2) * b - Rat(2) * a * (x1 + x3) +
                    Rat(4) * x1 * x1 + Rat(4) * x3 * x3;
    out.push_back(detail::check_zero("substituted_conic_first",
                                     F1.subst("x2", half_a - x1) - Rat(1, 2) * conic13));
    out.push_back(detail::check_zero(
        "substituted_conic_second",
        F2.subst("x2", half_a - x1).subst("c", cval) - Rat(3, 8) * a * conic13));

    // (4) [1:1:1] is a singular point of the quartic curve.
    MPoly Fq = quartic_surface_F();
    {
        std::map<std::string, Rat> one{{"x", Rat(1)}, {"y", Rat(1)}, {"z", Rat(1)}};
        bool sing = Fq.eval(one).is_zero() && Fq.derivative("x").eval(one).is_zero() &&
                    Fq.derivative("y").eval(one).is_zero() &&
                    Fq.derivative("z").eval(one).is_zero();
        out.push_back({"singular_point", sing,
                       sing ? "" : "value or a partial derivative is nonzero at [1:1:1]"});
    }

    // The map to the sextic model: (x:y:z) -> (p/r, q/r^3).
    MPoly x = MPoly::variable("x"), y = MPoly::variable("y"), z = MPoly::variable("z");
    MPoly p = Rat(-1, 3) * (x - Rat(2) * y + z);
    MPoly r = Rat(1, 3) * (x + y - Rat(2) * z);
    MPoly xy = x + y;
    MPoly qm = Rat(1, 9) * (Rat(-8) * z.pow(3) + Rat(3) * xy * z * z + Rat(3) * xy * xy * z -
                            xy * (Rat(8) * x * x - Rat(11) * x * y + Rat(8) * y * y));

    // Inverse-map numerators/denominator, cleared by r^3:
    //   x/z = (Y + 3(X-1)(2X^2-X+2)) / (Y + 9X^2 - 9X + 6), X = p/r, Y = q/r^3.
    MPoly Nx = qm + Rat(6) * p.pow(3) - Rat(9) * p * p * r + Rat(9) * p * r * r - Rat(6) * r.pow(3);
    MPoly Ny = qm - Rat(6) * p.pow(3) + Rat(9) * p * p * r - Rat(9) * p * r * r;
    MPoly D = qm + Rat(9) * p * p * r - Rat(9) * p * r * r + Rat(6) * r.pow(3);

    // (5) Roundtrip: both cross-multiplied coordinate identities are exact
    // multiples of the quartic (constant cofactors, found by linear solve).
    out.push_back(detail::check_cofactor("map_roundtrip_x", x * D - z * Nx, Fq));
    out.push_back(detail::check_cofactor("map_roundtrip_y", y * D - z * Ny, Fq));

    // (6) The image satisfies the sextic model
    //   Y^2 = -6x^6 + 18x^5 - 27x^4 + 24x^3 - 27x^2 + 18x - 6
    // after clearing r^6: q^2 - sum_k rhs_k p^k r^(6-k) is a degree-2
    // cofactor multiple of the quartic.
    {
        const long rhs[7] = {-6, 18, -27, 24, -27, 18, -6};
        MPoly img = qm * qm;
        for (int k = 0; k <= 6; ++k) img -= Rat(rhs[k]) * p.pow(k) * r.pow(6 - k);
        out.push_back(detail::check_cofactor("map_image_on_sextic", img, Fq));
    }

    // (7) Restriction to x + y - 2z = 0 factors through (x - y)^2.
    out.push_back(detail::check_zero(
        "restriction_factorization",
        Fq.subst("z", Rat(1, 2) * (x + y)) -
            Rat(1, 8) * (x - y) * (x - y) * (Rat(7) * x * x + Rat(10) * x * y + Rat(7) * y * y)));

    // (8) x^4 + y^4 + (x+y)^4 = 2(x^2 + xy + y^2)^2.
    out.push_back(detail::check_zero(
        "fourth_power_identity",
        x.pow(4) + y.pow(4) + (x + y).pow(4) - Rat(2) * (x * x + x * y + y * y).pow(2)));

    return out;
}

} // namespace symtuple
