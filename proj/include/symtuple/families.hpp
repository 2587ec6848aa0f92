#pragma once

// Closed-form parametrized families for the power-sum systems with exponents
// (1,2,3), (1,2,4), (-1,1,2) on 4-tuples and (2,4) on triples, the positivity
// windows of the (1,2,3) family, padding lifts to longer tuples, and scaling
// of rational families to primitive integer families.

#include "symtuple/rational.hpp"
#include "symtuple/solution.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace symtuple {

using RatSolution = SolutionTuple<Rat>;

// s1 = a, s2 = (3a^2 + d^2)/8, s3 = a(5a^2 + 3d^2)/32.
inline RatSolution family_123(const Rat& a, const Rat& d, const Rat& t) {
    if (a.is_zero()) throw std::domain_error("family_123: a must be nonzero");
    Rat den = t * t + Rat(16);
    Rat x1 = Rat(2) * (Rat(4) * a - d * t) / den;
    Rat x2 = t * (a * t + Rat(4) * d) / (Rat(2) * den);
    Rat x3 = (t + Rat(4)) * ((a - d) * t + Rat(4) * (a + d)) / (Rat(4) * den);
    Rat x4 = (t - Rat(4)) * ((a + d) * t + Rat(4) * (d - a)) / (Rat(4) * den);
    RatSolution sol;
    sol.spec = SystemSpec<Rat>::power(
        4, {1, 2, 3},
        {a, (Rat(3) * a * a + d * d) / Rat(8), a * (Rat(5) * a * a + Rat(3) * d * d) / Rat(32)});
    sol.values = {x1, x2, x3, x4};
    sol.method = "family_123";
    sol.params = {{"a", a.str()}, {"d", d.str()}, {"t", t.str()}};
    return certify(std::move(sol));
}

// s1 = a, s2 = (2a^2 + d^2)/2, s4 = (8a^4 + d^4)/8.
inline RatSolution family_124(const Rat& a, const Rat& d, const Rat& t) {
    if (a.is_zero()) throw std::domain_error("family_124: a must be nonzero");
    Rat den = t * t + Rat(3);
    Rat x1 = Rat(-2) * d * t / den;
    Rat x2 = d * (t - Rat(1)) * (t + Rat(3)) / (Rat(2) * den);
    Rat x3 = -x1 - x2;
    Rat x4 = a;
    RatSolution sol;
    sol.spec = SystemSpec<Rat>::power(4, {1, 2, 4},
                                      {a, (Rat(2) * a * a + d * d) / Rat(2),
                                       (Rat(8) * a.pow(4) + d.pow(4)) / Rat(8)});
    sol.values = {x1, x2, x3, x4};
    sol.method = "family_124";
    sol.params = {{"a", a.str()}, {"d", d.str()}, {"t", t.str()}};
    return certify(std::move(sol));
}

// s_{-1} = a, s1 = b, s2 = (2 - 2ab + a^2 b^2)/a^2.
inline RatSolution family_m112(const Rat& a, const Rat& b, const Rat& t) {
    if (a.is_zero()) throw std::domain_error("family_m112: a must be nonzero");
    if (b.is_zero()) throw std::domain_error("family_m112: b must be nonzero");
    if (a * b == Rat(1))
        throw std::domain_error("family_m112: ab = 1 makes x1, x2, x3 zero");
    if (t.is_zero()) throw std::domain_error("family_m112: t = 0 makes x2 and x3 zero");
    if (t == Rat(-1)) throw std::domain_error("family_m112: t = -1 makes x1 and x2 zero");
    Rat den = a * (t * t + t + Rat(1));
    Rat x1 = (t + Rat(1)) * (a * b - Rat(1)) / den;
    Rat x2 = t * x1;
    Rat x3 = (Rat(1) - a * b) * t / den;
    Rat x4 = a.reciprocal();
    RatSolution sol;
    sol.spec = SystemSpec<Rat>::power(
        4, {-1, 1, 2}, {a, b, (Rat(2) - Rat(2) * a * b + a * a * b * b) / (a * a)});
    sol.values = {x1, x2, x3, x4};
    sol.method = "family_m112";
    sol.params = {{"a", a.str()}, {"b", b.str()}, {"t", t.str()}};
    return certify(std::move(sol));
}

// Triples with s2 = 2(d^2+d+1) and s4 = 2(d^2+d+1)^2.
inline RatSolution family_24(const Rat& d, const Rat& t) {
    Rat den = t * t - t + Rat(1);
    Rat x1 = (t * t + Rat(2) * d * t - d - Rat(1)) / den;
    Rat x2 = (d * t * t - Rat(2) * (d + Rat(1)) * t + Rat(1)) / den;
    Rat x3 = ((d + Rat(1)) * t * t - Rat(2) * t - d) / den;
    Rat m = d * d + d + Rat(1);
    RatSolution sol;
    sol.spec = SystemSpec<Rat>::power(3, {2, 4}, {Rat(2) * m, Rat(2) * m * m});
    sol.values = {x1, x2, x3};
    sol.method = "family_24";
    sol.params = {{"d", d.str()}, {"t", t.str()}};
    return certify(std::move(sol));
}

struct Interval {
    Rat lo;
    Rat hi;
};

// The two open t-windows on which all four family_123 coordinates are
// strictly positive, for 0 < d < a. Each window is sampled as a sanity check.
inline std::vector<Interval> positivity_window(const Rat& a, const Rat& d) {
    if (!(Rat(0) < d && d < a))
        throw std::domain_error("positivity_window: need 0 < d < a");
    std::vector<Interval> w{{Rat(0), Rat(4) * (a - d) / (a + d)}, {Rat(4), Rat(4) * a / d}};
    for (const auto& iv : w) {
        for (int k = 1; k <= 3; ++k) {
            Rat t = iv.lo + (iv.hi - iv.lo) * Rat(k, 4);
            for (const auto& x : family_123(a, d, t).values)
                if (!(Rat(0) < x))
                    throw std::logic_error("positivity_window: sample produced a non-positive value");
        }
    }
    return w;
}

// Append constant padding entries; each constraint target shifts by the
// power sum of the padding at its exponent.
inline RatSolution lift_to_n(const RatSolution& sol, const std::vector<Rat>& padding) {
    if (sol.spec.kind != SystemKind::PowerTriple)
        throw std::domain_error("lift_to_n: only power systems can be lifted");
    if (padding.empty()) return sol;
    for (long e : sol.spec.exponents)
        if (e < 0)
            for (const auto& p : padding)
                if (p.is_zero())
                    throw std::domain_error("lift_to_n: zero padding entry with negative exponent");
    RatSolution out;
    std::vector<Rat> targets = sol.spec.targets;
    for (size_t k = 0; k < targets.size(); ++k)
        targets[k] += power_sum(sol.spec.exponents[k], padding);
    out.spec = SystemSpec<Rat>::power(sol.spec.n + static_cast<int>(padding.size()),
                                      sol.spec.exponents, std::move(targets));
    out.values = sol.values;
    out.values.insert(out.values.end(), padding.begin(), padding.end());
    out.method = "lift";
    out.params = sol.params;
    out.params["lifted_from"] = sol.method;
    return certify(std::move(out));
}

struct IntegerFamily {
    std::vector<RatSolution> tuples;
    SystemSpec<Rat> spec;    // shared scaled spec
    Rat scale;               // applied to every entry
    mpz_class collective_gcd; // gcd over all entries of all tuples
};

// Scale a list of solutions of one spec to integer tuples by the lcm of all
// denominators, optionally force the exponent-1 sum divisible by a modulus,
// then divide out the largest common factor compatible with that request.
inline IntegerFamily make_integer_family(const std::vector<RatSolution>& sols,
                                         std::optional<mpz_class> divisible_by = std::nullopt) {
    if (sols.empty()) throw std::domain_error("make_integer_family: empty list");
    for (const auto& s : sols)
        if (!(s.spec == sols.front().spec))
            throw std::domain_error("make_integer_family: solutions disagree on the system");
    const auto& spec0 = sols.front().spec;

    std::optional<size_t> sum_slot;
    if (spec0.kind == SystemKind::PowerTriple)
        for (size_t k = 0; k < spec0.exponents.size(); ++k)
            if (spec0.exponents[k] == 1) sum_slot = k;
    if (divisible_by && !sum_slot)
        throw std::domain_error("make_integer_family: no exponent-1 constraint to make divisible");
    if (divisible_by && *divisible_by <= 0)
        throw std::domain_error("make_integer_family: modulus must be positive");

    mpz_class lam(1);
    for (const auto& s : sols)
        for (const auto& x : s.values) lam = lcm(lam, x.den());
    mpz_class factor = divisible_by ? *divisible_by : mpz_class(1);
    mpz_class scale_num = lam * factor;

    mpz_class g(0);
    for (const auto& s : sols)
        for (const auto& x : s.values) g = gcd(g, x.num() * (scale_num / x.den()));
    if (g == 0) g = 1;

    mpz_class gprime = g;
    if (divisible_by) {
        // Largest divisor of g whose removal keeps the sum divisible.
        Rat sum = spec0.targets[*sum_slot] * Rat(scale_num);
        if (!sum.is_integer())
            throw std::logic_error("make_integer_family: scaled sum is not integral");
        mpz_class q = sum.num() / *divisible_by;
        gprime = gcd(g, q);
        if (gprime == 0) gprime = 1;
    }

    Rat scale = Rat(scale_num, gprime);
    IntegerFamily out;
    out.scale = scale;
    out.collective_gcd = g / gprime;

    std::vector<Rat> targets = spec0.targets;
    if (spec0.kind == SystemKind::PowerTriple) {
        for (size_t k = 0; k < targets.size(); ++k)
            targets[k] *= scale.pow(spec0.exponents[k]);
        out.spec = SystemSpec<Rat>::power(spec0.n, spec0.exponents, targets);
    } else {
        targets[0] *= scale.pow(spec0.i);
        targets[1] *= scale.pow(2 * spec0.n - spec0.i);
        targets[2] *= scale.pow(2 * spec0.n);
        out.spec = SystemSpec<Rat>::symmetric(spec0.n, spec0.i, targets[0], targets[1], targets[2]);
    }

    for (const auto& s : sols) {
        RatSolution scaled;
        scaled.spec = out.spec;
        for (const auto& x : s.values) {
            Rat y = x * scale;
            if (!y.is_integer())
                throw std::logic_error("make_integer_family: scaling failed to clear a denominator");
            scaled.values.push_back(y);
        }
        scaled.method = "integerize";
        scaled.params = s.params;
        scaled.params["scale"] = scale.str();
        out.tuples.push_back(certify(std::move(scaled)));
    }
    return out;
}

} // namespace symtuple
