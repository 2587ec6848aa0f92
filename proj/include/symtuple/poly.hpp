#pragma once

// Dense univariate polynomials over an exact field K (K = Rat or RatFun).
// Coefficients are stored lowest degree first; the zero polynomial has an
// empty coefficient vector and degree -1.

#include "symtuple/rational.hpp"

#include <stdexcept>
#include <vector>

namespace symtuple {

template <class K>
class Poly {
  public:
    Poly() = default;
    Poly(std::initializer_list<K> lowest_first) : c_(lowest_first) { trim(); }
    explicit Poly(std::vector<K> lowest_first) : c_(std::move(lowest_first)) { trim(); }
    explicit Poly(const K& constant) {
        if (!constant.is_zero()) c_.push_back(constant);
    }

    static Poly var() { return Poly(std::vector<K>{K(0), K(1)}); }
    static Poly monomial(const K& coeff, int deg) {
        if (coeff.is_zero()) return Poly();
        std::vector<K> c(static_cast<size_t>(deg) + 1, K(0));
        c.back() = coeff;
        return Poly(std::move(c));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
    bool is_constant() const { return c_.size() <= 1; }

    // Coefficient of x^i (zero beyond the stored range).
    K coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return K(0);
        return c_[static_cast<size_t>(i)];
    }
    const K& lead() const {
        if (is_zero()) throw std::domain_error("Poly: leading coefficient of zero");
        return c_.back();
    }
    const std::vector<K>& coeffs() const { return c_; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly operator-() const {
        Poly r(*this);
        for (auto& x : r.c_) x = -x;
        return r;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<K> c(std::max(a.c_.size(), b.c_.size()), K(0));
        for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
        return Poly(std::move(c));
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<K> c(a.c_.size() + b.c_.size() - 1, K(0));
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        }
        return Poly(std::move(c));
    }
    friend Poly operator*(const Poly& a, const K& s) {
        Poly r(a);
        for (auto& x : r.c_) x = x * s;
        r.trim();
        return r;
    }
    friend Poly operator*(const K& s, const Poly& a) { return a * s; }

    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly pow(int e) const {
        if (e < 0) throw std::domain_error("Poly: negative exponent");
        Poly r{K(1)};
        Poly b(*this);
        while (e > 0) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }

    K eval(const K& x) const {
        K r(0);
        for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
        return r;
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<K> c(c_.size() - 1, K(0));
        for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * K(static_cast<long>(i));
        return Poly(std::move(c));
    }

    // Euclidean division; K must be a field.
    static std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) {
        if (b.is_zero()) throw std::domain_error("Poly: division by zero polynomial");
        Poly r(a);
        std::vector<K> q(a.c_.size() > b.c_.size() ? a.c_.size() - b.c_.size() + 1 : 1, K(0));
        while (!r.is_zero() && r.degree() >= b.degree()) {
            K f = r.lead() / b.lead();
            int d = r.degree() - b.degree();
            q[static_cast<size_t>(d)] = f;
            r -= Poly::monomial(f, d) * b;
        }
        return {Poly(std::move(q)), r};
    }

    Poly monic() const {
        if (is_zero()) return *this;
        return *this * (K(1) / lead());
    }

    // f(x + c) by Horner on the shifted variable.
    Poly taylor_shift(const K& c) const {
        Poly r;
        Poly lin{c, K(1)};
        for (size_t i = c_.size(); i-- > 0;) r = r * lin + Poly(c_[i]);
        return r;
    }

    // x^n * f(1/x) for n >= degree; used for the base-to-infinity inversion.
    Poly reverse(int n) const {
        if (n < degree()) throw std::domain_error("Poly: reverse below degree");
        std::vector<K> c(static_cast<size_t>(n) + 1, K(0));
        for (int i = 0; i <= degree(); ++i) c[static_cast<size_t>(n - i)] = coeff(i);
        return Poly(std::move(c));
    }

  private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<K> c_;
};

using UPoly = Poly<Rat>;

namespace detail {

// Integer-coefficient view of a rational polynomial: primitive part with a
// positive leading coefficient, plus the extracted rational content.
inline std::vector<mpz_class> zclear(const UPoly& f, Rat* content = nullptr) {
    if (f.is_zero()) {
        if (content) *content = Rat(0);
        return {};
    }
    mpz_class den_lcm(1);
    for (const auto& c : f.coeffs()) den_lcm = lcm(den_lcm, c.den());
    std::vector<mpz_class> z;
    z.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) z.push_back(c.num() * (den_lcm / c.den()));
    mpz_class g(0);
    for (const auto& x : z) g = gcd(g, x);
    if (sgn(z.back()) < 0) g = -g;
    for (auto& x : z) x /= g;
    if (content) *content = Rat(g, den_lcm);
    return z;
}

inline int zdeg(const std::vector<mpz_class>& f) { return static_cast<int>(f.size()) - 1; }

inline void ztrim(std::vector<mpz_class>& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

inline mpz_class zpow(const mpz_class& b, long e) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(e));
    return r;
}

// Pseudo-remainder prem(a, b) = lc(b)^(deg a - deg b + 1) * a mod b over Z.
// The full power of lc(b) is applied even when intermediate degrees jump,
// which the subresultant divisions rely on.
inline std::vector<mpz_class> zprem(std::vector<mpz_class> a, const std::vector<mpz_class>& b) {
    int db = zdeg(b);
    const mpz_class& lb = b.back();
    int e = zdeg(a) - db + 1;
    while (!a.empty() && zdeg(a) >= db) {
        int da = zdeg(a);
        mpz_class la = a.back();
        for (auto& x : a) x *= lb;
        for (int i = 0; i <= db; ++i) a[static_cast<size_t>(da - db + i)] -= la * b[static_cast<size_t>(i)];
        ztrim(a);
        --e;
    }
    if (e > 0 && !a.empty()) {
        mpz_class f = zpow(lb, e);
        for (auto& x : a) x *= f;
    }
    return a;
}

inline std::vector<mpz_class> zprimitive(std::vector<mpz_class> f) {
    if (f.empty()) return f;
    mpz_class g(0);
    for (const auto& x : f) g = gcd(g, x);
    if (sgn(f.back()) < 0) g = -g;
    for (auto& x : f) x /= g;
    return f;
}

} // namespace detail

// Monic GCD via the subresultant polynomial remainder sequence (Knuth 4.6.1C)
// run over the integer-cleared polynomials; keeps intermediate coefficients
// from exploding on the degree-20+ inputs the symbolic curves produce.
inline UPoly gcd(const UPoly& f, const UPoly& g) {
    if (f.is_zero()) return g.monic();
    if (g.is_zero()) return f.monic();
    std::vector<mpz_class> u = detail::zclear(f);
    std::vector<mpz_class> v = detail::zclear(g);
    if (detail::zdeg(u) < detail::zdeg(v)) std::swap(u, v);
    mpz_class h(1), gg(1);
    while (true) {
        long delta = detail::zdeg(u) - detail::zdeg(v);
        std::vector<mpz_class> r = detail::zprem(u, v);
        if (r.empty()) break;
        if (detail::zdeg(r) == 0) {
            v = {mpz_class(1)};
            break;
        }
        u = v;
        mpz_class div = gg * detail::zpow(h, delta);
        for (auto& x : r) x /= div;
        v = r;
        gg = u.back();
        if (delta >= 1) h = detail::zpow(gg, delta) / detail::zpow(h, delta - 1);
    }
    v = detail::zprimitive(v);
    std::vector<Rat> c;
    c.reserve(v.size());
    for (const auto& x : v) c.push_back(Rat(x));
    return UPoly(std::move(c)).monic();
}

// Resultant over a field via the Euclidean remainder sequence.
template <class K>
K resultant(const Poly<K>& f, const Poly<K>& g) {
    if (f.is_zero() || g.is_zero()) return K(0);
    Poly<K> a = f, b = g;
    K res(1);
    bool flip = false;
    while (b.degree() > 0) {
        auto [q, r] = Poly<K>::divrem(a, b);
        (void)q;
        int da = a.degree(), db = b.degree();
        int dr = r.is_zero() ? -1 : r.degree();
        if ((da & 1) && (db & 1)) flip = !flip;
        if (r.is_zero()) return K(0);
        K lb = b.lead();
        K lpow(1);
        for (int i = 0; i < da - dr; ++i) lpow = lpow * lb;
        res = res * lpow;
        a = b;
        b = r;
    }
    // b is a nonzero constant here: Res(a, const) = const^deg(a).
    K lb = b.coeff(0);
    K lpow(1);
    for (int i = 0; i < a.degree(); ++i) lpow = lpow * lb;
    res = res * lpow;
    return flip ? -res : res;
}

// disc(f) = (-1)^(d(d-1)/2) Res(f, f') / lc(f).
template <class K>
K discriminant(const Poly<K>& f) {
    int d = f.degree();
    if (d < 1) throw std::domain_error("Poly: discriminant needs degree >= 1");
    K r = resultant(f, f.derivative()) / f.lead();
    return ((d * (d - 1) / 2) % 2 == 0) ? r : -r;
}

} // namespace symtuple
