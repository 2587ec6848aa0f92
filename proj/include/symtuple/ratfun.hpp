#pragma once

// Elements of the univariate rational function field Q(q). Canonical form:
// denominator monic, gcd(num, den) = 1, zero is 0/1. Equality is structural
// equality of canonical forms.

#include "symtuple/poly.hpp"
#include "symtuple/rational.hpp"

#include <stdexcept>
#include <utility>

namespace symtuple {

class RatFun {
  public:
    RatFun() : num_(), den_{Rat(1)} {}
    RatFun(long n) : num_(Rat(n)), den_{Rat(1)} {}
    RatFun(const Rat& r) : num_(r), den_{Rat(1)} {}
    explicit RatFun(UPoly p) : num_(std::move(p)), den_{Rat(1)} {}
    RatFun(UPoly n, UPoly d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

    static RatFun var() { return RatFun(UPoly::var()); }

    const UPoly& num() const { return num_; }
    const UPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }
    bool is_constant() const { return num_.is_constant() && den_.is_one(); }

    Rat constant() const {
        if (!is_constant()) throw std::domain_error("RatFun: not a constant");
        return num_.coeff(0);
    }

    friend bool operator==(const RatFun& a, const RatFun& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }

    RatFun operator-() const {
        RatFun r(*this);
        r.num_ = -r.num_;
        return r;
    }

    friend RatFun operator+(const RatFun& a, const RatFun& b) {
        return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }
    friend RatFun operator*(const RatFun& a, const RatFun& b) {
        return RatFun(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFun operator/(const RatFun& a, const RatFun& b) {
        if (b.is_zero()) throw std::domain_error("RatFun: division by zero");
        return RatFun(a.num_ * b.den_, a.den_ * b.num_);
    }

    RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
    RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
    RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
    RatFun& operator/=(const RatFun& o) { return *this = *this / o; }

    RatFun reciprocal() const {
        if (is_zero()) throw std::domain_error("RatFun: reciprocal of zero");
        return RatFun(den_, num_);
    }

    RatFun pow(long e) const {
        if (e < 0) return reciprocal().pow(-e);
        RatFun r(1);
        RatFun b(*this);
        while (e > 0) {
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }

    // Substitution q := q0; the denominator must not vanish there.
    Rat eval(const Rat& q0) const {
        Rat d = den_.eval(q0);
        if (d.is_zero()) throw std::domain_error("RatFun: denominator vanishes at q0");
        return num_.eval(q0) / d;
    }

  private:
    void normalize() {
        if (den_.is_zero()) throw std::domain_error("RatFun: zero denominator");
        if (num_.is_zero()) {
            den_ = UPoly{Rat(1)};
            return;
        }
        // A constant on either side leaves nothing to cancel.
        if (!num_.is_constant() && !den_.is_constant()) {
            UPoly g = gcd(num_, den_);
            if (g.degree() > 0) {
                num_ = Poly<Rat>::divrem(num_, g).first;
                den_ = Poly<Rat>::divrem(den_, g).first;
            }
        }
        Rat lc = den_.lead();
        if (!lc.is_one()) {
            num_ = num_ * lc.reciprocal();
            den_ = den_ * lc.reciprocal();
        }
    }

    UPoly num_;
    UPoly den_;
};

} // namespace symtuple
