#pragma once

// Short Weierstrass model Y^2 = X^3 + A X + B over an exact field K of
// characteristic 0 (K = Rat or RatFun), with the chord-tangent group law.
// Every point an operation returns is checked against the curve equation.

#include <stdexcept>
#include <string>

namespace symtuple {

template <class K>
struct ECPoint {
    bool infinity = true;
    K X{0};
    K Y{0};

    static ECPoint at_infinity() { return ECPoint{}; }
    static ECPoint affine(K x, K y) { return ECPoint{false, std::move(x), std::move(y)}; }

    friend bool operator==(const ECPoint& a, const ECPoint& b) {
        if (a.infinity || b.infinity) return a.infinity == b.infinity;
        return a.X == b.X && a.Y == b.Y;
    }
    friend bool operator!=(const ECPoint& a, const ECPoint& b) { return !(a == b); }
};

template <class K>
class EllipticCurve {
  public:
    EllipticCurve(K A, K B) : A_(std::move(A)), B_(std::move(B)) {
        if (discriminant().is_zero())
            throw std::domain_error("EllipticCurve: singular model (discriminant zero)");
    }

    const K& A() const { return A_; }
    const K& B() const { return B_; }

    K discriminant() const {
        K four(4), twentyseven(27);
        return K(-16) * (four * A_ * A_ * A_ + twentyseven * B_ * B_);
    }

    // j = 6912 A^3 / (4 A^3 + 27 B^2); an isomorphism invariant.
    K j_invariant() const {
        K a3 = A_ * A_ * A_;
        return K(6912) * a3 / (K(4) * a3 + K(27) * B_ * B_);
    }

    bool contains(const ECPoint<K>& p) const {
        if (p.infinity) return true;
        return (p.Y * p.Y - (p.X * p.X * p.X + A_ * p.X + B_)).is_zero();
    }

    ECPoint<K> negate(const ECPoint<K>& p) const {
        if (p.infinity) return p;
        return ECPoint<K>::affine(p.X, -p.Y);
    }

    ECPoint<K> add(const ECPoint<K>& p, const ECPoint<K>& q) const {
        require_on_curve(p, "add: first point not on curve");
        require_on_curve(q, "add: second point not on curve");
        ECPoint<K> r = add_unchecked(p, q);
        if (!contains(r)) throw std::logic_error("EllipticCurve: group law left the curve");
        return r;
    }

    // Double-and-add; [0]P = infinity, [-k]P = -[k]P.
    ECPoint<K> mul(long k, const ECPoint<K>& p) const {
        require_on_curve(p, "mul: point not on curve");
        bool neg = k < 0;
        unsigned long n = neg ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
        ECPoint<K> acc = ECPoint<K>::at_infinity();
        ECPoint<K> base = p;
        while (n > 0) {
            if (n & 1UL) acc = add_unchecked(acc, base);
            n >>= 1UL;
            if (n) base = add_unchecked(base, base);
        }
        if (neg) acc = negate(acc);
        if (!contains(acc)) throw std::logic_error("EllipticCurve: group law left the curve");
        return acc;
    }

    friend bool operator==(const EllipticCurve& a, const EllipticCurve& b) {
        return a.A_ == b.A_ && a.B_ == b.B_;
    }

  private:
    void require_on_curve(const ECPoint<K>& p, const char* msg) const {
        if (!contains(p)) throw std::domain_error(std::string("EllipticCurve: ") + msg);
    }

    ECPoint<K> add_unchecked(const ECPoint<K>& p, const ECPoint<K>& q) const {
        if (p.infinity) return q;
        if (q.infinity) return p;
        if (p.X == q.X) {
            if ((p.Y + q.Y).is_zero()) return ECPoint<K>::at_infinity();
            // Tangent: lambda = (3X^2 + A) / (2Y).
            K lambda = (K(3) * p.X * p.X + A_) / (K(2) * p.Y);
            K x3 = lambda * lambda - p.X - q.X;
            K y3 = lambda * (p.X - x3) - p.Y;
            return ECPoint<K>::affine(x3, y3);
        }
        K lambda = (q.Y - p.Y) / (q.X - p.X);
        K x3 = lambda * lambda - p.X - q.X;
        K y3 = lambda * (p.X - x3) - p.Y;
        return ECPoint<K>::affine(x3, y3);
    }

    K A_;
    K B_;
};

} // namespace symtuple
