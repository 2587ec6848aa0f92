#pragma once

// Elementary symmetric polynomials and power sums over any exact field K,
// plus the reciprocal-extension identities the tuple constructions rest on.
// Conventions: sigma_0 = 1, sigma_i = 0 for i < 0 and for i > n (including
// the empty tuple, where sigma_0 = 1 and everything else is 0).

#include <array>
#include <stdexcept>
#include <vector>

namespace symtuple {

// One pass of the product expansion prod_j (1 + x_j z); O(n*i) field ops.
template <class K>
K sigma(int i, const std::vector<K>& x) {
    if (i < 0) return K(0);
    if (i == 0) return K(1);
    if (i > static_cast<int>(x.size())) return K(0);
    std::vector<K> c(static_cast<size_t>(i) + 1, K(0));
    c[0] = K(1);
    size_t seen = 0;
    for (const auto& xj : x) {
        ++seen;
        size_t top = std::min(static_cast<size_t>(i), seen);
        for (size_t k = top; k >= 1; --k) c[k] = c[k] + c[k - 1] * xj;
    }
    return c[static_cast<size_t>(i)];
}

// s_e = sum x_j^e, e a nonzero integer; negative e requires nonzero entries.
template <class K>
K power_sum(long e, const std::vector<K>& x) {
    if (e == 0) throw std::domain_error("power_sum: exponent must be nonzero");
    K total(0);
    for (const auto& xj : x) {
        K base = xj;
        long n = e;
        if (n < 0) {
            if (xj.is_zero()) throw std::domain_error("power_sum: zero entry with negative exponent");
            base = xj.reciprocal();
            n = -n;
        }
        K p(1);
        K b = base;
        while (n > 0) {
            if (n & 1) p = p * b;
            b = b * b;
            n >>= 1;
        }
        total = total + p;
    }
    return total;
}

// (x_1,...,x_n) -> (x_1,...,x_n, 1/x_1,...,1/x_n).
template <class K>
std::vector<K> reciprocal_extend(const std::vector<K>& x) {
    std::vector<K> out;
    out.reserve(2 * x.size());
    for (const auto& xj : x) out.push_back(xj);
    for (const auto& xj : x) {
        if (xj.is_zero()) throw std::domain_error("reciprocal_extend: zero entry");
        out.push_back(xj.reciprocal());
    }
    return out;
}

template <class K>
struct ReciprocalReport {
    K lhs;
    K rhs;
    bool equal;
};

// sigma_i of the reciprocal extension equals sigma_{2n-i} of it; this holds
// identically for 0 <= i <= n and nonzero entries.
template <class K>
ReciprocalReport<K> check_reciprocal_identity(int i, const std::vector<K>& x) {
    int n = static_cast<int>(x.size());
    if (i < 0 || i > n) throw std::domain_error("check_reciprocal_identity: need 0 <= i <= n");
    std::vector<K> ext = reciprocal_extend(x);
    K lhs = sigma(i, ext);
    K rhs = sigma(2 * n - i, ext);
    return {lhs, rhs, lhs == rhs};
}

// sigma_i(base || extras) expanded along the extras:
//   sum_k sigma_{i-k}(base) * sigma_k(extras).
// Computes the expansion and checks it against the direct evaluation.
template <class K>
K expansion_coeffs(int i, const std::vector<K>& base, const std::vector<K>& extras) {
    K total(0);
    for (int k = 0; k <= i; ++k) total = total + sigma(i - k, base) * sigma(k, extras);
    std::vector<K> joined = base;
    joined.insert(joined.end(), extras.begin(), extras.end());
    if (total != sigma(i, joined))
        throw std::logic_error("expansion_coeffs: expansion disagrees with direct evaluation");
    return total;
}

// u_k = sigma_{i-k}(T, 1/T) for k = 0..4.
template <class K>
std::array<K, 5> u_coeffs(int i, const std::vector<K>& t) {
    std::vector<K> ext = reciprocal_extend(t);
    std::array<K, 5> u{K(0), K(0), K(0), K(0), K(0)};
    for (int k = 0; k <= 4; ++k) u[static_cast<size_t>(k)] = sigma(i - k, ext);
    return u;
}

} // namespace symtuple
