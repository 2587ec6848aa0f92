#pragma once

// Sparse multivariate polynomials over Rat with graded-lexicographic term
// order. Variables are named; binary operations align operands by variable
// name (union of the two sorted name lists). No zero coefficients are stored.

#include "symtuple/rational.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace symtuple {

struct GrlexLess {
    bool operator()(const std::vector<int>& a, const std::vector<int>& b) const {
        int da = 0, db = 0;
        for (int x : a) da += x;
        for (int x : b) db += x;
        if (da != db) return da < db;
        return a < b;
    }
};

class MPoly {
  public:
    using TermMap = std::map<std::vector<int>, Rat, GrlexLess>;

    MPoly() = default;

    static MPoly constant(const Rat& c) {
        MPoly p;
        if (!c.is_zero()) p.terms_[{}] = c;
        return p;
    }
    static MPoly constant(long c) { return constant(Rat(c)); }

    static MPoly variable(const std::string& name) {
        MPoly p;
        p.vars_ = {name};
        p.terms_[{1}] = Rat(1);
        return p;
    }

    const std::vector<std::string>& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == std::vector<int>(vars_.size(), 0)); }

    Rat constant_value() const {
        if (terms_.empty()) return Rat(0);
        if (!is_constant()) throw std::domain_error("MPoly: not a constant");
        return terms_.begin()->second;
    }

    size_t term_count() const { return terms_.size(); }

    int total_degree() const {
        int d = -1;
        for (const auto& [e, c] : terms_) {
            int t = 0;
            for (int x : e) t += x;
            d = std::max(d, t);
        }
        return d;
    }

    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        int d = -1;
        for (const auto& [e, c] : terms_) {
            int t = 0;
            for (int x : e) t += x;
            if (d < 0) d = t;
            else if (t != d) return false;
        }
        return true;
    }

    friend bool operator==(const MPoly& a, const MPoly& b) {
        MPoly x = a, y = b;
        align(x, y);
        return x.terms_ == y.terms_;
    }
    friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

    MPoly operator-() const {
        MPoly r(*this);
        for (auto& [e, c] : r.terms_) c = -c;
        return r;
    }

    friend MPoly operator+(const MPoly& a, const MPoly& b) {
        MPoly x = a, y = b;
        align(x, y);
        for (const auto& [e, c] : y.terms_) x.add_term(e, c);
        x.strip_unused_vars();
        return x;
    }
    friend MPoly operator-(const MPoly& a, const MPoly& b) { return a + (-b); }

    friend MPoly operator*(const MPoly& a, const MPoly& b) {
        MPoly x = a, y = b;
        align(x, y);
        MPoly r;
        r.vars_ = x.vars_;
        std::vector<int> e(x.vars_.size());
        for (const auto& [ea, ca] : x.terms_) {
            for (const auto& [eb, cb] : y.terms_) {
                for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        }
        r.strip_unused_vars();
        return r;
    }
    friend MPoly operator*(const MPoly& a, const Rat& s) {
        if (s.is_zero()) return MPoly();
        MPoly r(a);
        for (auto& [e, c] : r.terms_) c = c * s;
        return r;
    }
    friend MPoly operator*(const Rat& s, const MPoly& a) { return a * s; }

    MPoly& operator+=(const MPoly& o) { return *this = *this + o; }
    MPoly& operator-=(const MPoly& o) { return *this = *this - o; }
    MPoly& operator*=(const MPoly& o) { return *this = *this * o; }

    MPoly pow(int e) const {
        if (e < 0) throw std::domain_error("MPoly: negative exponent");
        MPoly r = constant(1);
        MPoly b(*this);
        while (e > 0) {
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }

    // Full evaluation; every variable must be assigned. K = Rat or RatFun.
    template <class K>
    K eval(const std::map<std::string, K>& point) const {
        std::vector<const K*> assign;
        assign.reserve(vars_.size());
        for (const auto& v : vars_) {
            auto it = point.find(v);
            if (it == point.end()) throw std::domain_error("MPoly: unassigned variable " + v);
            assign.push_back(&it->second);
        }
        K total(0);
        for (const auto& [e, c] : terms_) {
            K t(c);
            for (size_t i = 0; i < e.size(); ++i)
                for (int k = 0; k < e[i]; ++k) t = t * (*assign[i]);
            total = total + t;
        }
        return total;
    }

    // Substitute a polynomial for one variable.
    MPoly subst(const std::string& name, const MPoly& value) const {
        size_t idx = vars_.size();
        for (size_t i = 0; i < vars_.size(); ++i)
            if (vars_[i] == name) idx = i;
        if (idx == vars_.size()) return *this;
        MPoly r;
        for (const auto& [e, c] : terms_) {
            MPoly t = constant(c);
            for (size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                MPoly base = (i == idx) ? value : variable(vars_[i]);
                t *= base.pow(e[i]);
            }
            r += t;
        }
        return r;
    }
    MPoly subst(const std::string& name, const Rat& value) const {
        return subst(name, constant(value));
    }

    MPoly derivative(const std::string& name) const {
        size_t idx = vars_.size();
        for (size_t i = 0; i < vars_.size(); ++i)
            if (vars_[i] == name) idx = i;
        MPoly r;
        if (idx == vars_.size()) return r;
        r.vars_ = vars_;
        for (const auto& [e, c] : terms_) {
            if (e[idx] == 0) continue;
            std::vector<int> e2 = e;
            e2[idx] -= 1;
            r.add_term(e2, c * Rat(e[idx]));
        }
        r.strip_unused_vars();
        return r;
    }

    int degree_in(const std::string& name) const {
        size_t idx = vars_.size();
        for (size_t i = 0; i < vars_.size(); ++i)
            if (vars_[i] == name) idx = i;
        if (idx == vars_.size()) return is_zero() ? -1 : 0;
        int d = is_zero() ? -1 : 0;
        for (const auto& [e, c] : terms_) d = std::max(d, e[idx]);
        return d;
    }

    // Coefficients of the polynomial viewed as univariate in `name`,
    // lowest degree first; entries are polynomials in the other variables.
    std::vector<MPoly> coeffs_in(const std::string& name) const {
        int d = degree_in(name);
        std::vector<MPoly> out(static_cast<size_t>(std::max(d + 1, 1)));
        if (is_zero()) return out;
        size_t idx = vars_.size();
        for (size_t i = 0; i < vars_.size(); ++i)
            if (vars_[i] == name) idx = i;
        for (const auto& [e, c] : terms_) {
            int k = (idx == vars_.size()) ? 0 : e[idx];
            std::vector<int> e2 = e;
            if (idx != vars_.size()) e2[idx] = 0;
            MPoly t;
            t.vars_ = vars_;
            t.add_term(e2, c);
            t.strip_unused_vars();
            out[static_cast<size_t>(k)] += t;
        }
        return out;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [e, c] = *it;
            if (!first) os << (c.sign() > 0 ? " + " : " - ");
            else if (c.sign() < 0) os << "-";
            first = false;
            Rat ac = c.abs();
            bool any_var = false;
            for (int x : e) any_var |= (x > 0);
            if (!ac.is_one() || !any_var) os << ac.str();
            bool star = !ac.is_one() || !any_var;
            for (size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                if (star) os << "*";
                os << vars_[i];
                if (e[i] > 1) os << "^" << e[i];
                star = true;
            }
        }
        return os.str();
    }

    static void align(MPoly& a, MPoly& b) {
        if (a.vars_ == b.vars_) return;
        std::vector<std::string> u;
        std::set_union(a.vars_.begin(), a.vars_.end(), b.vars_.begin(), b.vars_.end(),
                       std::back_inserter(u));
        a.remap(u);
        b.remap(u);
    }

    // Terms with exponent vectors laid out on a sorted superset of vars().
    TermMap terms_aligned(const std::vector<std::string>& universe) const {
        MPoly copy(*this);
        copy.remap(universe);
        return copy.terms_;
    }

  private:
    void add_term(const std::vector<int>& e, const Rat& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    void remap(const std::vector<std::string>& newvars) {
        std::vector<size_t> pos(vars_.size());
        for (size_t i = 0; i < vars_.size(); ++i) {
            auto it = std::lower_bound(newvars.begin(), newvars.end(), vars_[i]);
            pos[i] = static_cast<size_t>(it - newvars.begin());
        }
        TermMap t;
        for (const auto& [e, c] : terms_) {
            std::vector<int> e2(newvars.size(), 0);
            for (size_t i = 0; i < e.size(); ++i) e2[pos[i]] = e[i];
            t.emplace(std::move(e2), c);
        }
        vars_ = newvars;
        terms_ = std::move(t);
    }

    // Drop variables that no longer occur, keeping the name list canonical.
    void strip_unused_vars() {
        if (vars_.empty()) return;
        std::vector<bool> used(vars_.size(), false);
        for (const auto& [e, c] : terms_)
            for (size_t i = 0; i < e.size(); ++i)
                if (e[i] > 0) used[i] = true;
        if (std::all_of(used.begin(), used.end(), [](bool b) { return b; })) return;
        std::vector<std::string> nv;
        for (size_t i = 0; i < vars_.size(); ++i)
            if (used[i]) nv.push_back(vars_[i]);
        TermMap t;
        for (const auto& [e, c] : terms_) {
            std::vector<int> e2;
            e2.reserve(nv.size());
            for (size_t i = 0; i < e.size(); ++i)
                if (used[i]) e2.push_back(e[i]);
            t.emplace(std::move(e2), c);
        }
        vars_ = std::move(nv);
        terms_ = std::move(t);
    }

    std::vector<std::string> vars_; // sorted ascending
    TermMap terms_;
};

// Exact division G / F when F divides G; nullopt otherwise. Leading-term
// elimination in graded-lex order terminates because the order is
// multiplicative.
inline std::optional<MPoly> try_divide(const MPoly& G, const MPoly& F) {
    if (F.is_zero()) throw std::domain_error("MPoly: division by zero");
    MPoly r = G, q;
    MPoly f = F;
    MPoly::align(r, f);
    while (!r.is_zero()) {
        MPoly rr = r, ff = f;
        MPoly::align(rr, ff);
        const auto& [re, rc] = *rr.terms().rbegin();
        const auto& [fe, fc] = *ff.terms().rbegin();
        std::vector<int> me(re.size());
        for (size_t i = 0; i < re.size(); ++i) {
            me[i] = re[i] - fe[i];
            if (me[i] < 0) return std::nullopt;
        }
        MPoly mono = MPoly::constant(rc / fc);
        for (size_t i = 0; i < me.size(); ++i)
            if (me[i] > 0) mono *= MPoly::variable(rr.vars()[i]).pow(me[i]);
        q += mono;
        r = rr - mono * ff;
    }
    return q;
}

// Fraction-free (Bareiss) determinant; entries live in the polynomial ring,
// every division is exact.
inline MPoly bareiss_det(std::vector<std::vector<MPoly>> m) {
    size_t n = m.size();
    if (n == 0) return MPoly::constant(1);
    MPoly prev = MPoly::constant(1);
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            size_t p = k + 1;
            while (p < n && m[p][k].is_zero()) ++p;
            if (p == n) return MPoly();
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                MPoly num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                auto q = try_divide(num, prev);
                if (!q) throw std::logic_error("bareiss_det: inexact division");
                m[i][j] = std::move(*q);
            }
            m[i][k] = MPoly();
        }
        prev = m[k][k];
    }
    MPoly d = m[n - 1][n - 1];
    return sign < 0 ? -d : d;
}

// Res_var(f, g): determinant of the Sylvester matrix, computed fraction-free.
inline MPoly resultant(const MPoly& f, const MPoly& g, const std::string& var) {
    int m = f.degree_in(var), n = g.degree_in(var);
    if (m <= 0 || n <= 0)
        throw std::domain_error("resultant: both arguments need positive degree in " + var);
    std::vector<MPoly> fc = f.coeffs_in(var);
    std::vector<MPoly> gc = g.coeffs_in(var);
    size_t size = static_cast<size_t>(m + n);
    std::vector<std::vector<MPoly>> s(size, std::vector<MPoly>(size));
    for (int row = 0; row < n; ++row)
        for (int i = 0; i <= m; ++i) s[static_cast<size_t>(row)][static_cast<size_t>(row + i)] = fc[static_cast<size_t>(m - i)];
    for (int row = 0; row < m; ++row)
        for (int i = 0; i <= n; ++i) s[static_cast<size_t>(n + row)][static_cast<size_t>(row + i)] = gc[static_cast<size_t>(n - i)];
    return bareiss_det(std::move(s));
}

// Solve A x = b exactly over Q. Returns one solution (free unknowns set to
// zero) or nullopt when inconsistent.
inline std::optional<std::vector<Rat>> solve_linear(std::vector<std::vector<Rat>> a,
                                                    std::vector<Rat> b) {
    size_t rows = a.size();
    size_t cols = rows ? a[0].size() : 0;
    std::vector<size_t> pivot_col;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && a[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        std::swap(b[p], b[r]);
        Rat inv = a[r][c].reciprocal();
        for (size_t j = c; j < cols; ++j) a[r][j] *= inv;
        b[r] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c].is_zero()) continue;
            Rat f = a[i][c];
            for (size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
            b[i] -= f * b[r];
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (size_t i = r; i < rows; ++i)
        if (!b[i].is_zero()) return std::nullopt;
    std::vector<Rat> x(cols, Rat(0));
    for (size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = b[i];
    return x;
}

// Find a polynomial c with c * F = G by solving for c's coefficients on the
// monomial lattice of total degree deg(G) - deg(F); homogeneous inputs use
// the exact-degree slice, otherwise all monomials up to the bound.
inline std::optional<MPoly> find_cofactor(const MPoly& G, const MPoly& F) {
    if (G.is_zero()) return MPoly();
    if (F.is_zero()) return std::nullopt;
    int degdiff = G.total_degree() - F.total_degree();
    if (degdiff < 0) return std::nullopt;
    std::vector<std::string> vars;
    std::set_union(G.vars().begin(), G.vars().end(), F.vars().begin(), F.vars().end(),
                   std::back_inserter(vars));
    size_t nv = vars.size();
    bool homog = G.is_homogeneous() && F.is_homogeneous();

    std::vector<std::vector<int>> monos;
    std::vector<int> cur(nv, 0);
    auto rec = [&](auto&& self, size_t i, int remaining) -> void {
        if (i == nv) {
            if (!homog || remaining == 0) monos.push_back(cur);
            return;
        }
        for (int e = 0; e <= remaining; ++e) {
            cur[i] = e;
            self(self, i + 1, remaining - e);
        }
        cur[i] = 0;
    };
    if (nv == 0) {
        monos.push_back({});
    } else {
        rec(rec, 0, degdiff);
    }

    // Row index: every monomial appearing in any candidate * F or in G,
    // with exponents laid out on the shared variable universe.
    std::map<std::vector<int>, size_t, GrlexLess> rowof;
    std::vector<MPoly::TermMap> shifted;
    shifted.reserve(monos.size());
    for (const auto& e : monos) {
        MPoly mono = MPoly::constant(Rat(1));
        for (size_t i = 0; i < nv; ++i)
            if (e[i] > 0) mono *= MPoly::variable(vars[i]).pow(e[i]);
        shifted.push_back((mono * F).terms_aligned(vars));
        for (const auto& [me, mc] : shifted.back()) rowof.emplace(me, rowof.size());
    }
    MPoly::TermMap gterms = G.terms_aligned(vars);
    for (const auto& [me, mc] : gterms) rowof.emplace(me, rowof.size());

    size_t rows = rowof.size(), cols = monos.size();
    std::vector<std::vector<Rat>> A(rows, std::vector<Rat>(cols, Rat(0)));
    std::vector<Rat> rhs(rows, Rat(0));
    for (size_t c = 0; c < cols; ++c)
        for (const auto& [me, mc] : shifted[c]) A[rowof[me]][c] = mc;
    for (const auto& [me, mc] : gterms) rhs[rowof[me]] = mc;
    auto sol = solve_linear(std::move(A), std::move(rhs));
    if (!sol) return std::nullopt;
    MPoly c;
    for (size_t i = 0; i < monos.size(); ++i) {
        if ((*sol)[i].is_zero()) continue;
        MPoly mono = MPoly::constant((*sol)[i]);
        for (size_t j = 0; j < nv; ++j)
            if (monos[i][j] > 0) mono *= MPoly::variable(vars[j]).pow(monos[i][j]);
        c += mono;
    }
    if (c * F != G) return std::nullopt;
    return c;
}

} // namespace symtuple
