#pragma once

// Declarative system descriptions (which symmetric functions must hit which
// targets), solution tuples carrying their certificates, and the verifier
// that recomputes every constraint from scratch.

#include "symtuple/symfun.hpp"

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace symtuple {

enum class SystemKind { SymmetricTriple, PowerTriple };

// SymmetricTriple: sigma_i = a, sigma_{2n-i} = b, sigma_{2n} = c on 2n-tuples.
// PowerTriple: s_{e_j} = target_j on n-tuples (two or three constraints).
template <class K>
struct SystemSpec {
    SystemKind kind;
    int n = 0; // SymmetricTriple: half length; PowerTriple: tuple length
    int i = 0; // SymmetricTriple only
    std::vector<long> exponents; // PowerTriple only
    std::vector<K> targets;

    static SystemSpec symmetric(int n, int i, K a, K b, K c) {
        if (i < 1 || i > n) throw std::domain_error("SystemSpec: need 1 <= i <= n");
        if (c.is_zero()) throw std::domain_error("SystemSpec: product target must be nonzero");
        SystemSpec s;
        s.kind = SystemKind::SymmetricTriple;
        s.n = n;
        s.i = i;
        s.targets = {std::move(a), std::move(b), std::move(c)};
        return s;
    }

    static SystemSpec power(int n, std::vector<long> exps, std::vector<K> targets) {
        if (exps.size() != targets.size() || exps.size() < 2 || exps.size() > 3)
            throw std::domain_error("SystemSpec: need two or three power constraints");
        for (size_t a = 0; a < exps.size(); ++a) {
            if (exps[a] == 0) throw std::domain_error("SystemSpec: exponents must be nonzero");
            for (size_t b = a + 1; b < exps.size(); ++b)
                if (exps[a] == exps[b]) throw std::domain_error("SystemSpec: exponents must be distinct");
        }
        SystemSpec s;
        s.kind = SystemKind::PowerTriple;
        s.n = n;
        s.exponents = std::move(exps);
        s.targets = std::move(targets);
        return s;
    }

    size_t tuple_length() const {
        return kind == SystemKind::SymmetricTriple ? static_cast<size_t>(2 * n)
                                                   : static_cast<size_t>(n);
    }

    std::vector<std::string> constraint_names() const {
        std::vector<std::string> out;
        if (kind == SystemKind::SymmetricTriple) {
            out.push_back("sigma_" + std::to_string(i));
            out.push_back("sigma_" + std::to_string(2 * n - i));
            out.push_back("sigma_" + std::to_string(2 * n));
        } else {
            for (long e : exponents) out.push_back("s_" + std::to_string(e));
        }
        return out;
    }

    // Constraint value recomputed from a raw tuple.
    K evaluate(size_t which, const std::vector<K>& values) const {
        if (kind == SystemKind::SymmetricTriple) {
            int idx = which == 0 ? i : (which == 1 ? 2 * n - i : 2 * n);
            return sigma(idx, values);
        }
        return power_sum(exponents[which], values);
    }

    size_t constraint_count() const { return targets.size(); }

    friend bool operator==(const SystemSpec& a, const SystemSpec& b) {
        return a.kind == b.kind && a.n == b.n && a.i == b.i && a.exponents == b.exponents &&
               a.targets == b.targets;
    }
};

template <class K>
struct SolutionTuple {
    SystemSpec<K> spec;
    std::vector<K> values;
    std::map<std::string, K> certificate;
    std::string method;
    std::map<std::string, std::string> params;
};

template <class K>
struct ConstraintReport {
    std::string name;
    K expected;
    K computed;
    bool pass;
    std::string note; // set when the constraint could not be evaluated
};

template <class K>
struct VerifyReport {
    std::vector<ConstraintReport<K>> constraints;
    bool all_pass = true;
};

// Recomputes every constraint from the raw values; the stored certificate is
// never consulted. Constraints that cannot be evaluated (a zero entry under
// a negative exponent, say) count as failures, not as errors.
template <class K>
VerifyReport<K> verify_solution(const SolutionTuple<K>& sol) {
    VerifyReport<K> rep;
    if (sol.values.size() != sol.spec.tuple_length()) {
        rep.all_pass = false;
        rep.constraints.push_back({"tuple_length", K(static_cast<long>(sol.spec.tuple_length())),
                                   K(static_cast<long>(sol.values.size())), false, ""});
        return rep;
    }
    auto names = sol.spec.constraint_names();
    for (size_t k = 0; k < sol.spec.constraint_count(); ++k) {
        try {
            K computed = sol.spec.evaluate(k, sol.values);
            bool ok = computed == sol.spec.targets[k];
            rep.constraints.push_back({names[k], sol.spec.targets[k], computed, ok, ""});
            rep.all_pass &= ok;
        } catch (const std::domain_error& e) {
            rep.constraints.push_back({names[k], sol.spec.targets[k], K(0), false, e.what()});
            rep.all_pass = false;
        }
    }
    return rep;
}

// Fills in the certificate and self-checks; generators call this last.
template <class K>
SolutionTuple<K> certify(SolutionTuple<K> sol) {
    auto names = sol.spec.constraint_names();
    for (size_t k = 0; k < sol.spec.constraint_count(); ++k)
        sol.certificate[names[k]] = sol.spec.evaluate(k, sol.values);
    auto rep = verify_solution(sol);
    if (!rep.all_pass) {
        std::ostringstream os;
        os << "generator produced an invalid solution:";
        for (const auto& c : rep.constraints)
            if (!c.pass) os << " " << c.name;
        throw std::logic_error(os.str());
    }
    return sol;
}

} // namespace symtuple
