#include "symtuple/io.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace symtuple::io {

namespace {

[[noreturn]] void parse_fail(const std::string& what, const std::string& input) {
    throw std::invalid_argument("parse error: " + what + " in \"" + input + "\"");
}

// Integer-cleared view of a RatFun: coprime integer-content numerator and
// denominator, denominator leading coefficient positive.
void integer_cleared(const RatFun& f, std::vector<mpz_class>& num, std::vector<mpz_class>& den) {
    mpz_class L(1);
    for (const auto& c : f.num().coeffs()) L = lcm(L, c.den());
    for (const auto& c : f.den().coeffs()) L = lcm(L, c.den());
    auto scale = [&](const UPoly& p) {
        std::vector<mpz_class> out;
        out.reserve(p.coeffs().size());
        for (const auto& c : p.coeffs()) out.push_back(c.num() * (L / c.den()));
        return out;
    };
    num = scale(f.num());
    den = scale(f.den());
    mpz_class g(0);
    for (const auto& x : num) g = gcd(g, x);
    for (const auto& x : den) g = gcd(g, x);
    if (g == 0) g = 1;
    if (sgn(den.back()) < 0) g = -g;
    for (auto& x : num) x /= g;
    for (auto& x : den) x /= g;
}

std::string zpoly_to_string(const std::vector<mpz_class>& c) {
    if (c.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t k = c.size(); k-- > 0;) {
        if (c[k] == 0) continue;
        mpz_class a = c[k];
        if (first) {
            if (a < 0) os << "-";
        } else {
            os << (a < 0 ? "-" : "+");
        }
        first = false;
        mpz_class mag = abs(a);
        if (mag != 1 || k == 0) os << mag.get_str();
        if (k >= 1) {
            os << "q";
            if (k >= 2) os << "^" << k;
        }
    }
    if (first) return "0";
    return os.str();
}

size_t nonzero_terms(const std::vector<mpz_class>& c) {
    size_t n = 0;
    for (const auto& x : c) n += (x != 0);
    return n;
}

// Tokenless recursive-descent parser for the polynomial grammar:
// sum of terms, a term being [integer]['*']['q'['^' nat]], optional parens.
class PolyParser {
  public:
    explicit PolyParser(const std::string& s) : s_(s), pos_(0) {}

    UPoly parse_poly() {
        UPoly p = parse_sum();
        skip_ws();
        if (pos_ != s_.size()) parse_fail("trailing characters", s_);
        return p;
    }

    RatFun parse_ratfun() {
        UPoly num = parse_operand();
        skip_ws();
        if (pos_ == s_.size()) return RatFun(num);
        if (s_[pos_] != '/') parse_fail("expected '/'", s_);
        ++pos_;
        UPoly den = parse_operand();
        skip_ws();
        if (pos_ != s_.size()) parse_fail("trailing characters", s_);
        if (den.is_zero()) parse_fail("zero denominator", s_);
        return RatFun(num, den);
    }

  private:
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    UPoly parse_operand() {
        skip_ws();
        if (eat('(')) {
            UPoly p = parse_sum();
            if (!eat(')')) parse_fail("missing ')'", s_);
            return p;
        }
        return parse_sum_single();
    }

    // A sum without parentheses stops at '/' or ')'.
    UPoly parse_sum_single() { return parse_sum(); }

    UPoly parse_sum() {
        UPoly total;
        bool first = true;
        while (true) {
            skip_ws();
            if (pos_ == s_.size()) break;
            char c = s_[pos_];
            int sign = 1;
            if (c == '+' || c == '-') {
                sign = (c == '-') ? -1 : 1;
                ++pos_;
            } else if (!first) {
                break; // '/' or ')' or end of term list
            }
            total += parse_term(sign);
            first = false;
        }
        if (first) parse_fail("empty polynomial", s_);
        return total;
    }

    UPoly parse_term(int sign) {
        skip_ws();
        if (pos_ == s_.size()) parse_fail("dangling sign", s_);
        mpz_class coeff(1);
        bool saw_number = false;
        if (std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            coeff = mpz_class(s_.substr(start, pos_ - start));
            saw_number = true;
        }
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == '*') {
            ++pos_;
            skip_ws();
        }
        int deg = 0;
        if (pos_ < s_.size() && s_[pos_] == 'q') {
            ++pos_;
            deg = 1;
            skip_ws();
            if (pos_ < s_.size() && s_[pos_] == '^') {
                ++pos_;
                skip_ws();
                if (pos_ == s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
                    parse_fail("missing exponent", s_);
                size_t start = pos_;
                while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
                deg = std::stoi(s_.substr(start, pos_ - start));
                if (deg > 4096) parse_fail("exponent too large", s_);
            }
        } else if (!saw_number) {
            parse_fail("expected a coefficient or q", s_);
        }
        if (sign < 0) coeff = -coeff;
        return UPoly::monomial(Rat(coeff), deg);
    }

    const std::string& s_;
    size_t pos_;
};

template <class K, class Parse>
SolutionTuple<K> solution_from_json_impl(const json& j, Parse parse) {
    SolutionTuple<K> out;
    const json& sp = j.at("spec");
    std::string kind = sp.at("kind").get<std::string>();
    std::vector<K> targets;
    for (const auto& t : sp.at("targets")) targets.push_back(parse(t.get<std::string>()));
    if (kind == "SymmetricTriple") {
        if (targets.size() != 3) throw std::invalid_argument("parse error: need three targets");
        out.spec = SystemSpec<K>::symmetric(sp.at("n").get<int>(), sp.at("i").get<int>(),
                                            targets[0], targets[1], targets[2]);
    } else if (kind == "PowerTriple") {
        std::vector<long> exps;
        for (const auto& e : sp.at("exponents")) exps.push_back(e.get<long>());
        out.spec = SystemSpec<K>::power(sp.at("n").get<int>(), exps, targets);
    } else {
        throw std::invalid_argument("parse error: unknown system kind " + kind);
    }
    for (const auto& v : j.at("values")) out.values.push_back(parse(v.get<std::string>()));
    if (j.contains("certificate"))
        for (auto it = j.at("certificate").begin(); it != j.at("certificate").end(); ++it)
            out.certificate[it.key()] = parse(it.value().template get<std::string>());
    if (j.contains("provenance")) {
        const json& pv = j.at("provenance");
        if (pv.contains("method")) out.method = pv.at("method").get<std::string>();
        if (pv.contains("params"))
            for (auto it = pv.at("params").begin(); it != pv.at("params").end(); ++it)
                out.params[it.key()] = it.value().template get<std::string>();
    }
    return out;
}

template <class K>
json spec_json_impl(const SystemSpec<K>& s) {
    json j;
    j["kind"] = s.kind == SystemKind::SymmetricTriple ? "SymmetricTriple" : "PowerTriple";
    j["n"] = s.n;
    if (s.kind == SystemKind::SymmetricTriple) j["i"] = s.i;
    else j["exponents"] = s.exponents;
    json t = json::array();
    for (const auto& x : s.targets) t.push_back(to_string(x));
    j["targets"] = t;
    return j;
}

template <class K>
json solution_json_impl(const SolutionTuple<K>& s, const char* field) {
    json j;
    j["field"] = field;
    j["spec"] = spec_json_impl(s.spec);
    json vals = json::array();
    for (const auto& v : s.values) vals.push_back(to_string(v));
    j["values"] = vals;
    json cert = json::object();
    for (const auto& [k, v] : s.certificate) cert[k] = to_string(v);
    j["certificate"] = cert;
    json prov;
    prov["method"] = s.method;
    prov["params"] = s.params;
    j["provenance"] = prov;
    return j;
}

template <class K>
json curve_json_impl(const EllipticCurve<K>& e, const std::vector<ECPoint<K>>& pts,
                     const char* field) {
    json j;
    j["field"] = field;
    j["A"] = to_string(e.A());
    j["B"] = to_string(e.B());
    json arr = json::array();
    for (const auto& p : pts) {
        if (p.infinity) arr.push_back("infinity");
        else arr.push_back(json{{"X", to_string(p.X)}, {"Y", to_string(p.Y)}});
    }
    j["points"] = arr;
    return j;
}

} // namespace

Rat parse_rat(const std::string& s) {
    size_t slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(mpz_class(s));
        mpz_class num(s.substr(0, slash));
        mpz_class den(s.substr(slash + 1));
        if (den == 0) parse_fail("zero denominator", s);
        return Rat(num, den);
    } catch (const std::invalid_argument& e) {
        throw;
    } catch (const std::exception&) {
        parse_fail("not a rational", s);
    }
}

RatFun parse_ratfun(const std::string& s) { return PolyParser(s).parse_ratfun(); }

std::string to_string(const Rat& r) { return r.str(); }

std::string to_string(const RatFun& f) {
    std::vector<mpz_class> num, den;
    integer_cleared(f, num, den);
    if (den.size() == 1 && den[0] == 1) return zpoly_to_string(num);
    std::string ns = zpoly_to_string(num);
    std::string ds = zpoly_to_string(den);
    if (nonzero_terms(num) > 1) ns = "(" + ns + ")";
    if (nonzero_terms(den) > 1 || (den.size() > 1 && den.back() != 1)) ds = "(" + ds + ")";
    return ns + "/" + ds;
}

json poly_json(const UPoly& f) {
    json arr = json::array();
    for (int k = 0; k <= f.degree(); ++k) {
        if (f.coeff(k).is_zero()) continue;
        arr.push_back(json::array({f.coeff(k).str(), json::array({k})}));
    }
    return arr;
}

UPoly poly_from_json(const json& j) {
    UPoly out;
    for (const auto& pair : j) {
        Rat c = parse_rat(pair.at(0).get<std::string>());
        int k = pair.at(1).at(0).get<int>();
        out += UPoly::monomial(c, k);
    }
    return out;
}

json mpoly_json(const MPoly& f) {
    json j;
    j["vars"] = f.vars();
    json terms = json::array();
    for (const auto& [e, c] : f.terms()) terms.push_back(json::array({c.str(), e}));
    j["terms"] = terms;
    return j;
}

MPoly mpoly_from_json(const json& j) {
    std::vector<std::string> vars = j.at("vars").get<std::vector<std::string>>();
    MPoly out;
    for (const auto& pair : j.at("terms")) {
        Rat c = parse_rat(pair.at(0).get<std::string>());
        std::vector<int> e = pair.at(1).get<std::vector<int>>();
        if (e.size() != vars.size()) throw std::invalid_argument("parse error: exponent arity");
        MPoly term = MPoly::constant(c);
        for (size_t i = 0; i < vars.size(); ++i)
            if (e[i] > 0) term *= MPoly::variable(vars[i]).pow(e[i]);
        out += term;
    }
    return out;
}

json values_json(const std::vector<Rat>& v) {
    json arr = json::array();
    for (const auto& x : v) arr.push_back(to_string(x));
    return arr;
}

json values_json(const std::vector<RatFun>& v) {
    json arr = json::array();
    for (const auto& x : v) arr.push_back(to_string(x));
    return arr;
}

json spec_json(const SystemSpec<Rat>& s) { return spec_json_impl(s); }
json spec_json(const SystemSpec<RatFun>& s) { return spec_json_impl(s); }

json solution_json(const SolutionTuple<Rat>& s) { return solution_json_impl(s, "Q"); }
json solution_json(const SolutionTuple<RatFun>& s) { return solution_json_impl(s, "Q(q)"); }

json solutions_json(const std::vector<SolutionTuple<Rat>>& v) {
    json arr = json::array();
    for (const auto& s : v) arr.push_back(solution_json(s));
    return arr;
}

json solutions_json(const std::vector<SolutionTuple<RatFun>>& v) {
    json arr = json::array();
    for (const auto& s : v) arr.push_back(solution_json(s));
    return arr;
}

bool solution_json_is_symbolic(const json& j) {
    return j.contains("field") && j.at("field").get<std::string>() == "Q(q)";
}

SolutionTuple<Rat> solution_rat_from_json(const json& j) {
    return solution_from_json_impl<Rat>(j, [](const std::string& s) { return parse_rat(s); });
}

SolutionTuple<RatFun> solution_ratfun_from_json(const json& j) {
    return solution_from_json_impl<RatFun>(j,
                                           [](const std::string& s) { return parse_ratfun(s); });
}

json curve_json(const EllipticCurve<Rat>& e, const std::vector<ECPoint<Rat>>& pts) {
    return curve_json_impl(e, pts, "Q");
}
json curve_json(const EllipticCurve<RatFun>& e, const std::vector<ECPoint<RatFun>>& pts) {
    return curve_json_impl(e, pts, "Q(q)");
}

} // namespace symtuple::io
