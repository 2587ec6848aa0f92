// Command-line front end: generate certified tuple families, verify solution
// files, run the exact identity suites, and expose the curve utilities.
// All values are exact rational (or rational-function) strings; JSON in and
// out. Exit codes: 0 success, 1 verification failure, 2 usage or math errors.

#include "symtuple/families.hpp"
#include "symtuple/identities.hpp"
#include "symtuple/io.hpp"
#include "symtuple/pipeline.hpp"
#include "symtuple/quartic.hpp"
#include "symtuple/reference_checks.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace symtuple;
using nlohmann::json;

namespace {

int g_verbosity = 0;

void emit_error(const std::string& code, const std::string& message) {
    json err{{"error", code}, {"message", message}};
    std::cerr << err.dump() << "\n";
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text << "\n";
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << text << "\n";
}

std::vector<Rat> parse_rat_list(const std::string& csv) {
    std::vector<Rat> out;
    std::string item;
    std::istringstream in(csv);
    while (std::getline(in, item, ',')) {
        if (item.empty()) continue;
        out.push_back(io::parse_rat(item));
    }
    return out;
}

template <class K>
std::string csv_values(const std::vector<SolutionTuple<K>>& sols) {
    std::ostringstream os;
    for (const auto& s : sols) {
        for (size_t i = 0; i < s.values.size(); ++i) {
            if (i) os << ",";
            os << io::to_string(s.values[i]);
        }
        os << "\n";
    }
    std::string text = os.str();
    if (!text.empty()) text.pop_back();
    return text;
}

template <class K>
bool all_verify(const std::vector<SolutionTuple<K>>& sols) {
    for (const auto& s : sols)
        if (!verify_solution(s).all_pass) return false;
    return true;
}

struct GenSymArgs {
    int i = 1;
    int n = 2;
    std::string t;
    std::string p = "2";
    std::string q = "symbolic";
    int count = 1;
    int cap = 12;
    std::string output;
    bool csv = false;
};

int run_gen_sym(const GenSymArgs& a) {
    Rat p = io::parse_rat(a.p);
    std::vector<Rat> t = parse_rat_list(a.t);
    if (a.q == "symbolic") {
        auto st = build_pipeline_symbolic(a.i, a.n, t, p);
        auto chain = gen_symmetric_chain(st, a.count, a.cap);
        for (const auto& [j, why] : chain.skipped)
            if (g_verbosity > 0) std::cerr << "skipped multiple " << j << ": " << why << "\n";
        write_output(a.output, a.csv ? csv_values(chain.solutions)
                                     : io::solutions_json(chain.solutions).dump(2));
        return all_verify(chain.solutions) ? 0 : 1;
    }
    auto st = build_pipeline(a.i, a.n, t, p, io::parse_rat(a.q));
    auto chain = gen_symmetric_chain(st, a.count, a.cap);
    for (const auto& [j, why] : chain.skipped)
        if (g_verbosity > 0) std::cerr << "skipped multiple " << j << ": " << why << "\n";
    write_output(a.output,
                 a.csv ? csv_values(chain.solutions) : io::solutions_json(chain.solutions).dump(2));
    return all_verify(chain.solutions) ? 0 : 1;
}

struct GenPowerArgs {
    std::string triple;
    std::string a, b, d;
    std::string t;
    std::string lift;
    bool integerize = false;
    std::string divisible_by;
    std::string output;
    bool csv = false;
};

int run_gen_power(const GenPowerArgs& g) {
    std::vector<Rat> ts = parse_rat_list(g.t);
    if (ts.empty()) throw std::domain_error("gen-power: need at least one --t value");
    auto need = [&](const std::string& v, const char* flag) {
        if (v.empty()) throw std::domain_error(std::string("gen-power: missing --") + flag);
        return io::parse_rat(v);
    };

    std::vector<RatSolution> sols;
    for (const auto& t : ts) {
        if (g.triple == "123")
            sols.push_back(family_123(need(g.a, "a"), need(g.d, "d"), t));
        else if (g.triple == "124")
            sols.push_back(family_124(need(g.a, "a"), need(g.d, "d"), t));
        else if (g.triple == "m112")
            sols.push_back(family_m112(need(g.a, "a"), need(g.b, "b"), t));
        else if (g.triple == "24")
            sols.push_back(family_24(need(g.d, "d"), t));
        else
            throw std::domain_error("gen-power: unknown --triple " + g.triple);
    }
    if (!g.lift.empty()) {
        std::vector<Rat> padding = parse_rat_list(g.lift);
        for (auto& s : sols) s = lift_to_n(s, padding);
    }
    if (g.integerize) {
        std::optional<mpz_class> mod;
        if (!g.divisible_by.empty()) mod = mpz_class(g.divisible_by);
        auto fam = make_integer_family(sols, mod);
        sols = fam.tuples;
    } else if (!g.divisible_by.empty()) {
        throw std::domain_error("gen-power: --divisible-by requires --integerize");
    }
    write_output(g.output, g.csv ? csv_values(sols) : io::solutions_json(sols).dump(2));
    return all_verify(sols) ? 0 : 1;
}

int run_verify(const std::string& file) {
    json doc;
    if (file == "-") {
        std::cin >> doc;
    } else {
        std::ifstream in(file);
        if (!in) throw std::invalid_argument("cannot open file: " + file);
        in >> doc;
    }
    if (doc.is_object()) doc = json::array({doc});
    if (!doc.is_array()) throw std::invalid_argument("expected a JSON array of solutions");

    json report = json::array();
    bool all = true;
    for (size_t idx = 0; idx < doc.size(); ++idx) {
        json entry{{"index", idx}};
        json cons = json::array();
        bool pass = true;
        if (io::solution_json_is_symbolic(doc[idx])) {
            auto sol = io::solution_ratfun_from_json(doc[idx]);
            auto rep = verify_solution(sol);
            pass = rep.all_pass;
            for (const auto& c : rep.constraints) {
                json e{{"name", c.name},
                       {"expected", io::to_string(c.expected)},
                       {"computed", io::to_string(c.computed)},
                       {"pass", c.pass}};
                if (!c.note.empty()) e["note"] = c.note;
                cons.push_back(e);
            }
        } else {
            auto sol = io::solution_rat_from_json(doc[idx]);
            auto rep = verify_solution(sol);
            pass = rep.all_pass;
            for (const auto& c : rep.constraints) {
                json e{{"name", c.name},
                       {"expected", io::to_string(c.expected)},
                       {"computed", io::to_string(c.computed)},
                       {"pass", c.pass}};
                if (!c.note.empty()) e["note"] = c.note;
                cons.push_back(e);
            }
        }
        entry["pass"] = pass;
        entry["constraints"] = cons;
        report.push_back(entry);
        all &= pass;
    }
    std::cout << report.dump(2) << "\n";
    return all ? 0 : 1;
}

int report_results(const std::string& group, const std::vector<IdentityResult>& results) {
    int failures = 0;
    for (const auto& r : results) {
        std::cout << (r.pass ? "PASS " : "FAIL ") << group << "/" << r.name;
        if (!r.pass && !r.detail.empty()) std::cout << "  (" << r.detail << ")";
        std::cout << "\n";
        failures += !r.pass;
    }
    return failures;
}

std::vector<IdentityResult> reciprocal_suite() {
    std::vector<IdentityResult> out;
    std::mt19937_64 rng(20240211);
    std::uniform_int_distribution<long> num(-50, 50);
    std::uniform_int_distribution<long> den(1, 50);
    bool ok = true;
    for (int n = 1; n <= 6 && ok; ++n) {
        for (int i = 0; i <= n && ok; ++i) {
            for (int rep = 0; rep < 40 && ok; ++rep) {
                std::vector<Rat> x;
                for (int k = 0; k < n; ++k) {
                    long a = num(rng);
                    if (a == 0) a = 7;
                    x.push_back(Rat(a, den(rng)));
                }
                ok &= check_reciprocal_identity(i, x).equal;
            }
        }
    }
    out.push_back({"random_rational_tuples", ok, ok ? "" : "identity failed"});

    RatFun q = RatFun::var();
    std::vector<std::vector<RatFun>> symbolic{
        {q},
        {q, q + RatFun(3)},
        {q, (q * q + RatFun(1)) / q, q - RatFun(2)},
    };
    bool sok = true;
    for (const auto& x : symbolic)
        for (int i = 0; i <= static_cast<int>(x.size()); ++i)
            sok &= check_reciprocal_identity(i, x).equal;
    out.push_back({"symbolic_tuples", sok, sok ? "" : "identity failed over Q(q)"});
    return out;
}

std::vector<IdentityResult> expansion_suite() {
    std::vector<IdentityResult> out;
    std::mt19937_64 rng(987654321);
    std::uniform_int_distribution<long> num(-30, 30);
    std::uniform_int_distribution<long> den(1, 30);
    bool ok = true;
    try {
        for (int rep = 0; rep < 200; ++rep) {
            std::uniform_int_distribution<int> len(0, 5);
            int nb = len(rng), ne = len(rng);
            std::vector<Rat> base, extras;
            for (int k = 0; k < nb; ++k) base.push_back(Rat(num(rng), den(rng)));
            for (int k = 0; k < ne; ++k) extras.push_back(Rat(num(rng), den(rng)));
            std::uniform_int_distribution<int> ii(0, nb + ne);
            expansion_coeffs(ii(rng), base, extras); // throws on mismatch
        }
    } catch (const std::logic_error&) {
        ok = false;
    }
    out.push_back({"random_splits", ok, ok ? "" : "expansion disagreed"});
    return out;
}

int run_identities(const std::string& only) {
    int failures = 0;
    bool ran = false;
    if (only.empty() || only == "reciprocal") {
        failures += report_results("reciprocal", reciprocal_suite());
        ran = true;
    }
    if (only.empty() || only == "expansion") {
        failures += report_results("expansion", expansion_suite());
        ran = true;
    }
    if (only.empty() || only == "families") {
        failures += report_results("families", power_family_certificates());
        ran = true;
    }
    if (only.empty() || only == "quartic-battery") {
        failures += report_results("quartic-battery", identity_battery());
        ran = true;
    }
    if (only.empty() || only == "example-curve") {
        failures += report_results("example-curve", reference_pipeline_checks());
        ran = true;
    }
    if (!ran) throw std::domain_error("identities: unknown group " + only);
    return failures ? 1 : 0;
}

struct CurveArgs {
    std::string quartic;
    std::string base;
    std::string field;
    long mul = 0;
    bool has_mul = false;
    std::string point;
    std::string A, B;
    std::string output;
};

template <class K, class Parse>
int run_curve_typed(const CurveArgs& c, Parse parse) {
    if (!c.quartic.empty()) {
        std::vector<std::string> parts;
        std::string item;
        std::istringstream in(c.quartic);
        while (std::getline(in, item, ',')) parts.push_back(item);
        if (parts.size() != 5)
            throw std::domain_error("curve: --quartic needs h4,h3,h2,h1,h0");
        std::vector<K> coeffs; // lowest degree first
        for (size_t k = parts.size(); k-- > 0;) coeffs.push_back(parse(parts[k]));
        std::string bitem;
        std::istringstream bin(c.base);
        std::vector<K> bp;
        while (std::getline(bin, bitem, ',')) bp.push_back(parse(bitem));
        if (bp.size() != 2) throw std::domain_error("curve: --base needs p0,s0");
        QuarticModel<K> C(Poly<K>(coeffs), bp[0], bp[1]);
        BirationalPair<K> maps(C);
        json j;
        j["weierstrass"] = {{"A", io::to_string(maps.curve().A())},
                            {"B", io::to_string(maps.curve().B())}};
        j["j_invariant"] = io::to_string(maps.curve().j_invariant());
        j["exceptional_set"] = maps.exceptional_set();
        j["base_image"] = "infinity";
        write_output(c.output, j.dump(2));
        return 0;
    }
    if (!c.has_mul) throw std::domain_error("curve: need --quartic or --mul");
    EllipticCurve<K> E(parse(c.A), parse(c.B));
    ECPoint<K> P = ECPoint<K>::at_infinity();
    if (!c.point.empty() && c.point != "infinity") {
        std::vector<K> xy;
        std::string item;
        std::istringstream in(c.point);
        while (std::getline(in, item, ',')) xy.push_back(parse(item));
        if (xy.size() != 2) throw std::domain_error("curve: --point needs X,Y");
        P = ECPoint<K>::affine(xy[0], xy[1]);
    }
    ECPoint<K> R = E.mul(c.mul, P);
    write_output(c.output, io::curve_json(E, {R}).dump(2));
    return 0;
}

int run_curve(const CurveArgs& c) {
    if (c.field == "q") {
        return run_curve_typed<RatFun>(c, [](const std::string& s) { return io::parse_ratfun(s); });
    }
    return run_curve_typed<Rat>(c, [](const std::string& s) { return io::parse_rat(s); });
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact constructor and verifier for rational tuple families sharing "
                 "symmetric-polynomial values and power sums"};
    app.require_subcommand(1);

    if (const char* env = std::getenv("SYMTUPLE_VERBOSE")) g_verbosity = std::atoi(env);
    app.add_flag_function("-v,--verbose", [](std::int64_t n) { g_verbosity += static_cast<int>(n); },
                          "increase verbosity");

    GenSymArgs gs;
    auto* cs = app.add_subcommand("gen-sym", "solutions of the symmetric triple system on "
                                             "reciprocal 2n-tuples via curve point chains");
    cs->add_option("--i", gs.i, "index of the symmetric polynomial")->required();
    cs->add_option("--n", gs.n, "half the tuple length")->required();
    cs->add_option("--t", gs.t, "comma-separated n-2 rational parameters");
    cs->add_option("--p", gs.p, "rational parameter p")->required();
    cs->add_option("--q", gs.q, "rational parameter q, or 'symbolic'")->required();
    cs->add_option("--count", gs.count, "number of chain solutions")->required();
    cs->add_option("--cap", gs.cap, "chain-length cap (default 12); long chains grow quickly");
    cs->add_option("--output", gs.output, "output path (default stdout)");
    cs->add_flag("--csv", gs.csv, "emit values only, CSV");

    GenPowerArgs gp;
    auto* cp = app.add_subcommand("gen-power", "closed-form power-sum families");
    cp->add_option("--triple", gp.triple, "123 | 124 | m112 | 24")->required();
    cp->add_option("--a", gp.a, "parameter a");
    cp->add_option("--b", gp.b, "parameter b");
    cp->add_option("--d", gp.d, "parameter d");
    cp->add_option("--t", gp.t, "comma-separated t values, one solution each")->required();
    cp->add_option("--lift", gp.lift, "comma-separated padding entries for longer tuples");
    cp->add_flag("--integerize", gp.integerize, "scale to primitive integer tuples");
    cp->add_option("--divisible-by", gp.divisible_by, "force the sum divisible by this integer");
    cp->add_option("--output", gp.output, "output path (default stdout)");
    cp->add_flag("--csv", gp.csv, "emit values only, CSV");

    std::string verify_file;
    auto* cv = app.add_subcommand("verify", "re-check a solution file constraint by constraint");
    cv->add_option("--file", verify_file, "JSON solution list, '-' for stdin")->required();

    std::string only;
    auto* ci = app.add_subcommand("identities", "run the exact identity suites");
    ci->add_option("--only", only,
                   "reciprocal | expansion | families | quartic-battery | example-curve");

    CurveArgs ca;
    auto* cc = app.add_subcommand("curve", "quartic-to-Weierstrass transform and point multiples");
    cc->add_option("--quartic", ca.quartic, "h4,h3,h2,h1,h0");
    cc->add_option("--base", ca.base, "p0,s0");
    cc->add_option("--field", ca.field, "'q' for coefficients in Q(q); default Q");
    cc->add_option("--mul", ca.mul, "multiply --point by this integer")->each([&](const std::string&) {
        ca.has_mul = true;
    });
    cc->add_option("--point", ca.point, "X,Y or 'infinity'");
    cc->add_option("--A", ca.A, "Weierstrass A");
    cc->add_option("--B", ca.B, "Weierstrass B");
    cc->add_option("--output", ca.output, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return 0; // --help
        emit_error("usage", e.what());
        return 2;
    }

    try {
        if (cs->parsed()) return run_gen_sym(gs);
        if (cp->parsed()) return run_gen_power(gp);
        if (cv->parsed()) return run_verify(verify_file);
        if (ci->parsed()) return run_identities(only);
        if (cc->parsed()) return run_curve(ca);
        emit_error("usage", "no subcommand");
        return 2;
    } catch (const std::invalid_argument& e) {
        emit_error("parse_error", e.what());
        return 2;
    } catch (const std::domain_error& e) {
        emit_error("math_error", e.what());
        return 2;
    } catch (const std::exception& e) {
        emit_error("internal_error", e.what());
        return 2;
    }
}
