#pragma once

// Interchange formats. Rationals print as "num/den" (bare numerator when the
// denominator is 1). Rational functions print in the integer-cleared
// primitive form with q as the only symbol, '^' powers, and a single '/'
// between the (parenthesized when compound) numerator and denominator, e.g.
// "(2q^2+9q+2)/(2q)". Polynomials serialize as JSON arrays of
// [coefficient-string, exponent-vector] pairs. Solutions and curves use the
// JSON shapes produced below; a "field" tag ("Q" or "Q(q)") selects the
// scalar domain.

#include "symtuple/mpoly.hpp"
#include "symtuple/ratfun.hpp"
#include "symtuple/solution.hpp"
#include "symtuple/weierstrass.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace symtuple::io {

using nlohmann::json;

Rat parse_rat(const std::string& s);
RatFun parse_ratfun(const std::string& s);

std::string to_string(const Rat& r);
std::string to_string(const RatFun& f);

json poly_json(const UPoly& f);
UPoly poly_from_json(const json& j);
json mpoly_json(const MPoly& f);
MPoly mpoly_from_json(const json& j);

json values_json(const std::vector<Rat>& v);
json values_json(const std::vector<RatFun>& v);

json spec_json(const SystemSpec<Rat>& s);
json spec_json(const SystemSpec<RatFun>& s);
json solution_json(const SolutionTuple<Rat>& s);
json solution_json(const SolutionTuple<RatFun>& s);
json solutions_json(const std::vector<SolutionTuple<Rat>>& v);
json solutions_json(const std::vector<SolutionTuple<RatFun>>& v);

SolutionTuple<Rat> solution_rat_from_json(const json& j);
SolutionTuple<RatFun> solution_ratfun_from_json(const json& j);
bool solution_json_is_symbolic(const json& j);

json curve_json(const EllipticCurve<Rat>& e, const std::vector<ECPoint<Rat>>& pts);
json curve_json(const EllipticCurve<RatFun>& e, const std::vector<ECPoint<RatFun>>& pts);

} // namespace symtuple::io
