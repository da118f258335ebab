#ifndef ESCALIER_JSON_IO_HPP
#define ESCALIER_JSON_IO_HPP

#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "escalier/cartesian.hpp"
#include "escalier/functionals.hpp"
#include "escalier/moeller.hpp"
#include "escalier/uniqueness.hpp"

namespace escalier {

// All serialization goes through ordered_json so that key order, and hence
// the emitted bytes, are deterministic for identical inputs.
using Json = nlohmann::ordered_json;

Json to_json(const Rational& value);
Json to_json(const Exponent& e);
Json to_json(std::span<const Exponent> exponents);
Json to_json(const Polynomial& f);
Json to_json(const MonomialOrder& order);
Json to_json(const PointSet& points);
Json to_json(const FunctionalSet& theta);
Json to_json(const OrderIdeal& ideal);
Json to_json(const EscalierResult& result);
Json to_json(const UniquenessVerdict& verdict);
Json to_json(const CartesianDescription& desc);
Json to_json(const CartesianCheck& check);
Json to_json(const SliceFamily& family);

Rational rational_from_json(const Json& j);
Exponent exponent_from_json(const Json& j);
std::vector<Exponent> exponent_list_from_json(const Json& j);
Polynomial polynomial_from_json(const Json& j, int dimension_hint = 0);
MonomialOrder order_from_json(const Json& j);
PointSet point_set_from_json(const Json& j);
FunctionalSet functional_set_from_json(const Json& j);
CartesianDescription cartesian_description_from_json(const Json& j);

// Accepts {"dimension":d,"exponents":[...]} as well as a bare [[...]] array
// or any object carrying an exponent list under "exponents", "basis",
// "escalier" or "lower_set" (so outputs of other commands can be fed back).
OrderIdeal order_ideal_from_json(const Json& j);

// "lex:2,3,1" | "grlex:1,2" | "grevlex" | "elim:i" | "matrix:[[...],...]"
MonomialOrder parse_order_spec(const std::string& spec, int dimension);

Json load_json_file(const std::string& path);

}  // namespace escalier

#endif
