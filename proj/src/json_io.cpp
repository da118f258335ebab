#include "escalier/json_io.hpp"

#include <fstream>
#include <sstream>

#include "escalier/error.hpp"

namespace escalier {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(errc::parse_error, what); }

const Json& require(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + '"');
    return j.at(key);
}

int require_int(const Json& j, const char* what) {
    if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
    return j.get<int>();
}

}  // namespace

Json to_json(const Rational& value) { return value.str(); }

Json to_json(const Exponent& e) {
    Json a = Json::array();
    for (int x : e.entries()) a.push_back(x);
    return a;
}

Json to_json(std::span<const Exponent> exponents) {
    Json a = Json::array();
    for (const auto& e : exponents) a.push_back(to_json(e));
    return a;
}

Json to_json(const Polynomial& f) {
    Json a = Json::array();
    for (const auto& [e, c] : f.terms()) {
        Json term;
        term["exp"] = to_json(e);
        term["coef"] = c.str();
        a.push_back(std::move(term));
    }
    return a;
}

Json to_json(const MonomialOrder& order) {
    Json j;
    j["dimension"] = order.dimension();
    if (!order.name().empty()) j["name"] = order.name();
    Json m = Json::array();
    for (const auto& row : order.matrix()) {
        Json r = Json::array();
        for (long long x : row) r.push_back(x);
        m.push_back(std::move(r));
    }
    j["matrix"] = std::move(m);
    return j;
}

Json to_json(const PointSet& points) {
    Json j;
    j["dimension"] = points.dimension();
    Json a = Json::array();
    for (const auto& p : points.points()) {
        Json coords = Json::array();
        for (const auto& c : p.coordinates()) coords.push_back(c.str());
        a.push_back(std::move(coords));
    }
    j["points"] = std::move(a);
    return j;
}

Json to_json(const FunctionalSet& theta) {
    Json j;
    j["dimension"] = theta.dimension();
    Json sites = Json::array();
    for (const auto& site : theta.sites()) {
        Json s;
        Json coords = Json::array();
        for (const auto& c : site.point.coordinates()) coords.push_back(c.str());
        s["point"] = std::move(coords);
        s["derivatives"] = to_json(std::span<const Exponent>(site.derivatives.exponents()));
        sites.push_back(std::move(s));
    }
    j["sites"] = std::move(sites);
    return j;
}

Json to_json(const OrderIdeal& ideal) {
    Json j;
    j["dimension"] = ideal.dimension();
    j["exponents"] = to_json(std::span<const Exponent>(ideal.exponents()));
    return j;
}

Json to_json(const EscalierResult& result) {
    Json j;
    j["order"] = to_json(result.order);
    j["escalier"] = to_json(std::span<const Exponent>(result.escalier.exponents()));
    j["corners"] = to_json(std::span<const Exponent>(result.corners));
    Json gb = Json::array();
    for (const auto& g : result.groebner) gb.push_back(to_json(g));
    j["groebner"] = std::move(gb);
    return j;
}

Json to_json(const UniquenessVerdict& verdict) {
    Json j;
    j["unique"] = verdict.unique;
    if (verdict.basis)
        j["basis"] = to_json(std::span<const Exponent>(verdict.basis->exponents()));
    if (verdict.witness) {
        Json w;
        w["order_a"] = verdict.witness->order_a;
        w["order_b"] = verdict.witness->order_b;
        w["escalier_a"] =
            to_json(std::span<const Exponent>(verdict.witness->escalier_a.exponents()));
        w["escalier_b"] =
            to_json(std::span<const Exponent>(verdict.witness->escalier_b.exponents()));
        j["witness"] = std::move(w);
    }
    if (verdict.universal_gb) {
        Json gb = Json::array();
        for (const auto& g : *verdict.universal_gb) gb.push_back(to_json(g));
        j["universal_gb"] = std::move(gb);
    }
    return j;
}

Json to_json(const CartesianDescription& desc) {
    Json j;
    j["lower_set"] = to_json(std::span<const Exponent>(desc.lower_set.exponents()));
    Json values = Json::array();
    for (const auto& axis : desc.node_values) {
        Json a = Json::array();
        for (const auto& v : axis) a.push_back(v.str());
        values.push_back(std::move(a));
    }
    j["node_values"] = std::move(values);
    return j;
}

Json to_json(const CartesianCheck& check) {
    Json j;
    j["cartesian"] = check.description.has_value();
    if (check.description)
        j["description"] = to_json(*check.description);
    else
        j["failing_axis"] = check.failing_axis;
    return j;
}

Json to_json(const SliceFamily& family) {
    Json j;
    j["axis"] = family.axis;
    Json a = Json::array();
    for (const auto& slice : family.slices) {
        Json s;
        s["value"] = slice.value.str();
        s["projection"] = to_json(slice.projection);
        a.push_back(std::move(s));
    }
    j["slices"] = std::move(a);
    return j;
}

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    bad("rationals must be strings like \"p/q\" (or integers)");
}

Exponent exponent_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) bad("exponent must be a nonempty integer array");
    std::vector<int> entries;
    entries.reserve(j.size());
    for (const auto& x : j) entries.push_back(require_int(x, "exponent entry"));
    return Exponent(std::move(entries));
}

std::vector<Exponent> exponent_list_from_json(const Json& j) {
    if (!j.is_array()) bad("expected an array of exponents");
    std::vector<Exponent> out;
    out.reserve(j.size());
    for (const auto& e : j) out.push_back(exponent_from_json(e));
    return out;
}

Polynomial polynomial_from_json(const Json& j, int dimension_hint) {
    if (!j.is_array()) bad("polynomial must be an array of terms");
    if (j.empty()) {
        if (dimension_hint < 1) bad("cannot infer arity of the zero polynomial");
        return Polynomial(dimension_hint);
    }
    const auto first = exponent_from_json(require(j.front(), "exp"));
    Polynomial f(first.dimension());
    for (const auto& term : j)
        f.add_term(exponent_from_json(require(term, "exp")),
                   rational_from_json(require(term, "coef")));
    return f;
}

MonomialOrder order_from_json(const Json& j) {
    const auto& m = require(j, "matrix");
    if (!m.is_array() || m.empty()) bad("order matrix must be a nonempty array");
    std::vector<std::vector<long long>> rows;
    for (const auto& r : m) {
        if (!r.is_array()) bad("order matrix rows must be arrays");
        std::vector<long long> row;
        for (const auto& x : r) {
            if (!x.is_number_integer()) bad("order matrix entries must be integers");
            row.push_back(x.get<long long>());
        }
        rows.push_back(std::move(row));
    }
    std::string name = j.contains("name") ? j.at("name").get<std::string>() : "";
    return MonomialOrder(std::move(rows), std::move(name));
}

PointSet point_set_from_json(const Json& j) {
    const int d = require_int(require(j, "dimension"), "dimension");
    const auto& pts = require(j, "points");
    if (!pts.is_array()) bad("\"points\" must be an array");
    std::vector<Point> points;
    points.reserve(pts.size());
    for (const auto& p : pts) {
        if (!p.is_array()) bad("each point must be an array of rationals");
        std::vector<Rational> coords;
        coords.reserve(p.size());
        for (const auto& c : p) coords.push_back(rational_from_json(c));
        points.emplace_back(std::move(coords));
    }
    return PointSet(d, std::move(points));
}

FunctionalSet functional_set_from_json(const Json& j) {
    const int d = require_int(require(j, "dimension"), "dimension");
    const auto& sites_json = require(j, "sites");
    if (!sites_json.is_array()) bad("\"sites\" must be an array");
    std::vector<Site> sites;
    for (const auto& s : sites_json) {
        const auto& pt = require(s, "point");
        if (!pt.is_array()) bad("site point must be an array of rationals");
        std::vector<Rational> coords;
        for (const auto& c : pt) coords.push_back(rational_from_json(c));
        auto derivatives = exponent_list_from_json(require(s, "derivatives"));
        sites.push_back(Site{Point(std::move(coords)), OrderIdeal(d, std::move(derivatives))});
    }
    return FunctionalSet(d, std::move(sites));
}

CartesianDescription cartesian_description_from_json(const Json& j) {
    const Json& body = (j.is_object() && j.contains("description")) ? j.at("description") : j;
    auto lower = exponent_list_from_json(require(body, "lower_set"));
    if (lower.empty()) bad("lower set must be nonempty");
    const int d = lower.front().dimension();
    const auto& values_json = require(body, "node_values");
    if (!values_json.is_array()) bad("\"node_values\" must be an array of arrays");
    std::vector<std::vector<Rational>> node_values;
    for (const auto& axis : values_json) {
        if (!axis.is_array()) bad("node values per axis must be an array");
        std::vector<Rational> values;
        for (const auto& v : axis) values.push_back(rational_from_json(v));
        node_values.push_back(std::move(values));
    }
    CartesianDescription desc{OrderIdeal(d, std::move(lower)), std::move(node_values)};
    validate(desc);
    return desc;
}

OrderIdeal order_ideal_from_json(const Json& j) {
    std::vector<Exponent> exps;
    if (j.is_array()) {
        exps = exponent_list_from_json(j);
    } else if (j.is_object()) {
        const char* keys[] = {"exponents", "basis", "escalier", "lower_set"};
        const Json* found = nullptr;
        for (const char* key : keys)
            if (j.contains(key)) {
                found = &j.at(key);
                break;
            }
        if (!found) bad("no exponent list found (expected \"exponents\")");
        exps = exponent_list_from_json(*found);
    } else {
        bad("expected an order ideal");
    }
    int d = 0;
    if (j.is_object() && j.contains("dimension"))
        d = require_int(j.at("dimension"), "dimension");
    else if (!exps.empty())
        d = exps.front().dimension();
    if (d < 1) bad("cannot infer the dimension of an empty order ideal");
    return OrderIdeal(d, std::move(exps));
}

MonomialOrder parse_order_spec(const std::string& spec, int dimension) {
    auto parse_perm = [&](const std::string& body) {
        std::vector<int> perm;
        std::stringstream ss(body);
        std::string item;
        while (std::getline(ss, item, ','))
            try {
                perm.push_back(std::stoi(item));
            } catch (const std::exception&) {
                bad("invalid permutation entry in order spec: " + item);
            }
        if (static_cast<int>(perm.size()) != dimension)
            bad("order spec needs a permutation of 1.." + std::to_string(dimension));
        return perm;
    };

    if (spec == "grevlex") return MonomialOrder::grevlex(dimension);
    if (spec.rfind("lex:", 0) == 0) return MonomialOrder::lex(parse_perm(spec.substr(4)));
    if (spec.rfind("grlex:", 0) == 0) return MonomialOrder::grlex(parse_perm(spec.substr(6)));
    if (spec.rfind("elim:", 0) == 0) {
        int var = 0;
        try {
            var = std::stoi(spec.substr(5));
        } catch (const std::exception&) {
            bad("invalid elimination variable in order spec");
        }
        return MonomialOrder::elimination(var, dimension);
    }
    if (spec.rfind("matrix:", 0) == 0) {
        Json m = Json::parse(spec.substr(7), nullptr, false);
        if (m.is_discarded()) bad("invalid matrix in order spec");
        Json wrapper;
        wrapper["matrix"] = std::move(m);
        auto order = order_from_json(wrapper);
        if (order.dimension() != dimension)
            bad("order matrix dimension does not match the input data");
        return order;
    }
    bad("unknown order spec: " + spec +
        " (expected lex:..., grlex:..., grevlex, elim:i, matrix:[[...]])");
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(errc::io_error, "cannot open " + path);
    Json j = Json::parse(in, nullptr, false);
    if (j.is_discarded()) throw Error(errc::parse_error, "invalid JSON in " + path);
    return j;
}

}  // namespace escalier
