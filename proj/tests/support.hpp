#ifndef ESCALIER_TESTS_SUPPORT_HPP
#define ESCALIER_TESTS_SUPPORT_HPP

// Shared test helpers: compact constructors, brute-force oracles that stay
// independent of the library's computation paths, deterministic random
// generators, and the escalier contract checker.

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "escalier/cartesian.hpp"
#include "escalier/error.hpp"
#include "escalier/json_io.hpp"
#include "escalier/moeller.hpp"
#include "escalier/uniqueness.hpp"

namespace testutil {

using escalier::CartesianDescription;
using escalier::EscalierResult;
using escalier::Exponent;
using escalier::FunctionalSet;
using escalier::MonomialOrder;
using escalier::OrderIdeal;
using escalier::Point;
using escalier::PointSet;
using escalier::Polynomial;
using escalier::Rational;
using escalier::RationalMatrix;
using escalier::RationalRow;
using escalier::Site;

inline Exponent E(std::vector<int> v) { return Exponent(std::move(v)); }
inline Rational Q(const std::string& s) { return Rational::parse(s); }

inline Point point(const std::vector<std::string>& coords) {
    std::vector<Rational> c;
    c.reserve(coords.size());
    for (const auto& s : coords) c.push_back(Q(s));
    return Point(std::move(c));
}

inline PointSet points(const std::vector<std::vector<std::string>>& rows) {
    std::vector<Point> pts;
    pts.reserve(rows.size());
    for (const auto& r : rows) pts.push_back(point(r));
    return PointSet(static_cast<int>(rows.front().size()), std::move(pts));
}

inline OrderIdeal ideal(int d, std::vector<std::vector<int>> exps) {
    std::vector<Exponent> out;
    out.reserve(exps.size());
    for (auto& e : exps) out.emplace_back(std::move(e));
    return OrderIdeal(d, std::move(out));
}

inline std::vector<Exponent> exps(std::vector<std::vector<int>> raw) {
    std::vector<Exponent> out;
    out.reserve(raw.size());
    for (auto& e : raw) out.emplace_back(std::move(e));
    return out;
}

// ---- named instances ----------------------------------------------------

// Hermite-type conditions with three sites in F^3; the escalier has eight
// monomials under every canonical elimination order.
inline FunctionalSet hermite_conditions() {
    std::vector<Site> sites;
    sites.push_back(Site{point({"0", "0", "0"}),
                         ideal(3, {{0, 0, 0}, {0, 0, 1}, {0, 1, 0}, {1, 0, 0}, {1, 0, 1}})});
    sites.push_back(Site{point({"1", "0", "0"}), ideal(3, {{0, 0, 0}, {0, 0, 1}})});
    sites.push_back(Site{point({"0", "0", "1"}), ideal(3, {{0, 0, 0}})});
    return FunctionalSet(3, std::move(sites));
}

// A 4-point planar Cartesian set with an L-shaped lower set.
inline PointSet cartesian_four_points() {
    return points({{"2.3", "1.2"}, {"4.7", "1.2"}, {"1.5", "1.2"}, {"2.3", "0.2"}});
}

// A perturbed unit square: not Cartesian, and the quotient basis depends on
// the monomial order.
inline PointSet perturbed_square() {
    return points({{"0", "0"}, {"1.1", "-0.1"}, {"0.1", "0.9"}, {"1", "1"}});
}

// ---- oracles ----------------------------------------------------------

// Corner set by direct enumeration of the bounding box, straight from the
// defining condition.
inline std::vector<Exponent> oracle_corner(const OrderIdeal& O) {
    const int d = O.dimension();
    std::vector<int> cap(d, 1);
    for (const auto& e : O.exponents())
        for (int i = 0; i < d; ++i) cap[i] = std::max(cap[i], e[i] + 1);
    std::vector<Exponent> out;
    std::vector<int> cur(d, 0);
    while (true) {
        Exponent t(cur);
        if (!O.contains(t)) {
            bool minimal = true;
            for (int i = 0; i < d && minimal; ++i)
                if (cur[i] > 0 && !O.contains(t.minus_unit(i))) minimal = false;
            if (minimal) out.push_back(t);
        }
        int i = d - 1;
        while (i >= 0 && cur[i] == cap[i]) cur[i--] = 0;
        if (i < 0) break;
        ++cur[i];
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<Exponent> exponents_up_to_degree(int d, int maxdeg) {
    std::vector<Exponent> out;
    std::vector<int> cur(d, 0);
    while (true) {
        if (std::accumulate(cur.begin(), cur.end(), 0) <= maxdeg) out.emplace_back(cur);
        int i = d - 1;
        while (i >= 0 && cur[i] == maxdeg) cur[i--] = 0;
        if (i < 0) break;
        ++cur[i];
    }
    return out;
}

// Greedy escalier: walk all monomials up to total degree #Theta in
// increasing order and keep those that raise the rank of the evaluation
// matrix. No queue, no pruning, fresh rank computation every step.
inline OrderIdeal oracle_escalier(const FunctionalSet& theta, const MonomialOrder& order) {
    const int d = theta.dimension();
    const std::size_t n = theta.size();
    auto monomials = exponents_up_to_degree(d, static_cast<int>(n));
    std::sort(monomials.begin(), monomials.end(),
              [&](const Exponent& a, const Exponent& b) { return order.less(a, b); });

    RationalMatrix accepted_rows;
    std::vector<Exponent> accepted;
    const auto functionals = theta.flatten();
    for (const auto& t : monomials) {
        if (accepted.size() == n) break;
        RationalRow row;
        row.reserve(n);
        for (const auto& phi : functionals)
            row.push_back(escalier::evaluate_monomial(phi.point, phi.derivative, t));
        RationalMatrix candidate = accepted_rows;
        candidate.push_back(row);
        if (escalier::rank(candidate) == accepted.size() + 1) {
            accepted_rows.push_back(std::move(row));
            accepted.push_back(t);
        }
    }
    return OrderIdeal(d, std::move(accepted));
}

// Termwise partial derivative d/dx_{pos+1}, used to cross-check the closed
// form in evaluate().
inline Polynomial oracle_partial_derivative(const Polynomial& f, int pos) {
    Polynomial out(f.dimension());
    for (const auto& [e, c] : f.terms())
        if (e[pos] > 0) out.add_term(e.minus_unit(pos), c * Rational(e[pos]));
    return out;
}

// Plain substitution, no derivative machinery.
inline Rational oracle_eval_at(const Polynomial& f, const Point& p) {
    Rational sum(0);
    for (const auto& [e, c] : f.terms()) {
        Rational term = c;
        for (int i = 0; i < f.dimension(); ++i) term *= p[i].pow(e[i]);
        sum += term;
    }
    return sum;
}

// Normal form through interpolation instead of division: solve for the
// combination of escalier monomials that matches f on every functional.
inline Polynomial oracle_normal_form(const EscalierResult& result, const FunctionalSet& theta,
                                     const Polynomial& f) {
    const auto& basis = result.escalier.exponents();
    auto matrix = escalier::evaluation_matrix(theta, basis);
    RationalRow rhs;
    for (const auto& phi : theta.flatten()) rhs.push_back(escalier::evaluate(phi, f));
    auto coeffs = escalier::solve(std::move(matrix), std::move(rhs));
    Polynomial r(f.dimension());
    for (std::size_t i = 0; i < basis.size(); ++i) r.add_term(basis[i], (*coeffs)[i]);
    return r;
}

// ---- deterministic generators ------------------------------------------

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// Small rational pool; collisions across draws are intended.
inline Rational random_rational(Rng& rng) {
    return Rational(uniform(rng, -6, 6), uniform(rng, 1, 3));
}

inline MonomialOrder random_matrix_order(Rng& rng, int d) {
    for (int attempt = 0; attempt < 20000; ++attempt) {
        std::vector<std::vector<long long>> rows(d, std::vector<long long>(d));
        for (auto& row : rows)
            for (auto& x : row) x = uniform(rng, -3, 3);
        try {
            return MonomialOrder(std::move(rows));
        } catch (const escalier::Error&) {
            continue;
        }
    }
    return MonomialOrder::grevlex(d);  // unreachable in practice
}

inline PointSet random_point_set(Rng& rng, int d, int n) {
    std::set<Point> seen;
    std::vector<Point> pts;
    int guard = 0;
    while (static_cast<int>(pts.size()) < n && ++guard < 10000) {
        std::vector<Rational> coords;
        for (int i = 0; i < d; ++i) coords.push_back(Rational(uniform(rng, -2, 2)));
        Point p(std::move(coords));
        if (seen.insert(p).second) pts.push_back(std::move(p));
    }
    return PointSet(d, std::move(pts));
}

inline OrderIdeal random_lower_set(Rng& rng, int d, int size) {
    std::set<Exponent> members{Exponent::zero(d)};
    while (static_cast<int>(members.size()) < size) {
        std::vector<Exponent> addable;
        for (const auto& e : members) {
            for (int i = 0; i < d; ++i) {
                Exponent c = e.plus_unit(i);
                if (members.count(c)) continue;
                bool ok = true;
                for (int k = 0; k < d && ok; ++k)
                    if (c[k] > 0 && !members.count(c.minus_unit(k))) ok = false;
                if (ok) addable.push_back(std::move(c));
            }
        }
        std::sort(addable.begin(), addable.end());
        addable.erase(std::unique(addable.begin(), addable.end()), addable.end());
        members.insert(addable[uniform(rng, 0, static_cast<int>(addable.size()) - 1)]);
    }
    return OrderIdeal(d, {members.begin(), members.end()});
}

inline FunctionalSet random_functional_set(Rng& rng, int d, int max_total) {
    const int site_count = uniform(rng, 1, 3);
    std::set<Point> seen;
    std::vector<Site> sites;
    int budget = std::max(max_total, site_count);
    for (int s = 0; s < site_count; ++s) {
        Point p = [&] {
            while (true) {
                std::vector<Rational> coords;
                for (int i = 0; i < d; ++i) coords.push_back(Rational(uniform(rng, -2, 2)));
                Point candidate(std::move(coords));
                if (seen.insert(candidate).second) return candidate;
            }
        }();
        const int remaining_sites = site_count - s - 1;
        const int avail = budget - remaining_sites;
        const int k = uniform(rng, 1, std::max(1, std::min(avail, 3)));
        budget -= k;
        sites.push_back(Site{std::move(p), random_lower_set(rng, d, k)});
    }
    return FunctionalSet(d, std::move(sites));
}

inline CartesianDescription random_cartesian(Rng& rng, int d, int max_size) {
    OrderIdeal lower = random_lower_set(rng, d, uniform(rng, 1, max_size));
    std::vector<std::vector<Rational>> node_values(d);
    for (int i = 0; i < d; ++i) {
        int needed = 1;
        for (const auto& e : lower.exponents()) needed = std::max(needed, e[i] + 1);
        std::set<Rational> values;
        while (static_cast<int>(values.size()) < needed) values.insert(random_rational(rng));
        std::vector<Rational> list(values.begin(), values.end());
        std::shuffle(list.begin(), list.end(), rng);
        node_values[i] = std::move(list);
    }
    return CartesianDescription{std::move(lower), std::move(node_values)};
}

// ---- contract checks ----------------------------------------------------

// Empty string when every EscalierResult invariant holds, else a
// description of the first violation.
inline std::string check_escalier_contracts(const EscalierResult& result,
                                            const FunctionalSet& theta) {
    if (result.escalier.size() != theta.size()) return "escalier size != number of functionals";
    if (!escalier::is_lower_set(result.escalier.exponents()))
        return "escalier is not divisor-closed";
    if (corner(result.escalier) != result.corners) return "corners != corner(escalier)";
    if (result.groebner.size() != result.corners.size())
        return "basis size != number of corners";
    const auto functionals = theta.flatten();
    for (std::size_t i = 0; i < result.groebner.size(); ++i) {
        const auto& g = result.groebner[i];
        Exponent lm = leading_monomial(result.order, g);
        if (!(lm == result.corners[i])) return "leading monomial mismatch at index " + std::to_string(i);
        if (g.coefficient(lm) != Rational(1)) return "basis element not monic";
        for (const auto& [e, c] : g.terms())
            if (!(e == lm) && !result.escalier.contains(e))
                return "tail monomial outside the escalier";
        for (const auto& phi : functionals)
            if (!escalier::evaluate(phi, g).is_zero())
                return "basis element not annihilated by the functionals";
    }
    return {};
}

inline bool polynomial_sets_equal(std::vector<Polynomial> a, std::vector<Polynomial> b) {
    if (a.size() != b.size()) return false;
    auto canonical_less = [](const Polynomial& f, const Polynomial& g) {
        if (f.terms().size() != g.terms().size()) return f.terms().size() < g.terms().size();
        auto it = f.terms().begin();
        auto jt = g.terms().begin();
        for (; it != f.terms().end(); ++it, ++jt) {
            if (it->first < jt->first) return true;
            if (jt->first < it->first) return false;
            if (it->second < jt->second) return true;
            if (jt->second < it->second) return false;
        }
        return false;
    };
    std::sort(a.begin(), a.end(), canonical_less);
    std::sort(b.begin(), b.end(), canonical_less);
    return a == b;
}

}  // namespace testutil

#endif
