#include "escalier/functionals.hpp"

#include <algorithm>
#include <set>

#include "escalier/error.hpp"

namespace escalier {

Point::Point(std::vector<Rational> coordinates) : coordinates_(std::move(coordinates)) {
    if (coordinates_.empty()) throw Error(errc::invalid_point, "point arity must be >= 1");
}

Point Point::drop(int pos) const {
    if (dimension() < 2) throw Error(errc::invalid_point, "cannot drop below arity 1");
    auto c = coordinates_;
    c.erase(c.begin() + pos);
    return Point(std::move(c));
}

bool Point::operator<(const Point& other) const {
    return std::lexicographical_compare(coordinates_.begin(), coordinates_.end(),
                                        other.coordinates_.begin(), other.coordinates_.end());
}

PointSet::PointSet(int dimension, std::vector<Point> points)
    : dimension_(dimension), points_(std::move(points)) {
    if (dimension_ < 1) throw Error(errc::invalid_point, "dimension must be >= 1");
    if (points_.empty()) throw Error(errc::empty_input, "point set must be nonempty");
    std::set<Point> seen;
    for (const auto& p : points_) {
        if (p.dimension() != dimension_)
            throw Error(errc::dimension_mismatch, "point arity does not match set");
        if (!seen.insert(p).second)
            throw Error(errc::duplicate_points, "points must be pairwise distinct");
    }
}

bool PointSet::contains(const Point& p) const {
    return std::find(points_.begin(), points_.end(), p) != points_.end();
}

bool PointSet::same_set(const PointSet& other) const {
    if (dimension_ != other.dimension_ || points_.size() != other.points_.size()) return false;
    std::set<Point> mine(points_.begin(), points_.end());
    for (const auto& p : other.points_)
        if (!mine.count(p)) return false;
    return true;
}

FunctionalSet::FunctionalSet(int dimension, std::vector<Site> sites)
    : dimension_(dimension), sites_(std::move(sites)) {
    if (dimension_ < 1) throw Error(errc::invalid_point, "dimension must be >= 1");
    if (sites_.empty()) throw Error(errc::empty_input, "functional set must be nonempty");
    std::set<Point> seen;
    for (const auto& site : sites_) {
        if (site.point.dimension() != dimension_ ||
            site.derivatives.dimension() != dimension_)
            throw Error(errc::dimension_mismatch, "site arity does not match set");
        if (site.derivatives.empty())
            throw Error(errc::empty_input, "site carries no derivative conditions");
        if (!seen.insert(site.point).second)
            throw Error(errc::duplicate_points, "site points must be pairwise distinct");
    }
}

FunctionalSet FunctionalSet::from_points(const PointSet& points) {
    std::vector<Site> sites;
    sites.reserve(points.size());
    for (const auto& p : points.points())
        sites.push_back(Site{p, OrderIdeal::origin(points.dimension())});
    return FunctionalSet(points.dimension(), std::move(sites));
}

std::size_t FunctionalSet::size() const {
    std::size_t n = 0;
    for (const auto& site : sites_) n += site.derivatives.size();
    return n;
}

std::vector<Functional> FunctionalSet::flatten() const {
    std::vector<Functional> out;
    out.reserve(size());
    for (const auto& site : sites_)
        for (const auto& alpha : site.derivatives.exponents())
            out.push_back(Functional{site.point, alpha});
    return out;
}

Rational evaluate_monomial(const Point& at, const Exponent& derivative,
                           const Exponent& monomial) {
    const int d = at.dimension();
    if (derivative.dimension() != d || monomial.dimension() != d)
        throw Error(errc::dimension_mismatch, "functional arity mismatch");
    if (!derivative.divides(monomial)) return Rational(0);
    Rational value(1);
    for (int i = 0; i < d; ++i) {
        for (int k = 0; k < derivative[i]; ++k) value *= Rational(monomial[i] - k);
        value *= at[i].pow(monomial[i] - derivative[i]);
    }
    return value;
}

Rational evaluate(const Functional& theta, const Polynomial& f) {
    if (f.dimension() != theta.point.dimension())
        throw Error(errc::dimension_mismatch, "functional arity mismatch");
    Rational sum(0);
    for (const auto& [beta, coef] : f.terms())
        sum += coef * evaluate_monomial(theta.point, theta.derivative, beta);
    return sum;
}

RationalMatrix evaluation_matrix(const FunctionalSet& theta,
                                 std::span<const Exponent> monomials) {
    const auto functionals = theta.flatten();
    RationalMatrix m;
    m.reserve(functionals.size());
    for (const auto& phi : functionals) {
        RationalRow row;
        row.reserve(monomials.size());
        for (const auto& t : monomials)
            row.push_back(evaluate_monomial(phi.point, phi.derivative, t));
        m.push_back(std::move(row));
    }
    return m;
}

}  // namespace escalier
