#ifndef ESCALIER_FUNCTIONALS_HPP
#define ESCALIER_FUNCTIONALS_HPP

#include <span>
#include <vector>

#include "escalier/linalg.hpp"
#include "escalier/order_ideal.hpp"
#include "escalier/polynomial.hpp"
#include "escalier/rational.hpp"

namespace escalier {

class Point {
public:
    explicit Point(std::vector<Rational> coordinates);

    int dimension() const { return static_cast<int>(coordinates_.size()); }
    const Rational& operator[](int pos) const { return coordinates_[pos]; }
    const std::vector<Rational>& coordinates() const { return coordinates_; }

    Point drop(int pos) const;  // remove one coordinate, d >= 2

    bool operator==(const Point&) const = default;
    bool operator<(const Point& other) const;  // coordinatewise lexicographic

private:
    std::vector<Rational> coordinates_;
};

// Finite list of pairwise distinct points. Order is preserved as given.
class PointSet {
public:
    PointSet(int dimension, std::vector<Point> points);

    int dimension() const { return dimension_; }
    std::size_t size() const { return points_.size(); }
    const std::vector<Point>& points() const { return points_; }
    bool contains(const Point& p) const;

    bool same_set(const PointSet& other) const;  // equality as sets

    bool operator==(const PointSet&) const = default;

private:
    int dimension_;
    std::vector<Point> points_;
};

// A point evaluation composed with an unnormalized partial derivative:
// f -> (d^|a| f / dx^a)(point).
struct Functional {
    Point point;
    Exponent derivative;
};

// One interpolation site: a point paired with a lower derivative set.
struct Site {
    Point point;
    OrderIdeal derivatives;
};

// The interpolation conditions: distinct points, each carrying a nonempty
// lower set of derivative exponents. Flattening order is fixed: sites as
// given, derivatives in lexicographic order within a site.
class FunctionalSet {
public:
    FunctionalSet(int dimension, std::vector<Site> sites);

    // Lagrange conditions: one pure point evaluation per point.
    static FunctionalSet from_points(const PointSet& points);

    int dimension() const { return dimension_; }
    const std::vector<Site>& sites() const { return sites_; }
    std::size_t size() const;  // total number of functionals
    std::vector<Functional> flatten() const;

private:
    int dimension_;
    std::vector<Site> sites_;
};

// d^|derivative| (x^monomial) / dx^derivative, evaluated at the point. The
// derivative is the literal unnormalized partial derivative, so the value
// is falling_factorial(monomial, derivative) * point^(monomial-derivative).
Rational evaluate_monomial(const Point& at, const Exponent& derivative,
                           const Exponent& monomial);

Rational evaluate(const Functional& theta, const Polynomial& f);

// Row j = values of functional j on the given monomials, columns in the
// given monomial order.
RationalMatrix evaluation_matrix(const FunctionalSet& theta,
                                 std::span<const Exponent> monomials);

}  // namespace escalier

#endif
