#ifndef ESCALIER_POLYNOMIAL_HPP
#define ESCALIER_POLYNOMIAL_HPP

#include <map>
#include <string>

#include "escalier/exponent.hpp"
#include "escalier/monomial_order.hpp"
#include "escalier/rational.hpp"

namespace escalier {

// Sparse multivariate polynomial with exact rational coefficients. Terms
// are stored in canonical (lexicographic) exponent order and never carry a
// zero coefficient.
class Polynomial {
public:
    explicit Polynomial(int dimension);

    static Polynomial constant(int dimension, const Rational& c);
    static Polynomial monomial(const Exponent& e, const Rational& c = Rational(1));
    static Polynomial variable(int dimension, int var);  // x_var, 1-based

    int dimension() const { return dimension_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Exponent, Rational>& terms() const { return terms_; }

    Rational coefficient(const Exponent& e) const;
    void add_term(const Exponent& e, const Rational& c);

    Polynomial& operator+=(const Polynomial& g);
    Polynomial& operator-=(const Polynomial& g);
    Polynomial& operator*=(const Rational& c);

    // this * c * x^shift
    Polynomial times_monomial(const Exponent& shift, const Rational& c) const;

    friend Polynomial operator+(Polynomial f, const Polynomial& g) { return f += g; }
    friend Polynomial operator-(Polynomial f, const Polynomial& g) { return f -= g; }
    friend Polynomial operator*(Polynomial f, const Rational& c) { return f *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial f) { return f *= c; }
    friend Polynomial operator*(const Polynomial& f, const Polynomial& g);
    friend Polynomial operator-(const Polynomial& f);

    bool operator==(const Polynomial&) const = default;
    std::string str() const;  // human-readable, for diagnostics

private:
    int dimension_;
    std::map<Exponent, Rational> terms_;
};

// The order-greatest exponent carrying a nonzero coefficient. Throws on the
// zero polynomial.
Exponent leading_monomial(const MonomialOrder& order, const Polynomial& f);

}  // namespace escalier

#endif
