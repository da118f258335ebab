#include "escalier/polynomial.hpp"

#include "escalier/error.hpp"

namespace escalier {

Polynomial::Polynomial(int dimension) : dimension_(dimension) {
    if (dimension_ < 1) throw Error(errc::invalid_exponent, "dimension must be >= 1");
}

Polynomial Polynomial::constant(int dimension, const Rational& c) {
    Polynomial f(dimension);
    f.add_term(Exponent::zero(dimension), c);
    return f;
}

Polynomial Polynomial::monomial(const Exponent& e, const Rational& c) {
    Polynomial f(e.dimension());
    f.add_term(e, c);
    return f;
}

Polynomial Polynomial::variable(int dimension, int var) {
    if (var < 1 || var > dimension)
        throw Error(errc::invalid_exponent, "variable index out of range");
    return monomial(Exponent::unit(dimension, var - 1));
}

Rational Polynomial::coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Exponent& e, const Rational& c) {
    if (e.dimension() != dimension_)
        throw Error(errc::dimension_mismatch, "term arity does not match polynomial");
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& g) {
    if (g.dimension_ != dimension_)
        throw Error(errc::dimension_mismatch, "polynomial arity mismatch");
    for (const auto& [e, c] : g.terms_) add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& g) {
    if (g.dimension_ != dimension_)
        throw Error(errc::dimension_mismatch, "polynomial arity mismatch");
    for (const auto& [e, c] : g.terms_) add_term(e, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, coef] : terms_) coef *= c;
    return *this;
}

Polynomial Polynomial::times_monomial(const Exponent& shift, const Rational& c) const {
    Polynomial out(dimension_);
    if (c.is_zero()) return out;
    for (const auto& [e, coef] : terms_) out.add_term(e + shift, coef * c);
    return out;
}

Polynomial operator*(const Polynomial& f, const Polynomial& g) {
    if (f.dimension_ != g.dimension_)
        throw Error(errc::dimension_mismatch, "polynomial arity mismatch");
    Polynomial out(f.dimension_);
    for (const auto& [e, c] : f.terms_)
        for (const auto& [e2, c2] : g.terms_) out.add_term(e + e2, c * c2);
    return out;
}

Polynomial operator-(const Polynomial& f) {
    Polynomial out(f.dimension_);
    for (const auto& [e, c] : f.terms_) out.add_term(e, -c);
    return out;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!s.empty()) s += " + ";
        s += it->second.str();
        for (int i = 0; i < dimension_; ++i) {
            if (it->first[i] == 0) continue;
            s += "*x" + std::to_string(i + 1);
            if (it->first[i] > 1) s += "^" + std::to_string(it->first[i]);
        }
    }
    return s;
}

Exponent leading_monomial(const MonomialOrder& order, const Polynomial& f) {
    if (f.is_zero()) throw Error(errc::zero_polynomial, "zero polynomial has no leading monomial");
    const Exponent* best = nullptr;
    for (const auto& [e, c] : f.terms())
        if (!best || order.less(*best, e)) best = &e;
    return *best;
}

}  // namespace escalier
