#ifndef ESCALIER_ORDER_IDEAL_HPP
#define ESCALIER_ORDER_IDEAL_HPP

#include <span>
#include <vector>

#include "escalier/exponent.hpp"

namespace escalier {

// True iff the set is divisor-closed (every componentwise-smaller exponent
// is present). The empty set is lower.
bool is_lower_set(std::span<const Exponent> exponents);

// Finite divisor-closed exponent set. Doubles as a lower set in N_0^d.
// Elements are kept sorted in canonical (lexicographic) order.
class OrderIdeal {
public:
    OrderIdeal(int dimension, std::vector<Exponent> exponents);

    static OrderIdeal origin(int dimension);  // {0}

    int dimension() const { return dimension_; }
    std::size_t size() const { return exponents_.size(); }
    bool empty() const { return exponents_.empty(); }
    const std::vector<Exponent>& exponents() const { return exponents_; }
    bool contains(const Exponent& e) const;

    bool operator==(const OrderIdeal&) const = default;

private:
    int dimension_;
    std::vector<Exponent> exponents_;
};

// The corner set: minimal monomials outside O, i.e. all t not in O whose
// every immediate divisor lies in O. Sorted lexicographically.
std::vector<Exponent> corner(const OrderIdeal& ideal);

// All beta with 0 <= beta <= alpha, sorted lexicographically.
std::vector<Exponent> divisor_box(const Exponent& alpha);

}  // namespace escalier

#endif
