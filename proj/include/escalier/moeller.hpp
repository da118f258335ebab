#ifndef ESCALIER_MOELLER_HPP
#define ESCALIER_MOELLER_HPP

#include <span>
#include <vector>

#include "escalier/functionals.hpp"
#include "escalier/monomial_order.hpp"
#include "escalier/order_ideal.hpp"
#include "escalier/polynomial.hpp"

namespace escalier {

// Output of one escalier computation. corners[i] is the leading monomial of
// groebner[i]; both lists are sorted in canonical (lexicographic) exponent
// order, and corners equals the corner set of the escalier.
struct EscalierResult {
    MonomialOrder order;
    OrderIdeal escalier;
    std::vector<Exponent> corners;
    std::vector<Polynomial> groebner;
};

// Moeller-style computation of the Groebner escalier of ker Theta together
// with the reduced Groebner basis, by incremental exact linear algebra over
// the monomials in increasing order. Throws "degenerate_functional_set" if
// the functionals are linearly dependent (cannot happen for valid input).
EscalierResult escalier(const FunctionalSet& theta, const MonomialOrder& order);

// True iff the given monomials are linearly independent modulo ker Theta,
// i.e. the evaluation matrix has full column rank.
bool is_independent_mod_ideal(const FunctionalSet& theta,
                              std::span<const Exponent> monomials);

// The unique representative of f modulo ker Theta supported on the
// escalier; full reduction by the reduced Groebner basis.
Polynomial normal_form(const EscalierResult& result, const Polynomial& f);

}  // namespace escalier

#endif
