#ifndef ESCALIER_UNIQUENESS_HPP
#define ESCALIER_UNIQUENESS_HPP

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "escalier/moeller.hpp"

namespace escalier {

struct UniquenessWitness {
    std::string order_a;  // tags of the two differing elimination orders
    std::string order_b;
    OrderIdeal escalier_a;
    OrderIdeal escalier_b;
};

struct UniquenessVerdict {
    bool unique = false;
    std::optional<OrderIdeal> basis;                      // present iff unique
    std::optional<std::vector<Polynomial>> universal_gb;  // present iff unique
    std::optional<UniquenessWitness> witness;             // present iff not unique
};

// Elimination-order criterion: the quotient basis is unique iff the
// escaliers under the d canonical elimination orders coincide. The witness
// reports the first differing pair in index order.
UniquenessVerdict unique_quotient_basis(const FunctionalSet& theta);

// Corner-dependence criterion: O (a quotient basis for ker Theta) is the
// unique monomial order quotient basis iff for every corner exponent the
// full divisor box is linearly dependent modulo ker Theta. Throws
// "not_a_quotient_basis" when O is not a quotient basis.
bool corner_dependence_unique(const FunctionalSet& theta, const OrderIdeal& basis);

// The reduced Groebner basis shared by all monomial orders, when it exists.
std::optional<std::vector<Polynomial>> universal_groebner_basis(const FunctionalSet& theta);

// Size guard for the brute-force enumeration below.
struct OracleGuard {
    std::size_t max_conditions = 10;
    int max_dimension = 4;
};

// Brute-force oracle: every order ideal O with #O = #Theta that is linearly
// independent modulo ker Theta, i.e. every monomial order quotient basis.
// Lower sets are generated breadth-first and reported in canonical
// (lexicographically sorted) order; enumeration stops after max_results.
std::vector<OrderIdeal> enumerate_quotient_bases(
    const FunctionalSet& theta,
    std::size_t max_results = std::numeric_limits<std::size_t>::max(),
    const OracleGuard& guard = OracleGuard{});

}  // namespace escalier

#endif
