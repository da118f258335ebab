#ifndef ESCALIER_MONOMIAL_ORDER_HPP
#define ESCALIER_MONOMIAL_ORDER_HPP

#include <compare>
#include <string>
#include <vector>

#include "escalier/exponent.hpp"

namespace escalier {

// A monomial order given by an integer matrix: a ≺ b iff M·a precedes M·b
// lexicographically. Construction rejects matrices that do not define a
// monomial order; the criterion is rank d over Q plus, in every column,
// a positive topmost nonzero entry (this makes 1 the least monomial and
// the order a well-ordering).
class MonomialOrder {
public:
    explicit MonomialOrder(std::vector<std::vector<long long>> rows, std::string name = "");

    // Lexicographic order x_{perm[0]} > x_{perm[1]} > ...; perm is a
    // permutation of {1,...,d}.
    static MonomialOrder lex(const std::vector<int>& perm);
    // Total degree first, ties by lex(perm).
    static MonomialOrder grlex(const std::vector<int>& perm);
    static MonomialOrder grevlex(int dimension);
    // Canonical elimination order for x_var (1-based): lex with the cycle
    // x_var > x_{var+1} > ... > x_d > x_1 > ... > x_{var-1}.
    static MonomialOrder elimination(int var, int dimension);

    int dimension() const { return dimension_; }
    const std::vector<std::vector<long long>>& matrix() const { return rows_; }
    const std::string& name() const { return name_; }

    std::strong_ordering compare(const Exponent& a, const Exponent& b) const;
    bool less(const Exponent& a, const Exponent& b) const {
        return compare(a, b) == std::strong_ordering::less;
    }

    bool operator==(const MonomialOrder& other) const {
        return rows_ == other.rows_;
    }

private:
    int dimension_;
    std::vector<std::vector<long long>> rows_;
    std::string name_;
};

}  // namespace escalier

#endif
