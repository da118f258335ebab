#ifndef ESCALIER_EXPONENT_HPP
#define ESCALIER_EXPONENT_HPP

#include <vector>

namespace escalier {

// Multi-index in N_0^d. Entries are nonnegative; the arity d >= 1 is fixed
// at construction. operator< is plain lexicographic comparison and serves
// as the canonical enumeration/serialization order, independent of any
// monomial order.
class Exponent {
public:
    explicit Exponent(std::vector<int> entries);

    static Exponent zero(int dimension);
    static Exponent unit(int dimension, int pos);  // e_pos, 0-based

    int dimension() const { return static_cast<int>(entries_.size()); }
    int operator[](int pos) const { return entries_[pos]; }
    const std::vector<int>& entries() const { return entries_; }

    int total_degree() const;

    Exponent plus_unit(int pos) const;   // 0-based
    Exponent minus_unit(int pos) const;  // 0-based, requires entry > 0

    // Componentwise <=, i.e. x^this divides x^other.
    bool divides(const Exponent& other) const;

    Exponent drop(int pos) const;              // remove one coordinate, d >= 2
    Exponent insert(int pos, int value) const;  // inverse of drop

    friend Exponent operator+(const Exponent& a, const Exponent& b);

    bool operator==(const Exponent&) const = default;
    bool operator<(const Exponent& other) const;

private:
    std::vector<int> entries_;
};

}  // namespace escalier

#endif
