#include "escalier/order_ideal.hpp"

#include <algorithm>
#include <set>

#include "escalier/error.hpp"

namespace escalier {

bool is_lower_set(std::span<const Exponent> exponents) {
    if (exponents.empty()) return true;
    const int d = exponents.front().dimension();
    std::set<Exponent> present;
    for (const auto& e : exponents) {
        if (e.dimension() != d)
            throw Error(errc::dimension_mismatch, "mixed arity in exponent set");
        present.insert(e);
    }
    // Immediate predecessors suffice: closure follows by induction.
    for (const auto& e : present)
        for (int i = 0; i < d; ++i)
            if (e[i] > 0 && !present.count(e.minus_unit(i))) return false;
    return true;
}

OrderIdeal::OrderIdeal(int dimension, std::vector<Exponent> exponents)
    : dimension_(dimension) {
    if (dimension_ < 1) throw Error(errc::invalid_exponent, "dimension must be >= 1");
    std::set<Exponent> unique(exponents.begin(), exponents.end());
    for (const auto& e : unique)
        if (e.dimension() != dimension_)
            throw Error(errc::dimension_mismatch, "exponent arity does not match order ideal");
    exponents_.assign(unique.begin(), unique.end());
    if (!is_lower_set(exponents_))
        throw Error(errc::not_lower, "exponent set is not divisor-closed");
}

OrderIdeal OrderIdeal::origin(int dimension) {
    return OrderIdeal(dimension, {Exponent::zero(dimension)});
}

bool OrderIdeal::contains(const Exponent& e) const {
    return std::binary_search(exponents_.begin(), exponents_.end(), e);
}

std::vector<Exponent> corner(const OrderIdeal& ideal) {
    const int d = ideal.dimension();
    std::set<Exponent> candidates;
    candidates.insert(Exponent::zero(d));
    for (const auto& e : ideal.exponents())
        for (int i = 0; i < d; ++i) candidates.insert(e.plus_unit(i));

    std::vector<Exponent> out;
    for (const auto& t : candidates) {
        if (ideal.contains(t)) continue;
        bool minimal = true;
        for (int i = 0; i < d && minimal; ++i)
            if (t[i] > 0 && !ideal.contains(t.minus_unit(i))) minimal = false;
        if (minimal) out.push_back(t);
    }
    return out;
}

std::vector<Exponent> divisor_box(const Exponent& alpha) {
    const int d = alpha.dimension();
    std::vector<Exponent> out;
    std::vector<int> cur(d, 0);
    while (true) {
        out.emplace_back(cur);
        int i = d - 1;
        while (i >= 0 && cur[i] == alpha[i]) {
            cur[i] = 0;
            --i;
        }
        if (i < 0) break;
        ++cur[i];
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace escalier
