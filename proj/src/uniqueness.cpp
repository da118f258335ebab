#include "escalier/uniqueness.hpp"

#include <algorithm>
#include <set>

#include "escalier/error.hpp"

namespace escalier {

UniquenessVerdict unique_quotient_basis(const FunctionalSet& theta) {
    const int d = theta.dimension();
    std::vector<EscalierResult> results;
    results.reserve(d);
    for (int i = 1; i <= d; ++i)
        results.push_back(escalier(theta, MonomialOrder::elimination(i, d)));

    for (int i = 0; i < d; ++i) {
        for (int j = i + 1; j < d; ++j) {
            if (results[i].escalier == results[j].escalier) continue;
            UniquenessVerdict verdict;
            verdict.unique = false;
            verdict.witness = UniquenessWitness{results[i].order.name(), results[j].order.name(),
                                                results[i].escalier, results[j].escalier};
            return verdict;
        }
    }

    UniquenessVerdict verdict;
    verdict.unique = true;
    verdict.basis = results[0].escalier;
    verdict.universal_gb = results[0].groebner;
    return verdict;
}

bool corner_dependence_unique(const FunctionalSet& theta, const OrderIdeal& basis) {
    if (basis.dimension() != theta.dimension())
        throw Error(errc::dimension_mismatch, "basis arity does not match functionals");
    if (basis.size() != theta.size() || !is_independent_mod_ideal(theta, basis.exponents()))
        throw Error(errc::not_a_quotient_basis, "O is not a quotient basis");

    for (const auto& alpha : corner(basis)) {
        const auto box = divisor_box(alpha);
        if (is_independent_mod_ideal(theta, box)) return false;
    }
    return true;
}

std::optional<std::vector<Polynomial>> universal_groebner_basis(const FunctionalSet& theta) {
    auto verdict = unique_quotient_basis(theta);
    return verdict.universal_gb;
}

std::vector<OrderIdeal> enumerate_quotient_bases(const FunctionalSet& theta,
                                                 std::size_t max_results,
                                                 const OracleGuard& guard) {
    const std::size_t n = theta.size();
    const int d = theta.dimension();
    if (n > guard.max_conditions || d > guard.max_dimension)
        throw Error(errc::oracle_limit, "instance too large for oracle");

    // Any order ideal of cardinality n fits in the box with per-coordinate
    // bound n-1.
    const int bound = static_cast<int>(n) - 1;

    using Key = std::vector<Exponent>;  // sorted element list, the canonical form
    std::set<Key> level{{Exponent::zero(d)}};
    for (std::size_t k = 1; k < n; ++k) {
        std::set<Key> next;
        for (const auto& shape : level) {
            std::set<Exponent> members(shape.begin(), shape.end());
            std::set<Exponent> candidates;
            for (const auto& e : shape)
                for (int i = 0; i < d; ++i)
                    if (e[i] < bound) candidates.insert(e.plus_unit(i));
            for (const auto& c : candidates) {
                if (members.count(c)) continue;
                bool addable = true;
                for (int i = 0; i < d && addable; ++i)
                    if (c[i] > 0 && !members.count(c.minus_unit(i))) addable = false;
                if (!addable) continue;
                Key grown = shape;
                grown.insert(std::upper_bound(grown.begin(), grown.end(), c), c);
                next.insert(std::move(grown));
            }
        }
        level = std::move(next);
    }

    std::vector<OrderIdeal> out;
    for (const auto& shape : level) {
        if (out.size() >= max_results) break;
        if (is_independent_mod_ideal(theta, shape)) out.emplace_back(d, shape);
    }
    return out;
}

}  // namespace escalier
