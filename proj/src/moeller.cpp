#include "escalier/moeller.hpp"

#include <algorithm>
#include <set>

#include "escalier/error.hpp"
#include "escalier/linalg.hpp"

namespace escalier {

namespace {

bool divisible_by_any(const Exponent& t, const std::vector<Exponent>& leads) {
    for (const auto& m : leads)
        if (m.divides(t)) return true;
    return false;
}

}  // namespace

EscalierResult escalier(const FunctionalSet& theta, const MonomialOrder& order) {
    const int d = theta.dimension();
    if (order.dimension() != d)
        throw Error(errc::dimension_mismatch, "order dimension does not match functionals");

    const auto functionals = theta.flatten();
    const std::size_t n = functionals.size();

    IncrementalEchelon echelon(n);
    std::vector<Exponent> accepted;        // the escalier, in increasing order
    std::vector<Exponent> leads;           // rejected candidates = leading monomials
    std::vector<Polynomial> basis;
    std::set<Exponent> frontier{Exponent::zero(d)};

    while (!frontier.empty()) {
        // Drop candidates that fell into the monomial ideal, then take the
        // order-least survivor. The frontier is rescanned each round; matrix
        // orders have no closed-form successor.
        std::erase_if(frontier, [&](const Exponent& t) { return divisible_by_any(t, leads); });
        if (frontier.empty()) break;
        auto it = frontier.begin();
        for (auto cur = std::next(frontier.begin()); cur != frontier.end(); ++cur)
            if (order.less(*cur, *it)) it = cur;
        const Exponent t = *it;
        frontier.erase(it);

        RationalRow values;
        values.reserve(n);
        for (const auto& phi : functionals)
            values.push_back(evaluate_monomial(phi.point, phi.derivative, t));

        if (auto dependence = echelon.insert(values)) {
            // t = sum_u c_u * u modulo ker Theta: emit the monic reduced
            // basis element t - sum c_u u. Everything below t is settled,
            // so the tail lies in the final escalier.
            Polynomial g = Polynomial::monomial(t);
            for (std::size_t u = 0; u < dependence->size(); ++u)
                g.add_term(accepted[u], -(*dependence)[u]);
            basis.push_back(std::move(g));
            leads.push_back(t);
        } else {
            accepted.push_back(t);
            for (int i = 0; i < d; ++i) frontier.insert(t.plus_unit(i));
        }
    }

    if (accepted.size() != n)
        throw Error(errc::degenerate_functional_set,
                    "functionals are linearly dependent: rank " +
                        std::to_string(accepted.size()) + " < " + std::to_string(n));

    // Canonical presentation: basis sorted by leading monomial so that
    // corners[i] is the leading monomial of groebner[i].
    std::vector<std::size_t> perm(leads.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::sort(perm.begin(), perm.end(),
              [&](std::size_t a, std::size_t b) { return leads[a] < leads[b]; });
    std::vector<Exponent> corners;
    std::vector<Polynomial> groebner;
    corners.reserve(leads.size());
    groebner.reserve(leads.size());
    for (std::size_t i : perm) {
        corners.push_back(leads[i]);
        groebner.push_back(std::move(basis[i]));
    }

    return EscalierResult{order, OrderIdeal(d, std::move(accepted)), std::move(corners),
                          std::move(groebner)};
}

bool is_independent_mod_ideal(const FunctionalSet& theta,
                              std::span<const Exponent> monomials) {
    for (const auto& t : monomials)
        if (t.dimension() != theta.dimension())
            throw Error(errc::dimension_mismatch, "monomial arity does not match functionals");
    if (monomials.size() > theta.size()) return false;
    return rank(evaluation_matrix(theta, monomials)) == monomials.size();
}

Polynomial normal_form(const EscalierResult& result, const Polynomial& f) {
    if (f.dimension() != result.escalier.dimension())
        throw Error(errc::dimension_mismatch, "polynomial arity does not match result");

    Polynomial work = f;
    while (true) {
        // Reduce the order-greatest reducible monomial; it strictly
        // decreases, so the loop terminates.
        const Exponent* target = nullptr;
        std::size_t reducer = 0;
        for (const auto& [e, c] : work.terms()) {
            if (target && !result.order.less(*target, e)) continue;
            for (std::size_t j = 0; j < result.corners.size(); ++j) {
                if (result.corners[j].divides(e)) {
                    target = &e;
                    reducer = j;
                    break;
                }
            }
        }
        if (!target) return work;
        Exponent e = *target;
        Rational c = work.coefficient(e);
        std::vector<int> shift(e.dimension());
        for (int i = 0; i < e.dimension(); ++i) shift[i] = e[i] - result.corners[reducer][i];
        work -= result.groebner[reducer].times_monomial(Exponent(std::move(shift)), c);
    }
}

}  // namespace escalier
