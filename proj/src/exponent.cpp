#include "escalier/exponent.hpp"

#include <algorithm>
#include <numeric>

#include "escalier/error.hpp"

namespace escalier {

Exponent::Exponent(std::vector<int> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw Error(errc::invalid_exponent, "exponent arity must be >= 1");
    for (int e : entries_)
        if (e < 0) throw Error(errc::invalid_exponent, "exponent entries must be >= 0");
}

Exponent Exponent::zero(int dimension) { return Exponent(std::vector<int>(dimension, 0)); }

Exponent Exponent::unit(int dimension, int pos) {
    std::vector<int> e(dimension, 0);
    e.at(pos) = 1;
    return Exponent(std::move(e));
}

int Exponent::total_degree() const {
    return std::accumulate(entries_.begin(), entries_.end(), 0);
}

Exponent Exponent::plus_unit(int pos) const {
    auto e = entries_;
    e.at(pos) += 1;
    return Exponent(std::move(e));
}

Exponent Exponent::minus_unit(int pos) const {
    auto e = entries_;
    if (e.at(pos) == 0) throw Error(errc::invalid_exponent, "entry underflow");
    e[pos] -= 1;
    return Exponent(std::move(e));
}

bool Exponent::divides(const Exponent& other) const {
    if (dimension() != other.dimension())
        throw Error(errc::dimension_mismatch, "exponent arity mismatch");
    for (int i = 0; i < dimension(); ++i)
        if (entries_[i] > other.entries_[i]) return false;
    return true;
}

Exponent Exponent::drop(int pos) const {
    if (dimension() < 2) throw Error(errc::invalid_exponent, "cannot drop below arity 1");
    auto e = entries_;
    e.erase(e.begin() + pos);
    return Exponent(std::move(e));
}

Exponent Exponent::insert(int pos, int value) const {
    auto e = entries_;
    e.insert(e.begin() + pos, value);
    return Exponent(std::move(e));
}

Exponent operator+(const Exponent& a, const Exponent& b) {
    if (a.dimension() != b.dimension())
        throw Error(errc::dimension_mismatch, "exponent arity mismatch");
    auto e = a.entries_;
    for (int i = 0; i < b.dimension(); ++i) e[i] += b.entries_[i];
    return Exponent(std::move(e));
}

bool Exponent::operator<(const Exponent& other) const {
    return std::lexicographical_compare(entries_.begin(), entries_.end(),
                                        other.entries_.begin(), other.entries_.end());
}

}  // namespace escalier
