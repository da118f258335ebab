#include "escalier/monomial_order.hpp"

#include <algorithm>

#include "escalier/error.hpp"
#include "escalier/linalg.hpp"

namespace escalier {

namespace {

void check_permutation(const std::vector<int>& perm) {
    std::vector<bool> seen(perm.size(), false);
    for (int p : perm) {
        if (p < 1 || p > static_cast<int>(perm.size()) || seen[p - 1])
            throw Error(errc::invalid_order, "not a permutation of 1..d");
        seen[p - 1] = true;
    }
    if (perm.empty()) throw Error(errc::invalid_order, "empty permutation");
}

std::string join(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(v[i]);
    }
    return s;
}

}  // namespace

MonomialOrder::MonomialOrder(std::vector<std::vector<long long>> rows, std::string name)
    : rows_(std::move(rows)), name_(std::move(name)) {
    if (rows_.empty() || rows_[0].empty())
        throw Error(errc::invalid_order, "order matrix must be nonempty");
    dimension_ = static_cast<int>(rows_[0].size());
    for (const auto& row : rows_)
        if (static_cast<int>(row.size()) != dimension_)
            throw Error(errc::invalid_order, "ragged order matrix");

    // Topmost nonzero entry of every column must be positive.
    for (int c = 0; c < dimension_; ++c) {
        long long top = 0;
        for (const auto& row : rows_) {
            if (row[c] != 0) {
                top = row[c];
                break;
            }
        }
        if (top <= 0)
            throw Error(errc::invalid_order,
                        "column " + std::to_string(c + 1) + " has nonpositive topmost entry");
    }

    RationalMatrix m;
    m.reserve(rows_.size());
    for (const auto& row : rows_) {
        RationalRow r;
        r.reserve(row.size());
        for (long long x : row) r.emplace_back(static_cast<long>(x));
        m.push_back(std::move(r));
    }
    if (rank(std::move(m)) != static_cast<std::size_t>(dimension_))
        throw Error(errc::invalid_order, "order matrix must have rank d");
}

MonomialOrder MonomialOrder::lex(const std::vector<int>& perm) {
    check_permutation(perm);
    const int d = static_cast<int>(perm.size());
    std::vector<std::vector<long long>> rows;
    for (int p : perm) {
        std::vector<long long> row(d, 0);
        row[p - 1] = 1;
        rows.push_back(std::move(row));
    }
    return MonomialOrder(std::move(rows), "lex:" + join(perm));
}

MonomialOrder MonomialOrder::grlex(const std::vector<int>& perm) {
    check_permutation(perm);
    const int d = static_cast<int>(perm.size());
    std::vector<std::vector<long long>> rows;
    rows.emplace_back(d, 1);
    for (int i = 0; i + 1 < d; ++i) {
        std::vector<long long> row(d, 0);
        row[perm[i] - 1] = 1;
        rows.push_back(std::move(row));
    }
    return MonomialOrder(std::move(rows), "grlex:" + join(perm));
}

MonomialOrder MonomialOrder::grevlex(int dimension) {
    if (dimension < 1) throw Error(errc::invalid_order, "dimension must be >= 1");
    std::vector<std::vector<long long>> rows;
    rows.emplace_back(dimension, 1);
    for (int i = dimension - 1; i >= 1; --i) {
        std::vector<long long> row(dimension, 0);
        row[i] = -1;
        rows.push_back(std::move(row));
    }
    return MonomialOrder(std::move(rows), "grevlex");
}

MonomialOrder MonomialOrder::elimination(int var, int dimension) {
    if (var < 1 || var > dimension)
        throw Error(errc::invalid_order, "elimination variable out of range");
    std::vector<int> perm;
    for (int i = 0; i < dimension; ++i) perm.push_back((var - 1 + i) % dimension + 1);
    auto order = lex(perm);
    return MonomialOrder(order.matrix(), "elim:" + std::to_string(var));
}

std::strong_ordering MonomialOrder::compare(const Exponent& a, const Exponent& b) const {
    if (a.dimension() != dimension_ || b.dimension() != dimension_)
        throw Error(errc::dimension_mismatch, "exponent arity does not match order");
    for (const auto& row : rows_) {
        __int128 s = 0;
        for (int j = 0; j < dimension_; ++j)
            s += static_cast<__int128>(row[j]) * (a[j] - b[j]);
        if (s < 0) return std::strong_ordering::less;
        if (s > 0) return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

}  // namespace escalier
