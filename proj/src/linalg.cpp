#include "escalier/linalg.hpp"

#include "escalier/error.hpp"

namespace escalier {

std::size_t rank(RationalMatrix m) {
    if (m.empty()) return 0;
    const std::size_t cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t pivot = r;
        while (pivot < m.size() && m[pivot][c].is_zero()) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[r], m[pivot]);
        for (std::size_t i = r + 1; i < m.size(); ++i) {
            if (m[i][c].is_zero()) continue;
            Rational f = m[i][c] / m[r][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return r;
}

std::optional<RationalRow> solve(RationalMatrix a, RationalRow b) {
    const std::size_t n = a.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        while (pivot < n && a[pivot][c].is_zero()) ++pivot;
        if (pivot == n) return std::nullopt;
        std::swap(a[c], a[pivot]);
        std::swap(b[c], b[pivot]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a[i][c].is_zero()) continue;
            Rational f = a[i][c] / a[c][c];
            for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
            b[i] -= f * b[c];
        }
    }
    RationalRow x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
    return x;
}

std::optional<RationalRow> IncrementalEchelon::insert(const RationalRow& v) {
    if (v.size() != width_)
        throw Error(errc::dimension_mismatch, "echelon row width mismatch");

    RationalRow w = v;
    const std::size_t inserted = rows_.size();
    RationalRow mu(inserted, Rational(0));

    for (const Row& row : rows_) {
        const Rational c = w[row.pivot];
        if (c.is_zero()) continue;
        for (std::size_t j = 0; j < width_; ++j) w[j] -= c * row.values[j];
        for (std::size_t u = 0; u < row.combo.size(); ++u) mu[u] += c * row.combo[u];
    }

    std::size_t pivot = 0;
    while (pivot < width_ && w[pivot].is_zero()) ++pivot;
    if (pivot == width_) return mu;  // dependent: v = sum mu[u] * v_u

    const Rational inv = Rational(1) / w[pivot];
    for (auto& x : w) x *= inv;
    RationalRow combo(inserted + 1, Rational(0));
    for (std::size_t u = 0; u < inserted; ++u) combo[u] = -(mu[u] * inv);
    combo[inserted] = inv;
    rows_.push_back(Row{std::move(w), pivot, std::move(combo)});
    return std::nullopt;
}

}  // namespace escalier
