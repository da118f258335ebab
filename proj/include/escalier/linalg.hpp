#ifndef ESCALIER_LINALG_HPP
#define ESCALIER_LINALG_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "escalier/rational.hpp"

namespace escalier {

using RationalRow = std::vector<Rational>;
using RationalMatrix = std::vector<RationalRow>;

// Rank over Q by Gaussian elimination. Takes a copy on purpose.
std::size_t rank(RationalMatrix m);

// Solve A x = b for square invertible A; nullopt when A is singular.
std::optional<RationalRow> solve(RationalMatrix a, RationalRow b);

// Row echelon basis over Q that remembers how each pivot row was formed
// from the independent vectors inserted so far. insert() either extends
// the span, or returns the coefficients c with v = sum_u c[u] * v_u over
// the previously inserted independent vectors.
class IncrementalEchelon {
public:
    explicit IncrementalEchelon(std::size_t width) : width_(width) {}

    std::optional<RationalRow> insert(const RationalRow& v);

    std::size_t rank() const { return rows_.size(); }
    std::size_t width() const { return width_; }

private:
    struct Row {
        RationalRow values;  // pivot normalized to 1
        std::size_t pivot;
        RationalRow combo;  // expansion over inserted independent vectors
    };
    std::size_t width_;
    std::vector<Row> rows_;
};

}  // namespace escalier

#endif
