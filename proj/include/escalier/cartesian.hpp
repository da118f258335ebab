#ifndef ESCALIER_CARTESIAN_HPP
#define ESCALIER_CARTESIAN_HPP

#include <optional>
#include <vector>

#include "escalier/functionals.hpp"
#include "escalier/order_ideal.hpp"
#include "escalier/rational.hpp"

namespace escalier {

// A Cartesian set given as a lower set A plus, per axis, the distinct node
// values taken by the injective y_i on the indices that A actually uses:
// node_values[i-1].size() == 1 + max of coordinate i over A.
struct CartesianDescription {
    OrderIdeal lower_set;
    std::vector<std::vector<Rational>> node_values;
};

void validate(const CartesianDescription& desc);

// The point set {(y_1(a_1), ..., y_d(a_d)) : a in A}.
PointSet build_cartesian(const CartesianDescription& desc);

struct Slice {
    Rational value;       // the x_axis coordinate of the hyperplane
    PointSet projection;  // remaining coordinates, in F^{d-1}
};

// Slices perpendicular to one axis, sorted by descending projection
// cardinality; ties broken by ascending coordinate value.
struct SliceFamily {
    int axis;  // 1-based
    std::vector<Slice> slices;
};

// Requires d >= 2 (projections live in F^{d-1}) and 1 <= axis <= d.
SliceFamily slices(const PointSet& points, int axis);

// failing_axis is 0 when the set is Cartesian, otherwise the smallest axis
// whose slices are not nested.
struct CartesianCheck {
    std::optional<CartesianDescription> description;
    int failing_axis = 0;
};

// Slice-nesting criterion. In dimension 1 every finite set of distinct
// scalars is Cartesian (values sorted ascending, A = {0,...,n-1}). For
// d >= 2 the recovered description indexes each coordinate value by its
// slice rank, which makes the recovered A lower.
CartesianCheck check_cartesian(const PointSet& points);
std::optional<CartesianDescription> is_cartesian(const PointSet& points);

// The lower sets A_{i,j} of the slice projections: coordinate `axis` fixed
// to j and dropped, for j = 0..m_i. Requires d >= 2.
std::vector<OrderIdeal> slice_lower_sets(const CartesianDescription& desc, int axis);

// The 4-point family that is non-Cartesian yet has a unique quotient basis:
// {0, e_2, e_3, e_1+e_3} embedded in F^d, d >= 3.
PointSet xi_family(int dimension);

}  // namespace escalier

#endif
