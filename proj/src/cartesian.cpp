#include "escalier/cartesian.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "escalier/error.hpp"

namespace escalier {

void validate(const CartesianDescription& desc) {
    const int d = desc.lower_set.dimension();
    if (desc.lower_set.empty())
        throw Error(errc::invalid_description, "lower set must be nonempty");
    if (static_cast<int>(desc.node_values.size()) != d)
        throw Error(errc::invalid_description, "node values must cover every axis");
    for (int i = 0; i < d; ++i) {
        int max_coord = 0;
        for (const auto& e : desc.lower_set.exponents()) max_coord = std::max(max_coord, e[i]);
        if (static_cast<int>(desc.node_values[i].size()) != max_coord + 1)
            throw Error(errc::invalid_description,
                        "axis " + std::to_string(i + 1) + " needs exactly " +
                            std::to_string(max_coord + 1) + " node values");
        std::set<Rational> distinct(desc.node_values[i].begin(), desc.node_values[i].end());
        if (distinct.size() != desc.node_values[i].size())
            throw Error(errc::invalid_description,
                        "axis " + std::to_string(i + 1) + " node values must be distinct");
    }
}

PointSet build_cartesian(const CartesianDescription& desc) {
    validate(desc);
    const int d = desc.lower_set.dimension();
    std::vector<Point> points;
    points.reserve(desc.lower_set.size());
    for (const auto& alpha : desc.lower_set.exponents()) {
        std::vector<Rational> coords;
        coords.reserve(d);
        for (int i = 0; i < d; ++i) coords.push_back(desc.node_values[i][alpha[i]]);
        points.emplace_back(std::move(coords));
    }
    return PointSet(d, std::move(points));
}

SliceFamily slices(const PointSet& points, int axis) {
    const int d = points.dimension();
    if (d < 2) throw Error(errc::invalid_axis, "no slices in dimension 1");
    if (axis < 1 || axis > d) throw Error(errc::invalid_axis, "axis out of range");

    std::map<Rational, std::vector<Point>> groups;
    for (const auto& p : points.points()) groups[p[axis - 1]].push_back(p.drop(axis - 1));

    SliceFamily family;
    family.axis = axis;
    for (auto& [value, projected] : groups)
        family.slices.push_back(Slice{value, PointSet(d - 1, std::move(projected))});
    std::stable_sort(family.slices.begin(), family.slices.end(),
                     [](const Slice& a, const Slice& b) {
                         if (a.projection.size() != b.projection.size())
                             return a.projection.size() > b.projection.size();
                         return a.value < b.value;
                     });
    return family;
}

CartesianCheck check_cartesian(const PointSet& points) {
    const int d = points.dimension();
    CartesianCheck result;

    if (d == 1) {
        std::vector<Rational> values;
        values.reserve(points.size());
        for (const auto& p : points.points()) values.push_back(p[0]);
        std::sort(values.begin(), values.end());
        std::vector<Exponent> exps;
        for (int k = 0; k < static_cast<int>(values.size()); ++k)
            exps.push_back(Exponent(std::vector<int>{k}));
        result.description =
            CartesianDescription{OrderIdeal(1, std::move(exps)), {std::move(values)}};
        return result;
    }

    std::vector<SliceFamily> families;
    families.reserve(d);
    for (int axis = 1; axis <= d; ++axis) {
        auto family = slices(points, axis);
        // Nesting test of the slice criterion: each slice must contain the
        // next. Equal-cardinality neighbours are forced to coincide.
        for (std::size_t j = 0; j + 1 < family.slices.size(); ++j) {
            const auto& larger = family.slices[j].projection;
            for (const auto& p : family.slices[j + 1].projection.points()) {
                if (!larger.contains(p)) {
                    result.failing_axis = axis;
                    return result;
                }
            }
        }
        families.push_back(std::move(family));
    }

    // Cartesian: index every coordinate value by its slice rank. The rank
    // map per axis is exactly the inverse of the recovered injection y_i.
    std::vector<std::map<Rational, int>> ranks(d);
    std::vector<std::vector<Rational>> node_values(d);
    for (int i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < families[i].slices.size(); ++j) {
            ranks[i][families[i].slices[j].value] = static_cast<int>(j);
            node_values[i].push_back(families[i].slices[j].value);
        }
    }
    std::vector<Exponent> exps;
    exps.reserve(points.size());
    for (const auto& p : points.points()) {
        std::vector<int> alpha(d);
        for (int i = 0; i < d; ++i) alpha[i] = ranks[i].at(p[i]);
        exps.emplace_back(std::move(alpha));
    }
    result.description =
        CartesianDescription{OrderIdeal(d, std::move(exps)), std::move(node_values)};
    return result;
}

std::optional<CartesianDescription> is_cartesian(const PointSet& points) {
    return check_cartesian(points).description;
}

std::vector<OrderIdeal> slice_lower_sets(const CartesianDescription& desc, int axis) {
    validate(desc);
    const int d = desc.lower_set.dimension();
    if (d < 2) throw Error(errc::invalid_axis, "no slices in dimension 1");
    if (axis < 1 || axis > d) throw Error(errc::invalid_axis, "axis out of range");

    const int m = static_cast<int>(desc.node_values[axis - 1].size()) - 1;
    std::vector<OrderIdeal> out;
    out.reserve(m + 1);
    for (int j = 0; j <= m; ++j) {
        std::vector<Exponent> exps;
        for (const auto& alpha : desc.lower_set.exponents())
            if (alpha[axis - 1] == j) exps.push_back(alpha.drop(axis - 1));
        out.emplace_back(d - 1, std::move(exps));
    }
    return out;
}

PointSet xi_family(int dimension) {
    if (dimension < 3) throw Error(errc::invalid_description, "xi family needs dimension >= 3");
    auto embed = [&](std::vector<long> head) {
        std::vector<Rational> coords;
        coords.reserve(dimension);
        for (long h : head) coords.emplace_back(h);
        for (int i = 3; i < dimension; ++i) coords.emplace_back(0L);
        return Point(std::move(coords));
    };
    return PointSet(dimension, {embed({0, 0, 0}), embed({0, 1, 0}), embed({0, 0, 1}),
                                embed({1, 0, 1})});
}

}  // namespace escalier
