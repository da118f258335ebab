#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "escalier/error.hpp"
#include "support.hpp"

using namespace escalier;
using namespace testutil;

namespace {

CartesianDescription sec2_description() {
    return CartesianDescription{
        ideal(2, {{0, 0}, {1, 0}, {2, 0}, {0, 1}}),
        {{Q("23/10"), Q("47/10"), Q("3/2")}, {Q("6/5"), Q("1/5")}}};
}

}  // namespace

TEST_CASE("building Cartesian sets from descriptions") {
    auto built = build_cartesian(sec2_description());
    CHECK(built.same_set(cartesian_four_points()));
    CHECK(built.size() == 4);

    // full grid on the unit square corners
    auto grid = build_cartesian(CartesianDescription{
        ideal(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}}), {{Q("0"), Q("1")}, {Q("0"), Q("1")}}});
    CHECK(grid.same_set(points({{"0", "0"}, {"1", "0"}, {"0", "1"}, {"1", "1"}})));

    auto lone = build_cartesian(CartesianDescription{ideal(1, {{0}}), {{Q("5")}}});
    CHECK(lone.points().front() == point({"5"}));

    // malformed descriptions
    CHECK_THROWS_AS(build_cartesian(CartesianDescription{
                        ideal(1, {{0}, {1}}), {{Q("5"), Q("5")}}}),
                    Error);  // repeated node value
    CHECK_THROWS_AS(build_cartesian(CartesianDescription{
                        ideal(1, {{0}, {1}}), {{Q("5")}}}),
                    Error);  // too few node values
    CHECK_THROWS_AS(build_cartesian(CartesianDescription{ideal(2, {}), {{}, {}}}), Error);
}

TEST_CASE("slices group, project and sort") {
    auto xi3 = xi_family(3);

    auto axis3 = slices(xi3, 3);
    REQUIRE(axis3.slices.size() == 2);
    CHECK(axis3.slices[0].value == Q("0"));
    CHECK(axis3.slices[0].projection.same_set(points({{"0", "0"}, {"0", "1"}})));
    CHECK(axis3.slices[1].value == Q("1"));
    CHECK(axis3.slices[1].projection.same_set(points({{"0", "0"}, {"1", "0"}})));

    auto axis1 = slices(xi3, 1);
    REQUIRE(axis1.slices.size() == 2);
    CHECK(axis1.slices[0].value == Q("0"));
    CHECK(axis1.slices[0].projection.same_set(points({{"0", "0"}, {"1", "0"}, {"0", "1"}})));
    CHECK(axis1.slices[1].value == Q("1"));
    CHECK(axis1.slices[1].projection.same_set(points({{"0", "1"}})));

    auto axis2 = slices(xi3, 2);
    REQUIRE(axis2.slices.size() == 2);
    CHECK(axis2.slices[0].projection.same_set(points({{"0", "0"}, {"0", "1"}, {"1", "1"}})));
    CHECK(axis2.slices[1].projection.same_set(points({{"0", "0"}})));

    auto lonely = slices(points({{"2", "7"}}), 2);
    REQUIRE(lonely.slices.size() == 1);
    CHECK(lonely.slices[0].value == Q("7"));
    CHECK(lonely.slices[0].projection.size() == 1);

    CHECK_THROWS_AS(slices(points({{"1"}}), 1), Error);
    CHECK_THROWS_AS(slices(xi3, 4), Error);
}

TEST_CASE("Cartesian recognition") {
    auto check = check_cartesian(cartesian_four_points());
    REQUIRE(check.description.has_value());
    CHECK(check.failing_axis == 0);
    CHECK(check.description->lower_set == ideal(2, {{0, 0}, {1, 0}, {2, 0}, {0, 1}}));
    CHECK(build_cartesian(*check.description).same_set(cartesian_four_points()));

    auto xi = check_cartesian(xi_family(3));
    CHECK_FALSE(xi.description.has_value());
    CHECK(xi.failing_axis == 3);

    auto diagonal = check_cartesian(points({{"0", "0"}, {"1", "1"}}));
    CHECK_FALSE(diagonal.description.has_value());
    CHECK(diagonal.failing_axis == 1);

    // dimension 1 is always Cartesian, with values sorted ascending
    auto line = check_cartesian(points({{"5"}, {"-1"}, {"3"}}));
    REQUIRE(line.description.has_value());
    CHECK(line.description->lower_set == ideal(1, {{0}, {1}, {2}}));
    CHECK(line.description->node_values[0] ==
          std::vector<Rational>{Q("-1"), Q("3"), Q("5")});

    // the paper's non-unique four-point set is not Cartesian either
    CHECK_FALSE(is_cartesian(perturbed_square()).has_value());
}

TEST_CASE("slice lower sets and the decomposition") {
    auto desc = sec2_description();

    auto axis2 = slice_lower_sets(desc, 2);
    REQUIRE(axis2.size() == 2);
    CHECK(axis2[0] == ideal(1, {{0}, {1}, {2}}));
    CHECK(axis2[1] == ideal(1, {{0}}));

    auto axis1 = slice_lower_sets(desc, 1);
    REQUIRE(axis1.size() == 3);
    CHECK(axis1[0] == ideal(1, {{0}, {1}}));
    CHECK(axis1[1] == ideal(1, {{0}}));
    CHECK(axis1[2] == ideal(1, {{0}}));

    auto lone = slice_lower_sets(
        CartesianDescription{ideal(2, {{0, 0}}), {{Q("1")}, {Q("2")}}}, 1);
    REQUIRE(lone.size() == 1);
    CHECK(lone[0] == ideal(1, {{0}}));

    auto grid = slice_lower_sets(
        CartesianDescription{ideal(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}}),
                             {{Q("0"), Q("1")}, {Q("0"), Q("1")}}},
        1);
    REQUIRE(grid.size() == 2);
    CHECK(grid[0] == ideal(1, {{0}, {1}}));
    CHECK(grid[1] == ideal(1, {{0}, {1}}));
}

TEST_CASE("the xi family") {
    auto xi3 = xi_family(3);
    CHECK(xi3.same_set(points({{"0", "0", "0"}, {"0", "1", "0"}, {"0", "0", "1"},
                               {"1", "0", "1"}})));
    auto xi4 = xi_family(4);
    CHECK(xi4.same_set(points({{"0", "0", "0", "0"},
                               {"0", "1", "0", "0"},
                               {"0", "0", "1", "0"},
                               {"1", "0", "1", "0"}})));
    CHECK_THROWS_AS(xi_family(2), Error);
}

TEST_CASE("round trip: build, recognize, rebuild") {
    Rng rng(20240904);
    for (int round = 0; round < 40; ++round) {
        const int d = uniform(rng, 1, 4);
        auto desc = random_cartesian(rng, d, 12);
        auto built = build_cartesian(desc);
        CHECK(built.size() == desc.lower_set.size());

        auto check = check_cartesian(built);
        REQUIRE(check.description.has_value());
        CHECK(build_cartesian(*check.description).same_set(built));
    }
}

TEST_CASE("slices of Cartesian sets are Cartesian with the projected lower sets") {
    Rng rng(4242);
    for (int round = 0; round < 25; ++round) {
        const int d = uniform(rng, 2, 4);
        auto desc = random_cartesian(rng, d, 12);
        auto built = build_cartesian(desc);
        auto recovered = check_cartesian(built);
        REQUIRE(recovered.description.has_value());
        // test against the recovered description, whose ranks match the
        // slice order used by slices()
        const auto& canon = *recovered.description;

        for (int axis = 1; axis <= d; ++axis) {
            auto family = slices(built, axis);
            auto lowers = slice_lower_sets(canon, axis);
            REQUIRE(family.slices.size() == lowers.size());
            for (std::size_t j = 0; j < lowers.size(); ++j) {
                auto inner = check_cartesian(family.slices[j].projection);
                REQUIRE(inner.description.has_value());
                CHECK(family.slices[j].projection.size() == lowers[j].size());
                CHECK(inner.description->lower_set == lowers[j]);
            }

            // decomposition: the union of lifted slice lower sets is A
            std::set<Exponent> rebuilt;
            for (std::size_t j = 0; j < lowers.size(); ++j)
                for (const auto& e : lowers[j].exponents())
                    rebuilt.insert(e.insert(axis - 1, static_cast<int>(j)));
            std::vector<Exponent> rebuilt_list(rebuilt.begin(), rebuilt.end());
            CHECK(rebuilt_list == canon.lower_set.exponents());
        }
    }
}

TEST_CASE("Cartesian sets have the unique quotient basis of their lower set") {
    Rng rng(909);
    for (int round = 0; round < 10; ++round) {
        const int d = uniform(rng, 1, 3);
        auto desc = random_cartesian(rng, d, 8);
        auto built = build_cartesian(desc);
        auto verdict = unique_quotient_basis(FunctionalSet::from_points(built));
        REQUIRE(verdict.unique);
        auto recovered = check_cartesian(built);
        CHECK(*verdict.basis == recovered.description->lower_set);
    }
}

TEST_CASE("in the plane, Cartesian and unique-basis coincide") {
    Rng rng(20240905);
    for (int round = 0; round < 40; ++round) {
        auto pts = random_point_set(rng, 2, uniform(rng, 1, 6));
        auto verdict = unique_quotient_basis(FunctionalSet::from_points(pts));
        CHECK(is_cartesian(pts).has_value() == verdict.unique);
    }
}

TEST_CASE("the xi family is never Cartesian but always unique") {
    for (int d = 3; d <= 5; ++d) {
        auto xi = xi_family(d);
        auto check = check_cartesian(xi);
        CHECK_FALSE(check.description.has_value());
        CHECK(check.failing_axis == 3);
        auto verdict = unique_quotient_basis(FunctionalSet::from_points(xi));
        REQUIRE(verdict.unique);
        std::vector<int> zero(d, 0);
        std::vector<Exponent> expected{Exponent(zero)};
        for (int i = 0; i < 3; ++i) expected.push_back(Exponent::unit(d, i));
        std::sort(expected.begin(), expected.end());
        CHECK(verdict.basis->exponents() == expected);
    }
}
