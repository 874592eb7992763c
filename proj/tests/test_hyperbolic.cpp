#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "regmap/hyperbolic.hpp"
#include "regmap/patterns.hpp"

using namespace regmap;

namespace {

bool near(double value, double expected, double tol = 1e-9) {
    return std::abs(value - expected) < tol;
}

std::vector<MapType> hyperbolic_sweep(int limit) {
    std::vector<MapType> types;
    for (int m = 2; m <= limit; ++m) {
        for (int n = 2; n <= limit; ++n) {
            const MapType t{m, n};
            if (is_hyperbolic_type(t)) {
                types.push_back(t);
            }
        }
    }
    return types;
}

const std::vector<LinkKind> kAllLinks = {
    LinkKind::l01,   LinkKind::l02,   LinkKind::l12,
    LinkKind::l0102, LinkKind::l0212, LinkKind::l010212,
};

}  // namespace

TEST_CASE("arcosh handles the boundary and stays accurate near 1") {
    CHECK(arcosh(1.0) == 0.0);
    CHECK_THROWS_AS(arcosh(0.999999), std::domain_error);
    CHECK_THROWS_AS(arcosh(-3.0), std::domain_error);
    CHECK_THROWS_AS(arcosh(std::nan("")), std::domain_error);

    for (double x : {1e-3, 0.5, 1.0, 2.0, 10.0, 40.0}) {
        CHECK(near(arcosh(std::cosh(x)), x, 1e-12 * std::max(1.0, x)));
    }

    // Just above 1 the answer is sqrt(2t) to leading order; the log1p
    // formulation keeps essentially full relative precision there.
    const double t = std::ldexp(1.0, -40);
    const double expected = std::sqrt(2.0 * t) * (1.0 - t / 12.0);
    CHECK(std::abs(arcosh(1.0 + t) / expected - 1.0) < 1e-12);

    CHECK(arcosh(2.0) < arcosh(3.0));
}

TEST_CASE("hyperbolicity is decided exactly by (m-2)(n-2) > 4") {
    CHECK(is_hyperbolic_type({3, 7}));
    CHECK(is_hyperbolic_type({7, 3}));
    CHECK(is_hyperbolic_type({4, 5}));
    CHECK(is_hyperbolic_type({5, 4}));
    CHECK(is_hyperbolic_type({4, 6}));
    CHECK(is_hyperbolic_type({8, 8}));
    CHECK(is_hyperbolic_type({3, 1000}));

    // Spherical and Euclidean types sit at or below the boundary.
    CHECK_FALSE(is_hyperbolic_type({3, 3}));
    CHECK_FALSE(is_hyperbolic_type({3, 4}));
    CHECK_FALSE(is_hyperbolic_type({4, 3}));
    CHECK_FALSE(is_hyperbolic_type({3, 5}));
    CHECK_FALSE(is_hyperbolic_type({5, 3}));
    CHECK_FALSE(is_hyperbolic_type({4, 4}));
    CHECK_FALSE(is_hyperbolic_type({3, 6}));
    CHECK_FALSE(is_hyperbolic_type({6, 3}));
    CHECK_FALSE(is_hyperbolic_type({2, 9}));
    CHECK_FALSE(is_hyperbolic_type({9, 2}));

    CHECK_THROWS_AS(is_hyperbolic_type({1, 7}), std::invalid_argument);
}

TEST_CASE("the (2,3,7) triangle reproduces the reference side lengths") {
    const TriangleSides s = triangle_sides({3, 7});
    CHECK(near(s.len12, 0.2831281533));
    CHECK(near(s.len01, 0.5452748317));
    CHECK(near(s.len02, 0.6206717375));
    CHECK(near(2.0 * (s.len01 + s.len02 + s.len12), 2.8981494452));
    CHECK(s.type.m == 3);
    CHECK(s.type.n == 7);
}

TEST_CASE("swapping m and n swaps the triangle legs and keeps the hypotenuse") {
    for (const MapType& t : hyperbolic_sweep(20)) {
        const TriangleSides s = triangle_sides(t);
        const TriangleSides d = triangle_sides({t.n, t.m});
        CHECK(s.len01 == d.len12);
        CHECK(s.len12 == d.len01);
        CHECK(s.len02 == d.len02);
    }
}

TEST_CASE("the side opposite the right angle is the longest and all sides are positive") {
    for (const MapType& t : hyperbolic_sweep(30)) {
        const TriangleSides s = triangle_sides(t);
        CHECK(s.len01 > 0.0);
        CHECK(s.len12 > 0.0);
        CHECK(s.len02 > std::max(s.len01, s.len12));
    }
}

TEST_CASE("the (2,3,7) triangle is the smallest hyperbolic triangle in the sweep") {
    const TriangleSides ref = triangle_sides({3, 7});
    const double ref_perimeter = ref.len01 + ref.len02 + ref.len12;
    for (const MapType& t : hyperbolic_sweep(50)) {
        if (t.m == 3 && t.n == 7) {
            continue;
        }
        if (t.m == 7 && t.n == 3) {
            continue;
        }
        const TriangleSides s = triangle_sides(t);
        CHECK(s.len01 + s.len02 + s.len12 > ref_perimeter);
    }
}

TEST_CASE("non-hyperbolic types are rejected") {
    CHECK_THROWS_AS(triangle_sides({4, 4}), std::domain_error);
    CHECK_THROWS_AS(triangle_sides({3, 6}), std::domain_error);
    CHECK_THROWS_AS(triangle_sides({3, 5}), std::domain_error);
    CHECK_THROWS_AS(triangle_sides({2, 100}), std::domain_error);
    CHECK_THROWS_AS(triangle_sides({0, 7}), std::invalid_argument);
}

TEST_CASE("cycle length is invariant under rotation and reversal") {
    const TriangleSides s = triangle_sides({3, 7});
    const std::string base = "010212";
    const double reference = cycle_length(base, s);
    CHECK(near(reference, 2.0 * (s.len01 + s.len02 + s.len12), 1e-12));
    for (std::size_t shift = 1; shift < base.size(); ++shift) {
        const std::string rotated = base.substr(shift) + base.substr(0, shift);
        CHECK(near(cycle_length(rotated, s), reference, 1e-12));
        const std::string reversed(rotated.rbegin(), rotated.rend());
        CHECK(near(cycle_length(reversed, s), reference, 1e-12));
    }
}

TEST_CASE("each link period sums the sides it crosses") {
    const TriangleSides s = triangle_sides({4, 6});
    CHECK(near(cycle_length("01", s), 2.0 * s.len01, 1e-12));
    CHECK(near(cycle_length("02", s), 2.0 * s.len02, 1e-12));
    CHECK(near(cycle_length("12", s), 2.0 * s.len12, 1e-12));
    CHECK(near(cycle_length("0102", s), 2.0 * (s.len01 + s.len02), 1e-12));
    CHECK(near(cycle_length("0212", s), 2.0 * (s.len02 + s.len12), 1e-12));
}

TEST_CASE("malformed label sequences are rejected") {
    const TriangleSides s = triangle_sides({3, 7});
    CHECK_THROWS_AS(cycle_length("", s), std::invalid_argument);
    CHECK_THROWS_AS(cycle_length("0", s), std::invalid_argument);
    CHECK_THROWS_AS(cycle_length("00", s), std::invalid_argument);
    CHECK_THROWS_AS(cycle_length("0110", s), std::invalid_argument);
    CHECK_THROWS_AS(cycle_length("013", s), std::invalid_argument);
}

TEST_CASE("Hurwitz mirror lengths match the reference decimals") {
    CHECK(near(mirror_length(LinkKind::l010212, 1, {3, 7}), 2.8981494452));
    CHECK(near(mirror_length(LinkKind::l010212, 2, {3, 7}), 5.7962988904));
    CHECK(near(mirror_length(LinkKind::l010212, 3, {3, 7}), 8.6944483356));
}

TEST_CASE("mirror length scales linearly in the link index") {
    const double one = mirror_length(LinkKind::l12, 1, {4, 5});
    CHECK(one > 0.0);
    for (long long k = 2; k <= 9; ++k) {
        CHECK(mirror_length(LinkKind::l12, k, {4, 5}) == static_cast<double>(k) * one);
    }
}

TEST_CASE("mirror length commutes with duality") {
    for (const MapType& t : hyperbolic_sweep(20)) {
        for (LinkKind k : kAllLinks) {
            if (!link_admissible(k, t)) {
                continue;
            }
            const MapType swapped{t.n, t.m};
            CHECK(link_admissible(dual_link(k), swapped));
            CHECK(near(mirror_length(k, 3, t), mirror_length(dual_link(k), 3, swapped), 1e-12));
        }
    }
}

TEST_CASE("mirror length validates its inputs") {
    CHECK_THROWS_AS(mirror_length(LinkKind::l01, 2, {3, 7}), std::invalid_argument);
    CHECK_THROWS_AS(mirror_length(LinkKind::l010212, 1, {4, 5}), std::invalid_argument);
    CHECK_THROWS_AS(mirror_length(LinkKind::l02, 1, {4, 5}), std::invalid_argument);
    CHECK_THROWS_AS(mirror_length(LinkKind::l12, 0, {4, 5}), std::invalid_argument);
    CHECK_THROWS_AS(mirror_length(LinkKind::l12, -2, {4, 5}), std::invalid_argument);
    // Admissible pairing on a non-hyperbolic map still has no length.
    CHECK_THROWS_AS(mirror_length(LinkKind::l01, 1, {4, 4}), std::domain_error);
    CHECK_THROWS_AS(mirror_length(LinkKind::l12, 1, {4, 3}), std::domain_error);
}

TEST_CASE("link admissibility follows the parity table") {
    const MapType odd_odd{3, 7};
    const MapType even_even{4, 8};
    const MapType even_odd{4, 7};
    const MapType odd_even{3, 8};

    CHECK(link_admissible(LinkKind::l010212, odd_odd));
    CHECK(link_admissible(LinkKind::l01, even_even));
    CHECK(link_admissible(LinkKind::l02, even_even));
    CHECK(link_admissible(LinkKind::l12, even_even));
    CHECK(link_admissible(LinkKind::l0102, even_odd));
    CHECK(link_admissible(LinkKind::l12, even_odd));
    CHECK(link_admissible(LinkKind::l01, odd_even));
    CHECK(link_admissible(LinkKind::l0212, odd_even));

    // Exactly the listed links are admissible in each parity class, and
    // the admissible set matches whether a mirror word can be built.
    for (const MapType& t : {odd_odd, even_even, even_odd, odd_even}) {
        for (LinkKind k : kAllLinks) {
            if (link_admissible(k, t)) {
                CHECK_NOTHROW(mirror_automorphism_word(k, t));
            } else {
                CHECK_THROWS_AS(mirror_automorphism_word(k, t), std::invalid_argument);
            }
        }
        int admissible = 0;
        for (LinkKind k : kAllLinks) {
            admissible += link_admissible(k, t) ? 1 : 0;
        }
        const bool both_even = t.m % 2 == 0 && t.n % 2 == 0;
        CHECK(admissible == (both_even ? 3 : (t.m % 2 == 0 || t.n % 2 == 0 ? 2 : 1)));
    }
}
