#include "d2dbound/errors.hpp"
#include "d2dbound/geometry.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

using namespace d2d;
using std::numbers::pi;

TEST(Chord, Cases)
{
    EXPECT_DOUBLE_EQ(chord_abscissa(3.0, 3.0, 3.0), 1.5);
    EXPECT_DOUBLE_EQ(chord_abscissa(2.0, 1.0, 2.5), 1.85);
    EXPECT_DOUBLE_EQ(chord_abscissa(2.0, 1.0, 3.0), 2.0); // tangency
    EXPECT_THROW(chord_abscissa(2.0, 1.0, 3.5), DomainError);
    EXPECT_THROW(chord_abscissa(2.0, 1.0, 0.0), DomainError);
}

TEST(Arc, Cases)
{
    EXPECT_DOUBLE_EQ(arc_length(2.0, 1.0, 3.0), 0.0);
    for (double R : {1.0, 3.0, 7.5}) {
        const double d = 5.0;
        EXPECT_DOUBLE_EQ(arc_length(R, d, d), 2.0 * R * std::acos(R / (2.0 * d)));
    }
    // mpmath, 40 digits
    EXPECT_NEAR(arc_length(253.0, 90.0, 254.0), 180.59117261355390, 1e-10);
    EXPECT_THROW(arc_length(2.0, 1.0, 5.0), DomainError);
}

TEST(Arc, TangencyWithinSlackIsClamped)
{
    const double R = 1.0 / 3.0, r = 2.0 / 3.0;
    EXPECT_NO_THROW(arc_length(R, r, R + r));
    EXPECT_GE(arc_length(R, r, R + r), 0.0);
}

TEST(Segment, Cases)
{
    EXPECT_DOUBLE_EQ(segment_area(2.0, 2.0), 0.0);
    EXPECT_DOUBLE_EQ(segment_area(2.0, 0.0), pi * 4.0 / 2.0);
    EXPECT_DOUBLE_EQ(segment_area(2.0, -2.0), pi * 4.0);
    EXPECT_THROW(segment_area(2.0, 2.5), DomainError);
}

TEST(Intersection, Cases)
{
    EXPECT_EQ(intersection_area(1.0, 1.0, 2.0), 0.0);
    EXPECT_DOUBLE_EQ(intersection_area(2.0, 1.0, 0.5), pi);
    EXPECT_DOUBLE_EQ(intersection_area(1.5, 1.5, 0.0), pi * 2.25);
    EXPECT_EQ(intersection_area(0.0, 4.0, 1.0), 0.0);
    const Circle a{1.0, 1.0, 2.0}, b{3.5, 1.0, 1.0};
    EXPECT_DOUBLE_EQ(intersection_area(a, b), intersection_area(2.0, 1.0, 2.5));
}

TEST(Intersection, MonteCarloAgreement)
{
    std::mt19937_64 rng(7);
    const auto est = oracle::lens_area_mc(2.0, 1.0, 2.5, 10'000'000, rng);
    EXPECT_NEAR(intersection_area(2.0, 1.0, 2.5) / est.value, 1.0, 1e-3);
}

TEST(Intersection, SymmetryBoundsMonotone)
{
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(0.0, 10.0);
    for (int t = 0; t < 2000; ++t) {
        const double R = u(rng), r = u(rng);
        double last = std::numeric_limits<double>::infinity();
        for (double d = 0.0; d <= R + r + 1.0; d += (R + r + 1.0) / 50.0) {
            const double f = intersection_area(R, r, d);
            EXPECT_EQ(f, intersection_area(r, R, d));
            EXPECT_GE(f, 0.0);
            EXPECT_LE(f, pi * std::min(R, r) * std::min(R, r) * (1.0 + 1e-12));
            EXPECT_LE(f, last + 1e-9);
            last = f;
        }
    }
}

TEST(Intersection, ContinuousAtCaseBoundaries)
{
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> u(0.1, 10.0);
    for (int t = 0; t < 500; ++t) {
        const double R = u(rng), r = u(rng);
        const double scale = pi * std::min(R, r) * std::min(R, r);
        const double eps = 1e-12 * (R + r);
        EXPECT_NEAR(intersection_area(R, r, R + r - eps), 0.0, 1e-9 * scale);
        const double diff = std::abs(R - r);
        if (diff > 1e-6) {
            EXPECT_NEAR(intersection_area(R, r, diff + eps), scale, 1e-9 * scale);
        }
    }
}
