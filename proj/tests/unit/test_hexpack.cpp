#include "d2dbound/errors.hpp"
#include "d2dbound/hexpack.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace d2d;
using std::numbers::pi;
using std::numbers::sqrt3;

namespace {

constexpr double kGd = 192.52536783902982; // zero-noise fixed point at the default radio
constexpr double kReMin = (kGd + 2.0) / 2.0;

HexApprox hex_with_gap(double gap)
{
    return {100.0, 100.0 + gap};
}

} // namespace

TEST(HexRadii, Limits)
{
    const auto h0 = hex_radii(0.0, 500.0);
    EXPECT_EQ(h0.inner_side_m, 0.0);
    EXPECT_NEAR(h0.outer_side_m, 500.0 * std::sqrt(2.0 * sqrt3 * pi) / 3.0, 1e-9);
    const auto h = hex_radii(500.0 * sqrt3 / 2.0, 500.0);
    EXPECT_NEAR(h.inner_side_m, 500.0, 1e-12);
    EXPECT_THROW(hex_radii(500.0, 500.0), DomainError);
    EXPECT_THROW(hex_radii(-1.0, 500.0), DomainError);
}

TEST(HexRadii, PinnedValue)
{
    // mpmath, 40 digits
    const auto h = hex_radii(300.0, 500.0);
    EXPECT_NEAR(h.inner_side_m, 346.41016151377546, 1e-10);
    EXPECT_NEAR(h.outer_side_m, 559.88564206004000, 1e-10);
}

TEST(HexRadii, AreaIdentity)
{
    for (double gb = 0.0; gb < 500.0; gb += 7.3) {
        const auto h = hex_radii(gb, 500.0);
        const double hexring = 1.5 * sqrt3 * (h.outer_side_m * h.outer_side_m - h.inner_side_m * h.inner_side_m);
        EXPECT_NEAR(hexring / (pi * (500.0 * 500.0 - gb * gb)), 1.0, 1e-9);
        EXPECT_GT(h.outer_side_m, h.inner_side_m);
    }
}

TEST(Layers, Count)
{
    EXPECT_EQ(layer_count(hex_with_gap(2.0), 2.0, 10.0), 1);
    EXPECT_EQ(layer_count(hex_with_gap(2.0 + 40.0), 2.0, 10.0), 3);
    EXPECT_EQ(layer_count(hex_with_gap(1.0), 2.0, 10.0), 0);
}

TEST(Layers, PairsDegenerateInner)
{
    const HexApprox h{0.0, 50.0};
    const auto l = layer_pairs(1, h, 0.0, 10.0);
    EXPECT_EQ(l.inner_count, 0);
    EXPECT_EQ(l.outer_count, 1);
    EXPECT_THROW(layer_pairs(0, h, 0.0, 10.0), DomainError);
    EXPECT_THROW(layer_pairs(layer_count(h, 0.0, 10.0) + 1, h, 0.0, 10.0), DomainError);
}

TEST(Layers, CountsDifferByOneOrTwo)
{
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> gb(1.0, 420.0), re(5.0, 120.0);
    for (int t = 0; t < 300; ++t) {
        const auto hex = hex_radii(gb(rng), 500.0);
        const double r = re(rng);
        const auto layout = build_layout(hex, 2.0, r);
        for (int i = 0; i < layout.n_layers(); ++i) {
            const auto& l = layout.layers[static_cast<std::size_t>(i)];
            const int gap = l.outer_count - l.inner_count;
            EXPECT_TRUE(gap == 1 || gap == 2) << gap;
            EXPECT_GE(l.inner_count, 0);
            if (i > 0) {
                EXPECT_NEAR(l.base_distance_m - layout.layers[static_cast<std::size_t>(i - 1)].base_distance_m, 2.0 * r, 1e-12 * l.base_distance_m);
            }
        }
    }
}

TEST(Layers, DefaultTable)
{
    // Python, 40-digit evaluation of the layer formulas
    struct Row {
        int inner, outer;
        double base;
    };
    const Row expect100[] = {{0, 1, 116.47005383792515}, {1, 2, 310.995421676955}, {2, 3, 505.5207895159848}};
    const auto layout = build_layout(hex_radii(100.0, 500.0), 2.0, kReMin);
    ASSERT_EQ(layout.n_layers(), 3);
    for (int i = 0; i < 3; ++i) {
        const auto& l = layout.layers[static_cast<std::size_t>(i)];
        EXPECT_EQ(l.inner_count, expect100[i].inner);
        EXPECT_EQ(l.outer_count, expect100[i].outer);
        EXPECT_NEAR(l.base_distance_m, expect100[i].base, 1e-8);
    }
    EXPECT_EQ(total_pairs(layout), 27);
    EXPECT_EQ(total_pairs(build_layout(hex_radii(200.0, 500.0), 2.0, kReMin)), 18);
    EXPECT_EQ(total_pairs(build_layout(hex_radii(400.0, 500.0), 2.0, kReMin)), 12);
}

TEST(Layers, TotalIsThreeTimesSum)
{
    PackingLayout one{10.0, {{2, 3, 50.0}}};
    EXPECT_EQ(total_pairs(one), 15);
    EXPECT_EQ(total_pairs(PackingLayout{}), 0);
}

TEST(Layers, TotalNonIncreasingInErRadius)
{
    for (double gb : {0.0, 50.0, 150.0, 300.0}) {
        const auto hex = hex_radii(gb, 500.0);
        int prev = 1 << 30;
        for (double r = 2.0; r < 300.0; r += 0.5) {
            const int n = total_pairs(build_layout(hex, 2.0, r));
            EXPECT_LE(n, prev) << gb << " " << r;
            prev = n;
        }
    }
}

TEST(Interference, TrivialCases)
{
    EXPECT_EQ(bs_interference(PackingLayout{}, 0.7, kDefaultBsPathLoss), 0.0);
    // One on-boundary ER per third.
    PackingLayout l{10.0, {{0, 1, 80.0}}};
    EXPECT_NEAR(bs_interference(l, 0.7, kDefaultBsPathLoss) / (3.0 * kDefaultBsPathLoss.gain(80.0) * 0.7), 1.0, 1e-12);
}

TEST(Interference, ExplicitCoordinatesAtDefaults)
{
    const auto layout = build_layout(hex_radii(400.0, 500.0), 2.0, kReMin);
    const auto pts = oracle::packing_centres(400.0, 500.0, 2.0, kReMin);
    ASSERT_EQ(static_cast<int>(pts.size()), total_pairs(layout));
    const double brute = oracle::power_at_origin(pts, 0.7, 3.76, -15.3);
    EXPECT_NEAR(bs_interference(layout, 0.7, kDefaultBsPathLoss) / brute, 1.0, 1e-9);
}

TEST(Interference, ExplicitCoordinatesRandom)
{
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> gb(5.0, 430.0), re(3.0, 90.0), pw(0.01, 20.0), al(2.0, 4.5);
    for (int t = 0; t < 100; ++t) {
        const double g = gb(rng), r = re(rng), p = pw(rng);
        const PathLossModel pl{al(rng), -15.3};
        const auto layout = build_layout(hex_radii(g, 500.0), 2.0, r);
        const auto pts = oracle::packing_centres(g, 500.0, 2.0, r);
        ASSERT_EQ(static_cast<int>(pts.size()), total_pairs(layout));
        if (pts.empty()) continue;
        const double brute = oracle::power_at_origin(pts, p, pl.exponent, pl.intercept_db);
        EXPECT_NEAR(bs_interference(layout, p, pl) / brute, 1.0, 1e-9);
    }
}

TEST(Neighbours, EqualDisksGiveSix)
{
    EXPECT_EQ(first_layer_neighbors(2.0, 1.0, 1.0), 6);
}

TEST(Neighbours, SmallerNeighboursPackDenser)
{
    // Below g_d / 4 the small ER no longer reaches the neighbour ring.
    int prev = 0;
    for (double remin = 171.0; remin > 49.0; remin -= 0.5) {
        const int n = first_layer_neighbors(192.5, remin, 171.26);
        EXPECT_GE(n, prev);
        prev = n;
    }
    EXPECT_GT(prev, 6);
    EXPECT_THROW(first_layer_neighbors(0.0, 1.0, 2.0), DomainError);
}

TEST(Neighbours, DefaultFixedPoint)
{
    EXPECT_EQ(first_layer_neighbors(kGd, kReMin, (kGd + 150.0) / 2.0), 8);
}
