#include "d2dbound/bounds.hpp"

#include "d2dbound/errors.hpp"
#include "d2dbound/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace d2d {

KThresholds k_thresholds(double g_b_m, double r_cell_m)
{
    if (!(g_b_m > 0.0) || g_b_m > r_cell_m) {
        throw DomainError("k_thresholds: need 0 < g_b <= r_cell");
    }
    return {(r_cell_m - g_b_m) / (r_cell_m + g_b_m), (r_cell_m - g_b_m) / g_b_m};
}

std::string_view to_string(AreaCase c)
{
    switch (c) {
    case AreaCase::FullRing: return "full-ring";
    case AreaCase::InnerCross: return "inner-cross";
    case AreaCase::Interior: return "interior";
    case AreaCase::OuterCross: return "outer-cross";
    case AreaCase::DoubleCross: return "double-cross";
    }
    return "full-ring";
}

std::string_view to_string(KRegime r)
{
    switch (r) {
    case KRegime::Low: return "k<=kth1";
    case KRegime::Mid: return "kth1<k<=kth2";
    case KRegime::High: return "k>kth2";
    }
    return "k<=kth1";
}

double ring_area(const GuardDistances& gd)
{
    return std::numbers::pi * (gd.r_out * gd.r_out - gd.r_in * gd.r_in);
}

double shrunk_impact_radius(const GuardDistances& gd, double d_cb_m)
{
    return std::max(0.0, gd.k * d_cb_m - gd.g_d / 2.0);
}

double flat_region_end(const GuardDistances& gd)
{
    const double impact_starts = gd.k > 0.0 ? gd.g_d / (2.0 * gd.k) : std::numeric_limits<double>::infinity();
    return std::max(gd.g_b / (1.0 + gd.k), impact_starts);
}

namespace {

// d_cb at which the impact disk's near edge clears the guard disk; infinite for K >= 1.
double leave_guard_point(double g_b, double k)
{
    return k < 1.0 ? g_b / (1.0 - k) : std::numeric_limits<double>::infinity();
}

} // namespace

DeployableArea deployable_area(double d_cb_m, const GuardDistances& gd, const CellConfig& cell)
{
    const double r_c = cell.r_cell_m;
    if (!(d_cb_m >= 0.0) || d_cb_m > r_c) {
        throw DomainError("deployable_area: d_cb must lie in [0, r_cell], got " + std::to_string(d_cb_m));
    }
    const double k = gd.k;
    const double s_r = ring_area(gd);
    const double r_cue = shrunk_impact_radius(gd, d_cb_m);
    const double pi_r2 = std::numbers::pi * r_cue * r_cue;
    auto f_in = [&] { return intersection_area(gd.r_in, r_cue, d_cb_m); };
    auto f_out = [&] { return intersection_area(gd.r_out, r_cue, d_cb_m); };

    const auto [k_th1, k_th2] = k_thresholds(gd.g_b, r_c);
    const double enter_guard = gd.g_b / (1.0 + k);
    const double reach_edge = r_c / (1.0 + k);
    const double leave_guard = leave_guard_point(gd.g_b, k);

    DeployableArea out;
    out.regime = k <= k_th1 ? KRegime::Low : (k <= k_th2 ? KRegime::Mid : KRegime::High);

    auto set = [&](AreaCase c, double area) {
        out.case_label = c;
        out.area_m2 = std::clamp(area, 0.0, s_r);
        return out;
    };

    // Intervals are tested in listing order; a tie goes to the earlier case.
    if (d_cb_m <= enter_guard) return set(AreaCase::FullRing, s_r);

    switch (out.regime) {
    case KRegime::Low:
        if (d_cb_m <= leave_guard) return set(AreaCase::InnerCross, s_r - pi_r2 + f_in());
        if (d_cb_m <= reach_edge) return set(AreaCase::Interior, s_r - pi_r2);
        return set(AreaCase::OuterCross, s_r - f_out());
    case KRegime::Mid:
        if (d_cb_m < reach_edge) return set(AreaCase::InnerCross, s_r - pi_r2 + f_in());
        if (d_cb_m < leave_guard) return set(AreaCase::DoubleCross, s_r + f_in() - f_out());
        return set(AreaCase::OuterCross, s_r - f_out());
    case KRegime::High:
        if (d_cb_m < reach_edge) return set(AreaCase::InnerCross, s_r - pi_r2 + f_in());
        return set(AreaCase::DoubleCross, s_r + f_in() - f_out());
    }
    return out;
}

double pair_capacity(const DeployableArea& area, double r_e_m)
{
    if (!(r_e_m > 0.0)) throw DomainError("pair_capacity: ER radius must be positive");
    return area.area_m2 / (2.0 * std::numbers::sqrt3 * r_e_m * r_e_m);
}

ThroughputBounds throughput_bounds(const DeployableArea& area, const GuardDistances& gd,
                                   const CellConfig& cell, double bitrate_bps)
{
    auto bound = [&](double link_m) {
        const double span = gd.g_d + link_m;
        return 2.0 * bitrate_bps * area.area_m2 / (std::numbers::sqrt3 * span * span);
    };
    return {bound(cell.d_min_m), bound(cell.d_max_m)};
}

double packing_upper_bound(int layout_total, double bitrate_bps) { return layout_total * bitrate_bps; }

} // namespace d2d
