#pragma once

#include "d2dbound/guard.hpp"

#include <string_view>

namespace d2d {

struct KThresholds {
    double k_th1 = 0.0; // largest K that never double-crosses
    double k_th2 = 0.0; // beyond this, double-crossing lasts to the cell edge
};

KThresholds k_thresholds(double g_b_m, double r_cell_m);

enum class AreaCase { FullRing, InnerCross, Interior, OuterCross, DoubleCross };
enum class KRegime { Low, Mid, High };

std::string_view to_string(AreaCase c);
std::string_view to_string(KRegime r);

/// Ring area left for ER centres once the CUE impact disk is removed.
struct DeployableArea {
    double area_m2 = 0.0;
    AreaCase case_label = AreaCase::FullRing;
    KRegime regime = KRegime::Low;
};

/// Full ring area pi (r_out^2 - r_in^2).
double ring_area(const GuardDistances& gd);

/// Radius of the CUE impact disk grown by the hard-core margin, K d_cb - G_D/2, floored at 0.
double shrunk_impact_radius(const GuardDistances& gd, double d_cb_m);

/// Largest d_cb at which S_D is still the full ring. The clamp on the shrunk
/// radius keeps the area flat until both K d_cb > G_D/2 and the disk reaches the ring.
double flat_region_end(const GuardDistances& gd);

DeployableArea deployable_area(double d_cb_m, const GuardDistances& gd, const CellConfig& cell);

/// Real-valued hexagon-packing estimate area / (2 sqrt(3) r_e^2).
double pair_capacity(const DeployableArea& area, double r_e_m);

struct ThroughputBounds {
    double t_upper_bps = 0.0;
    double t_lower_bps = 0.0;
};

ThroughputBounds throughput_bounds(const DeployableArea& area, const GuardDistances& gd,
                                   const CellConfig& cell, double bitrate_bps);

/// Upper bound from the integer layered packing count.
double packing_upper_bound(int layout_total, double bitrate_bps);

} // namespace d2d
