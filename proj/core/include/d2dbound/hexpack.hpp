#pragma once

#include "d2dbound/propagation.hpp"

#include <vector>

namespace d2d {

/// Two hexagons standing in for the BS guard disk and the cell disk.
/// The ring between them consists of six isosceles trapezoids whose total
/// area equals the annulus between G_B and r_C.
struct HexApprox {
    double inner_side_m = 0.0; // circumscribes the guard disk
    double outer_side_m = 0.0; // equal-area outer hexagon
};

HexApprox hex_radii(double g_b_m, double r_cell_m);

/// ER counts of one layer in a third of the ring. `inner_count` ERs sit on the
/// side that excludes the shared boundary, `outer_count` on the side that
/// includes it. `base_distance_m` is the BS distance of the on-boundary ER.
struct LayerCounts {
    int inner_count = 0;
    int outer_count = 0;
    double base_distance_m = 0.0;
};

struct PackingLayout {
    double er_radius_m = 0.0;
    std::vector<LayerCounts> layers;

    int n_layers() const { return static_cast<int>(layers.size()); }
};

int layer_count(const HexApprox& hex, double d_min_m, double r_e_min_m);

/// Layer `i` is 1-based and must not exceed layer_count().
LayerCounts layer_pairs(int i, const HexApprox& hex, double d_min_m, double r_e_min_m);

PackingLayout build_layout(const HexApprox& hex, double d_min_m, double r_e_min_m);

/// Three times the per-third ER count.
int total_pairs(const PackingLayout& layout);

/// Interference power (mW) accumulated at the BS from every ER centre in the layout.
double bs_interference(const PackingLayout& layout, double p_due_mw, const PathLossModel& pl_bs);

/// Number of minimum-size ERs ringing a maximum-size ER.
int first_layer_neighbors(double g_d_m, double r_e_min_m, double r_e_max_m);

} // namespace d2d
