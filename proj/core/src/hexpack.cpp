#include "d2dbound/hexpack.hpp"

#include "d2dbound/errors.hpp"
#include "d2dbound/geometry.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace d2d {

namespace {

constexpr double kSqrt3 = std::numbers::sqrt3;
constexpr double kPi = std::numbers::pi;

int floor_count(double x) { return static_cast<int>(std::floor(x)); }

} // namespace

HexApprox hex_radii(double g_b_m, double r_cell_m)
{
    if (!(g_b_m >= 0.0) || !(g_b_m < r_cell_m)) {
        throw DomainError("hex_radii: need 0 <= g_b < r_cell, got g_b = " + std::to_string(g_b_m));
    }
    HexApprox hex;
    hex.inner_side_m = 2.0 * g_b_m / kSqrt3;
    hex.outer_side_m = std::numbers::sqrt2 / 3.0 *
        std::sqrt(kSqrt3 * kPi * r_cell_m * r_cell_m - (kSqrt3 * kPi - 6.0) * g_b_m * g_b_m);
    return hex;
}

int layer_count(const HexApprox& hex, double d_min_m, double r_e_min_m)
{
    const double width = hex.outer_side_m - hex.inner_side_m - d_min_m;
    return std::max(0, floor_count(width / (2.0 * r_e_min_m)) + 1);
}

LayerCounts layer_pairs(int i, const HexApprox& hex, double d_min_m, double r_e_min_m)
{
    const int n_layers = layer_count(hex, d_min_m, r_e_min_m);
    if (i < 1 || i > n_layers) {
        throw DomainError("layer_pairs: layer " + std::to_string(i) + " outside [1, " +
                          std::to_string(n_layers) + "]");
    }
    const double step = 2.0 * r_e_min_m;
    const double base = hex.inner_side_m + d_min_m / 2.0;

    LayerCounts layer;
    layer.inner_count = std::max(0, floor_count((base + (2 * i - 3) * r_e_min_m) / step));
    layer.outer_count = floor_count((base + 2 * (i - 1) * r_e_min_m) / step) + 1;
    layer.base_distance_m = base + (i - 1) * step;
    return layer;
}

PackingLayout build_layout(const HexApprox& hex, double d_min_m, double r_e_min_m)
{
    if (!(r_e_min_m > 0.0)) throw DomainError("build_layout: ER radius must be positive");
    PackingLayout layout;
    layout.er_radius_m = r_e_min_m;
    const int n_layers = layer_count(hex, d_min_m, r_e_min_m);
    layout.layers.reserve(static_cast<std::size_t>(n_layers));
    for (int i = 1; i <= n_layers; ++i) {
        layout.layers.push_back(layer_pairs(i, hex, d_min_m, r_e_min_m));
    }
    return layout;
}

int total_pairs(const PackingLayout& layout)
{
    int per_third = 0;
    for (const auto& layer : layout.layers) per_third += layer.inner_count + layer.outer_count;
    return 3 * per_third;
}

double bs_interference(const PackingLayout& layout, double p_due_mw, const PathLossModel& pl_bs)
{
    const double step = 2.0 * layout.er_radius_m;
    // Law of cosines with a 60 degree angle between the two offsets.
    auto gain_at = [&](double ki, double kj) {
        return pl_bs.gain(std::sqrt(ki * ki + kj * kj - ki * kj));
    };

    double per_third = 0.0;
    for (const auto& layer : layout.layers) {
        const double ki = layer.base_distance_m;
        for (int j = 1; j <= layer.inner_count; ++j) per_third += gain_at(ki, j * step);
        for (int k = 1; k <= layer.outer_count; ++k) per_third += gain_at(ki, (k - 1) * step);
    }
    return 3.0 * per_third * p_due_mw;
}

int first_layer_neighbors(double g_d_m, double r_e_min_m, double r_e_max_m)
{
    if (!(g_d_m > 0.0)) throw DomainError("first_layer_neighbors: g_d must be positive");
    const double ring = r_e_max_m + g_d_m / 2.0;
    const double arc = arc_length(ring, r_e_min_m, r_e_min_m + r_e_max_m);
    if (!(arc > 0.0)) {
        throw DomainError("first_layer_neighbors: degenerate neighbour ring (zero arc length)");
    }
    return floor_count(2.0 * kPi * ring / arc);
}

} // namespace d2d
