#pragma once

#include "d2dbound/hexpack.hpp"
#include "d2dbound/propagation.hpp"

namespace d2d {

struct GuardDistances {
    double g_d = 0.0;     // DUE receiver to other DUE transmitters
    double k = 0.0;       // CUE guard scale, G_C = k * d_cb
    double g_b = 0.0;     // BS to DUE transmitters
    int n_s = 0;          // first-layer neighbours used for g_d
    double r_e_min = 0.0; // (g_d + d_min) / 2
    double r_e_max = 0.0; // (g_d + d_max) / 2
    double r_in = 0.0;    // g_b - g_d / 2
    double r_out = 0.0;   // r_cell + g_d / 2

    double g_c(double d_cb_m) const { return k * d_cb_m; }

    /// Fills the four derived radii from g_d, g_b and the cell.
    static GuardDistances make(double g_d, double k, double g_b, int n_s, const CellConfig& cell);
};

/// G_D that protects a d_max link against `n_s` interferers at distance G_D.
/// Throws NoiseLimited when R_b is unreachable at d_max even without interference.
double gd_for_neighbors(const RadioConfig& radio, const CellConfig& cell, int n_s);

struct GdSolution {
    double g_d = 0.0;
    int n_s = 0;
    int iterations = 0;
    bool two_cycle = false;
};

/// Fixed point of G_D(n_s) and n_s(G_D), starting from n_s = 6. A 2-cycle
/// resolves to the larger neighbour count.
GdSolution solve_gd(const RadioConfig& radio, const CellConfig& cell);

double compute_k(const RadioConfig& radio, const CellConfig& cell);

double compute_gc(double k, double d_cb_m);

struct GbSolution {
    double g_b = 0.0;
    bool lower_clamped = false; // feasible already at g_d / 2
    PackingLayout layout;
    double interference_mw = 0.0;
    int probes = 0;
};

inline constexpr double kGuardTolerance = 1e-3;

/// Smallest G_B in [g_d/2, r_C] meeting the BS SIR threshold, to kGuardTolerance.
/// Throws Infeasible if only an empty ring satisfies the threshold.
GbSolution solve_gb(const RadioConfig& radio, const CellConfig& cell, double g_d);

/// BS interference when the ring starts at `g_b`; the layout is empty once g_b >= r_C.
PackingLayout layout_at(const CellConfig& cell, double g_b, double g_d);

struct GuardSolution {
    GuardDistances distances;
    GdSolution gd;
    GbSolution gb;
};

GuardSolution solve_guards(const RadioConfig& radio, const CellConfig& cell);

inline GuardDistances guard_distances(const RadioConfig& radio, const CellConfig& cell)
{
    return solve_guards(radio, cell).distances;
}

} // namespace d2d
