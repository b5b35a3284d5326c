#include "d2dbound/guard.hpp"

#include "d2dbound/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

namespace d2d {

GuardDistances GuardDistances::make(double g_d, double k, double g_b, int n_s, const CellConfig& cell)
{
    GuardDistances out;
    out.g_d = g_d;
    out.k = k;
    out.g_b = g_b;
    out.n_s = n_s;
    out.r_e_min = (g_d + cell.d_min_m) / 2.0;
    out.r_e_max = (g_d + cell.d_max_m) / 2.0;
    out.r_in = g_b - g_d / 2.0;
    out.r_out = cell.r_cell_m + g_d / 2.0;
    return out;
}

double gd_for_neighbors(const RadioConfig& radio, const CellConfig& cell, int n_s)
{
    if (n_s < 0) throw DomainError("gd_for_neighbors: negative neighbour count");
    const double q = radio.shannon_sir();
    const double beta = radio.pl_due.beta();
    const double alpha = radio.pl_due.exponent;
    const double signal = beta * radio.p_due_mw;
    const double noise_term = noise_power(radio) * std::pow(cell.d_max_m, alpha) * q;
    const double denom = signal - noise_term;
    if (!(denom > 0.0)) {
        throw NoiseLimited(
            "bit rate " + std::to_string(radio.bitrate_bps) + " bps is unreachable at d_max = " +
            std::to_string(cell.d_max_m) + " m even without interference: received DUE power " +
            std::to_string(mw_to_dbm(radio.pl_due.gain(cell.d_max_m) * radio.p_due_mw)) +
            " dBm against noise " + std::to_string(mw_to_dbm(noise_power(radio))) +
            " dBm (noise_mode " + std::string(to_string(radio.noise_mode)) + ")");
    }
    return cell.d_max_m * std::pow(signal * n_s * q / denom, 1.0 / alpha);
}

GdSolution solve_gd(const RadioConfig& radio, const CellConfig& cell)
{
    constexpr int kMaxIterations = 64;
    auto neighbours_of = [&](double g_d) {
        return first_layer_neighbors(g_d, (g_d + cell.d_min_m) / 2.0, (g_d + cell.d_max_m) / 2.0);
    };

    int previous = -1;
    int n_s = 6;
    for (int iter = 1; iter <= kMaxIterations; ++iter) {
        const double g_d = gd_for_neighbors(radio, cell, n_s);
        const int next = neighbours_of(g_d);
        if (next == n_s) return {g_d, n_s, iter, false};
        if (next == previous) {
            const int larger = std::max(n_s, next);
            return {gd_for_neighbors(radio, cell, larger), larger, iter, true};
        }
        previous = n_s;
        n_s = next;
    }
    throw NonConvergent("solve_gd: no fixed point for (G_D, n_s) within " +
                        std::to_string(kMaxIterations) + " iterations");
}

double compute_k(const RadioConfig& radio, const CellConfig& cell)
{
    if (!(radio.p_due_mw > 0.0)) throw DomainError("compute_k: DUE power must be positive");
    const double alpha = radio.pl_bs.exponent;
    return cell.d_max_m * std::pow(radio.due_sir_threshold() * radio.p_cue_max_mw, 1.0 / alpha) /
           (cell.r_cell_m * std::pow(radio.p_due_mw, 1.0 / alpha));
}

double compute_gc(double k, double d_cb_m)
{
    if (!(d_cb_m >= 0.0)) throw DomainError("compute_gc: d_cb must be non-negative");
    return k * d_cb_m;
}

PackingLayout layout_at(const CellConfig& cell, double g_b, double g_d)
{
    const double r_e_min = (g_d + cell.d_min_m) / 2.0;
    if (g_b >= cell.r_cell_m) {
        PackingLayout empty;
        empty.er_radius_m = r_e_min;
        return empty;
    }
    return build_layout(hex_radii(g_b, cell.r_cell_m), cell.d_min_m, r_e_min);
}

namespace {

// G_B values at which some floor() in the layer construction changes value.
// Between two consecutive breakpoints every count is fixed and the BS
// interference strictly decreases with G_B, so feasibility is monotone there.
std::vector<double> count_breakpoints(const CellConfig& cell, double g_d, double lo, double hi)
{
    const double r_e = (g_d + cell.d_min_m) / 2.0;
    const double half_sqrt3 = std::numbers::sqrt3 / 2.0;
    std::vector<double> points{lo, hi};

    // Per-layer counts change when (h1 + d_min/2) / (2 r_e) crosses a multiple of 1/2.
    const int m_first = static_cast<int>(std::floor((lo / half_sqrt3 + cell.d_min_m / 2.0) / r_e));
    for (int m = std::max(m_first, 0);; ++m) {
        const double g_b = half_sqrt3 * (m * r_e - cell.d_min_m / 2.0);
        if (g_b >= hi) break;
        if (g_b > lo) points.push_back(g_b);
    }

    // The layer count changes when h2 - h1 - d_min crosses a multiple of 2 r_e.
    auto width = [&](double g_b) {
        const HexApprox hex = hex_radii(g_b, cell.r_cell_m);
        return hex.outer_side_m - hex.inner_side_m - cell.d_min_m;
    };
    const double hi_probe = std::nextafter(hi, lo);
    const double w_lo = width(lo);
    const double w_hi = width(hi_probe);
    for (int m = static_cast<int>(std::ceil(w_hi / (2.0 * r_e))); m * 2.0 * r_e <= w_lo; ++m) {
        const double target = m * 2.0 * r_e;
        double a = lo;
        double b = hi_probe;
        for (int it = 0; it < 200 && b - a > 1e-12 * cell.r_cell_m; ++it) {
            const double mid = 0.5 * (a + b);
            (width(mid) > target ? a : b) = mid;
        }
        points.push_back(a);
        points.push_back(b);
    }

    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    return points;
}

} // namespace

GbSolution solve_gb(const RadioConfig& radio, const CellConfig& cell, double g_d)
{
    if (!(g_d > 0.0)) throw DomainError("solve_gb: g_d must be positive");
    const double lo = g_d / 2.0;
    const double hi = cell.r_cell_m;
    if (!(lo < hi)) {
        throw Infeasible("solve_gb: G_D/2 = " + std::to_string(lo) + " m leaves no room inside the cell");
    }

    const double threshold = radio.bs_sir_threshold();
    const double p_rx = cue_rx_power_at_bs(radio, cell);
    int probes = 0;
    auto interference = [&](double g_b) {
        ++probes;
        return bs_interference(layout_at(cell, g_b, g_d), radio.p_due_mw, radio.pl_bs);
    };
    auto feasible = [&](double g_b) { return threshold * interference(g_b) <= p_rx; };

    auto finish = [&](double g_b, bool clamped) {
        GbSolution out;
        out.g_b = g_b;
        out.lower_clamped = clamped;
        out.layout = layout_at(cell, g_b, g_d);
        out.interference_mw = bs_interference(out.layout, radio.p_due_mw, radio.pl_bs);
        out.probes = probes;
        if (total_pairs(out.layout) == 0) {
            throw Infeasible("solve_gb: the BS SIR threshold " + std::to_string(threshold) +
                             " admits no D2D pair anywhere in the cell");
        }
        return out;
    };

    if (feasible(lo)) return finish(lo, true);

    const std::vector<double> points = count_breakpoints(cell, g_d, lo, hi);
    for (std::size_t p = 0; p + 1 < points.size(); ++p) {
        const double left = points[p];
        const double right = points[p + 1];
        if (p > 0 && feasible(left)) return finish(left, false);

        // Interior probe just left of the next breakpoint, where the piece's
        // interference is smallest.
        const double inset = std::min(1e-9 * cell.r_cell_m, 0.25 * (right - left));
        double b = right - inset;
        if (!(b > left) || !feasible(b)) continue;
        double a = left;
        while (b - a > kGuardTolerance) {
            const double mid = 0.5 * (a + b);
            (feasible(mid) ? b : a) = mid;
        }
        return finish(b, false);
    }
    return finish(hi, false);
}

GuardSolution solve_guards(const RadioConfig& radio, const CellConfig& cell)
{
    radio.validate();
    cell.validate();
    GuardSolution out;
    out.gd = solve_gd(radio, cell);
    out.gb = solve_gb(radio, cell, out.gd.g_d);
    out.distances = GuardDistances::make(out.gd.g_d, compute_k(radio, cell), out.gb.g_b, out.gd.n_s, cell);
    return out;
}

} // namespace d2d
