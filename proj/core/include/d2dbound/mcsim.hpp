#pragma once

#include "d2dbound/geometry.hpp"
#include "d2dbound/guard.hpp"
#include "d2dbound/propagation.hpp"

#include <cstdint>
#include <random>
#include <span>
#include <variant>
#include <vector>

namespace d2d {

/// One D2D pair. The ER is centred on the link midpoint with radius (d + G_D) / 2;
/// the hard core is the disk of diameter d at the same centre.
struct PairPlacement {
    Point tx;
    Point rx;
    double d_d2d = 0.0;
    Point er_center;
    double er_radius = 0.0;

    double hard_core_radius() const { return d_d2d / 2.0; }
};

PairPlacement make_pair(Point center, double d_d2d, double orientation_rad, double g_d);
PairPlacement make_pair_from_nodes(Point tx, Point rx, double g_d);

/// True iff the candidate's hard core is inside the cell, clear of the BS guard
/// disk and of the CUE impact disk at (d_cb, 0), and its ER overlaps no accepted ER.
bool admissible(const PairPlacement& candidate, std::span<const PairPlacement> accepted,
                const GuardDistances& gd, const CellConfig& cell, double d_cb_m);

struct SaturationMode {};
struct PppMode {
    double lambda_per_m2 = 1e-4;
};
using TrialMode = std::variant<SaturationMode, PppMode>;

struct FixedLength {
    double d_m = 2.0;
};
struct UniformLength {
    double lo_m = 2.0;
    double hi_m = 150.0;
};
using LinkDistribution = std::variant<FixedLength, UniformLength>;

inline constexpr int kDefaultStopAfterFailures = 5000;

struct TrialConfig {
    TrialMode mode = SaturationMode{};
    LinkDistribution d2d_dist = UniformLength{};
    double d_cb_m = 0.0;
    std::uint64_t seed = 1;
    int stop_after_failures = kDefaultStopAfterFailures;

    void validate(const CellConfig& cell) const;
};

/// Reported in place of an infinite SIR (no interferer at all); 120 dB.
inline constexpr double kSirCap = 1e12;

struct SirReport {
    double min_due_sir = kSirCap;
    double due_success = 1.0; // fraction of receivers meeting the DUE threshold
    double bs_sir = kSirCap;
};

/// SIR at every DUE receiver and at the BS. With `rotate` each pair swaps roles first.
/// The CUE sits at (d_cb, 0) and is silent when d_cb == 0.
SirReport evaluate_sir(std::span<const PairPlacement> accepted, const RadioConfig& radio,
                       const CellConfig& cell, double d_cb_m, bool rotate);

struct TrialResult {
    int n_pairs = 0;
    double throughput_bps = 0.0;
    double min_due_sir = kSirCap;
    double bs_sir = kSirCap;
    bool rotation_ok = true; // DUE SIR verdict unchanged by role rotation
    double due_success = 1.0;
    double due_success_rotated = 1.0;
    double min_due_sir_rotated = kSirCap;
    std::vector<PairPlacement> pairs;
};

/// Independent per-trial seed derived from a master seed and the trial index.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

using Rng = std::mt19937_64;

TrialResult run_saturation_trial(const TrialConfig& cfg, const RadioConfig& radio,
                                 const CellConfig& cell, const GuardDistances& gd);
TrialResult run_ppp_trial(const TrialConfig& cfg, const RadioConfig& radio, const CellConfig& cell,
                          const GuardDistances& gd);

/// Dispatches on cfg.mode.
TrialResult run_trial(const TrialConfig& cfg, const RadioConfig& radio, const CellConfig& cell,
                      const GuardDistances& gd);

/// Runs `trials` independent trials; trial i uses derive_seed(cfg.seed, i).
/// The result vector is identical for every thread count.
std::vector<TrialResult> run_trials(const TrialConfig& cfg, int trials, const RadioConfig& radio,
                                    const CellConfig& cell, const GuardDistances& gd, int threads = 1);

struct Summary {
    std::size_t n = 0;
    double mean = 0.0;
    double std_error = 0.0;
    double ci_low = 0.0; // normal-approximation 95% interval
    double ci_high = 0.0;
};

Summary summarize(std::span<const double> values);

struct TrialSummary {
    Summary n_pairs;
    Summary throughput_bps;
    Summary min_due_sir;
    Summary bs_sir;
    Summary due_success;
    Summary due_success_rotated;
    double rotation_ok_rate = 0.0;
};

TrialSummary aggregate(std::span<const TrialResult> results);

} // namespace d2d
