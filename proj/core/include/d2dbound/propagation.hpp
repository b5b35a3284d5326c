#pragma once

#include <optional>
#include <string_view>

namespace d2d {

// Internal units: mW, m, Hz, linear ratios. dB appears only at the edges.

double db_to_linear(double db);
double linear_to_db(double ratio);

inline double dbm_to_mw(double dbm) { return db_to_linear(dbm); }
inline double mw_to_dbm(double mw) { return linear_to_db(mw); }

/// Power-law path gain L(d) = beta / d^alpha, with beta given in dB at 1 m.
struct PathLossModel {
    double exponent = 3.76;
    double intercept_db = -38.0;

    double beta() const { return db_to_linear(intercept_db); }

    /// Linear gain at distance `d_m` (> 0).
    double gain(double d_m) const;
    double gain_db(double d_m) const;

    void validate(std::string_view field) const;
};

/// CUE-BS link: -128.1 - 37.6 lg(d/1000) dB, i.e. -15.3 dB at 1 m.
inline constexpr PathLossModel kDefaultBsPathLoss{3.76, -15.3};
/// DUE-DUE link: -38 - 37.6 lg(d) dB.
inline constexpr PathLossModel kDefaultDuePathLoss{3.76, -38.0};

enum class NoiseMode { PerHz, Total, Zero };

std::string_view to_string(NoiseMode mode);
std::optional<NoiseMode> parse_noise_mode(std::string_view text);

struct RadioConfig {
    double bandwidth_hz = 5e6;
    double noise_density_dbm_hz = -174.0;
    double bitrate_bps = 2e6;
    double p_cue_max_mw = 200.0;
    double p_due_mw = 0.7;
    // Unset thresholds default to the Shannon SIR for bitrate_bps in bandwidth_hz.
    std::optional<double> sir_due;
    std::optional<double> sir_bs;
    PathLossModel pl_bs = kDefaultBsPathLoss;
    PathLossModel pl_due = kDefaultDuePathLoss;
    NoiseMode noise_mode = NoiseMode::PerHz;

    /// 2^(R_b/W) - 1.
    double shannon_sir() const;
    double due_sir_threshold() const { return sir_due.value_or(shannon_sir()); }
    double bs_sir_threshold() const { return sir_bs.value_or(shannon_sir()); }

    void validate() const;
};

struct CellConfig {
    double r_cell_m = 500.0;
    double d_min_m = 2.0;
    double d_max_m = 150.0;

    void validate() const;
};

/// CUE transmit power under received-power control: P_max * L_B(r_C) / L_B(d_cb).
double cue_tx_power(const RadioConfig& radio, const CellConfig& cell, double d_cb_m);

/// Power every CUE delivers at the BS, L_B(r_C) * P_max.
double cue_rx_power_at_bs(const RadioConfig& radio, const CellConfig& cell);

/// Noise power in mW according to `radio.noise_mode`.
double noise_power(const RadioConfig& radio);

} // namespace d2d
