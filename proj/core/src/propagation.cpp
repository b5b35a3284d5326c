#include "d2dbound/propagation.hpp"

#include "d2dbound/errors.hpp"

#include <cmath>
#include <string>

namespace d2d {

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

double linear_to_db(double ratio)
{
    if (!(ratio > 0.0)) {
        throw DomainError("linear_to_db: ratio must be positive, got " + std::to_string(ratio));
    }
    return 10.0 * std::log10(ratio);
}

double PathLossModel::gain(double d_m) const
{
    if (!(d_m > 0.0)) {
        throw DomainError("path loss: distance must be positive, got " + std::to_string(d_m));
    }
    return beta() / std::pow(d_m, exponent);
}

double PathLossModel::gain_db(double d_m) const
{
    if (!(d_m > 0.0)) {
        throw DomainError("path loss: distance must be positive, got " + std::to_string(d_m));
    }
    return intercept_db - 10.0 * exponent * std::log10(d_m);
}

void PathLossModel::validate(std::string_view field) const
{
    if (!(exponent > 0.0) || !std::isfinite(exponent)) {
        throw ConfigError(std::string(field) + ".exponent", "must be a positive number");
    }
    if (!std::isfinite(intercept_db)) {
        throw ConfigError(std::string(field) + ".intercept_db", "must be finite");
    }
}

std::string_view to_string(NoiseMode mode)
{
    switch (mode) {
    case NoiseMode::PerHz: return "per-hz";
    case NoiseMode::Total: return "total";
    case NoiseMode::Zero: return "zero";
    }
    return "per-hz";
}

std::optional<NoiseMode> parse_noise_mode(std::string_view text)
{
    if (text == "per-hz") return NoiseMode::PerHz;
    if (text == "total") return NoiseMode::Total;
    if (text == "zero") return NoiseMode::Zero;
    return std::nullopt;
}

double RadioConfig::shannon_sir() const { return std::exp2(bitrate_bps / bandwidth_hz) - 1.0; }

namespace {

void require_positive(double value, const char* field)
{
    if (!(value > 0.0) || !std::isfinite(value)) {
        throw ConfigError(field, "must be a positive finite number");
    }
}

} // namespace

void RadioConfig::validate() const
{
    require_positive(bandwidth_hz, "radio.bandwidth_hz");
    require_positive(bitrate_bps, "radio.bitrate_bps");
    require_positive(p_cue_max_mw, "radio.p_cue_max_mw");
    require_positive(p_due_mw, "radio.p_due_mw");
    if (!std::isfinite(noise_density_dbm_hz)) {
        throw ConfigError("radio.noise_density_dbm_hz", "must be finite");
    }
    if (sir_due) require_positive(*sir_due, "radio.sir_due");
    if (sir_bs) require_positive(*sir_bs, "radio.sir_bs");
    pl_bs.validate("radio.pl_bs");
    pl_due.validate("radio.pl_due");
}

void CellConfig::validate() const
{
    require_positive(r_cell_m, "cell.r_cell_m");
    require_positive(d_min_m, "cell.d_min_m");
    require_positive(d_max_m, "cell.d_max_m");
    if (!(d_min_m < d_max_m)) {
        throw ConfigError("cell.d_min_m", "must be smaller than cell.d_max_m");
    }
    if (!(d_max_m < r_cell_m)) {
        throw ConfigError("cell.d_max_m", "must be smaller than cell.r_cell_m");
    }
}

double cue_tx_power(const RadioConfig& radio, const CellConfig& cell, double d_cb_m)
{
    if (!(d_cb_m > 0.0) || d_cb_m > cell.r_cell_m) {
        throw DomainError("cue_tx_power: d_cb must lie in (0, r_cell], got " + std::to_string(d_cb_m));
    }
    // Ratio of gains; the intercept cancels.
    return radio.p_cue_max_mw * std::pow(d_cb_m / cell.r_cell_m, radio.pl_bs.exponent);
}

double cue_rx_power_at_bs(const RadioConfig& radio, const CellConfig& cell)
{
    return radio.pl_bs.gain(cell.r_cell_m) * radio.p_cue_max_mw;
}

double noise_power(const RadioConfig& radio)
{
    switch (radio.noise_mode) {
    case NoiseMode::PerHz: return dbm_to_mw(radio.noise_density_dbm_hz) * radio.bandwidth_hz;
    case NoiseMode::Total: return dbm_to_mw(radio.noise_density_dbm_hz);
    case NoiseMode::Zero: return 0.0;
    }
    return 0.0;
}

} // namespace d2d
