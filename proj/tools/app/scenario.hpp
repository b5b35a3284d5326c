#pragma once

#include "d2dbound/mcsim.hpp"
#include "d2dbound/propagation.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace d2d::app {

/// One swept parameter: `steps` evenly spaced values from start to stop inclusive.
struct SweepAxis {
    std::string param;
    double start = 0.0;
    double stop = 0.0;
    int steps = 1;

    std::vector<double> values() const;
};

enum class OutputFormat { Csv, Json };

enum class SimMode { Saturation, Ppp };
enum class LinkDist { Uniform, Fixed };

struct SimulationSettings {
    SimMode mode = SimMode::Saturation;
    double lambda_per_m2 = 1e-4;
    LinkDist d2d_dist = LinkDist::Uniform;
    double d2d_fixed_m = 2.0;
    int stop_after_failures = kDefaultStopAfterFailures;
};

struct Scenario {
    RadioConfig radio;
    CellConfig cell;
    std::vector<SweepAxis> sweep;
    SimulationSettings simulation;
    int trials = 100;
    std::uint64_t seed = 1;
    int threads = 1;
    std::string output_path = "-";
    OutputFormat format = OutputFormat::Csv;

    void validate() const;
};

/// Parameters a sweep axis may name.
inline constexpr std::string_view kSweepParams[] = {
    "d_cb_m", "p_due_mw", "p_cue_max_mw", "bitrate_bps", "lambda_per_m2",
};

Scenario parse_scenario(std::string_view yaml_text);
Scenario load_scenario(const std::string& path);

/// Sets a radio-level parameter by sweep name. Returns false for non-radio names.
bool apply_radio_param(RadioConfig& radio, std::string_view param, double value);

/// The fully resolved configuration as ordered (key, value) pairs; thresholds
/// that were defaulted are written out with their computed value.
std::vector<std::pair<std::string, std::string>> resolved_config(const Scenario& s);

std::string format_number(double v);

} // namespace d2d::app
