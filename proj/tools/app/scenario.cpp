#include "scenario.hpp"

#include "d2dbound/errors.hpp"

#include <yaml-cpp/yaml.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace d2d::app {

std::vector<double> SweepAxis::values() const
{
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(std::max(steps, 0)));
    if (steps == 1) {
        out.push_back(start);
        return out;
    }
    for (int i = 0; i < steps; ++i) {
        out.push_back(i == steps - 1 ? stop : start + (stop - start) * i / (steps - 1));
    }
    return out;
}

void Scenario::validate() const
{
    radio.validate();
    cell.validate();
    for (std::size_t i = 0; i < sweep.size(); ++i) {
        const auto& axis = sweep[i];
        const std::string field = "sweep[" + std::to_string(i) + "]";
        if (std::find(std::begin(kSweepParams), std::end(kSweepParams), axis.param) == std::end(kSweepParams)) {
            throw ConfigError(field + ".param", "unknown parameter '" + axis.param + "'");
        }
        if (axis.steps < 1) throw ConfigError(field + ".steps", "must be at least 1");
        if (!std::isfinite(axis.start) || !std::isfinite(axis.stop)) {
            throw ConfigError(field, "start and stop must be finite");
        }
        if (axis.param == "d_cb_m" &&
            (std::min(axis.start, axis.stop) < 0.0 || std::max(axis.start, axis.stop) > cell.r_cell_m)) {
            throw ConfigError(field, "d_cb_m must stay within [0, r_cell_m]");
        }
        if (axis.param != "d_cb_m" && std::min(axis.start, axis.stop) <= 0.0) {
            throw ConfigError(field, axis.param + " must stay positive");
        }
    }
    if (trials < 1) throw ConfigError("trials", "must be at least 1");
    if (threads < 1) throw ConfigError("threads", "must be at least 1");
    if (simulation.mode == SimMode::Ppp && !(simulation.lambda_per_m2 > 0.0)) {
        throw ConfigError("simulation.lambda_per_m2", "must be positive");
    }
    if (simulation.d2d_dist == LinkDist::Fixed &&
        (simulation.d2d_fixed_m < cell.d_min_m || simulation.d2d_fixed_m > cell.d_max_m)) {
        throw ConfigError("simulation.d2d_fixed_m", "must lie in [cell.d_min_m, cell.d_max_m]");
    }
    if (simulation.stop_after_failures < 1) {
        throw ConfigError("simulation.stop_after_failures", "must be at least 1");
    }
}

namespace {

template <class T>
T read(const YAML::Node& node, const std::string& field)
{
    try {
        return node.as<T>();
    } catch (const YAML::Exception&) {
        throw ConfigError(field, "has the wrong type");
    }
}

template <class T>
void read_into(const YAML::Node& parent, const char* key, const std::string& section, T& target)
{
    if (const YAML::Node node = parent[key]) target = read<T>(node, section.empty() ? key : section + "." + key);
}

void check_keys(const YAML::Node& map, const std::string& section, std::initializer_list<std::string_view> allowed)
{
    if (!map.IsMap()) throw ConfigError(section, "must be a mapping");
    for (const auto& kv : map) {
        const auto key = kv.first.as<std::string>();
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
            throw ConfigError(section.empty() ? key : section + "." + key, "unknown key");
        }
    }
}

void read_path_loss(const YAML::Node& node, const std::string& field, PathLossModel& model)
{
    check_keys(node, field, {"exponent", "intercept_db"});
    read_into(node, "exponent", field, model.exponent);
    read_into(node, "intercept_db", field, model.intercept_db);
}

void read_threshold(const YAML::Node& node, const std::string& field, std::optional<double>& target)
{
    if (!node) return;
    if (node.IsScalar() && node.as<std::string>() == "auto") {
        target.reset();
        return;
    }
    target = read<double>(node, field);
}

} // namespace

Scenario parse_scenario(std::string_view yaml_text)
{
    YAML::Node root;
    try {
        root = YAML::Load(std::string(yaml_text));
    } catch (const YAML::Exception& e) {
        throw ConfigError("config", std::string("not valid YAML: ") + e.what());
    }

    Scenario s;
    if (!root || root.IsNull()) return s;
    check_keys(root, "", {"radio", "cell", "sweep", "simulation", "trials", "seed", "threads", "output"});

    if (const YAML::Node radio = root["radio"]) {
        check_keys(radio, "radio",
                   {"bandwidth_hz", "noise_density_dbm_hz", "bitrate_bps", "p_cue_max_mw", "p_due_mw", "sir_due",
                    "sir_bs", "noise_mode", "pl_bs", "pl_due"});
        read_into(radio, "bandwidth_hz", "radio", s.radio.bandwidth_hz);
        read_into(radio, "noise_density_dbm_hz", "radio", s.radio.noise_density_dbm_hz);
        read_into(radio, "bitrate_bps", "radio", s.radio.bitrate_bps);
        read_into(radio, "p_cue_max_mw", "radio", s.radio.p_cue_max_mw);
        read_into(radio, "p_due_mw", "radio", s.radio.p_due_mw);
        read_threshold(radio["sir_due"], "radio.sir_due", s.radio.sir_due);
        read_threshold(radio["sir_bs"], "radio.sir_bs", s.radio.sir_bs);
        if (const YAML::Node mode = radio["noise_mode"]) {
            const auto parsed = parse_noise_mode(read<std::string>(mode, "radio.noise_mode"));
            if (!parsed) throw ConfigError("radio.noise_mode", "expected per-hz, total or zero");
            s.radio.noise_mode = *parsed;
        }
        if (const YAML::Node pl = radio["pl_bs"]) read_path_loss(pl, "radio.pl_bs", s.radio.pl_bs);
        if (const YAML::Node pl = radio["pl_due"]) read_path_loss(pl, "radio.pl_due", s.radio.pl_due);
    }

    if (const YAML::Node cell = root["cell"]) {
        check_keys(cell, "cell", {"r_cell_m", "d_min_m", "d_max_m"});
        read_into(cell, "r_cell_m", "cell", s.cell.r_cell_m);
        read_into(cell, "d_min_m", "cell", s.cell.d_min_m);
        read_into(cell, "d_max_m", "cell", s.cell.d_max_m);
    }

    if (const YAML::Node sweep = root["sweep"]) {
        if (!sweep.IsSequence()) throw ConfigError("sweep", "must be a list of axes");
        for (std::size_t i = 0; i < sweep.size(); ++i) {
            const std::string field = "sweep[" + std::to_string(i) + "]";
            const YAML::Node axis_node = sweep[i];
            check_keys(axis_node, field, {"param", "start", "stop", "steps"});
            SweepAxis axis;
            if (!axis_node["param"]) throw ConfigError(field + ".param", "is required");
            axis.param = read<std::string>(axis_node["param"], field + ".param");
            read_into(axis_node, "start", field, axis.start);
            axis.stop = axis.start;
            read_into(axis_node, "stop", field, axis.stop);
            read_into(axis_node, "steps", field, axis.steps);
            s.sweep.push_back(axis);
        }
    }

    if (const YAML::Node sim = root["simulation"]) {
        check_keys(sim, "simulation", {"mode", "lambda_per_m2", "d2d_dist", "d2d_fixed_m", "stop_after_failures"});
        if (const YAML::Node mode = sim["mode"]) {
            const auto text = read<std::string>(mode, "simulation.mode");
            if (text == "saturation") s.simulation.mode = SimMode::Saturation;
            else if (text == "ppp") s.simulation.mode = SimMode::Ppp;
            else throw ConfigError("simulation.mode", "expected saturation or ppp");
        }
        read_into(sim, "lambda_per_m2", "simulation", s.simulation.lambda_per_m2);
        if (const YAML::Node dist = sim["d2d_dist"]) {
            const auto text = read<std::string>(dist, "simulation.d2d_dist");
            if (text == "uniform") s.simulation.d2d_dist = LinkDist::Uniform;
            else if (text == "fixed") s.simulation.d2d_dist = LinkDist::Fixed;
            else throw ConfigError("simulation.d2d_dist", "expected uniform or fixed");
        }
        read_into(sim, "d2d_fixed_m", "simulation", s.simulation.d2d_fixed_m);
        read_into(sim, "stop_after_failures", "simulation", s.simulation.stop_after_failures);
    }

    read_into(root, "trials", "", s.trials);
    read_into(root, "seed", "", s.seed);
    read_into(root, "threads", "", s.threads);

    if (const YAML::Node out = root["output"]) {
        check_keys(out, "output", {"path", "format"});
        read_into(out, "path", "output", s.output_path);
        if (const YAML::Node fmt = out["format"]) {
            const auto text = read<std::string>(fmt, "output.format");
            if (text == "csv") s.format = OutputFormat::Csv;
            else if (text == "json") s.format = OutputFormat::Json;
            else throw ConfigError("output.format", "expected csv or json");
        }
    }
    return s;
}

Scenario load_scenario(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw ConfigError("config", "cannot open '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_scenario(buffer.str());
}

bool apply_radio_param(RadioConfig& radio, std::string_view param, double value)
{
    if (param == "p_due_mw") radio.p_due_mw = value;
    else if (param == "p_cue_max_mw") radio.p_cue_max_mw = value;
    else if (param == "bitrate_bps") radio.bitrate_bps = value;
    else return false;
    return true;
}

std::string format_number(double v)
{
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

std::vector<std::pair<std::string, std::string>> resolved_config(const Scenario& s)
{
    std::vector<std::pair<std::string, std::string>> kv;
    auto num = [&](std::string key, double v) { kv.emplace_back(std::move(key), format_number(v)); };
    auto str = [&](std::string key, std::string v) { kv.emplace_back(std::move(key), std::move(v)); };

    num("radio.bandwidth_hz", s.radio.bandwidth_hz);
    num("radio.noise_density_dbm_hz", s.radio.noise_density_dbm_hz);
    num("radio.bitrate_bps", s.radio.bitrate_bps);
    num("radio.p_cue_max_mw", s.radio.p_cue_max_mw);
    num("radio.p_due_mw", s.radio.p_due_mw);
    num("radio.sir_due", s.radio.due_sir_threshold());
    str("radio.sir_due_source", s.radio.sir_due ? "config" : "default-shannon");
    num("radio.sir_bs", s.radio.bs_sir_threshold());
    str("radio.sir_bs_source", s.radio.sir_bs ? "config" : "default-shannon");
    str("radio.noise_mode", std::string(to_string(s.radio.noise_mode)));
    num("radio.pl_bs.exponent", s.radio.pl_bs.exponent);
    num("radio.pl_bs.intercept_db", s.radio.pl_bs.intercept_db);
    num("radio.pl_due.exponent", s.radio.pl_due.exponent);
    num("radio.pl_due.intercept_db", s.radio.pl_due.intercept_db);
    num("cell.r_cell_m", s.cell.r_cell_m);
    num("cell.d_min_m", s.cell.d_min_m);
    num("cell.d_max_m", s.cell.d_max_m);
    for (std::size_t i = 0; i < s.sweep.size(); ++i) {
        const auto& a = s.sweep[i];
        str("sweep[" + std::to_string(i) + "]",
            a.param + " " + format_number(a.start) + " " + format_number(a.stop) + " " + std::to_string(a.steps));
    }
    str("simulation.mode", s.simulation.mode == SimMode::Ppp ? "ppp" : "saturation");
    num("simulation.lambda_per_m2", s.simulation.lambda_per_m2);
    str("simulation.d2d_dist", s.simulation.d2d_dist == LinkDist::Fixed ? "fixed" : "uniform");
    num("simulation.d2d_fixed_m", s.simulation.d2d_fixed_m);
    str("simulation.stop_after_failures", std::to_string(s.simulation.stop_after_failures));
    str("trials", std::to_string(s.trials));
    str("seed", std::to_string(s.seed));
    return kv;
}

} // namespace d2d::app
