#include "commands.hpp"

#include "d2dbound/bounds.hpp"
#include "d2dbound/errors.hpp"
#include "d2dbound/guard.hpp"
#include "d2dbound/mcsim.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <ostream>

namespace d2d::app {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// One point of the Cartesian product of the sweep axes, first axis outermost.
struct GridPoint {
    RadioConfig radio;
    double d_cb_m = 0.0;
    double lambda_per_m2 = 0.0;
    std::vector<double> values; // one per axis
};

std::vector<GridPoint> expand_grid(const Scenario& s, const std::vector<SweepAxis>& axes)
{
    std::vector<GridPoint> points{GridPoint{s.radio, 0.0, s.simulation.lambda_per_m2, {}}};
    for (const auto& axis : axes) {
        std::vector<GridPoint> next;
        for (const auto& base : points) {
            for (double v : axis.values()) {
                GridPoint p = base;
                p.values.push_back(v);
                if (axis.param == "d_cb_m") p.d_cb_m = v;
                else if (axis.param == "lambda_per_m2") p.lambda_per_m2 = v;
                else apply_radio_param(p.radio, axis.param, v);
                next.push_back(std::move(p));
            }
        }
        points = std::move(next);
    }
    return points;
}

void require_axes(const Scenario& s, std::initializer_list<std::string_view> allowed, const char* command)
{
    for (std::size_t i = 0; i < s.sweep.size(); ++i) {
        if (std::find(allowed.begin(), allowed.end(), s.sweep[i].param) == allowed.end()) {
            throw ConfigError("sweep[" + std::to_string(i) + "].param",
                              "'" + s.sweep[i].param + "' is not a sweepable parameter for " + command);
        }
    }
}

std::vector<SweepAxis> axes_with_default(const Scenario& s, const SweepAxis& fallback)
{
    for (const auto& a : s.sweep) {
        if (a.param == fallback.param) return s.sweep;
    }
    std::vector<SweepAxis> axes = s.sweep;
    axes.push_back(fallback);
    return axes;
}

std::vector<std::string> axis_columns(const std::vector<SweepAxis>& axes)
{
    std::vector<std::string> cols;
    for (const auto& a : axes) cols.push_back(a.param);
    return cols;
}

std::vector<Cell> axis_cells(const GridPoint& p)
{
    return {p.values.begin(), p.values.end()};
}

// Solves the guards, reporting the solver error kind instead of throwing.
struct GuardAttempt {
    std::optional<GuardSolution> solution;
    std::string status = "ok";
};

GuardAttempt try_guards(const RadioConfig& radio, const CellConfig& cell)
{
    GuardAttempt out;
    try {
        out.solution = solve_guards(radio, cell);
    } catch (const NoiseLimited&) {
        out.status = "noise-limited";
    } catch (const Infeasible&) {
        out.status = "infeasible";
    } catch (const NonConvergent&) {
        out.status = "non-convergent";
    }
    return out;
}

} // namespace

Table cmd_guard(const Scenario& s)
{
    s.validate();
    const GuardSolution sol = solve_guards(s.radio, s.cell);
    const GuardDistances& gd = sol.distances;

    Table t;
    t.command = "guard";
    t.columns = {"g_d_m", "n_s", "k", "g_b_m", "r_e_min_m", "r_e_max_m", "r_in_m", "r_out_m", "n_pairs",
                 "bs_interference_mw", "cue_rx_power_mw", "sir_due", "sir_bs", "gd_iterations", "gd_two_cycle",
                 "gb_lower_clamped", "gb_probes"};
    t.rows.push_back({gd.g_d, static_cast<long long>(gd.n_s), gd.k, gd.g_b, gd.r_e_min, gd.r_e_max, gd.r_in,
                      gd.r_out, static_cast<long long>(total_pairs(sol.gb.layout)), sol.gb.interference_mw,
                      cue_rx_power_at_bs(s.radio, s.cell), s.radio.due_sir_threshold(), s.radio.bs_sir_threshold(),
                      static_cast<long long>(sol.gd.iterations), static_cast<long long>(sol.gd.two_cycle),
                      static_cast<long long>(sol.gb.lower_clamped), static_cast<long long>(sol.gb.probes)});
    return t;
}

Table cmd_bounds(const Scenario& s)
{
    s.validate();
    require_axes(s, {"d_cb_m", "p_due_mw", "p_cue_max_mw", "bitrate_bps"}, "bounds");
    const auto axes = axes_with_default(s, SweepAxis{"d_cb_m", 0.0, s.cell.r_cell_m, 51});

    Table t;
    t.command = "bounds";
    t.columns = axis_columns(axes);
    for (const char* c : {"status", "g_d_m", "g_b_m", "k", "flat_end_m", "regime", "case", "s_r_m2", "s_d_m2",
                          "t_upper_bps", "t_lower_bps"}) {
        t.columns.emplace_back(c);
    }

    for (const auto& p : expand_grid(s, axes)) {
        auto row = axis_cells(p);
        p.radio.validate();
        const GuardAttempt attempt = try_guards(p.radio, s.cell);
        if (!attempt.solution) {
            row.insert(row.end(), {attempt.status, kNaN, kNaN, kNaN, kNaN, std::string("-"), std::string("-"), kNaN,
                                   0.0, 0.0, 0.0});
            t.rows.push_back(std::move(row));
            continue;
        }
        const GuardDistances& gd = attempt.solution->distances;
        const DeployableArea area = deployable_area(p.d_cb_m, gd, s.cell);
        const ThroughputBounds tb = throughput_bounds(area, gd, s.cell, p.radio.bitrate_bps);
        row.insert(row.end(), {attempt.status, gd.g_d, gd.g_b, gd.k, flat_region_end(gd),
                               std::string(to_string(area.regime)), std::string(to_string(area.case_label)),
                               ring_area(gd), area.area_m2, tb.t_upper_bps, tb.t_lower_bps});
        t.rows.push_back(std::move(row));
    }
    return t;
}

Table cmd_sweep(const Scenario& s)
{
    s.validate();
    require_axes(s, {"p_due_mw", "p_cue_max_mw", "bitrate_bps"}, "sweep");
    const auto axes = axes_with_default(s, SweepAxis{"p_due_mw", 0.1, 10.0, 100});

    Table t;
    t.command = "sweep";
    t.columns = axis_columns(axes);
    for (const char* c : {"status", "g_d_m", "n_s", "g_b_m", "k", "n_pairs", "t_upper_bps"}) t.columns.emplace_back(c);

    for (const auto& p : expand_grid(s, axes)) {
        auto row = axis_cells(p);
        p.radio.validate();
        const GuardAttempt attempt = try_guards(p.radio, s.cell);
        if (!attempt.solution) {
            // An infeasible BS constraint admits no pair at all.
            const double t_u = attempt.status == "infeasible" ? 0.0 : kNaN;
            row.insert(row.end(), {attempt.status, kNaN, 0LL, kNaN, kNaN, 0LL, t_u});
            t.rows.push_back(std::move(row));
            continue;
        }
        const GuardSolution& sol = *attempt.solution;
        const int n = total_pairs(sol.gb.layout);
        row.insert(row.end(), {attempt.status, sol.distances.g_d, static_cast<long long>(sol.distances.n_s),
                               sol.distances.g_b, sol.distances.k, static_cast<long long>(n),
                               packing_upper_bound(n, p.radio.bitrate_bps)});
        t.rows.push_back(std::move(row));
    }
    return t;
}

Table cmd_simulate(const Scenario& s)
{
    s.validate();
    require_axes(s, {"d_cb_m", "p_due_mw", "p_cue_max_mw", "bitrate_bps", "lambda_per_m2"}, "simulate");
    const auto axes = axes_with_default(s, SweepAxis{"d_cb_m", 0.0, s.cell.r_cell_m, 20});

    Table t;
    t.command = "simulate";
    t.columns = axis_columns(axes);
    for (const char* c :
         {"status", "mode", "trials", "mean_pairs", "pairs_std_error", "mean_throughput_bps", "throughput_std_error",
          "throughput_ci_low", "throughput_ci_high", "mean_min_due_sir", "due_success", "due_success_rotated",
          "rotation_ok_rate", "mean_bs_sir", "s_d_m2", "t_upper_bps", "t_lower_bps"}) {
        t.columns.emplace_back(c);
    }

    const auto grid = expand_grid(s, axes);
    for (std::size_t idx = 0; idx < grid.size(); ++idx) {
        const GridPoint& p = grid[idx];
        auto row = axis_cells(p);
        p.radio.validate();
        const std::string mode = s.simulation.mode == SimMode::Ppp ? "ppp" : "saturation";
        const GuardAttempt attempt = try_guards(p.radio, s.cell);
        if (!attempt.solution) {
            row.insert(row.end(), {attempt.status, mode, static_cast<long long>(s.trials)});
            for (int i = 0; i < 14; ++i) row.emplace_back(kNaN);
            t.rows.push_back(std::move(row));
            continue;
        }
        const GuardDistances& gd = attempt.solution->distances;

        TrialConfig cfg;
        if (s.simulation.mode == SimMode::Ppp) cfg.mode = PppMode{p.lambda_per_m2};
        if (s.simulation.d2d_dist == LinkDist::Fixed) cfg.d2d_dist = FixedLength{s.simulation.d2d_fixed_m};
        else cfg.d2d_dist = UniformLength{s.cell.d_min_m, s.cell.d_max_m};
        cfg.d_cb_m = p.d_cb_m;
        cfg.seed = derive_seed(s.seed, idx);
        cfg.stop_after_failures = s.simulation.stop_after_failures;

        const auto results = run_trials(cfg, s.trials, p.radio, s.cell, gd, s.threads);
        const TrialSummary sum = aggregate(results);
        const DeployableArea area = deployable_area(p.d_cb_m, gd, s.cell);
        const ThroughputBounds tb = throughput_bounds(area, gd, s.cell, p.radio.bitrate_bps);

        row.insert(row.end(),
                   {attempt.status, mode, static_cast<long long>(s.trials), sum.n_pairs.mean, sum.n_pairs.std_error,
                    sum.throughput_bps.mean, sum.throughput_bps.std_error, sum.throughput_bps.ci_low,
                    sum.throughput_bps.ci_high, sum.min_due_sir.mean, sum.due_success.mean,
                    sum.due_success_rotated.mean, sum.rotation_ok_rate, sum.bs_sir.mean, area.area_m2, tb.t_upper_bps,
                    tb.t_lower_bps});
        t.rows.push_back(std::move(row));
    }
    return t;
}

namespace {

std::string cell_text(const Cell& c)
{
    if (const auto* d = std::get_if<double>(&c)) return format_number(*d);
    if (const auto* i = std::get_if<long long>(&c)) return std::to_string(*i);
    return std::get<std::string>(c);
}

nlohmann::ordered_json cell_json(const Cell& c)
{
    if (const auto* d = std::get_if<double>(&c)) {
        if (!std::isfinite(*d)) return nullptr;
        // Round-trip through the CSV formatting so both outputs agree.
        return std::stod(format_number(*d));
    }
    if (const auto* i = std::get_if<long long>(&c)) return *i;
    return std::get<std::string>(c);
}

} // namespace

void write_csv(std::ostream& out, const Table& table, const Scenario& s)
{
    out << "# d2dbound " << table.command << '\n';
    for (const auto& [k, v] : resolved_config(s)) out << "# " << k << '=' << v << '\n';
    for (const auto& [k, v] : table.metadata) out << "# " << k << '=' << v << '\n';
    for (std::size_t i = 0; i < table.columns.size(); ++i) out << (i ? "," : "") << table.columns[i];
    out << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << cell_text(row[i]);
        out << '\n';
    }
}

void write_json(std::ostream& out, const Table& table, const Scenario& s)
{
    nlohmann::ordered_json doc;
    doc["command"] = table.command;
    nlohmann::ordered_json config = nlohmann::ordered_json::object();
    for (const auto& [k, v] : resolved_config(s)) config[k] = v;
    for (const auto& [k, v] : table.metadata) config[k] = v;
    doc["config"] = config;
    doc["columns"] = table.columns;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < row.size(); ++i) obj[table.columns[i]] = cell_json(row[i]);
        rows.push_back(std::move(obj));
    }
    doc["rows"] = rows;
    out << doc.dump(2) << '\n';
}

void write_table(std::ostream& out, const Table& table, const Scenario& s)
{
    if (s.format == OutputFormat::Json) write_json(out, table, s);
    else write_csv(out, table, s);
}

} // namespace d2d::app
