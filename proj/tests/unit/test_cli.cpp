#include "app/commands.hpp"
#include "app/scenario.hpp"

#include "d2dbound/errors.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

using namespace d2d;
using namespace d2d::app;

namespace {

std::string slurp(const std::string& path)
{
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string render(const Table& t, const Scenario& s)
{
    std::ostringstream out;
    write_table(out, t, s);
    return out.str();
}

int run_cli(const std::string& args)
{
    const std::string cmd = std::string(D2DBOUND_EXE) + " " + args + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

const std::string kConfigs = D2DBOUND_CONFIG_DIR;
const std::string kGolden = D2DBOUND_GOLDEN_DIR;

} // namespace

TEST(Scenario, Defaults)
{
    const auto s = parse_scenario("{}");
    EXPECT_EQ(s.trials, 100);
    EXPECT_EQ(s.radio.noise_mode, NoiseMode::PerHz);
    EXPECT_EQ(s.format, OutputFormat::Csv);
}

TEST(Scenario, FullDocument)
{
    const auto s = parse_scenario(R"(
radio:
  bandwidth_hz: 10e6
  p_due_mw: 1.5
  sir_due: 0.5
  sir_bs: auto
  noise_mode: total
  pl_due: {exponent: 3.5, intercept_db: -40}
cell: {r_cell_m: 400, d_min_m: 5, d_max_m: 100}
sweep:
  - {param: p_due_mw, start: 0.1, stop: 1.0, steps: 10}
simulation: {mode: ppp, lambda_per_m2: 2e-4, d2d_dist: fixed, d2d_fixed_m: 20}
trials: 7
seed: 42
output: {path: out.json, format: json}
)");
    EXPECT_EQ(s.radio.bandwidth_hz, 10e6);
    EXPECT_EQ(s.radio.sir_due, 0.5);
    EXPECT_FALSE(s.radio.sir_bs.has_value());
    EXPECT_EQ(s.radio.noise_mode, NoiseMode::Total);
    EXPECT_EQ(s.radio.pl_due.intercept_db, -40.0);
    EXPECT_EQ(s.cell.r_cell_m, 400.0);
    ASSERT_EQ(s.sweep.size(), 1u);
    EXPECT_EQ(s.sweep[0].values().size(), 10u);
    EXPECT_EQ(s.sweep[0].values().back(), 1.0);
    EXPECT_EQ(s.simulation.mode, SimMode::Ppp);
    EXPECT_EQ(s.simulation.d2d_dist, LinkDist::Fixed);
    EXPECT_EQ(s.trials, 7);
    EXPECT_EQ(s.seed, 42u);
    EXPECT_EQ(s.format, OutputFormat::Json);
}

TEST(Scenario, ErrorsNameTheField)
{
    auto field_of = [](const char* yaml) {
        try {
            parse_scenario(yaml).validate();
        } catch (const ConfigError& e) {
            return e.field();
        }
        return std::string("<none>");
    };
    EXPECT_NE(field_of("cell: {d_min_m: 200, d_max_m: 150}").find("d_min"), std::string::npos);
    EXPECT_NE(field_of("radio: {bogus: 1}").find("bogus"), std::string::npos);
    EXPECT_NE(field_of("sweep: [{param: height, start: 1, stop: 2, steps: 2}]").find("sweep"), std::string::npos);
    EXPECT_NE(field_of("sweep: [{param: d_cb_m, start: 1, stop: 2, steps: 0}]").find("steps"), std::string::npos);
    EXPECT_NE(field_of("radio: {noise_mode: loud}").find("noise_mode"), std::string::npos);
    EXPECT_EQ(field_of("trials: 0"), "trials");
    EXPECT_EQ(field_of("seed: [1, 2]"), "seed");
}

TEST(Scenario, ResolvedConfigRecordsDefaults)
{
    auto s = parse_scenario("radio: {noise_mode: zero}");
    const auto cfg = resolved_config(s);
    auto find = [&](const std::string& k) {
        for (const auto& [key, v] : cfg)
            if (key == k) return v;
        return std::string("<missing>");
    };
    EXPECT_EQ(find("radio.sir_due_source"), "default-shannon");
    EXPECT_EQ(find("radio.sir_due"), "0.319507911");
    EXPECT_EQ(find("radio.noise_mode"), "zero");
    EXPECT_EQ(find("seed"), "1");
}

TEST(Commands, GuardRecord)
{
    auto s = load_scenario(kConfigs + "/guard_default.yaml");
    const auto t = cmd_guard(s);
    ASSERT_EQ(t.rows.size(), 1u);
    EXPECT_EQ(t.columns.front(), "g_d_m");
    EXPECT_NEAR(std::get<double>(t.rows[0][0]), 192.525368, 1e-6);
    s.radio.noise_mode = NoiseMode::PerHz;
    EXPECT_THROW(cmd_guard(s), NoiseLimited);
}

TEST(Commands, BoundsFlatRegion)
{
    auto s = load_scenario(kConfigs + "/bounds_vs_dcb.yaml");
    s.sweep = {SweepAxis{"d_cb_m", 0.0, 500.0, 1001}};
    const auto t = cmd_bounds(s);
    auto col = [&](const std::string& name) {
        return static_cast<std::size_t>(std::find(t.columns.begin(), t.columns.end(), name) - t.columns.begin());
    };
    const double s_r = std::get<double>(t.rows[0][col("s_r_m2")]);
    EXPECT_EQ(std::get<double>(t.rows[0][col("s_d_m2")]), s_r);
    const double end = std::get<double>(t.rows[0][col("flat_end_m")]);
    double measured = 0.0;
    double prev = std::get<double>(t.rows[0][col("t_upper_bps")]);
    for (const auto& row : t.rows) {
        const double d = std::get<double>(row[col("d_cb_m")]);
        const double tu = std::get<double>(row[col("t_upper_bps")]);
        if (std::get<double>(row[col("s_d_m2")]) == s_r) measured = d;
        EXPECT_LE(tu, prev);
        prev = tu;
    }
    EXPECT_NEAR(measured, end, 0.5); // sweep resolution
}

TEST(Commands, RejectsUnsupportedAxis)
{
    auto s = load_scenario(kConfigs + "/guard_default.yaml");
    s.sweep = {SweepAxis{"lambda_per_m2", 1e-5, 1e-4, 3}};
    EXPECT_THROW(cmd_sweep(s), ConfigError);
}

TEST(Commands, JsonMirrorsCsv)
{
    auto s = load_scenario(kConfigs + "/guard_default.yaml");
    s.format = OutputFormat::Json;
    const auto doc = nlohmann::json::parse(render(cmd_guard(s), s));
    EXPECT_EQ(doc["command"], "guard");
    EXPECT_EQ(doc["config"]["radio.noise_mode"], "zero");
    EXPECT_EQ(doc["rows"][0]["n_s"], 8);
    EXPECT_DOUBLE_EQ(doc["rows"][0]["g_d_m"].get<double>(), 192.525368);
}

TEST(Golden, GuardCsv)
{
    const auto s = load_scenario(kConfigs + "/guard_default.yaml");
    EXPECT_EQ(render(cmd_guard(s), s), slurp(kGolden + "/guard_default.csv"));
}

TEST(Golden, BoundsCsv)
{
    const auto s = load_scenario(kConfigs + "/bounds_vs_dcb.yaml");
    EXPECT_EQ(render(cmd_bounds(s), s), slurp(kGolden + "/bounds_dcb.csv"));
}

TEST(Golden, SimulateCsv)
{
    const auto s = load_scenario(kGolden + "/simulate_small.yaml");
    EXPECT_EQ(render(cmd_simulate(s), s), slurp(kGolden + "/simulate_small.csv"));
}

TEST(Binary, ExitCodes)
{
    EXPECT_EQ(run_cli("guard --config " + kConfigs + "/guard_default.yaml"), 0);
    EXPECT_EQ(run_cli("guard"), 3); // per-hz noise defaults are noise-limited
    const std::string bad = ::testing::TempDir() + "bad_cell.yaml";
    std::ofstream(bad) << "cell: {d_min_m: 200, d_max_m: 150}\n";
    EXPECT_EQ(run_cli("guard --config " + bad), 2);
    EXPECT_EQ(run_cli("guard --config /nonexistent/none.yaml"), 2);
    EXPECT_EQ(run_cli("guard --format xml"), 2);
}

TEST(Binary, FlagsOverrideFile)
{
    const std::string out = ::testing::TempDir() + "sim_override.csv";
    ASSERT_EQ(run_cli("simulate --config " + kConfigs + "/simulate_saturation.yaml --trials 2 --seed 9 --out " + out), 0);
    const auto text = slurp(out);
    EXPECT_NE(text.find("# trials=2\n"), std::string::npos);
    EXPECT_NE(text.find("# seed=9\n"), std::string::npos);
}
