#include "app/commands.hpp"

#include "d2dbound/errors.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

int main(int argc, char** argv)
{
    CLI::App cli{"Guard distances, throughput bounds and Monte Carlo checks for underlay D2D in one cell"};
    cli.require_subcommand(1);

    std::string config_path;
    std::string out_path;
    std::string format;
    std::optional<std::uint64_t> seed;
    std::optional<int> trials;
    std::optional<int> threads;

    cli.add_option("-c,--config", config_path, "Scenario YAML file (defaults apply when omitted)");
    cli.add_option("-o,--out", out_path, "Output file, '-' for stdout");
    cli.add_option("-f,--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    cli.add_option("--seed", seed, "Master seed");
    cli.add_option("--trials", trials, "Trials per grid point")->check(CLI::PositiveNumber);
    cli.add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);

    auto* guard = cli.add_subcommand("guard", "Solve G_D, K and G_B");
    auto* bounds = cli.add_subcommand("bounds", "Throughput bounds over a d_cb sweep");
    auto* sweep = cli.add_subcommand("sweep", "Guard distances and packing bound over radio parameters");
    auto* simulate = cli.add_subcommand("simulate", "Monte Carlo placement trials");
    for (auto* sub : {guard, bounds, sweep, simulate}) sub->fallthrough();

    try {
        cli.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return cli.exit(e) == 0 ? 0 : 2;
    }

    try {
        d2d::app::Scenario s = config_path.empty() ? d2d::app::Scenario{} : d2d::app::load_scenario(config_path);
        if (!out_path.empty()) s.output_path = out_path;
        if (!format.empty()) s.format = format == "json" ? d2d::app::OutputFormat::Json : d2d::app::OutputFormat::Csv;
        if (seed) s.seed = *seed;
        if (trials) s.trials = *trials;
        if (threads) s.threads = *threads;

        d2d::app::Table table;
        if (*guard) table = d2d::app::cmd_guard(s);
        else if (*bounds) table = d2d::app::cmd_bounds(s);
        else if (*sweep) table = d2d::app::cmd_sweep(s);
        else table = d2d::app::cmd_simulate(s);

        if (s.output_path == "-") {
            d2d::app::write_table(std::cout, table, s);
        } else {
            std::ofstream out(s.output_path);
            if (!out) throw d2d::ConfigError("output.path", "cannot open '" + s.output_path + "' for writing");
            d2d::app::write_table(out, table, s);
        }
    } catch (const d2d::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const d2d::SolverError& e) {
        std::cerr << "solver error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
