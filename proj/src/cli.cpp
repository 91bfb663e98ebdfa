#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "convshock/scenarios_io.hpp"

namespace convshock {

namespace {

void write_summary(const std::string& path, const RunResult& result) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    const StateVector drift = result.ledger.relative_drift();
    out << "t_c = " << format_shortest(result.convergence.t_c) << "\n"
        << "detected = " << (result.convergence.detected ? "true" : "false") << "\n"
        << "steps = " << result.steps << "\n"
        << "mass_drift = " << format_shortest(drift.mass) << "\n"
        << "momentum_drift = " << format_shortest(drift.momentum) << "\n"
        << "energy_drift = " << format_shortest(drift.energy) << "\n"
        << "wall_seconds = " << format_shortest(result.wall_seconds) << "\n";
    if (!out) throw IoError("failed to write '" + path + "'");
}

}  // namespace

int cli_main(const std::vector<std::string>& args) {
    CLI::App app{"Finite-volume solver for converging shock waves in planar, "
                 "cylindrical or spherical symmetry"};

    std::string scenario, config_path, output_dir;
    int cells = -1;
    double ratio = -1.0, cfl = -1.0, t_end = -1.0;
    std::string limiter, splitting;
    bool serial = false;

    app.add_option("--scenario", scenario, "Canned scenario: ratio4, ratio10, ratio20");
    app.add_option("--config", config_path, "Path to a key = value config file");
    app.add_option("--output-dir", output_dir, "Output directory (default ./out)");
    app.add_option("--cells", cells, "Number of grid cells");
    app.add_option("--ratio", ratio, "Initial pressure and density ratio");
    app.add_option("--cfl", cfl, "Courant number");
    app.add_option("--t-end", t_end, "Final time");
    app.add_option("--limiter", limiter, "superbee, minmod or none");
    app.add_option("--splitting", splitting, "strang or godunov");
    app.add_flag("--serial", serial, "Run the serial reference kernels");

    std::vector<const char*> argv;
    argv.push_back("convshock");
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        std::cout << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    try {
        SimulationConfig config;
        if (!scenario.empty() && !config_path.empty()) {
            throw ConfigError("--scenario and --config are mutually exclusive");
        } else if (!scenario.empty()) {
            const auto canned = canned_scenario(scenario);
            if (!canned) {
                throw ConfigError("unknown scenario '" + scenario +
                                  "' (expected ratio4, ratio10 or ratio20)");
            }
            config = *canned;
        } else if (!config_path.empty()) {
            config = parse_config_file(config_path);
        } else {
            throw ConfigError("one of --scenario or --config is required");
        }

        // Flag overrides beat config-file values.
        if (cells > 0) config.n_cells = cells;
        if (ratio > 0.0) config.initial.ratio = ratio;
        if (cfl > 0.0) config.cfl = cfl;
        if (t_end > 0.0) config.t_end = t_end;
        if (!limiter.empty()) config.limiter = limiter_from_name(limiter);
        if (!splitting.empty()) config.splitting = splitting_from_name(splitting);
        if (!output_dir.empty()) config.output_dir = output_dir;
        if (serial) config.exec = ExecPolicy::serial;
        if (t_end > 0.0) {  // keep default snapshot cadence inside [0, t_end]
            std::erase_if(config.snapshot_times, [&](double t) { return t > config.t_end; });
        }
        config.validate();

        std::filesystem::create_directories(config.output_dir);

        AbortReport abort;
        RunHooks hooks;
        hooks.abort_report = &abort;
        try {
            const RunResult result = run_simulation(config, hooks);
            for (const Snapshot& snap : result.snapshots) {
                write_snapshot_csv(snap, config.output_dir + "/snapshot_t" +
                                             format_shortest(snap.time) + ".csv");
            }
            write_summary(config.output_dir + "/summary.txt", result);
            std::cout << "steps: " << result.steps << "  wall: " << result.wall_seconds
                      << " s\n";
            if (result.convergence.detected) {
                std::cout << "converged at t_c = " << format_shortest(result.convergence.t_c)
                          << "\n";
            }
            return 0;
        } catch (const NonPhysicalState& e) {
            std::cerr << "solver abort: " << e.what() << "\n";
            if (abort.aborted) {
                std::cerr << "  last valid state: t=" << abort.time << " step=" << abort.step
                          << "\n";
                write_snapshot_csv(make_snapshot(abort.last_state, config.grid(), config.gas),
                                   config.output_dir + "/crash.csv");
                std::cerr << "  crash snapshot written to " << config.output_dir
                          << "/crash.csv\n";
            }
            return 2;
        }
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}

}  // namespace convshock
