#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "convshock/solver.hpp"

namespace convshock {

// Cells with center < r0 take the inner state, the rest the outer state;
// both regions start at rest with temperature 1.
SimulationState build_initial_condition(const DiaphragmSpec& spec, const RadialGrid& grid,
                                        GasModel gas);

// Shortest decimal representation that round-trips the exact 64-bit value.
std::string format_shortest(double value);

// CSV layout: `# t=<time, 17 significant digits>`, header `r,rho,u,p,T,mach`,
// one row per cell in increasing r, LF endings, shortest round-trip values.
void write_snapshot_csv(const Snapshot& snapshot, std::ostream& out);
void write_snapshot_csv(const Snapshot& snapshot, const std::string& path);

Snapshot read_snapshot_csv(std::istream& in);
Snapshot read_snapshot_csv(const std::string& path);

// `key = value` lines with `#` comments. Keys: geometry, ratio, r0, r_max,
// cells, cfl, t_end, limiter, splitting, snapshots, output_dir. Unknown keys
// are errors; every key except ratio has a default.
SimulationConfig parse_config(std::string_view text);
SimulationConfig parse_config_file(const std::string& path);
std::string serialize_config(const SimulationConfig& config);

// Enum lookups with a typo suggestion in the ConfigError message.
LimiterKind limiter_from_name(std::string_view name);
Splitting splitting_from_name(std::string_view name);

// ratio4 / ratio10 / ratio20: the canonical cylindrical cases, snapshots
// every 0.1 up to 0.6.
std::optional<SimulationConfig> canned_scenario(std::string_view name);

// Runs a scenario and writes one CSV per snapshot plus summary.txt. Exit
// codes: 0 success, 1 bad configuration, 2 solver abort.
int cli_main(const std::vector<std::string>& args);

}  // namespace convshock
