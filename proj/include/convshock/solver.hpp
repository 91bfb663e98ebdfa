#pragma once

#include <functional>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "convshock/gas.hpp"
#include "convshock/kernels.hpp"
#include "convshock/reconstruction.hpp"
#include "convshock/scenario.hpp"

namespace convshock {

enum class Splitting { godunov, strang };

// Converging runs: reflective ghosts at the axis, fixed initial outer state
// outside. Planar verification runs: zero-gradient on both sides.
enum class BoundarySet { converging, transmissive };

struct SimulationConfig {
    Geometry geometry{1};
    GasModel gas{1.4};
    double r_max = 2.0;
    int n_cells = 400;
    double cfl = 0.5;
    double t_end = 0.8;
    LimiterKind limiter = LimiterKind::superbee;
    Splitting splitting = Splitting::strang;
    std::vector<double> snapshot_times;  // sorted, within [0, t_end]
    DiaphragmSpec initial;
    std::string output_dir = "./out";

    // Not config-file keys: runtime knobs.
    BoundarySet boundaries = BoundarySet::converging;
    ExecPolicy exec = ExecPolicy::openmp;
    bool subcycle_axis_source = false;

    RadialGrid grid() const { return {n_cells, r_max / n_cells, 0.0}; }

    // Throws ConfigError on any invariant violation.
    void validate() const;
};

// Returns a config with the canonical defaults except that planar geometry
// switches the boundaries to transmissive.
SimulationConfig make_config(Geometry geom, double ratio);

struct SimulationState {
    double time = 0.0;
    long step_count = 0;
    std::vector<ConservedState> cells;
};

struct ConvergenceEvent {
    double t_c = 0.0;
    bool detected = false;
};

struct AxisSample {
    double t = 0.0;
    double u = 0.0;
};

// Geometry-weighted totals sum_i U_i r_i^alpha dr, plus the net boundary
// in-flux accumulated over the run. For alpha > 0 the split scheme is only
// quasi-conservative, so drift is reported, never asserted.
struct ConservationLedger {
    StateVector initial_totals{};
    StateVector final_totals{};
    StateVector boundary_net_in{};

    // (final - initial - net_in) componentwise, scaled by max(|initial
    // component|, initial mass) so a zero initial momentum stays meaningful.
    StateVector relative_drift() const;
};

struct RunResult {
    std::vector<Snapshot> snapshots;
    ConvergenceEvent convergence{};
    ConservationLedger ledger{};
    std::vector<AxisSample> axis_history;
    long steps = 0;
    double wall_seconds = 0.0;
    SimulationState final_state;
};

// Filled before a NonPhysicalState propagates out of run_simulation so the
// caller can dump the last valid state.
struct AbortReport {
    bool aborted = false;
    double time = 0.0;
    long step = 0;
    long cell = -1;
    std::string reason;
    SimulationState last_state;
};

struct RunHooks {
    std::function<void(const SimulationState&)> on_step;
    AbortReport* abort_report = nullptr;
};

struct BoundaryFluxRecord {
    StateVector net_in{};  // accumulated dt * (A_l F_l - A_r F_r)
};

// dt = cfl * dr / max_i(|u_i| + c_i), clipped so `next_stop` (a snapshot time
// or t_end) is hit exactly.
double compute_dt(const SimulationState& state, const RadialGrid& grid, GasModel gas,
                  double cfl, double next_stop = std::numeric_limits<double>::infinity(),
                  ExecPolicy exec = ExecPolicy::serial);

// Two ghost cells per side in primitive variables; slot i+2 holds interior
// cell i.
std::vector<PrimitiveState> apply_boundaries(const SimulationState& state,
                                             const SimulationConfig& config);

// One MUSCL-Hancock update of the homogeneous system: reconstruct, evolve
// faces half a step, Roe flux per interface, conservative update. Advances
// state.time by dt.
SimulationState hyperbolic_step(const SimulationState& state,
                                const SimulationConfig& config, double dt,
                                BoundaryFluxRecord* record = nullptr);

// Operator-split full step. godunov: hyperbolic then source; strang: half
// source, hyperbolic, half source.
SimulationState split_step(const SimulationState& state, const SimulationConfig& config,
                           double dt, BoundaryFluxRecord* record = nullptr);

// First u < 0 -> u >= 0 crossing of the innermost-cell velocity, linearly
// interpolated; only armed once |u| has exceeded 0.01, so the initial
// quiescent state does not count as a crossing.
ConvergenceEvent detect_convergence(std::span<const AxisSample> history);

RunResult run_simulation(const SimulationConfig& config, SimulationState initial,
                         const RunHooks& hooks = {});
RunResult run_simulation(const SimulationConfig& config, const RunHooks& hooks = {});

// Snapshot of the primitive field with derived temperature and Mach number.
Snapshot make_snapshot(const SimulationState& state, const RadialGrid& grid,
                       GasModel gas);

StateVector weighted_totals(const SimulationState& state, const RadialGrid& grid,
                            Geometry geom);

}  // namespace convshock
