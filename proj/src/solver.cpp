#include "convshock/solver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>

#include "convshock/scenarios_io.hpp"

namespace convshock {

namespace {

double area_weight(double r, int alpha) {
    switch (alpha) {
        case 0: return 1.0;
        case 1: return r;
        default: return r * r;
    }
}

[[noreturn]] void throw_cell_failure(const char* phase, long cell, double time,
                                     const ConservedState& u) {
    std::ostringstream msg;
    msg.precision(17);
    msg << phase << " produced a non-physical state: cell=" << cell << " t=" << time
        << " U=(" << u.mass << ", " << u.momentum << ", " << u.energy << ")";
    throw NonPhysicalState(msg.str(), cell);
}

}  // namespace

void SimulationConfig::validate() const {
    if (!geometry.valid()) throw ConfigError("geometry alpha must be 0, 1 or 2");
    if (!gas.valid()) throw ConfigError("gamma must be a finite value > 1");
    if (!(r_max > 0.0)) throw ConfigError("r_max must be positive");
    if (n_cells < 4) throw ConfigError("cells must be at least 4");
    if (!(cfl > 0.0 && cfl <= 1.0)) throw ConfigError("cfl must lie in (0, 1]");
    if (!(t_end >= 0.0)) throw ConfigError("t_end must be non-negative");
    if (!initial.valid()) throw ConfigError("ratio must exceed 1 and r0 must be positive");
    if (!(initial.r0 < r_max)) throw ConfigError("r0 must lie inside (0, r_max)");
    for (double t : snapshot_times) {
        if (!(t >= 0.0 && t <= t_end)) {
            throw ConfigError("snapshot times must lie within [0, t_end]");
        }
    }
    if (!std::is_sorted(snapshot_times.begin(), snapshot_times.end())) {
        throw ConfigError("snapshot times must be sorted ascending");
    }
}

SimulationConfig make_config(Geometry geom, double ratio) {
    SimulationConfig config;
    config.geometry = geom;
    config.initial.ratio = ratio;
    config.boundaries =
        geom.alpha == 0 ? BoundarySet::transmissive : BoundarySet::converging;
    return config;
}

double compute_dt(const SimulationState& state, const RadialGrid& grid, GasModel gas,
                  double cfl, double next_stop, ExecPolicy exec) {
    long bad = -1;
    const double s_max = exec == ExecPolicy::openmp
                             ? kernels::max_signal_speed_omp(state.cells, gas, bad)
                             : kernels::max_signal_speed_serial(state.cells, gas, bad);
    if (bad >= 0) throw_cell_failure("compute_dt", bad, state.time, state.cells[bad]);

    double dt = cfl * grid.dr / s_max;
    if (next_stop > state.time) {
        dt = std::min(dt, next_stop - state.time);
    }
    return dt;
}

std::vector<PrimitiveState> apply_boundaries(const SimulationState& state,
                                             const SimulationConfig& config) {
    const long n = std::ssize(state.cells);
    std::vector<PrimitiveState> ghost(n + 4);

    long bad = -1;
    std::span<PrimitiveState> interior(ghost.data() + 2, n);
    if (config.exec == ExecPolicy::openmp) {
        kernels::to_primitives_omp(state.cells, config.gas, interior, bad);
    } else {
        kernels::to_primitives_serial(state.cells, config.gas, interior, bad);
    }
    if (bad >= 0) throw_cell_failure("apply_boundaries", bad, state.time, state.cells[bad]);

    if (config.boundaries == BoundarySet::transmissive) {
        ghost[0] = ghost[1] = ghost[2];
        ghost[n + 2] = ghost[n + 3] = ghost[n + 1];
    } else {
        // Axis: reflective, u negated, rho and p copied, mirror order.
        ghost[1] = {ghost[2].rho, -ghost[2].u, ghost[2].p};
        ghost[0] = {ghost[3].rho, -ghost[3].u, ghost[3].p};
        // Outer: fixed initial outer state.
        const PrimitiveState outer = config.initial.outer_state(config.gas);
        ghost[n + 2] = outer;
        ghost[n + 3] = outer;
    }
    return ghost;
}

SimulationState hyperbolic_step(const SimulationState& state,
                                const SimulationConfig& config, double dt,
                                BoundaryFluxRecord* record) {
    const RadialGrid grid = config.grid();
    const long n = std::ssize(state.cells);
    const bool omp = config.exec == ExecPolicy::openmp;

    const std::vector<PrimitiveState> ghost = apply_boundaries(state, config);

    std::vector<FacePair> faces(n + 4);
    if (omp) {
        kernels::reconstruct_faces_omp(ghost, config.limiter, faces);
        kernels::hancock_evolve_omp(ghost, config.gas, 0.5 * dt / grid.dr, faces);
    } else {
        kernels::reconstruct_faces_serial(ghost, config.limiter, faces);
        kernels::hancock_evolve_serial(ghost, config.gas, 0.5 * dt / grid.dr, faces);
    }

    std::vector<FluxVector> fluxes(n + 1);
    long bad = -1;
    if (omp) {
        kernels::interface_fluxes_omp(faces, config.gas, fluxes, bad);
    } else {
        kernels::interface_fluxes_serial(faces, config.gas, fluxes, bad);
    }
    if (bad >= 0) {
        std::ostringstream msg;
        msg << "roe_flux failed at interface " << bad << ", t=" << state.time;
        throw NonPhysicalState(msg.str(), bad);
    }

    SimulationState next = state;
    next.time = state.time + dt;
    if (omp) {
        kernels::conservative_update_omp(next.cells, fluxes, config.gas, dt / grid.dr, bad);
    } else {
        kernels::conservative_update_serial(next.cells, fluxes, config.gas, dt / grid.dr,
                                            bad);
    }
    if (bad >= 0) throw_cell_failure("hyperbolic_step", bad, next.time, next.cells[bad]);

    if (record != nullptr) {
        const double a_left = area_weight(grid.inner_edge(), config.geometry.alpha);
        const double a_right = area_weight(grid.outer_edge(), config.geometry.alpha);
        record->net_in += dt * (a_left * fluxes[0] - a_right * fluxes[n]);
    }
    return next;
}

namespace {

void apply_source(SimulationState& state, const SimulationConfig& config,
                  const RadialGrid& grid, double dt) {
    long bad = -1;
    if (config.exec == ExecPolicy::openmp) {
        kernels::source_update_omp(state.cells, grid, config.geometry, config.gas, dt,
                                   config.subcycle_axis_source, bad);
    } else {
        kernels::source_update_serial(state.cells, grid, config.geometry, config.gas, dt,
                                      config.subcycle_axis_source, bad);
    }
    if (bad >= 0) throw_cell_failure("rk2_source_step", bad, state.time, state.cells[bad]);
}

}  // namespace

SimulationState split_step(const SimulationState& state, const SimulationConfig& config,
                           double dt, BoundaryFluxRecord* record) {
    const RadialGrid grid = config.grid();
    if (config.splitting == Splitting::godunov) {
        SimulationState next = hyperbolic_step(state, config, dt, record);
        apply_source(next, config, grid, dt);
        return next;
    }
    SimulationState next = state;
    apply_source(next, config, grid, 0.5 * dt);
    next = hyperbolic_step(next, config, dt, record);
    apply_source(next, config, grid, 0.5 * dt);
    return next;
}

ConvergenceEvent detect_convergence(std::span<const AxisSample> history) {
    bool armed = false;
    for (long k = 1; k < std::ssize(history); ++k) {
        const AxisSample& a = history[k - 1];
        const AxisSample& b = history[k];
        armed = armed || std::fabs(a.u) > 0.01;
        if (armed && a.u < 0.0 && b.u >= 0.0) {
            const double frac = -a.u / (b.u - a.u);
            return {a.t + frac * (b.t - a.t), true};
        }
    }
    return {0.0, false};
}

Snapshot make_snapshot(const SimulationState& state, const RadialGrid& grid,
                       GasModel gas) {
    Snapshot snap;
    snap.time = state.time;
    snap.rows.reserve(state.cells.size());
    for (long i = 0; i < std::ssize(state.cells); ++i) {
        const PrimitiveState w = conserved_to_primitive(state.cells[i], gas);
        const double c = sound_speed(w, gas);
        snap.rows.push_back({grid.center(static_cast<int>(i)), w.rho, w.u, w.p,
                             temperature(w, gas), std::fabs(w.u) / c});
    }
    return snap;
}

StateVector weighted_totals(const SimulationState& state, const RadialGrid& grid,
                            Geometry geom) {
    StateVector total{};
    for (long i = 0; i < std::ssize(state.cells); ++i) {
        const double w = area_weight(grid.center(static_cast<int>(i)), geom.alpha) * grid.dr;
        total += w * state.cells[i];
    }
    return total;
}

StateVector ConservationLedger::relative_drift() const {
    const StateVector raw =
        final_totals - initial_totals - boundary_net_in;
    const auto scale = [&](double initial_component) {
        return std::max(std::fabs(initial_component), std::fabs(initial_totals.mass));
    };
    return {raw.mass / scale(initial_totals.mass),
            raw.momentum / scale(initial_totals.momentum),
            raw.energy / scale(initial_totals.energy)};
}

RunResult run_simulation(const SimulationConfig& config, SimulationState initial,
                         const RunHooks& hooks) {
    config.validate();
    const auto wall_start = std::chrono::steady_clock::now();
    const RadialGrid grid = config.grid();
    if (std::ssize(initial.cells) != grid.n_cells) {
        throw ConfigError("initial state size does not match the grid");
    }

    RunResult result;
    BoundaryFluxRecord boundary;
    SimulationState state = std::move(initial);

    result.ledger.initial_totals = weighted_totals(state, grid, config.geometry);

    const auto axis_velocity = [](const SimulationState& s) {
        return s.cells[0].momentum / s.cells[0].mass;
    };
    result.axis_history.push_back({state.time, axis_velocity(state)});

    // Pending stops: requested snapshot times plus t_end; dt is clipped so
    // each is hit exactly. The final state is always recorded.
    std::vector<double> stops = config.snapshot_times;
    stops.push_back(config.t_end);
    std::sort(stops.begin(), stops.end());
    stops.erase(std::unique(stops.begin(), stops.end()), stops.end());
    std::size_t next_stop_idx = 0;

    const auto record_if_due = [&]() {
        while (next_stop_idx < stops.size() && stops[next_stop_idx] <= state.time) {
            const double stop = stops[next_stop_idx];
            const bool requested =
                std::binary_search(config.snapshot_times.begin(),
                                   config.snapshot_times.end(), stop);
            if (requested || stop == config.t_end) {
                if (result.snapshots.empty() || result.snapshots.back().time != stop) {
                    result.snapshots.push_back(make_snapshot(state, grid, config.gas));
                }
            }
            ++next_stop_idx;
        }
    };
    record_if_due();

    while (state.time < config.t_end) {
        try {
            const double next_stop =
                next_stop_idx < stops.size() ? stops[next_stop_idx] : config.t_end;
            const double to_stop = next_stop - state.time;
            const double dt =
                compute_dt(state, grid, config.gas, config.cfl, next_stop, config.exec);
            const bool hits_stop = dt == to_stop;

            SimulationState next = split_step(state, config, dt, &boundary);
            if (hits_stop) next.time = next_stop;
            next.step_count = state.step_count + 1;
            state = std::move(next);
        } catch (const NonPhysicalState& err) {
            if (hooks.abort_report != nullptr) {
                *hooks.abort_report = {true,       state.time, state.step_count,
                                       err.cell,   err.what(), std::move(state)};
            }
            throw;
        }

        result.axis_history.push_back({state.time, axis_velocity(state)});
        if (hooks.on_step) hooks.on_step(state);
        record_if_due();
    }

    result.steps = state.step_count;
    result.convergence = detect_convergence(result.axis_history);
    result.ledger.final_totals = weighted_totals(state, grid, config.geometry);
    result.ledger.boundary_net_in = boundary.net_in;
    result.final_state = std::move(state);
    result.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - wall_start)
            .count();
    return result;
}

RunResult run_simulation(const SimulationConfig& config, const RunHooks& hooks) {
    config.validate();
    return run_simulation(
        config, build_initial_condition(config.initial, config.grid(), config.gas),
        hooks);
}

}  // namespace convshock
